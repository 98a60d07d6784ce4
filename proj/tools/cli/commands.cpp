#include "commands.hpp"
#include "output.hpp"

#include "rlwstab/errors.hpp"
#include "rlwstab/gkdv.hpp"
#include "rlwstab/hill.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <optional>
#include <thread>

#ifndef RLWSTAB_VERSION
#define RLWSTAB_VERSION "unknown"
#endif

namespace rlwstab::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

int worker_count(const RunConfig& cfg)
{
    if (cfg.jobs > 0)
        return cfg.jobs;
    return std::max(1u, std::thread::hardware_concurrency());
}

json complex_json(floquet::cplx z) { return json::array({z.real(), z.imag()}); }

json hill_json(const hill::InfinityClass& ic)
{
    return {{"kind", hill::to_string(ic.hill.kind)},
            {"trace", ic.hill.trace},
            {"lyapunov", ic.hill.lyapunov},
            {"sigma", ic.hill.sigma},
            {"ell", ic.ell},
            {"location", ic.location.label},
            {"location_kind", hill::to_string(ic.location.kind)},
            {"location_index", ic.location.index}};
}

std::optional<hill::InfinityClass> infinity_class(const RunConfig& cfg)
{
    if (cfg.model == "rbou")
        return hill::classify_rbou_infinity({cfg.param("alpha"), cfg.param("beta"), cfg.param_or("gamma", 1.0)});
    if (cfg.model == "bl")
        return hill::classify_bl_infinity({cfg.param("m"), cfg.param("a")});
    return std::nullopt;
}

// ---- wave ----

json cmd_wave(const RunConfig& cfg, const fs::path& dir)
{
    const auto wave = make_wave(cfg);
    json j{{"model", cfg.model}, {"params", cfg.params}};
    const int n = cfg.samples;
    std::vector<std::string> header{"x", "u"};
    std::vector<std::vector<double>> cols;
    double T = 0.0;

    if (const auto* w = std::get_if<rbou::Wave>(&wave)) {
        T = w->T;
        const CosineSeries v = rbou::v_profile(*w, cfg.param_or("b2", 0.0));
        j.update({{"c", w->c}, {"T", w->T}, {"m", w->m.value()}, {"K", w->K}, {"a", w->a},
                  {"E", w->E}, {"b_combo", w->b_combo}, {"ell", rbou::ell(w->roots)},
                  {"u_max", w->u(0.0)}, {"u_min", w->u(w->T / 2)},
                  {"profile_residual", w->profile_residual()}});
        header.push_back("v");
        cols.resize(2);
        for (int i = 0; i < n; ++i) {
            const double x = T * i / n;
            cols[0].push_back(w->u(x));
            cols[1].push_back(v(x));
        }
    } else if (const auto* w = std::get_if<bl::Wave>(&wave)) {
        T = w->T;
        // the Benney-Luke wave is carried by v alone
        header = {"x", "v"};
        j.update({{"c", w->c}, {"T", w->T}, {"m", w->m.value()}, {"K", w->K}, {"M", w->M},
                  {"a", w->params.a}, {"b", w->b}, {"E", w->E}, {"v0_amplitude", w->v0_amplitude},
                  {"v_max", w->v(0.0)}, {"ell", bl::ell(w->params)}, {"m0", bl::m0()},
                  {"profile_residual", w->profile_residual()}});
        cols.resize(1);
        for (int i = 0; i < n; ++i)
            cols[0].push_back(w->v(T * i / n));
    } else {
        const auto& bw = std::get<bbm::Wave>(wave);
        T = bw.T;
        const CosineSeries eta = bw.eta_series();
        j.update({{"c", bw.params.c}, {"T", bw.T}, {"m", bw.m.value()}, {"K", bw.K}, {"a", bw.a},
                  {"u0", bw.u0}, {"alpha3", bw.alpha3}, {"alpha1", bw.alpha1}, {"alpha0", bw.alpha0},
                  {"u_mean", bw.u_mean}, {"one_plus_eta_mean", bw.one_plus_eta_mean},
                  {"one_plus_eta_mean_identity", bbm::one_plus_eta_mean_identity(bw.params.c, bw.params.b2)},
                  {"instability_threshold", bbm::instability_threshold(bw.params.c)},
                  {"off_axis_at_infinity", bw.params.b2 < bbm::instability_threshold(bw.params.c)},
                  {"profile_residual", bw.profile_residual()}});
        header.push_back("eta");
        cols.resize(2);
        for (int i = 0; i < n; ++i) {
            const double x = T * i / n;
            cols[0].push_back(bw.u(x));
            cols[1].push_back(eta(x));
        }
    }
    j["dual_path_defect"] = floquet::dual_path_defect(wave);

    if (cfg.writes_csv()) {
        CsvWriter csv(dir / "profile.csv", header);
        for (int i = 0; i < n; ++i) {
            csv.cell(T * i / n);
            for (const auto& c : cols)
                csv.cell(c[static_cast<std::size_t>(i)]);
            csv.end_row();
        }
    }
    return j;
}

// ---- spectrum ----

void write_plot_script(const fs::path& path, const floquet::FloquetSpectrum& s,
                       const floquet::AsymptoteCurve& curve)
{
    std::ofstream gp(path);
    gp << "# plot the spectrum cloud with its asymptotes at infinity\n"
          "set datafile separator ','\n"
          "set key off\n"
          "set xlabel 'Re lambda'\nset ylabel 'Im lambda'\n";
    const double ymax = s.max_abs_imag;
    if (curve.off_axis && curve.model != floquet::Model::bbm) {
        const double sg = curve.lambda0.real();
        gp << "set arrow from " << sg << "," << -ymax << " to " << sg << "," << ymax << " nohead dt 2\n";
        gp << "set arrow from " << -sg << "," << -ymax << " to " << -sg << "," << ymax << " nohead dt 2\n";
    }
    gp << "plot 'spectrum.csv' every ::1 using 2:3 with dots lc rgb 'black'";
    if (curve.off_axis && curve.model == floquet::Model::bbm) {
        const double w1 = curve.lambda1.imag();
        const auto l = curve.lambda_minus1[0];
        const double kmax = ymax / w1;
        gp << "\nset parametric\nset trange [" << 2.0 << ":" << kmax << "]\n";
        gp << "replot " << l.real() << "/t, " << w1 << "*t + " << l.imag() << "/t dt 2 lc rgb 'gray', "
           << -l.real() << "/t, " << w1 << "*t + " << l.imag() << "/t dt 2 lc rgb 'gray', "
           << l.real() << "/t, -(" << w1 << "*t + " << l.imag() << "/t) dt 2 lc rgb 'gray', "
           << -l.real() << "/t, -(" << w1 << "*t + " << l.imag() << "/t) dt 2 lc rgb 'gray'";
    }
    gp << "\n";
}

json cmd_spectrum(const RunConfig& cfg, const fs::path& dir)
{
    const std::string key = content_hash(cfg);
    const fs::path cache = fs::path(cfg.out_dir) / ".cache" / key;
    const auto wave = make_wave(cfg);
    const auto curve = floquet::asymptote(wave);

    if (cfg.cache && fs::exists(cache / "summary.json") && fs::exists(cache / "spectrum.csv")) {
        json j = read_json(cache / "summary.json");
        j["cache_hit"] = true;
        if (cfg.writes_csv())
            fs::copy_file(cache / "spectrum.csv", dir / "spectrum.csv", fs::copy_options::overwrite_existing);
        if (cfg.plot) {
            floquet::FloquetSpectrum s{};
            s.max_abs_imag = j.at("max_abs_imag").get<double>();
            write_plot_script(dir / "spectrum.gp", s, curve);
        }
        return j;
    }

    floquet::SpectrumRequest req{wave, cfg.nk, floquet::default_tau_grid(cfg.tau_points)};
    const auto s = floquet::compute_spectrum(req, worker_count(cfg));

    json meta{{"model", cfg.model},
              {"params", cfg.params},
              {"nk", cfg.nk},
              {"tau_grid", s.tau_grid},
              {"matrix_dim", 2 * (2 * cfg.nk + 1)},
              {"version", RLWSTAB_VERSION},
              {"config_hash", key}};
    json summary{{"max_real_part", s.max_real_part},
                 {"max_abs_imag", s.max_abs_imag},
                 {"top_decile_mean_abs_real", floquet::top_decile_mean_abs_real(s)},
                 {"high_imag_max_abs_real", floquet::max_abs_real_above(s, 0.25 * s.max_abs_imag)},
                 {"symmetry_defect", floquet::symmetry_defect(s)},
                 {"gap_sigma", nullptr},
                 {"seconds", s.seconds}};
    if (const auto ic = infinity_class(cfg)) {
        summary["hill"] = hill_json(*ic);
        if (ic->hill.kind == hill::Kind::gap)
            summary["gap_sigma"] = ic->hill.sigma;
    }
    json asym{{"description", curve.description},
              {"off_axis", curve.off_axis},
              {"lambda1", complex_json(curve.lambda1)},
              {"lambda0", complex_json(curve.lambda0)},
              {"lambda_minus1", json::array({complex_json(curve.lambda_minus1[0]),
                                             complex_json(curve.lambda_minus1[1])})}};
    if (curve.model == floquet::Model::bbm)
        asym["coefficients"] = json::array({std::abs(curve.lambda_minus1[0].real()), curve.lambda1.imag(),
                                            std::abs(curve.lambda_minus1[0].imag())});
    try {
        const auto r = floquet::asymptote_residual(s, curve, cfg.k_min);
        asym["fit"] = {{"k_min", cfg.k_min},           {"n_points", r.n_points},
                       {"max_residual", r.max_residual}, {"residual_exponent", r.residual_exponent},
                       {"re_exponent", r.re_exponent},   {"max_abs_real", r.max_abs_real},
                       {"mean_abs_real", r.mean_abs_real}};
    } catch (const NumericalError& e) {
        asym["fit"] = {{"error", e.what()}};
    }
    summary["asymptote"] = asym;

    json j{{"metadata", meta}, {"summary", summary}, {"rows", s.points.size()}, {"cache_hit", false}};

    fs::path csv_path = dir / "spectrum.csv";
    if (cfg.cache) {
        fs::create_directories(cache);
        csv_path = cache / "spectrum.csv";
    }
    if (cfg.writes_csv() || cfg.cache) {
        CsvWriter csv(csv_path, {"tau", "re_lambda", "im_lambda", "edge_flag"});
        for (const auto& p : s.points)
            csv.cell(p.tau).cell(p.lambda.real()).cell(p.lambda.imag()).cell(p.edge_flag ? 1LL : 0LL).end_row();
    }
    if (cfg.cache) {
        write_json(cache / "summary.json", j);
        if (cfg.writes_csv())
            fs::copy_file(csv_path, dir / "spectrum.csv", fs::copy_options::overwrite_existing);
    }
    if (cfg.plot)
        write_plot_script(dir / "spectrum.gp", s, curve);
    return j;
}

// ---- map ----

std::string map_label(const RunConfig& cfg, double p1, double p2)
{
    try {
        if (cfg.model == "rbou") {
            const rbou::Roots r{p1, p2, cfg.param_or("gamma", 1.0)};
            const auto w = rbou::make_wave(r);
            const auto le = hill::lame_edges_rbou(w.m, hill::LameA1Form::validated, false);
            return hill::locate(rbou::ell(r), {le.edges.begin(), le.edges.end()}, true).label;
        }
        if (cfg.model == "bl") {
            const bl::Params p{p1, p2};
            bl::check_params(p);
            const auto edges = hill::bl_band_edges(elliptic::Parameter(p1), cfg.n_edges, 50, false);
            return hill::locate(bl::ell(p), edges, false).label;
        }
        return bbm::to_string(bbm::region_classify(p1, p2));
    } catch (const DomainError&) {
        return "outside";
    }
}

json cmd_map(const RunConfig& cfg, const fs::path& dir)
{
    const auto at = [](const Axis& a, int i) { return a.lo + (a.hi - a.lo) * i / (a.n - 1); };
    const std::size_t total = static_cast<std::size_t>(cfg.x.n) * static_cast<std::size_t>(cfg.y.n);
    std::vector<std::string> labels(total);
    std::atomic<std::size_t> next{0};
    {
        std::vector<std::jthread> pool;
        for (int t = 0; t < worker_count(cfg); ++t)
            pool.emplace_back([&] {
                for (std::size_t k; (k = next++) < total;)
                    labels[k] = map_label(cfg, at(cfg.x, static_cast<int>(k / cfg.y.n)),
                                          at(cfg.y, static_cast<int>(k % cfg.y.n)));
            });
    }
    std::map<std::string, int> counts;
    for (const auto& l : labels)
        ++counts[l];
    if (cfg.writes_csv()) {
        CsvWriter csv(dir / "map.csv", {"p1", "p2", "label"});
        for (std::size_t k = 0; k < total; ++k)
            csv.cell(at(cfg.x, static_cast<int>(k / cfg.y.n)))
                .cell(at(cfg.y, static_cast<int>(k % cfg.y.n)))
                .cell(labels[k])
                .end_row();
    }
    const char* axes = cfg.model == "rbou" ? "alpha,beta" : cfg.model == "bl" ? "m,a" : "b1,b2";
    return {{"model", cfg.model}, {"axes", axes}, {"x", cfg.x}, {"y", cfg.y}, {"params", cfg.params}, {"counts", counts}};
}

// ---- monodromy ----

json cmd_monodromy(const RunConfig& cfg)
{
    const auto ic = infinity_class(cfg);
    if (!ic)
        throw ConfigError("monodromy applies to rbou and bl (the bbm system has no Hill reduction)");
    json j = hill_json(*ic);
    j["model"] = cfg.model;
    j["params"] = cfg.params;
    return j;
}

// ---- gkdv-check ----

gkdv::Coefficients load_coefficients(const RunConfig& cfg)
{
    if (cfg.profile == "zero")
        return gkdv::Coefficients::zero();
    if (cfg.profile == "cos")
        return gkdv::Coefficients::cosine(cfg.param_or("amplitude", 1.0));
    // {"hat": [[re, im], ...]} for n = −M..M
    const json j = read_json(cfg.coeff_file);
    gkdv::Coefficients u;
    try {
        for (const auto& z : j.at("hat"))
            u.hat.emplace_back(z.at(0).get<double>(), z.at(1).get<double>());
    } catch (const json::exception& e) {
        throw ConfigError(cfg.coeff_file + ": " + e.what());
    }
    if (u.hat.size() % 2 == 0)
        throw ConfigError(cfg.coeff_file + ": need an odd number of coefficients (n = -M..M)");
    return u;
}

json cmd_gkdv(const RunConfig& cfg)
{
    const auto u = load_coefficients(cfg);
    const double c = cfg.param_or("c", 1.0);
    const auto r = gkdv::check(u, c, cfg.nk, cfg.k_report);
    return {{"c", c},
            {"profile", cfg.profile},
            {"nk", cfg.nk},
            {"fourier_l1", r.family.fourier_l1},
            {"k0", r.family.k0},
            {"im_threshold", r.family.im_threshold},
            {"n_checked", r.n_checked},
            {"max_abs_real", r.max_abs_real},
            {"contained", r.contained},
            {"on_axis", r.on_axis},
            {"one_per_disk", r.one_per_disk},
            {"failures", r.failures},
            {"passed", r.passed()}};
}

// ---- bands ----

json cmd_bands(const RunConfig& cfg, const fs::path& dir)
{
    const elliptic::Parameter m(cfg.param("m"));
    std::vector<double> edges;
    std::vector<double> traces;
    if (cfg.model == "rbou") {
        const auto le = hill::lame_edges_rbou(m);
        edges.assign(le.edges.begin(), le.edges.end());
        for (double e : edges)
            traces.push_back(hill::lame_rbou_trace(m, e));
    } else if (cfg.model == "bl") {
        edges = hill::bl_band_edges(m, cfg.n_edges);
        for (double e : edges)
            traces.push_back(hill::lame_bl_trace(m, e));
    } else {
        throw ConfigError("bands applies to rbou and bl");
    }
    json rows = json::array();
    std::optional<CsvWriter> csv;
    if (cfg.writes_csv())
        csv.emplace(dir / "bands.csv", std::vector<std::string>{"index", "ell", "trace", "type"});
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const std::string type = traces[i] > 0 ? "periodic" : "antiperiodic";
        rows.push_back({{"ell", edges[i]}, {"trace", traces[i]}, {"type", type}});
        if (csv)
            csv->cell(static_cast<long long>(i)).cell(edges[i]).cell(traces[i]).cell(type).end_row();
    }
    json j{{"model", cfg.model}, {"m", m.value()}, {"edges", rows}};
    if (cfg.model == "bl")
        j["m0"] = bl::m0();
    return j;
}

} // namespace

floquet::WaveVariant make_wave(const RunConfig& cfg)
{
    if (cfg.model == "rbou")
        return rbou::make_wave({cfg.param("alpha"), cfg.param("beta"), cfg.param_or("gamma", 1.0)});
    if (cfg.model == "bl")
        return bl::make_wave({cfg.param("m"), cfg.param("a")});
    if (cfg.model == "bbm")
        return bbm::make_wave({cfg.param("c"), cfg.param("b1"), cfg.param("b2")});
    throw ConfigError("unknown model '" + cfg.model + "'");
}

json run(const RunConfig& cfg, const fs::path& dir)
{
    validate(cfg);
    fs::create_directories(dir);
    json j;
    if (cfg.command == "wave")
        j = cmd_wave(cfg, dir);
    else if (cfg.command == "spectrum")
        j = cmd_spectrum(cfg, dir);
    else if (cfg.command == "map")
        j = cmd_map(cfg, dir);
    else if (cfg.command == "monodromy")
        j = cmd_monodromy(cfg);
    else if (cfg.command == "gkdv-check")
        j = cmd_gkdv(cfg);
    else
        j = cmd_bands(cfg, dir);
    if (cfg.writes_json()) {
        write_json(dir / (cfg.command == "spectrum" ? "summary.json" : cfg.command + ".json"), j);
        write_json(dir / "config.json", cfg);
    }
    return j;
}

} // namespace rlwstab::cli
