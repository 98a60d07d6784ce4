#include "commands.hpp"
#include "config.hpp"

#include "rlwstab/errors.hpp"

#include <CLI11.hpp>

#include <functional>
#include <iostream>

using rlwstab::cli::RunConfig;

namespace {

// Flags that were actually given on the command line override the config file.
class Overrides {
public:
    template <class T>
    CLI::Option* field(CLI::App* app, const std::string& flag, T RunConfig::*member, const std::string& help)
    {
        auto value = std::make_shared<T>();
        auto* opt = app->add_option(flag, *value, help);
        setters_.emplace_back(opt, [value, member](RunConfig& c) { c.*member = *value; });
        return opt;
    }

    CLI::Option* param(CLI::App* app, const std::string& name, const std::string& help)
    {
        auto value = std::make_shared<double>();
        auto* opt = app->add_option("--" + name, *value, help);
        setters_.emplace_back(opt, [value, name](RunConfig& c) { c.params[name] = *value; });
        return opt;
    }

    CLI::Option* grid(CLI::App* app, const std::string& flag, rlwstab::cli::Axis RunConfig::*member,
                      const std::string& help)
    {
        auto value = std::make_shared<std::vector<double>>();
        auto* opt = app->add_option(flag, *value, help)->expected(3)->delimiter(':');
        setters_.emplace_back(opt, [value, member](RunConfig& c) {
            c.*member = {(*value)[0], (*value)[1], static_cast<int>((*value)[2])};
        });
        return opt;
    }

    CLI::Option* flag(CLI::App* app, const std::string& name, bool RunConfig::*member, bool set_to,
                      const std::string& help)
    {
        auto* opt = app->add_flag(name, help);
        setters_.emplace_back(opt, [member, set_to](RunConfig& c) { c.*member = set_to; });
        return opt;
    }

    void apply(RunConfig& c) const
    {
        for (const auto& [opt, set] : setters_)
            if (opt->count() > 0)
                set(c);
    }

private:
    std::vector<std::pair<CLI::Option*, std::function<void(RunConfig&)>>> setters_;
};

void model_params(Overrides& ov, CLI::App* sub)
{
    ov.field(sub, "model", &RunConfig::model, "rbou | bl | bbm");
    ov.param(sub, "alpha", "rBou root alpha");
    ov.param(sub, "beta", "rBou root beta");
    ov.param(sub, "gamma", "rBou root gamma (default 1)");
    ov.param(sub, "m", "Benney-Luke elliptic parameter");
    ov.param(sub, "a", "Benney-Luke amplitude parameter");
    ov.param(sub, "c", "BBM wave speed (gkdv-check: speed, default 1)");
    ov.param(sub, "b1", "BBM integration constant b1");
    ov.param(sub, "b2", "BBM integration constant b2 (rbou wave: v offset)");
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Spectral stability of periodic traveling waves (rBou, Benney-Luke, BBM system)"};
    app.set_version_flag("--version", RLWSTAB_VERSION);
    app.require_subcommand(0, 1);
    app.fallthrough(); // global flags may follow the subcommand

    Overrides ov;
    std::string config_file;
    app.add_option("--config", config_file, "JSON run config (object, array, or {\"runs\": [...]})")
        ->check(CLI::ExistingFile);
    ov.field(&app, "--out", &RunConfig::out_dir, "output directory");
    ov.field(&app, "--format", &RunConfig::format, "csv | json | both")
        ->check(CLI::IsMember({"csv", "json", "both"}));
    ov.field(&app, "--jobs", &RunConfig::jobs, "worker threads (0 = logical cores)");
    ov.flag(&app, "--plot", &RunConfig::plot, true, "also write a plot script");
    ov.flag(&app, "--no-cache", &RunConfig::cache, false, "recompute spectra even when cached");

    auto* wave = app.add_subcommand("wave", "wave constants, residuals and a sampled profile");
    model_params(ov, wave);
    ov.field(wave, "--samples", &RunConfig::samples, "profile samples per period");

    auto* spectrum = app.add_subcommand("spectrum", "Floquet-Fourier-Hill spectrum cloud");
    model_params(ov, spectrum);
    ov.field(spectrum, "--nk", &RunConfig::nk, "Fourier modes -Nk..Nk");
    ov.field(spectrum, "--tau-points", &RunConfig::tau_points, "Floquet exponents");
    ov.field(spectrum, "--k-min", &RunConfig::k_min, "lowest mode in the asymptote fit");

    auto* map = app.add_subcommand("map", "band/gap or region labels over a parameter grid");
    ov.field(map, "model", &RunConfig::model, "rbou | bl | bbm");
    ov.param(map, "gamma", "rBou gamma held fixed (default 1)");
    ov.grid(map, "--x", &RunConfig::x, "first axis lo:hi:n (alpha, m or b1)");
    ov.grid(map, "--y", &RunConfig::y, "second axis lo:hi:n (beta, a or b2)");
    ov.field(map, "--n-edges", &RunConfig::n_edges, "Benney-Luke edges resolved before 'higher'");

    auto* mono = app.add_subcommand("monodromy", "Hill monodromy: band/gap, trace, sigma");
    model_params(ov, mono);

    auto* gk = app.add_subcommand("gkdv-check", "disk enclosure check for the gKdV linearization");
    ov.field(gk, "--profile", &RunConfig::profile, "cos | zero | file")
        ->check(CLI::IsMember({"cos", "zero", "file"}));
    ov.field(gk, "--coeff-file", &RunConfig::coeff_file, "JSON {\"hat\": [[re, im], ...]}, n = -M..M");
    ov.param(gk, "c", "wave speed (default 1)");
    ov.param(gk, "amplitude", "cos profile amplitude (default 1)");
    ov.field(gk, "--nk", &RunConfig::nk, "Fourier modes -Nk..Nk (default 64)");
    ov.field(gk, "--k-report", &RunConfig::k_report, "disks checked for one eigenvalue each");

    auto* bands = app.add_subcommand("bands", "Lame band-edge table");
    ov.field(bands, "model", &RunConfig::model, "rbou | bl");
    ov.param(bands, "m", "elliptic parameter");
    ov.field(bands, "--n-edges", &RunConfig::n_edges, "number of edges (bl)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : rlwstab::ConfigError("").exit_code();
    }

    try {
        std::vector<RunConfig> runs;
        if (!config_file.empty())
            runs = rlwstab::cli::load_configs(config_file);
        else
            runs.emplace_back();
        const CLI::App* sub = app.get_subcommands().empty() ? nullptr : app.get_subcommands().front();
        if (!sub && config_file.empty()) {
            std::cout << app.help();
            return 0;
        }
        for (auto& cfg : runs) {
            if (sub) {
                if (sub->get_name() == "gkdv-check" && cfg.command != "gkdv-check" && config_file.empty())
                    cfg.nk = 64;
                cfg.command = sub->get_name();
            }
            ov.apply(cfg);
            auto dir = std::filesystem::path(cfg.out_dir);
            if (!cfg.name.empty())
                dir /= cfg.name;
            const auto summary = rlwstab::cli::run(cfg, dir);
            std::cout << summary.dump(2) << '\n';
            if (cfg.command == "gkdv-check" && !summary.at("passed").get<bool>()) {
                std::cerr << "gkdv-check: enclosure properties failed\n";
                return 3;
            }
        }
    } catch (const rlwstab::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return e.exit_code();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
