#include "rlwstab/floquet.hpp"
#include "rlwstab/errors.hpp"
#include "rlwstab/hill.hpp"
#include "rlwstab/linalg.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <sstream>
#include <thread>

namespace rlwstab::floquet {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

// τ-independent ingredients of the Bloch operator L(τ) = i·R(τ).
struct Blocks {
    Model model;
    int N;
    double T;
    double c;
    Eigen::MatrixXd A; // rBou: 1+2u   BL: v   BBM: u
    Eigen::MatrixXd B; //                      BBM: 1+η
};

Blocks make_blocks(const SpectrumRequest& req)
{
    if (req.Nk < 1)
        throw DomainError("Nk must be positive");
    const int N = req.Nk;
    const int terms = 2 * N;
    return std::visit(
        [&](const auto& w) -> Blocks {
            using W = std::decay_t<decltype(w)>;
            if constexpr (std::is_same_v<W, rbou::Wave>) {
                const CosineSeries u = w.u_series(terms).scaled(2.0, 1.0);
                return {Model::rbou, N, w.T, w.c, u.toeplitz(N), {}};
            } else if constexpr (std::is_same_v<W, bl::Wave>) {
                return {Model::bl, N, w.T, w.c, w.v_series(terms).toeplitz(N), {}};
            } else {
                const CosineSeries eta = w.eta_series(terms, std::max(2048, 8 * terms));
                return {Model::bbm, N, w.T, w.params.c, w.u_series(terms).toeplitz(N),
                        eta.scaled(1.0, 1.0).toeplitz(N)};
            }
        },
        req.wave);
}

Eigen::MatrixXd real_operator(const Blocks& b, double tau)
{
    const int n = 2 * b.N + 1;
    Eigen::VectorXd d(n), r(n);
    for (int i = 0; i < n; ++i) {
        const double k = two_pi * (i - b.N + tau) / b.T;
        d(i) = k;
        r(i) = b.model == Model::bbm ? -1.0 / (1.0 + k * k / 6.0) : 1.0 / (1.0 + k * k);
    }
    const auto Dg = d.asDiagonal();
    const Eigen::VectorXd dr = d.cwiseProduct(r);
    const auto DR = dr.asDiagonal();

    Eigen::MatrixXd R = Eigen::MatrixXd::Zero(2 * n, 2 * n);
    const Eigen::MatrixXd cD = Eigen::MatrixXd(Eigen::VectorXd(b.c * d).asDiagonal());
    switch (b.model) {
    case Model::rbou:
        R.topLeftCorner(n, n) = cD;
        R.topRightCorner(n, n) = Eigen::MatrixXd(DR);
        R.bottomLeftCorner(n, n) = Dg * b.A;
        R.bottomRightCorner(n, n) = cD;
        break;
    case Model::bl: {
        const Eigen::MatrixXd RV = r.asDiagonal() * b.A;
        const Eigen::MatrixXd VR = b.A * r.asDiagonal();
        Eigen::MatrixXd mid = b.c * b.A + b.A * RV;
        mid.diagonal().array() += 1.0;
        R.topLeftCorner(n, n) = cD - Dg * RV;
        R.topRightCorner(n, n) = Eigen::MatrixXd(DR);
        R.bottomLeftCorner(n, n) = Dg * mid;
        R.bottomRightCorner(n, n) = cD - Dg * VR;
        break;
    }
    case Model::bbm: {
        const Eigen::MatrixXd diag_block = cD + DR * b.A;
        R.topLeftCorner(n, n) = diag_block;
        R.topRightCorner(n, n) = DR * b.B;
        R.bottomLeftCorner(n, n) = Eigen::MatrixXd(DR);
        R.bottomRightCorner(n, n) = diag_block;
        break;
    }
    }
    return R;
}

double lsq_slope(const std::vector<double>& x, const std::vector<double>& y)
{
    const auto n = static_cast<double>(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

} // namespace

std::string to_string(Model m)
{
    switch (m) {
    case Model::rbou: return "rbou";
    case Model::bl: return "bl";
    case Model::bbm: return "bbm";
    }
    return "?";
}

Model model_of(const WaveVariant& w)
{
    return static_cast<Model>(w.index());
}

double speed_of(const WaveVariant& w)
{
    return std::visit(
        [](const auto& x) {
            if constexpr (std::is_same_v<std::decay_t<decltype(x)>, bbm::Wave>)
                return x.params.c;
            else
                return x.c;
        },
        w);
}

double period_of(const WaveVariant& w)
{
    return std::visit([](const auto& x) { return x.T; }, w);
}

std::vector<double> default_tau_grid(int n)
{
    if (n < 1)
        throw DomainError("tau grid needs at least one point");
    std::vector<double> g(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j)
        g[static_cast<std::size_t>(j)] = -0.5 + (j + 0.5) / n;
    return g;
}

Eigen::MatrixXcd build_collocation_matrix(const SpectrumRequest& req, double tau)
{
    if (std::abs(tau) > 0.5)
        throw DomainError("Floquet exponent must satisfy |tau| <= 1/2");
    const Eigen::MatrixXd R = real_operator(make_blocks(req), tau);
    return cplx(0.0, 1.0) * R.cast<cplx>();
}

double dual_path_defect(const WaveVariant& w, int n_terms)
{
    return std::visit(
        [n_terms](const auto& x) {
            CosineSeries analytic, quad;
            if constexpr (std::is_same_v<std::decay_t<decltype(x)>, bl::Wave>) {
                analytic = x.v_series(n_terms);
                quad = x.v_series_by_quadrature(n_terms);
            } else {
                analytic = x.u_series(n_terms);
                quad = x.u_series_by_quadrature(n_terms);
            }
            double worst = 0.0;
            for (int k = 0; k <= n_terms; ++k)
                worst = std::max(worst, std::abs(analytic.cosine(k) - quad.cosine(k)));
            return worst;
        },
        w);
}

FloquetSpectrum compute_spectrum(const SpectrumRequest& req, int jobs)
{
    const auto t0 = std::chrono::steady_clock::now();
    for (double tau : req.tau_grid)
        if (std::abs(tau) > 0.5)
            throw DomainError("Floquet exponent must satisfy |tau| <= 1/2");
    if (req.dual_path_check) {
        const double defect = dual_path_defect(req.wave);
        if (defect > 1e-8) {
            std::ostringstream msg;
            msg << "analytic and integrated profile Fourier coefficients differ by " << defect;
            throw InconsistencyError(msg.str());
        }
    }
    const Blocks blocks = make_blocks(req);
    const std::size_t nt = req.tau_grid.size();
    std::vector<std::vector<cplx>> per_tau(nt);
    std::vector<std::string> failures(nt);

    const auto work = [&](std::size_t first, std::size_t stride) {
        for (std::size_t i = first; i < nt; i += stride) {
            try {
                auto mu = linalg::eigenvalues(real_operator(blocks, req.tau_grid[i]));
                for (auto& z : mu)
                    z = cplx(-z.imag(), z.real());
                per_tau[i] = std::move(mu);
            } catch (const std::exception& e) {
                failures[i] = e.what();
            }
        }
    };
    const auto nj = static_cast<std::size_t>(std::max(1, jobs));
    if (nj == 1) {
        work(0, 1);
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t j = 0; j < nj; ++j)
            pool.emplace_back(work, j, nj);
    }
    for (std::size_t i = 0; i < nt; ++i)
        if (!failures[i].empty())
            throw NumericalError("eigensolver failed at tau = " + std::to_string(req.tau_grid[i]) + ": "
                                 + failures[i]);

    FloquetSpectrum s{model_of(req.wave), req.Nk, req.tau_grid, {}, 0.0, 0.0, 0.0};
    s.points.reserve(nt * static_cast<std::size_t>(4 * req.Nk + 2));
    for (std::size_t i = 0; i < nt; ++i)
        for (const cplx& z : per_tau[i])
            s.points.push_back({req.tau_grid[i], z, false});

    s.max_real_part = -std::numeric_limits<double>::infinity();
    for (const auto& p : s.points) {
        s.max_real_part = std::max(s.max_real_part, p.lambda.real());
        s.max_abs_imag = std::max(s.max_abs_imag, std::abs(p.lambda.imag()));
    }
    for (auto& p : s.points)
        p.edge_flag = std::abs(p.lambda.imag()) > 0.9 * s.max_abs_imag;
    std::sort(s.points.begin(), s.points.end(), [](const SpectrumPoint& a, const SpectrumPoint& b) {
        if (a.lambda.imag() != b.lambda.imag())
            return a.lambda.imag() < b.lambda.imag();
        if (a.lambda.real() != b.lambda.real())
            return a.lambda.real() < b.lambda.real();
        return a.tau < b.tau;
    });
    s.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return s;
}

double symmetry_defect(const FloquetSpectrum& s)
{
    // points are sorted by Im λ, so candidates for a target live in an Im-window
    std::vector<double> im(s.points.size());
    for (std::size_t i = 0; i < im.size(); ++i)
        im[i] = s.points[i].lambda.imag();
    const auto nearest = [&](cplx z) {
        double width = 1e-6;
        for (;;) {
            auto lo = std::lower_bound(im.begin(), im.end(), z.imag() - width);
            auto hi = std::upper_bound(im.begin(), im.end(), z.imag() + width);
            double best = std::numeric_limits<double>::infinity();
            for (auto it = lo; it != hi; ++it)
                best = std::min(best, std::abs(s.points[static_cast<std::size_t>(it - im.begin())].lambda - z));
            if (best <= width || (lo == im.begin() && hi == im.end()))
                return best;
            width *= 4.0;
        }
    };
    double worst = 0.0;
    for (const auto& p : s.points) {
        worst = std::max(worst, nearest(-p.lambda));
        worst = std::max(worst, nearest(std::conj(p.lambda)));
    }
    return worst;
}

double top_decile_mean_abs_real(const FloquetSpectrum& s)
{
    std::vector<const SpectrumPoint*> kept;
    for (const auto& p : s.points)
        if (!p.edge_flag)
            kept.push_back(&p);
    std::sort(kept.begin(), kept.end(), [](auto a, auto b) {
        return std::abs(a->lambda.imag()) > std::abs(b->lambda.imag());
    });
    const std::size_t n = std::max<std::size_t>(1, kept.size() / 10);
    double acc = 0.0;
    for (std::size_t i = 0; i < n && i < kept.size(); ++i)
        acc += std::abs(kept[i]->lambda.real());
    return acc / static_cast<double>(n);
}

double max_abs_real_above(const FloquetSpectrum& s, double im_min)
{
    double worst = 0.0;
    for (const auto& p : s.points)
        if (!p.edge_flag && std::abs(p.lambda.imag()) >= im_min)
            worst = std::max(worst, std::abs(p.lambda.real()));
    return worst;
}

AsymptoteCurve asymptote(const WaveVariant& w, bool require_gap)
{
    const double c = speed_of(w), T = period_of(w);
    AsymptoteCurve out{model_of(w), cplx(0.0, two_pi * c / T), 0.0, {0.0, 0.0}, false, {}};
    std::ostringstream desc;
    desc.precision(8);
    if (const auto* b = std::get_if<bbm::Wave>(&w)) {
        const double scale = 3.0 * T / std::numbers::pi;
        const cplx root = std::sqrt(cplx(-b->one_plus_eta_mean, 0.0));
        const cplx drift(0.0, -scale * b->u_mean);
        out.lambda_minus1 = {drift + scale * root, drift - scale * root};
        out.off_axis = b->one_plus_eta_mean < 0.0;
        desc << "lambda ~ " << out.lambda1.imag() << "i k + (" << out.lambda_minus1[0].real() << " "
             << (out.lambda_minus1[0].imag() >= 0 ? "+ " : "- ") << std::abs(out.lambda_minus1[0].imag())
             << "i) / k";
        if (!out.off_axis)
            desc << " or (" << out.lambda_minus1[1].imag() << "i) / k";
    } else {
        const hill::BandGapClass h = std::holds_alternative<rbou::Wave>(w)
                                       ? hill::classify(hill::rbou_problem(std::get<rbou::Wave>(w)))
                                       : hill::classify(hill::bl_problem(std::get<bl::Wave>(w)));
        if (require_gap && h.kind != hill::Kind::gap)
            throw DomainError("asymptote: a +/-sigma offset was requested but the Hill equation is in a band");
        out.off_axis = h.kind == hill::Kind::gap;
        out.lambda0 = h.sigma;
        desc << "lambda ~ +/-" << h.sigma << " + " << out.lambda1.imag() << "i k";
    }
    out.description = desc.str();
    return out;
}

AsymptoteResidual asymptote_residual(const FloquetSpectrum& s, const AsymptoteCurve& curve,
                                     int k_min)
{
    const double omega = curve.lambda1.imag();
    if (omega == 0.0)
        throw DomainError("asymptote_residual: lambda1 must be nonzero");
    std::vector<double> logk, logr, logk_re, logre;
    AsymptoteResidual out{0, 0.0, 0.0, 0.0, 0.0, 0.0};
    for (const auto& p : s.points) {
        if (p.edge_flag)
            continue;
        const cplx z = p.lambda;
        const double kappa0 = (z.imag() - curve.lambda0.imag()) / omega;
        if (std::abs(kappa0) < k_min)
            continue;
        double best = std::numeric_limits<double>::infinity();
        for (const cplx& lm1 : curve.lambda_minus1) {
            // mode index from the leading-order relation, then the full prediction
            double kappa = kappa0 - lm1.imag() / (omega * kappa0);
            kappa = std::round(kappa - p.tau) + p.tau;
            if (kappa == 0.0)
                continue;
            const double re = std::abs(curve.lambda0.real()) + std::abs(lm1.real() / kappa);
            const cplx pred = curve.lambda1 * kappa + cplx(0.0, curve.lambda0.imag())
                            + cplx(0.0, lm1.imag() / kappa)
                            + (z.real() >= 0.0 ? re : -re);
            best = std::min(best, std::abs(z - pred));
        }
        if (!std::isfinite(best))
            continue;
        ++out.n_points;
        out.max_residual = std::max(out.max_residual, best);
        out.max_abs_real = std::max(out.max_abs_real, std::abs(z.real()));
        out.mean_abs_real += std::abs(z.real());
        if (best > 0.0) {
            logk.push_back(std::log(std::abs(kappa0)));
            logr.push_back(std::log(best));
        }
        if (z.real() != 0.0) {
            logk_re.push_back(std::log(std::abs(kappa0)));
            logre.push_back(std::log(std::abs(z.real())));
        }
    }
    if (out.n_points < 10)
        throw NumericalError("asymptote_residual: too few resolved modes above k_min = "
                             + std::to_string(k_min));
    out.mean_abs_real /= out.n_points;
    out.residual_exponent = logr.size() >= 2 ? lsq_slope(logk, logr) : 0.0;
    out.re_exponent = logre.size() >= 2 ? lsq_slope(logk_re, logre) : 0.0;
    return out;
}

} // namespace rlwstab::floquet
