#include "rlwstab/hill.hpp"
#include "rlwstab/errors.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace rlwstab::hill {

namespace {

// Lamé edges sit in exponentially thin bands (dtr/dℓ ~ 1e6 near m = 1), so the
// trace there needs a tighter integrator than the default.
constexpr ode::Tolerances edge_tol{1e-14, 1e-16};

} // namespace

Monodromy monodromy(const HillProblem& p, ode::Tolerances tol)
{
    if (!(p.period > 0.0))
        throw DomainError("Hill problem period must be positive");
    // two fundamental solutions side by side: (y₁, y₁′, y₂, y₂′)
    const ode::Rhs rhs = [&p](const ode::State& y, ode::State& dy, double x) {
        const double q = p.q(x);
        dy[0] = y[1];
        dy[1] = -q * y[0];
        dy[2] = y[3];
        dy[3] = -q * y[2];
    };
    Monodromy mono;
    if (p.even) {
        // y₁ even, y₂ odd: Y(T) follows from the values at T/2, with
        // tr − 2 = 4y₁′y₂ and tr + 2 = 4y₁y₂′ free of cancellation.
        const ode::State h = ode::integrate(rhs, {1.0, 0.0, 0.0, 1.0}, 0.0, 0.5 * p.period, tol);
        const double y1 = h[0], d1 = h[1], y2 = h[2], d2 = h[3];
        const double plus = 4.0 * d1 * y2, minus = 4.0 * y1 * d2;
        mono.trace = std::abs(plus) < std::abs(minus) ? 2.0 + plus : minus - 2.0;
        mono.Y << 0.5 * mono.trace, 2.0 * y2 * d2, 2.0 * y1 * d1, 0.5 * mono.trace;
        mono.det = y1 * d2 - y2 * d1; // Wronskian at T/2
    } else {
        const ode::State y = ode::integrate(rhs, {1.0, 0.0, 0.0, 1.0}, 0.0, p.period, tol);
        mono.Y << y[0], y[2], y[1], y[3];
        mono.trace = mono.Y.trace();
        mono.det = mono.Y.determinant();
    }
    if (std::abs(mono.det - 1.0) > 1e-6) {
        std::ostringstream msg;
        msg << "monodromy determinant " << mono.det << " deviates from 1 (integrator failure)";
        throw NumericalError(msg.str());
    }
    const double t = std::abs(mono.trace);
    mono.mu_abs = t > 2.0 ? 0.5 * (t + std::sqrt(t * t - 4.0)) : 1.0;
    return mono;
}

std::string to_string(Kind k)
{
    switch (k) {
    case Kind::band: return "band";
    case Kind::gap: return "gap";
    case Kind::edge: return "edge";
    }
    return "?";
}

BandGapClass classify(const HillProblem& p, double tol)
{
    const Monodromy mono = monodromy(p);
    const double t = std::abs(mono.trace);
    BandGapClass out{Kind::edge, 0.0, 0.0, mono.trace, tol};
    if (t < 2.0 - tol) {
        out.kind = Kind::band;
    } else if (t > 2.0 + tol) {
        out.kind = Kind::gap;
        out.lyapunov = std::log(mono.mu_abs) / p.period;
        out.sigma = std::abs(p.speed) * out.lyapunov;
    }
    return out;
}

HillProblem rbou_problem(const rbou::Wave& w)
{
    const double c2 = w.c * w.c;
    return {[w, c2](double x) { return (1.0 + 2.0 * w.u(x)) / c2; }, w.T, std::abs(w.c), true};
}

HillProblem bl_problem(const bl::Wave& w)
{
    const double c = w.c;
    return {[w, c](double x) { return (1.0 + c * w.v(x)) / (c * c); }, w.T, c, true};
}

double lame_rbou_trace(elliptic::Parameter m, double ell)
{
    const double mm = m.value();
    const HillProblem p{[=](double x) { return ell - 12.0 * mm * elliptic::sn2(x, m); },
                        2.0 * elliptic::complete_K(m), 1.0, true};
    return monodromy(p, edge_tol).trace;
}

double lame_bl_trace(elliptic::Parameter m, double ell)
{
    const double mm = m.value();
    const HillProblem p{[=](double x) { return ell - 4.0 * mm * elliptic::sn2(x, m); },
                        2.0 * elliptic::complete_K(m), 1.0, true};
    return monodromy(p, edge_tol).trace;
}

namespace {

void validate_edge(double edge, double trace, bool periodic, double tol, const char* family)
{
    const double expected = periodic ? 2.0 : -2.0;
    if (std::abs(trace - expected) > tol) {
        std::ostringstream msg;
        msg.precision(12);
        msg << family << " edge " << edge << " has monodromy trace " << trace << ", expected "
            << expected;
        throw EdgeMismatchError(msg.str(), edge, trace, expected);
    }
}

} // namespace

LameEdges lame_edges_rbou(elliptic::Parameter m, LameA1Form form, bool validate, double trace_tol)
{
    const double x = m.value();
    const double t1 = std::sqrt(1.0 - x + 4.0 * x * x);
    const double t2 = std::sqrt(4.0 - x + x * x);
    const double t3 = std::sqrt(4.0 - 7.0 * x + 4.0 * x * x);
    const double a1 = form == LameA1Form::validated ? 5.0 + 2.0 * x - 2.0 * t2 : 5.0 + 2.0 * x - t2;
    LameEdges e{m,
                {2.0 + 5.0 * x - 2.0 * t1, a1, 5.0 + 5.0 * x - 2.0 * t3, 4.0 + 4.0 * x,
                 2.0 + 5.0 * x + 2.0 * t1, 5.0 + 2.0 * x + 2.0 * t2, 5.0 + 5.0 * x + 2.0 * t3},
                t1,
                t2,
                t3};
    if (validate) {
        for (std::size_t i = 0; i < e.edges.size(); ++i)
            validate_edge(e.edges[i], lame_rbou_trace(m, e.edges[i]), LameEdges::periodic[i],
                          trace_tol, "Lame (rBou)");
    }
    return e;
}

Location locate(double ell, const std::vector<double>& edges, bool last_band_unbounded)
{
    const auto i = static_cast<int>(std::lower_bound(edges.begin(), edges.end(), ell) - edges.begin());
    const int n = static_cast<int>(edges.size());
    if (i == n && !last_band_unbounded)
        return {Kind::gap, -1, "higher"};
    if (i % 2 == 1 || i == n) {
        const int j = (i + 1) / 2;
        if (i == n && n % 2 == 1)
            return {Kind::band, j, "b_inf"};
        return {Kind::band, j, "b" + std::to_string(j)};
    }
    return {Kind::gap, i / 2, "g" + std::to_string(i / 2)};
}

namespace {

void check_agreement(const BandGapClass& h, const Location& loc, double ell,
                     const std::vector<double>& edges, const char* model)
{
    if (h.kind == Kind::edge || loc.index < 0 || h.kind == loc.kind)
        return;
    const double gap = std::abs(*std::min_element(edges.begin(), edges.end(), [ell](double a, double b) {
        return std::abs(a - ell) < std::abs(b - ell);
    }) - ell);
    if (gap < 1e-6 * std::max(1.0, std::abs(ell)))
        return;
    std::ostringstream msg;
    msg << model << ": trace test says " << to_string(h.kind) << " (tr = " << h.trace
        << ") but ell = " << ell << " lies in " << loc.label;
    throw InconsistencyError(msg.str());
}

} // namespace

InfinityClass classify_rbou_infinity(const rbou::Roots& roots, double tol)
{
    const rbou::Wave w = rbou::make_wave(roots);
    const double ell = rbou::ell(roots);
    const LameEdges le = lame_edges_rbou(w.m);
    const std::vector<double> edges(le.edges.begin(), le.edges.end());
    InfinityClass out{classify(rbou_problem(w), tol), locate(ell, edges, true), ell};
    check_agreement(out.hill, out.location, ell, edges, "rBou");
    return out;
}

int rbou_corollary_gap(elliptic::Parameter m, double a)
{
    const double x = m.value();
    const double inv = 1.0 / (a * a);
    const double t1 = std::sqrt(1.0 - x + 4.0 * x * x);
    const double t2 = std::sqrt(4.0 - x + x * x);
    const double t3 = std::sqrt(4.0 - 7.0 * x + 4.0 * x * x);
    if (inv < x - 2.0 + 2.0 * t1)
        return 2;
    if (1.0 - 2.0 * x + 2.0 * t2 < inv && inv < 1.0 + x + 2.0 * t3)
        return 3;
    return 0;
}

std::vector<double> bl_band_edges(elliptic::Parameter m, int n_edges, int N, bool validate,
                                  double trace_tol)
{
    if (n_edges < 1 || n_edges > 2 * N)
        throw DomainError("bl_band_edges: n_edges must lie in [1, 2N]");
    const auto s = elliptic::sn2_fourier(m, 2 * N + 1);
    const double mm = m.value();
    const double w = std::numbers::pi / s.K;
    const int n = 2 * N + 1;
    const auto hat = [&s](int k) {
        k = std::abs(k);
        return k == 0 ? s.mean : 0.5 * s.coefficients[static_cast<std::size_t>(k - 1)];
    };

    struct Edge {
        double value;
        bool periodic;
    };
    std::vector<Edge> all;
    for (const double shift : {0.0, 0.5}) {
        Eigen::MatrixXd A(n, n);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j)
                A(i, j) = 4.0 * mm * hat(i - j);
            const double k = (i - N + shift) * w;
            A(i, i) += k * k;
        }
        const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(A, Eigen::EigenvaluesOnly);
        if (es.info() != Eigen::Success)
            throw NumericalError("bl_band_edges: symmetric eigensolver failed");
        for (int i = 0; i < n; ++i)
            all.push_back({es.eigenvalues()(i), shift == 0.0});
    }
    std::sort(all.begin(), all.end(), [](const Edge& a, const Edge& b) { return a.value < b.value; });

    std::vector<double> edges;
    for (int i = 0; i < n_edges; ++i) {
        const Edge& e = all[static_cast<std::size_t>(i)];
        if (validate)
            validate_edge(e.value, lame_bl_trace(m, e.value), e.periodic, trace_tol, "Lame (BL)");
        edges.push_back(e.value);
    }
    return edges;
}

InfinityClass classify_bl_infinity(const bl::Params& params, double tol)
{
    const bl::Wave w = bl::make_wave(params);
    const double ell = bl::ell(params);
    const std::vector<double> edges = bl_band_edges(w.m);
    InfinityClass out{classify(bl_problem(w), tol), locate(ell, edges, false), ell};
    check_agreement(out.hill, out.location, ell, edges, "Benney-Luke");
    return out;
}

} // namespace rlwstab::hill
