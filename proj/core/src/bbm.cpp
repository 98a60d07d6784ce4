#include "rlwstab/bbm.hpp"
#include "rlwstab/errors.hpp"
#include "rlwstab/ode.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <sstream>

namespace rlwstab::bbm {

namespace {

constexpr double inf = std::numeric_limits<double>::infinity();

void require_speed(const Params& p)
{
    if (p.c == 0.0)
        throw DomainError("BBM wave speed c must be nonzero");
}

// Q = A u³ + B u² + C u + D
std::array<double, 4> q_coefficients(const Params& p)
{
    require_speed(p);
    const double c = p.c;
    return {-3.0 / (5.0 * c), 9.0 / 5.0, -(144.0 * c * c + 25.0 * p.b2 - 900.0) / (330.0 * c),
            -(1008.0 * c * c * c - 6300.0 * c + 275.0 * p.b1 - 100.0 * p.b2 * c) / (1320.0 * c)};
}

double disc_sign(double c, double b1, double b2)
{
    return discriminant({c, b1, b2});
}

// p given by ascending coefficients
double horner(const std::vector<double>& p, double x)
{
    double v = 0.0;
    for (auto it = p.rbegin(); it != p.rend(); ++it)
        v = v * x + *it;
    return v;
}

// Real roots of p, ascending. Between consecutive roots of p′ the polynomial is
// monotone, so each such interval holds at most one root and plain bisection
// finds it; close root pairs that a sampling grid would step over are not lost.
std::vector<double> real_roots(std::vector<double> p)
{
    while (!p.empty() && p.back() == 0.0)
        p.pop_back();
    if (p.size() < 2)
        return {};
    if (p.size() == 2)
        return {-p[0] / p[1]};

    std::vector<double> dp;
    for (std::size_t i = 1; i < p.size(); ++i)
        dp.push_back(static_cast<double>(i) * p[i]);

    double bound = 0.0; // Cauchy bound
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
        bound = std::max(bound, std::abs(p[i] / p.back()));
    bound += 1.0;

    std::vector<double> pts{-bound};
    for (double r : real_roots(dp))
        if (r > -bound && r < bound)
            pts.push_back(r);
    pts.push_back(bound);

    std::vector<double> roots;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        double lo = pts[i], hi = pts[i + 1];
        double flo = horner(p, lo);
        const double fhi = horner(p, hi);
        if (flo == 0.0) {
            if (roots.empty() || roots.back() != lo)
                roots.push_back(lo);
            continue;
        }
        if ((flo > 0.0) == (fhi > 0.0))
            continue;
        for (int it = 0; it < 200 && hi - lo > 1e-15 * std::max(1.0, std::abs(lo)); ++it) {
            const double mid = 0.5 * (lo + hi);
            const double fm = horner(p, mid);
            if (fm == 0.0) {
                lo = hi = mid;
                break;
            }
            if ((fm > 0.0) == (flo > 0.0)) {
                lo = mid;
                flo = fm;
            } else {
                hi = mid;
            }
        }
        roots.push_back(0.5 * (lo + hi));
    }
    if (horner(p, pts.back()) == 0.0)
        roots.push_back(pts.back());
    return roots;
}

// speed polynomial in c, ascending coefficients
std::vector<double> speed_coefficients(double b1, double b2)
{
    return {-323433.0 * b1 * b1 - 800.0 * b2 * b2 * b2 + 86400.0 * b2 * b2 - 3110400.0 * b2
                + 37324800.0,
            23287176.0 * b1,
            -363181968.0 + 43200.0 * b2 * b2 - 3110400.0 * b2,
            0.0,
            27993600.0 - 777600.0 * b2,
            0.0,
            4665600.0};
}

bool near(double lhs, double rhs, double scale)
{
    return std::abs(lhs - rhs) <= 1e-9 * std::max({1.0, std::abs(scale)});
}

std::size_t expected_count(Region r)
{
    switch (r) {
    case Region::two: return 2;
    case Region::three: return 3;
    case Region::four: return 4;
    case Region::c_nonzero: return 2;
    case Region::boundary: break;
    }
    return 0;
}

} // namespace

double Q(double u, const Params& p)
{
    const auto k = q_coefficients(p);
    return ((k[0] * u + k[1]) * u + k[2]) * u + k[3];
}

double Q_prime(double u, const Params& p)
{
    const auto k = q_coefficients(p);
    return (3.0 * k[0] * u + 2.0 * k[1]) * u + k[2];
}

double discriminant(const Params& p)
{
    const auto [A, B, C, D] = q_coefficients(p);
    return 18.0 * A * B * C * D - 4.0 * B * B * B * D + B * B * C * C - 4.0 * A * C * C * C
         - 27.0 * A * A * D * D;
}

double speed_polynomial(double c, double b1, double b2)
{
    return horner(speed_coefficients(b1, b2), c);
}

std::string to_string(Region r)
{
    switch (r) {
    case Region::two: return "2";
    case Region::three: return "3";
    case Region::four: return "4";
    case Region::c_nonzero: return "c≠0";
    case Region::boundary: return "boundary";
    }
    return "?";
}

std::vector<double> SpeedIntervals::finite_endpoints() const
{
    std::vector<double> out;
    for (const auto& iv : intervals) {
        if (std::isfinite(iv.lo) && iv.lo != 0.0)
            out.push_back(iv.lo);
        if (std::isfinite(iv.hi) && iv.hi != 0.0)
            out.push_back(iv.hi);
    }
    return out;
}

Region region_classify(double b1, double b2)
{
    const double X = b1 * b1;

    // curve 1: D(0) = 0, i.e. b₁² = (800/323433)(36 − b₂)³
    const double curve1 = 800.0 / 323433.0 * std::pow(36.0 - b2, 3);
    if (near(X, curve1, std::max(X, curve1)))
        return Region::boundary;
    const bool d0_positive = X < curve1;

    // curves 2, 3: the discriminant of the speed polynomial in c vanishes
    const double A = 8085825.0;
    const double B = ((20000.0 * b2 - 2160000.0) * b2 - 698479200.0) * b2 + 27011491200.0;
    const double C = (((-1440000.0 * b2 + 207360000.0) * b2 + 1222387200.0) * b2 - 625488998400.0) * b2
                   - 13102430793984.0;
    const double quad = (A * X + B) * X + C;
    const double scale = std::max({std::abs(A * X * X), std::abs(B * X), std::abs(C)});
    if (std::abs(quad) <= 1e-9 * scale)
        return Region::boundary;
    const double lin = X - 72.0 * b2 + 2592.0;
    const int s = (lin > 0.0 ? 1 : -1) * (quad > 0.0 ? 1 : -1);

    if (s < 0) {
        const double t = 25.0 * b2 * b2 - 1800.0 * b2 + 355833.0;
        const double curve2 = 16.0 / 1617165.0
                            * (((-125.0 * b2 + 13500.0) * b2 + 4365495.0) * b2 - 168821820.0
                               + t * std::sqrt(t));
        if (b2 < 9.0 / 5.0 * (20.0 - 11.0 * std::sqrt(11.0)) && X < curve2)
            return Region::c_nonzero;
        return d0_positive ? Region::four : Region::three;
    }
    return d0_positive ? Region::three : Region::two;
}

SpeedIntervals admissible_speed_intervals(double b1, double b2)
{
    // Breakpoints in ascending order; 0 is always excluded.
    std::vector<double> pts{-inf};
    for (double r : real_roots(speed_coefficients(b1, b2)))
        if (r != 0.0)
            pts.push_back(r);
    pts.push_back(0.0);
    pts.push_back(inf);
    std::sort(pts.begin(), pts.end());

    SpeedIntervals out{{}, region_classify(b1, b2)};
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        const double lo = pts[i], hi = pts[i + 1];
        double probe;
        if (!std::isfinite(lo))
            probe = hi - 1.0 - std::abs(hi);
        else if (!std::isfinite(hi))
            probe = lo + 1.0 + std::abs(lo);
        else
            probe = 0.5 * (lo + hi);
        if (probe != 0.0 && disc_sign(probe, b1, b2) > 0.0)
            out.intervals.push_back({lo, hi});
    }

    // A root pair within rounding of a double root sits on a tangency curve that
    // region_classify cannot resolve in floating point either.
    if (out.region != Region::boundary && out.intervals.size() != expected_count(out.region)) {
        for (std::size_t i = 1; i + 2 < pts.size(); ++i)
            if (pts[i + 1] - pts[i] < 1e-6 * std::max(1.0, std::abs(pts[i])))
                out.region = Region::boundary;
    }
    if (out.region != Region::boundary && out.intervals.size() != expected_count(out.region)) {
        std::ostringstream msg;
        msg << "speed intervals at (b1, b2) = (" << b1 << ", " << b2 << "): found "
            << out.intervals.size() << " but region " << to_string(out.region) << " predicts "
            << expected_count(out.region);
        throw InconsistencyError(msg.str());
    }
    return out;
}

Wave make_wave(const Params& p)
{
    require_speed(p);
    if (!(discriminant(p) > 0.0)) {
        std::ostringstream msg;
        msg << "disc(Q) <= 0 at (c, b1, b2) = (" << p.c << ", " << p.b1 << ", " << p.b2
            << "): no periodic orbit";
        throw DomainError(msg.str());
    }
    const double c = p.c;
    const double alpha3 = -6.0 / (5.0 * c);
    const double alpha1 = (90.0 * c * c - 5.0 * p.b2 + 180.0) / (33.0 * c);
    const double alpha0 = (180.0 * c - 5.0 * p.b1) / (12.0 * c);
    if (alpha1 == 0.0)
        throw DomainError("no cnoidal wave: alpha1 = 0");
    const double ratio = alpha0 * alpha0 * alpha3 / (alpha1 * alpha1 * alpha1);
    if (!(ratio > -4.0 / 27.0 && ratio < 0.0)) {
        std::ostringstream msg;
        msg << "no cnoidal wave: alpha0^2 alpha3 / alpha1^3 = " << ratio << " outside (-4/27, 0)";
        throw DomainError(msg.str());
    }

    const auto f = [](double m) {
        const double d = 2.0 - 3.0 * m - 3.0 * m * m + 2.0 * m * m * m;
        const double q = 1.0 - m + m * m;
        return -d * d / (27.0 * q * q * q);
    };
    // f increases on (0, 1/2) and f(1 − m) = f(m)
    const bool lower = alpha0 * alpha3 / alpha1 > 0.0;
    double lo = 0.0, hi = 0.5;
    while (hi - lo > 1e-15) {
        const double mid = 0.5 * (lo + hi);
        (f(mid) < ratio ? lo : hi) = mid;
    }
    const double mr = lower ? 0.5 * (lo + hi) : 1.0 - 0.5 * (lo + hi);

    const elliptic::Parameter m(mr);
    const double q = 1.0 - mr + mr * mr;
    const double d = 2.0 - 3.0 * mr - 3.0 * mr * mr + 2.0 * mr * mr * mr;
    const double u0 = 9.0 * alpha0 * q / (alpha1 * d);
    const double a2 = 9.0 * alpha0 * alpha3 * q / (4.0 * alpha1 * d);
    if (!(a2 > 0.0))
        throw NumericalError("BBM branch selection produced a^2 <= 0");
    const double a = std::sqrt(a2);
    const double K = elliptic::complete_K(m);

    Wave w{p, m, K, a, u0, 2.0 * K / a, alpha3, alpha1, alpha0, 0.0, 0.0};
    w.u_mean = w.u_series(64).mean();
    w.one_plus_eta_mean = 1.0 + w.eta_series(8).mean();
    return w;
}

double Wave::u(double x) const
{
    const double cn = elliptic::jacobi_sn_cn_dn(a * x, m).cn;
    const double mm = m.value();
    return params.c + u0 * ((2.0 * mm - 1.0) / 3.0 - mm * cn * cn);
}

CosineSeries Wave::u_series(int n_terms) const
{
    const double mm = m.value();
    return CosineSeries::from_sn2(elliptic::sn2_fourier(m, n_terms), T, u0 * mm,
                                  params.c - u0 * (mm + 1.0) / 3.0);
}

CosineSeries Wave::u_series_by_quadrature(int n_terms, int n_samples) const
{
    const Params p = params;
    const auto samples = ode::even_profile_samples([p](double v) { return Q_prime(v, p); }, u(0.0),
                                                   T, n_samples);
    return CosineSeries::from_samples(T, samples, n_terms);
}

CosineSeries Wave::eta_series(int n_terms, int n_grid) const
{
    const CosineSeries us = u_series(std::max(n_terms, 128));
    const double c = params.c;
    std::vector<double> eta(static_cast<std::size_t>(n_grid));
    for (int j = 0; j < n_grid; ++j) {
        const double x = T * j / n_grid;
        const double v = us(x);
        eta[static_cast<std::size_t>(j)] = params.b2 + c * v - c / 6.0 * us.derivative(x, 2) - 0.5 * v * v;
    }
    return CosineSeries::from_samples(T, eta, n_terms);
}

double Wave::profile_residual(int n_grid) const
{
    const CosineSeries us = u_series(128);
    double worst = 0.0;
    for (int j = 0; j < n_grid; ++j) {
        const double x = T * j / n_grid;
        const double du = us.derivative(x, 1);
        worst = std::max(worst, std::abs(du * du - 2.0 * Q(u(x), params)));
    }
    return worst;
}

double one_plus_eta_mean_identity(double c, double b2)
{
    return 4.0 / 33.0 * (2.0 + c * c) + 1213.0 / 1188.0 * b2;
}

double instability_threshold(double c)
{
    if (c == 0.0)
        throw DomainError("BBM wave speed c must be nonzero");
    return -144.0 / 1213.0 * (2.0 + c * c);
}

} // namespace rlwstab::bbm
