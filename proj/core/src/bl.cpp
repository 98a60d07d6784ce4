#include "rlwstab/bl.hpp"
#include "rlwstab/errors.hpp"
#include "rlwstab/ode.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace rlwstab::bl {

namespace {

double m0_residual(double m)
{
    return 1.0 + m - 3.0 * m * elliptic::mean_M(elliptic::Parameter(m));
}

double bisect_m0()
{
    double lo = 0.5, hi = 0.999;
    while (hi - lo > 1e-13) {
        const double mid = 0.5 * (lo + hi);
        (m0_residual(mid) > 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

} // namespace

double m0()
{
    static const double root = bisect_m0();
    return root;
}

double a_bound(double m)
{
    if (m <= m0())
        return std::numeric_limits<double>::infinity();
    return 1.0 / (2.0 * std::sqrt(-m0_residual(m)));
}

void check_params(const Params& p)
{
    const elliptic::Parameter m(p.m);
    if (!(p.a > 0.0))
        throw DomainError("amplitude a must be positive");
    const double bound = a_bound(m.value());
    if (!(p.a < bound)) {
        std::ostringstream msg;
        msg.precision(10);
        msg << "(m, a) outside the box: m = " << p.m << " > m0 requires a < 1/(2 sqrt(3mM-m-1)) = "
            << bound << ", got a = " << p.a;
        throw DomainError(msg.str());
    }
}

Wave make_wave(const Params& p)
{
    check_params(p);
    const elliptic::Parameter m(p.m);
    const double mm = p.m, a = p.a, a2 = a * a;
    const double K = elliptic::complete_K(m);
    const double M = elliptic::mean_M(m);
    const double den = 1.0 + 4.0 * (1.0 + mm - 3.0 * mm * M) * a2;
    const double c = 1.0 / std::sqrt(den);
    const double b = 8.0 * (1.0 - 2.0 * (1.0 + mm) * M + 3.0 * mm * M * M) * mm * a2 * a2
                   / (den * std::sqrt(den));
    const double E = 32.0 * (1.0 - M) * (1.0 - mm * M) * mm * mm * M * a2 * a2 * a2 / (den * den);
    return Wave{p, m, K, M, c, b, E, 2.0 * K / a, 4.0 * mm * a2 * c};
}

double Wave::v(double x) const
{
    return -v0_amplitude * (elliptic::sn2(params.a * x, m) - M);
}

CosineSeries Wave::v_series(int n_terms) const
{
    return CosineSeries::from_sn2(elliptic::sn2_fourier(m, n_terms), T, -v0_amplitude,
                                  v0_amplitude * M);
}

CosineSeries Wave::v_series_by_quadrature(int n_terms, int n_samples) const
{
    const double cc = c, bb = b;
    const auto samples = ode::even_profile_samples(
        [cc, bb](double v) { return -(1.5 * cc * v * v + (1.0 - cc * cc) * v + bb) / (cc * cc); },
        v0_amplitude * M, T, n_samples);
    return CosineSeries::from_samples(T, samples, n_terms);
}

double Wave::profile_residual(int n_grid) const
{
    const CosineSeries s = v_series(128);
    double worst = 0.0;
    for (int j = 0; j < n_grid; ++j) {
        const double x = T * j / n_grid;
        const double w = v(x);
        const double r = c * c * s.derivative(x, 2) + 1.5 * c * w * w + (1.0 - c * c) * w + b;
        worst = std::max(worst, std::abs(r));
    }
    return worst;
}

double ell(const Params& p)
{
    check_params(p);
    const double M = elliptic::mean_M(elliptic::Parameter(p.m));
    return 1.0 / (p.a * p.a) + 4.0 * (1.0 + p.m - 2.0 * p.m * M);
}

} // namespace rlwstab::bl
