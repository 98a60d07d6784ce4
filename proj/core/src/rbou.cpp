#include "rlwstab/rbou.hpp"
#include "rlwstab/errors.hpp"
#include "rlwstab/ode.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace rlwstab::rbou {

void check_roots(const Roots& r)
{
    std::ostringstream msg;
    if (!(r.alpha < r.beta))
        msg << "alpha < beta violated (" << r.alpha << " >= " << r.beta << ")";
    else if (!(r.beta < r.gamma))
        msg << "beta < gamma violated (" << r.beta << " >= " << r.gamma << ")";
    else if (!(r.alpha + r.beta + r.gamma > -1.5))
        msg << "alpha + beta + gamma > -3/2 violated (sum = " << r.alpha + r.beta + r.gamma << ")";
    else
        return;
    throw DomainError("roots outside Delta: " + msg.str());
}

Wave make_wave(const Roots& r, SpeedBranch branch)
{
    check_roots(r);
    const double s = r.alpha + r.beta + r.gamma;
    const double speed = std::sqrt(1.0 + 2.0 * s / 3.0);
    const elliptic::Parameter m((r.gamma - r.beta) / (r.gamma - r.alpha));
    const double K = elliptic::complete_K(m);
    const double a = std::sqrt((r.gamma - r.alpha) / (4.0 * s + 6.0));
    return Wave{r,
                branch == SpeedBranch::positive ? speed : -speed,
                r.alpha * r.beta * r.gamma / 3.0,
                (r.alpha * r.beta + r.beta * r.gamma + r.alpha * r.gamma) / 3.0,
                m,
                K,
                a,
                2.0 * K / a};
}

double Wave::u(double x) const
{
    return roots.gamma - (roots.gamma - roots.beta) * elliptic::sn2(a * x, m);
}

CosineSeries Wave::u_series(int n_terms) const
{
    return CosineSeries::from_sn2(elliptic::sn2_fourier(m, n_terms), T,
                                  -(roots.gamma - roots.beta), roots.gamma);
}

CosineSeries Wave::u_series_by_quadrature(int n_terms, int n_samples) const
{
    const double c2 = c * c, bc = b_combo;
    const auto samples = ode::even_profile_samples(
        [c2, bc](double v) { return -((1.0 - c2) * v + v * v + bc) / c2; }, roots.gamma, T,
        n_samples);
    return CosineSeries::from_samples(T, samples, n_terms);
}

double Wave::profile_residual(int n_grid) const
{
    const CosineSeries s = u_series(128);
    double worst = 0.0;
    for (int j = 0; j < n_grid; ++j) {
        const double x = T * j / n_grid;
        const double v = u(x);
        const double r = c * c * s.derivative(x, 2) + (1.0 - c * c) * v + v * v + b_combo;
        worst = std::max(worst, std::abs(r));
    }
    return worst;
}

CosineSeries v_profile(const Wave& w, double b2, int n_terms)
{
    const CosineSeries u = w.u_series(n_terms);
    std::vector<double> v(u.coefficients().size());
    const double k0 = 2.0 * std::numbers::pi / w.T;
    for (std::size_t k = 0; k < v.size(); ++k) {
        const double kk = k0 * static_cast<double>(k);
        v[k] = -w.c * (1.0 + kk * kk) * u.coefficients()[k];
    }
    v[0] -= b2;
    return CosineSeries(w.T, std::move(v));
}

double ell(const Roots& r)
{
    check_roots(r);
    return 6.0 * (2.0 * r.gamma + 1.0) / (r.gamma - r.alpha);
}

} // namespace rlwstab::rbou
