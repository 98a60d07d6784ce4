#pragma once

// Reference computations for the tests. None of these share code paths with the
// library: elliptic values come from Boost.Math or direct quadrature, monodromies
// from a fixed-step RK4, Fourier coefficients from plain trapezoid sums.

#include <boost/math/special_functions/ellint_1.hpp>
#include <boost/math/special_functions/ellint_2.hpp>
#include <boost/math/special_functions/jacobi_elliptic.hpp>

#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <vector>

namespace oracle {

inline constexpr double pi = std::numbers::pi;

// K(m) = (1/4)∫₀^{2π} dθ/√(1−m sin²θ); the integrand is periodic and analytic, so
// the trapezoid rule converges geometrically. Doubling until two levels agree.
inline double trapezoid_periodic(const std::function<double(double)>& f)
{
    double prev = 0.0;
    for (int n = 64;; n *= 2) {
        double s = 0.0;
        for (int j = 0; j < n; ++j)
            s += f(2.0 * pi * j / n);
        s *= 2.0 * pi / n;
        if (n > 64 && std::abs(s - prev) < 1e-15 * std::abs(s))
            return s;
        if (n > (1 << 22))
            return s;
        prev = s;
    }
}

inline double K(double m)
{
    return 0.25 * trapezoid_periodic([m](double t) { return 1.0 / std::sqrt(1.0 - m * std::pow(std::sin(t), 2)); });
}

inline double E(double m)
{
    return 0.25 * trapezoid_periodic([m](double t) { return std::sqrt(1.0 - m * std::pow(std::sin(t), 2)); });
}

inline double K_boost(double m) { return boost::math::ellint_1(std::sqrt(m)); }
inline double E_boost(double m) { return boost::math::ellint_2(std::sqrt(m)); }

struct SnCnDn {
    double sn, cn, dn;
};

inline SnCnDn jacobi(double x, double m)
{
    SnCnDn r{};
    r.sn = boost::math::jacobi_elliptic(std::sqrt(m), x, &r.cn, &r.dn);
    return r;
}

inline double sn2(double x, double m)
{
    const double s = jacobi(x, m).sn;
    return s * s;
}

// Mean of f over one period by the n-point trapezoid rule.
inline double mean(const std::function<double(double)>& f, double T, int n = 4096)
{
    double s = 0.0;
    for (int j = 0; j < n; ++j)
        s += f(T * j / n);
    return s / n;
}

// a_k in f = a₀ + Σ a_k cos(2πkx/T), trapezoid rule on n points.
inline double cosine_coefficient(const std::function<double(double)>& f, double T, int k, int n = 4096)
{
    double s = 0.0;
    for (int j = 0; j < n; ++j)
        s += f(T * j / n) * std::cos(2.0 * pi * k * j / n);
    return (k == 0 ? 1.0 : 2.0) * s / n;
}

// Fixed-step RK4 for y″ + q y = 0 over [0, T]; returns tr Y(T) and det Y(T).
struct Monodromy {
    double trace, det, m11, m12, m21, m22;
};

inline Monodromy monodromy_rk4(const std::function<double(double)>& q, double T, int steps = 40000)
{
    const double h = T / steps;
    auto run = [&](double y, double yp) {
        for (int i = 0; i < steps; ++i) {
            const double x = i * h;
            const double k1y = yp, k1p = -q(x) * y;
            const double k2y = yp + 0.5 * h * k1p, k2p = -q(x + 0.5 * h) * (y + 0.5 * h * k1y);
            const double k3y = yp + 0.5 * h * k2p, k3p = -q(x + 0.5 * h) * (y + 0.5 * h * k2y);
            const double k4y = yp + h * k3p, k4p = -q(x + h) * (y + h * k3y);
            y += h / 6.0 * (k1y + 2 * k2y + 2 * k3y + k4y);
            yp += h / 6.0 * (k1p + 2 * k2p + 2 * k3p + k4p);
        }
        return std::array<double, 2>{y, yp};
    };
    const auto c1 = run(1.0, 0.0), c2 = run(0.0, 1.0);
    return {c1[0] + c2[1], c1[0] * c2[1] - c2[0] * c1[1], c1[0], c2[0], c1[1], c2[1]};
}

// Number of sign changes of f on a uniform grid over [lo, hi].
inline int sign_changes(const std::function<double(double)>& f, double lo, double hi, int n)
{
    int count = 0;
    double prev = f(lo);
    for (int i = 1; i <= n; ++i) {
        const double v = f(lo + (hi - lo) * i / n);
        if ((v > 0) != (prev > 0))
            ++count;
        prev = v;
    }
    return count;
}

} // namespace oracle
