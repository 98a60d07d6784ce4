#include "rlwstab/elliptic.hpp"
#include "rlwstab/errors.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

namespace rlwstab::elliptic {

namespace {

constexpr double pi = std::numbers::pi;
constexpr int max_agm_steps = 40;

// Descending AGM sequence a_n, b_n, c_n with c_0 = √m. c_{n+1} = c_n²/(4a_{n+1})
// instead of (a_n − b_n)/2, which cancels badly for small m.
struct Agm {
    std::array<double, max_agm_steps + 1> a{}, c{};
    int n = 0;
};

Agm agm_sequence(double m)
{
    Agm s;
    double a = 1.0, b = std::sqrt(1.0 - m);
    s.a[0] = a;
    s.c[0] = std::sqrt(m);
    while (s.n < max_agm_steps && s.c[s.n] > 1e-17 * a) {
        const double an = 0.5 * (a + b);
        const double cn = s.c[s.n] * s.c[s.n] / (4.0 * an);
        b = std::sqrt(a * b);
        a = an;
        ++s.n;
        s.a[s.n] = a;
        s.c[s.n] = cn;
    }
    return s;
}

// Σ_{n≥1} 2^{n−1} c_n², so that (K − E)/K = m/2 + tail
double agm_tail(const Agm& s)
{
    double sum = 0.0, w = 0.5;
    for (int i = 1; i <= s.n; ++i) {
        w *= 2.0;
        sum += w * s.c[i] * s.c[i];
    }
    return sum;
}

} // namespace

Parameter::Parameter(double m) : m_(m)
{
    if (!(m > 0.0 && m < 1.0))
        throw DomainError("elliptic parameter m must lie in (0,1), got " + std::to_string(m));
}

double complete_K(Parameter m)
{
    const Agm s = agm_sequence(m.value());
    return pi / (2.0 * s.a[s.n]);
}

double complete_E(Parameter m)
{
    const Agm s = agm_sequence(m.value());
    return pi / (2.0 * s.a[s.n]) * (1.0 - 0.5 * m.value() - agm_tail(s));
}

double mean_M(Parameter m)
{
    return 0.5 + agm_tail(agm_sequence(m.value())) / m.value();
}

double nome(Parameter m)
{
    return std::exp(-pi * complete_K(Parameter(m.complement())) / complete_K(m));
}

SnCnDn jacobi_sn_cn_dn(double x, Parameter m)
{
    if (!std::isfinite(x))
        throw DomainError("jacobi_sn_cn_dn: non-finite argument");
    const Agm s = agm_sequence(m.value());
    const double K = pi / (2.0 * s.a[s.n]);

    // Reduce to [−2K, 2K]; sn, cn are 4K-periodic and this keeps 2^N a_N x small.
    const double r = std::remainder(x, 4.0 * K);

    double phi = std::ldexp(s.a[s.n] * r, s.n);
    for (int i = s.n; i >= 1; --i)
        phi = 0.5 * (phi + std::asin(s.c[i] / s.a[i] * std::sin(phi)));

    const double sn = std::sin(phi);
    const double cn = std::cos(phi);
    const double dn = std::sqrt(1.0 - m.value() * sn * sn);
    return {sn, cn, dn};
}

double SnSquaredSeries::operator()(double x) const
{
    const double w = pi * x / K;
    double v = mean;
    for (std::size_t k = coefficients.size(); k >= 1; --k)
        v += coefficients[k - 1] * std::cos(static_cast<double>(k) * w);
    return v;
}

SnSquaredSeries sn2_fourier(Parameter m, int n_terms)
{
    if (n_terms < 1)
        throw DomainError("sn2_fourier: n_terms must be positive");
    const double K = complete_K(m);
    const double q = nome(m);
    SnSquaredSeries s{m, K, q, mean_M(m), {}, false};
    s.coefficients.reserve(static_cast<std::size_t>(n_terms));
    const double scale = -2.0 * pi * pi / (m.value() * K * K);
    double qk = 1.0;
    for (int k = 1; k <= n_terms; ++k) {
        qk *= q;
        s.coefficients.push_back(scale * k * qk / (1.0 - qk * qk));
    }
    s.truncation_warning = std::abs(s.coefficients.back()) > 1e-12;
    return s;
}

} // namespace rlwstab::elliptic
