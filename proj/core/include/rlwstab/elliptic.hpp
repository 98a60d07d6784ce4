#pragma once

#include <vector>

namespace rlwstab::elliptic {

// The elliptic parameter m = k². Only the open interval (0,1) is accepted.
class Parameter {
public:
    explicit Parameter(double m);
    double value() const noexcept { return m_; }
    double complement() const noexcept { return 1.0 - m_; }

private:
    double m_;
};

double complete_K(Parameter m);
double complete_E(Parameter m);
// M(m) = (K − E)/(mK), the mean of sn² over a period.
double mean_M(Parameter m);
double nome(Parameter m);

struct SnCnDn {
    double sn, cn, dn;
};

SnCnDn jacobi_sn_cn_dn(double x, Parameter m);

inline double sn2(double x, Parameter m)
{
    const double s = jacobi_sn_cn_dn(x, m).sn;
    return s * s;
}

// sn²(x) = mean + Σ_{k≥1} coefficients[k-1]·cos(πkx/K)
struct SnSquaredSeries {
    Parameter m;
    double K;
    double q;
    double mean;
    std::vector<double> coefficients;
    bool truncation_warning = false;

    double operator()(double x) const;
};

SnSquaredSeries sn2_fourier(Parameter m, int n_terms = 64);

} // namespace rlwstab::elliptic
