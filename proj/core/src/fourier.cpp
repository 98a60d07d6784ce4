#include "rlwstab/fourier.hpp"
#include "rlwstab/elliptic.hpp"
#include "rlwstab/errors.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>

namespace rlwstab {

namespace {
constexpr double two_pi = 2.0 * std::numbers::pi;
}

CosineSeries::CosineSeries(double period, std::vector<double> cosine_coefficients)
    : period_(period), a_(std::move(cosine_coefficients))
{
    if (!(period > 0.0))
        throw DomainError("CosineSeries: period must be positive");
    if (a_.empty())
        a_.push_back(0.0);
}

CosineSeries CosineSeries::from_sn2(const elliptic::SnSquaredSeries& s, double period,
                                    double scale, double offset)
{
    std::vector<double> a;
    a.reserve(s.coefficients.size() + 1);
    a.push_back(offset + scale * s.mean);
    for (double c : s.coefficients)
        a.push_back(scale * c);
    return CosineSeries(period, std::move(a));
}

CosineSeries CosineSeries::from_samples(double period, const std::vector<double>& samples,
                                        int n_terms)
{
    const auto n = static_cast<int>(samples.size());
    if (n < 2 * n_terms + 1)
        throw DomainError("CosineSeries::from_samples: too few samples for requested terms");
    std::vector<double> a(static_cast<std::size_t>(n_terms) + 1, 0.0);
    for (int k = 0; k <= n_terms; ++k) {
        double acc = 0.0;
        for (int j = 0; j < n; ++j) {
            // exact index arithmetic keeps the phase accurate for large k·j
            const int r = static_cast<int>((static_cast<long long>(k) * j) % n);
            acc += samples[static_cast<std::size_t>(j)] * std::cos(two_pi * r / n);
        }
        a[static_cast<std::size_t>(k)] = (k == 0 ? 1.0 : 2.0) * acc / n;
    }
    return CosineSeries(period, std::move(a));
}

double CosineSeries::cosine(int k) const noexcept
{
    k = std::abs(k);
    return k < static_cast<int>(a_.size()) ? a_[static_cast<std::size_t>(k)] : 0.0;
}

double CosineSeries::hat(int k) const noexcept
{
    return k == 0 ? cosine(0) : 0.5 * cosine(k);
}

double CosineSeries::operator()(double x) const
{
    return derivative(x, 0);
}

double CosineSeries::derivative(double x, int order) const
{
    const double w = two_pi / period_;
    double v = order == 0 ? a_[0] : 0.0;
    for (std::size_t k = a_.size() - 1; k >= 1; --k) {
        const double kw = static_cast<double>(k) * w;
        const double t = kw * x;
        double term = 0.0;
        switch (order % 4) {
        case 0: term = std::cos(t); break;
        case 1: term = -std::sin(t); break;
        case 2: term = -std::cos(t); break;
        default: term = std::sin(t); break;
        }
        v += a_[k] * std::pow(kw, order) * term;
    }
    return v;
}

std::vector<double> CosineSeries::sample(int n) const
{
    std::vector<double> out(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j)
        out[static_cast<std::size_t>(j)] = (*this)(period_ * j / n);
    return out;
}

double CosineSeries::l1_norm() const
{
    double s = std::abs(a_[0]);
    for (std::size_t k = 1; k < a_.size(); ++k)
        s += std::abs(a_[k]);
    return s;
}

Eigen::MatrixXd CosineSeries::toeplitz(int N) const
{
    const int n = 2 * N + 1;
    Eigen::MatrixXd T(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            T(i, j) = hat(i - j);
    return T;
}

CosineSeries CosineSeries::scaled(double s, double shift) const
{
    std::vector<double> a(a_);
    for (double& v : a)
        v *= s;
    a[0] += shift;
    return CosineSeries(period_, std::move(a));
}

} // namespace rlwstab
