#pragma once

#include <Eigen/Dense>

#include <vector>

namespace rlwstab {

namespace elliptic {
struct SnSquaredSeries;
}

// An even, real, T-periodic function f(x) = a₀ + Σ_{k≥1} a_k cos(2πkx/T).
// All wave profiles are of this form; the complex exponential coefficients are
// f̂₀ = a₀ and f̂_{±k} = a_k/2.
class CosineSeries {
public:
    CosineSeries() = default;
    CosineSeries(double period, std::vector<double> cosine_coefficients);

    // f(x) = offset + scale·s(x·(2K/T)) for an sn² series s over period 2K.
    static CosineSeries from_sn2(const elliptic::SnSquaredSeries& s, double period,
                                 double scale, double offset);
    // Trapezoid/DFT coefficients from n uniform samples f(jT/n), j = 0..n−1.
    static CosineSeries from_samples(double period, const std::vector<double>& samples,
                                     int n_terms);

    double period() const noexcept { return period_; }
    int terms() const noexcept { return static_cast<int>(a_.size()) - 1; }
    double mean() const noexcept { return a_.empty() ? 0.0 : a_[0]; }
    double cosine(int k) const noexcept;
    double hat(int k) const noexcept;
    const std::vector<double>& coefficients() const noexcept { return a_; }

    double operator()(double x) const;
    double derivative(double x, int order) const;
    std::vector<double> sample(int n) const;

    // Σ|f̂ₙ| over n ∈ ℤ
    double l1_norm() const;
    // Multiplication operator on modes −N..N: entry (k,n) = f̂_{k−n}.
    Eigen::MatrixXd toeplitz(int N) const;

    CosineSeries scaled(double s, double shift = 0.0) const;

private:
    double period_ = 1.0;
    std::vector<double> a_;
};

} // namespace rlwstab
