#pragma once

#include "rlwstab/elliptic.hpp"
#include "rlwstab/fourier.hpp"

#include <string>
#include <vector>

namespace rlwstab::bbm {

struct Params {
    double c, b1, b2;
};

// (u′)² = 2Q(u) with Q′ = P
double Q(double u, const Params& p);
double Q_prime(double u, const Params& p);
// Cubic discriminant of Q's coefficients.
double discriminant(const Params& p);
// A positive multiple of c⁴·disc(Q); its real roots are the finite interval endpoints.
double speed_polynomial(double c, double b1, double b2);

struct Interval {
    double lo, hi; // may be ±∞
};

enum class Region { two, three, four, c_nonzero, boundary };
std::string to_string(Region r);

struct SpeedIntervals {
    std::vector<Interval> intervals;
    Region region;
    std::vector<double> finite_endpoints() const;
};

Region region_classify(double b1, double b2);
SpeedIntervals admissible_speed_intervals(double b1, double b2);

struct Wave {
    Params params;
    elliptic::Parameter m;
    double K;
    double a;
    double u0;
    double T;
    double alpha3, alpha1, alpha0; // 2Q(c + w) = α₃w³ + α₁w + α₀
    double u_mean;
    double one_plus_eta_mean;

    // u(x) = c + u₀((2m−1)/3 − m cn²(ax))
    double u(double x) const;
    CosineSeries u_series(int n_terms = 64) const;
    CosineSeries u_series_by_quadrature(int n_terms = 64, int n_samples = 1024) const;
    // η = b₂ + cu − (c/6)u″ − u²/2
    CosineSeries eta_series(int n_terms = 64, int n_grid = 2048) const;
    // max |(u′)² − 2Q(u)|
    double profile_residual(int n_grid = 2048) const;
};

Wave make_wave(const Params& p);

// The closed form (4/33)(2+c²) + (1213/1188)b₂.
double one_plus_eta_mean_identity(double c, double b2);
// −(144/1213)(2+c²): b₂ below this sends the spectrum off the imaginary axis at infinity.
double instability_threshold(double c);

} // namespace rlwstab::bbm
