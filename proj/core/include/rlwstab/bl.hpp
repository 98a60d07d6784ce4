#pragma once

#include "rlwstab/elliptic.hpp"
#include "rlwstab/fourier.hpp"

namespace rlwstab::bl {

// (m, a) ∈ □: for m > m₀ the amplitude is bounded, a < 1/(2√(3mM − m − 1)).
struct Params {
    double m, a;
};

// Unique root of 1 + m − 3mM(m) in (0,1).
double m0();
// Upper bound on a, or +∞ when m ≤ m₀.
double a_bound(double m);
void check_params(const Params& p);

struct Wave {
    Params params;
    elliptic::Parameter m;
    double K;
    double M;
    double c;
    double b;
    double E;
    double T;
    double v0_amplitude; // 4ma²c

    // v(x) = −v0_amplitude·(sn²(ax) − M): mean zero, maximum v0_amplitude·M at x = 0
    double v(double x) const;
    CosineSeries v_series(int n_terms = 64) const;
    CosineSeries v_series_by_quadrature(int n_terms = 64, int n_samples = 1024) const;
    // max |c²v″ + (3c/2)v² + (1−c²)v + b|
    double profile_residual(int n_grid = 2048) const;
};

Wave make_wave(const Params& p);

// ℓ in −y″ + 4m sn² y = ℓy, the scaled form of c²y″ + (1+cv)y = 0.
double ell(const Params& p);

} // namespace rlwstab::bl
