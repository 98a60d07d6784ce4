#pragma once

#include "rlwstab/elliptic.hpp"
#include "rlwstab/fourier.hpp"

namespace rlwstab::rbou {

// Roots of E − V(u); the admissible set Δ is α < β < γ, α+β+γ > −3/2.
struct Roots {
    double alpha, beta, gamma;
};

void check_roots(const Roots& r);

enum class SpeedBranch { positive, negative };

struct Wave {
    Roots roots;
    double c;       // c² = 1 + (2/3)(α+β+γ)
    double E;       // αβγ/3
    double b_combo; // b₁ − b₂c
    elliptic::Parameter m;
    double K;
    double a;
    double T;

    // u(x) = γ − (γ−β) sn²(ax)
    double u(double x) const;
    CosineSeries u_series(int n_terms = 64) const;
    // u(x) from integrating c²u″ + (1−c²)u + u² + b_combo = 0 and taking DFT coefficients
    CosineSeries u_series_by_quadrature(int n_terms = 64, int n_samples = 1024) const;
    // max |c²u″ + (1−c²)u + u² + b_combo| on a uniform grid, u″ spectral
    double profile_residual(int n_grid = 2048) const;
};

Wave make_wave(const Roots& roots, SpeedBranch branch = SpeedBranch::positive);

// v = (1 − ∂²)(−cu − b₂)
CosineSeries v_profile(const Wave& w, double b2 = 0.0, int n_terms = 64);

// ℓ = 6(2γ+1)/(γ−α) = 4 + 4m + 1/a²
double ell(const Roots& r);

} // namespace rlwstab::rbou
