#pragma once

#include "rlwstab/fourier.hpp"

#include <complex>
#include <string>
#include <vector>

namespace rlwstab::gkdv {

using cplx = std::complex<double>;

// Fourier coefficients û_n, n = −M..M, of a 2π-periodic u.
struct Coefficients {
    std::vector<cplx> hat;

    int order() const noexcept { return static_cast<int>(hat.size() / 2); }
    cplx operator[](int n) const noexcept;
    double l1_norm() const;

    static Coefficients zero();
    static Coefficients cosine(double amplitude = 1.0);
    // The coefficients of a CosineSeries, reinterpreted on a 2π period.
    static Coefficients from_series(const CosineSeries& s);
};

struct Disk {
    int k;
    cplx center; // −ik³ − ick
    double radius; // |k| Σ|û_n|
    // closed disk, with round-off slack relative to the center
    bool contains(cplx z) const { return std::abs(z - center) <= radius + 1e-12 * (1.0 + std::abs(center)); }
};

struct DiskFamily {
    double c;
    double fourier_l1;
    std::vector<Disk> disks; // k = −K_max..K_max
    int k0;                  // every disk with |k| ≥ k0 is disjoint from all others
    double im_threshold;     // |Im λ| beyond every disk with |k| < k0
};

DiskFamily disks(const Coefficients& u, double c, int K_max);

// Periodic spectrum of λφ = φ‴ − cφ′ + (uφ)′ on modes −Nk..Nk.
std::vector<cplx> spectrum(const Coefficients& u, double c, int Nk);

struct Report {
    DiskFamily family{};
    std::vector<cplx> eigenvalues;
    int n_checked = 0;         // eigenvalues above the threshold
    double max_abs_real = 0.0; // over those eigenvalues
    bool contained = true;     // (i) each lies in exactly one disk
    bool on_axis = true;       // (ii) |Re λ| ≤ 1e-8
    bool one_per_disk = true;  // (iii) disjoint disks with |k| ≤ K_report hold one eigenvalue
    std::vector<std::string> failures;
    bool passed() const { return contained && on_axis && one_per_disk; }
};

Report check(const Coefficients& u, double c, int Nk, int K_report);

} // namespace rlwstab::gkdv
