#pragma once

#include "rlwstab/bbm.hpp"
#include "rlwstab/bl.hpp"
#include "rlwstab/rbou.hpp"

#include <Eigen/Dense>

#include <array>
#include <complex>
#include <string>
#include <variant>
#include <vector>

namespace rlwstab::floquet {

using cplx = std::complex<double>;

enum class Model { rbou, bl, bbm };
std::string to_string(Model m);

using WaveVariant = std::variant<rbou::Wave, bl::Wave, bbm::Wave>;
Model model_of(const WaveVariant& w);
double speed_of(const WaveVariant& w);
double period_of(const WaveVariant& w);

// n uniform cell midpoints in (−1/2, 1/2); closed under τ → −τ.
std::vector<double> default_tau_grid(int n = 200);

struct SpectrumRequest {
    WaveVariant wave;
    int Nk = 100;
    std::vector<double> tau_grid = default_tau_grid();
    bool dual_path_check = true;
};

// 2(2Nk+1) square Bloch operator at Floquet exponent τ.
Eigen::MatrixXcd build_collocation_matrix(const SpectrumRequest& req, double tau);

struct SpectrumPoint {
    double tau;
    cplx lambda;
    bool edge_flag; // outermost 10% of the resolved |Im λ| range
};

struct FloquetSpectrum {
    Model model;
    int Nk;
    std::vector<double> tau_grid;
    std::vector<SpectrumPoint> points; // sorted by Im, then Re, then τ
    double max_real_part;
    double max_abs_imag;
    double seconds;
};

FloquetSpectrum compute_spectrum(const SpectrumRequest& req, int jobs = 1);

// max |analytic − quadrature| over the leading Fourier coefficients of the profile
double dual_path_defect(const WaveVariant& w, int n_terms = 64);

// Largest distance from a point of the cloud to the cloud reflected by λ → −λ and
// λ → conj λ.
double symmetry_defect(const FloquetSpectrum& s);

// Mean |Re λ| over the top decile of |Im λ| among points that are not edge-flagged.
double top_decile_mean_abs_real(const FloquetSpectrum& s);
// max |Re λ| over points with |Im λ| ≥ im_min (edge-flagged points excluded).
double max_abs_real_above(const FloquetSpectrum& s, double im_min);

// λ ≈ λ⁽¹⁾κ + λ⁽⁰⁾ + λ⁽⁻¹⁾κ⁻¹ as |κ| → ∞, κ = k + τ.
struct AsymptoteCurve {
    Model model;
    cplx lambda1;
    cplx lambda0;                      // ±σ for rBou/BL in a gap
    std::array<cplx, 2> lambda_minus1; // BBM branches (zero otherwise)
    bool off_axis;                     // spectrum leaves the imaginary axis at infinity
    std::string description;
};

// For rBou/BL the Hill classification supplies σ; require_gap makes a band wave an error.
AsymptoteCurve asymptote(const WaveVariant& w, bool require_gap = false);

struct AsymptoteResidual {
    int n_points;
    double max_residual;
    double residual_exponent; // least-squares slope of log residual vs log |κ|
    double re_exponent;       // slope of log|Re λ| vs log|κ|
    double max_abs_real;
    double mean_abs_real;
};

AsymptoteResidual asymptote_residual(const FloquetSpectrum& s, const AsymptoteCurve& curve,
                                     int k_min);

} // namespace rlwstab::floquet
