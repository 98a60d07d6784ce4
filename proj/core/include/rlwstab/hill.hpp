#pragma once

#include "rlwstab/bl.hpp"
#include "rlwstab/elliptic.hpp"
#include "rlwstab/ode.hpp"
#include "rlwstab/rbou.hpp"

#include <Eigen/Dense>

#include <array>
#include <functional>
#include <string>
#include <vector>

namespace rlwstab::hill {

// y″ + q(x) y = 0 with q of period `period`. `speed` only scales the reported
// growth rate: the spectrum offset is |c|·log|μ|/T. For even q the monodromy is
// rebuilt from the half period, which keeps tr ∓ 2 accurate in thin bands.
struct HillProblem {
    std::function<double(double)> q;
    double period;
    double speed = 1.0;
    bool even = false;
};

struct Monodromy {
    Eigen::Matrix2d Y;
    double trace;
    double det;
    double mu_abs; // larger |μ|; 1 inside a band
};

Monodromy monodromy(const HillProblem& p, ode::Tolerances tol = {});

enum class Kind { band, gap, edge };
std::string to_string(Kind k);

struct BandGapClass {
    Kind kind;
    double lyapunov; // log|μ|/T, zero unless gap
    double sigma;    // speed·lyapunov
    double trace;
    double tolerance_used;
};

BandGapClass classify(const HillProblem& p, double tol = 1e-9);

// Physical Hill problems for the two models with a Lamé reduction.
HillProblem rbou_problem(const rbou::Wave& w);
HillProblem bl_problem(const bl::Wave& w);

// ℓ₁ᴬ as printed (5+2m−θ₂) or as selected by the monodromy validator (5+2m−2θ₂).
enum class LameA1Form { validated, printed };

struct LameEdges {
    elliptic::Parameter m;
    // ℓ₁ᴾ, ℓ₁ᴬ, ℓ₂ᴬ, ℓ₂ᴾ, ℓ₃ᴾ, ℓ₃ᴬ, ℓ₄ᴬ
    std::array<double, 7> edges;
    double theta1, theta2, theta3;

    static constexpr std::array<bool, 7> periodic{true, false, false, true, true, false, false};
};

// Closed-form edges of y″ + (ℓ − 12m sn²) y = 0; each is checked against trace ±2.
LameEdges lame_edges_rbou(elliptic::Parameter m, LameA1Form form = LameA1Form::validated,
                          bool validate = true, double trace_tol = 1e-6);
double lame_rbou_trace(elliptic::Parameter m, double ell);

// Position of ℓ among ascending edges e₀ < e₁ ≤ e₂ < ...: band j = (e_{2j−2}, e_{2j−1}),
// gap j = (e_{2j−1}, e_{2j}), gap 0 = (−∞, e₀).
struct Location {
    Kind kind;  // band or gap
    int index;  // -1 when ℓ lies beyond the last supplied edge
    std::string label;
};
Location locate(double ell, const std::vector<double>& edges, bool last_band_unbounded);

struct InfinityClass {
    BandGapClass hill;
    Location location;
    double ell;
};

InfinityClass classify_rbou_infinity(const rbou::Roots& roots, double tol = 1e-9);
// Gap index (2 or 3) predicted by the corollary's inequalities on 1/a², or 0.
int rbou_corollary_gap(elliptic::Parameter m, double a);

// Leading periodic/anti-periodic eigenvalues of −y″ + 4m sn² y = ℓy on [−K, K],
// merged ascending. Each is checked against trace ±2.
std::vector<double> bl_band_edges(elliptic::Parameter m, int n_edges = 12, int N = 50,
                                  bool validate = true, double trace_tol = 1e-6);
double lame_bl_trace(elliptic::Parameter m, double ell);

InfinityClass classify_bl_infinity(const bl::Params& params, double tol = 1e-9);

} // namespace rlwstab::hill
