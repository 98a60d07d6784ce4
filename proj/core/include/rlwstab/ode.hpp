#pragma once

#include <functional>
#include <vector>

namespace rlwstab::ode {

using State = std::vector<double>;
using Rhs = std::function<void(const State& y, State& dydt, double t)>;

struct Tolerances {
    double rel = 1e-12;
    double abs = 1e-14;
};

// Adaptive Runge–Kutta–Fehlberg 7(8).
State integrate(const Rhs& f, State y0, double t0, double t1, Tolerances tol = {});
std::vector<State> integrate_at(const Rhs& f, State y0, const std::vector<double>& times,
                                Tolerances tol = {});

// Samples u(jT/n), j = 0..n−1, of the even solution of u″ = accel(u) with u(0) = u0, u′(0) = 0.
std::vector<double> even_profile_samples(const std::function<double(double)>& accel, double u0,
                                         double period, int n, Tolerances tol = {});

} // namespace rlwstab::ode
