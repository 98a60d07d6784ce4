#include "rlwstab/ode.hpp"
#include "rlwstab/errors.hpp"

#include <boost/numeric/odeint.hpp>

#include <exception>
#include <string>

namespace rlwstab::ode {

namespace odeint = boost::numeric::odeint;

namespace {

auto make_stepper(Tolerances tol)
{
    return odeint::make_controlled<odeint::runge_kutta_fehlberg78<State>>(tol.abs, tol.rel);
}

} // namespace

State integrate(const Rhs& f, State y0, double t0, double t1, Tolerances tol)
{
    try {
        odeint::integrate_adaptive(make_stepper(tol), f, y0, t0, t1, (t1 - t0) / 64.0);
    } catch (const std::exception& e) {
        throw NumericalError(std::string("ODE integration failed: ") + e.what());
    }
    return y0;
}

std::vector<State> integrate_at(const Rhs& f, State y0, const std::vector<double>& times,
                                Tolerances tol)
{
    std::vector<State> out;
    out.reserve(times.size());
    if (times.empty())
        return out;
    const double dt = (times.back() - times.front()) / 64.0;
    try {
        odeint::integrate_times(make_stepper(tol), f, y0, times.begin(), times.end(),
                                dt > 0.0 ? dt : 1e-3,
                                [&out](const State& y, double) { out.push_back(y); });
    } catch (const std::exception& e) {
        throw NumericalError(std::string("ODE integration failed: ") + e.what());
    }
    return out;
}

std::vector<double> even_profile_samples(const std::function<double(double)>& accel, double u0,
                                         double period, int n, Tolerances tol)
{
    // Integrate only over [0, T/2] and mirror: the profile is even about both 0 and T/2.
    std::vector<double> times;
    const int half = n / 2;
    for (int j = 0; j <= half; ++j)
        times.push_back(period * j / n);
    const Rhs rhs = [&accel](const State& y, State& dy, double) {
        dy[0] = y[1];
        dy[1] = accel(y[0]);
    };
    const auto states = integrate_at(rhs, State{u0, 0.0}, times, tol);
    std::vector<double> out(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        const int i = j <= half ? j : n - j;
        out[static_cast<std::size_t>(j)] = states[static_cast<std::size_t>(i)][0];
    }
    return out;
}

} // namespace rlwstab::ode
