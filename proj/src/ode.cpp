#include "bidea/ode.hpp"

#include <cmath>

namespace bidea {

namespace {

using State = std::vector<double>;
using Rhs = std::function<State(const State&, double)>;

State axpy(const State& x, const State& y, double a) {
    State out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] + a * y[i];
    return out;
}

void check_finite(const State& x) {
    for (double v : x) {
        if (!std::isfinite(v)) throw NonFinite("ODE state left the finite range");
    }
}

State rk4_step(const Rhs& rhs, const State& x, double t, double h) {
    const State k1 = rhs(x, t);
    const State k2 = rhs(axpy(x, k1, 0.5 * h), t + 0.5 * h);
    const State k3 = rhs(axpy(x, k2, 0.5 * h), t + 0.5 * h);
    const State k4 = rhs(axpy(x, k3, h), t + h);
    State out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        out[i] = x[i] + h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    }
    return out;
}

} // namespace

OdeTrajectory integrate_ode(const State& state0, const Rhs& rhs,
                            double t_begin, double t_end, double dt) {
    if (!(dt > 0.0)) throw DomainError("ODE step dt must be positive");
    if (t_end < t_begin) throw DomainError("ODE span must be forward in time");

    OdeTrajectory traj;
    traj.times.push_back(t_begin);
    traj.states.push_back(state0);
    check_finite(state0);

    double t = t_begin;
    State x = state0;
    while (t < t_end - 1e-15 * std::max(1.0, std::fabs(t_end))) {
        const double h = std::min(dt, t_end - t);
        x = rk4_step(rhs, x, t, h);
        check_finite(x);
        t += h;
        traj.times.push_back(t);
        traj.states.push_back(x);
    }
    return traj;
}

} // namespace bidea
