#pragma once

#include "bidea/errors.hpp"

#include <functional>
#include <vector>

namespace bidea {

/// Fixed-step RK4 trajectory of dx/dt = rhs(x, t).
struct OdeTrajectory {
    std::vector<double> times;
    std::vector<std::vector<double>> states;

    const std::vector<double>& back() const { return states.back(); }
};

/// Integrates from t_begin to t_end with step dt (the last step is
/// shortened to land exactly on t_end). Throws NonFinite if the state
/// leaves the finite range, DomainError on a non-positive dt.
OdeTrajectory integrate_ode(const std::vector<double>& state0,
                            const std::function<std::vector<double>(const std::vector<double>&, double)>& rhs,
                            double t_begin, double t_end, double dt);

} // namespace bidea
