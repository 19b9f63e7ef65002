#pragma once

#include "bidea/errors.hpp"

#include <array>
#include <functional>

namespace bidea {

/// Scalar root problem. Bracketed mode when `lo < hi` supplied; the
/// residual must change sign across the bracket.
struct RootProblem {
    std::function<double(double)> residual;
    double lo = 0.0;
    double hi = 0.0;
    double tolerance = 1e-12; ///< absolute residual bound
    int max_iters = 100;
};

struct RootResult {
    double x = 0.0;
    double residual = 0.0;
    int iterations = 0;
};

/// Bisection-safeguarded secant/Newton iteration on a bracket.
/// Throws BadBracket if residual(lo) and residual(hi) share a sign,
/// NoConvergence if max_iters is exhausted.
RootResult solve_root(const RootProblem& problem);

/// Two-dimensional root problem solved by damped Newton with a
/// finite-difference Jacobian (relative step 1e-7).
struct Root2Problem {
    std::function<std::array<double, 2>(const std::array<double, 2>&)> residual;
    std::array<double, 2> guess{0.0, 0.0};
    double tolerance = 1e-12; ///< max-norm residual bound
    int max_iters = 80;
    /// Optional clamp applied after each update (keeps iterates in-domain).
    std::function<void(std::array<double, 2>&)> project;
};

struct Root2Result {
    std::array<double, 2> x{0.0, 0.0};
    double residual_norm = 0.0;
    int iterations = 0;
};

Root2Result solve_root2(const Root2Problem& problem);

} // namespace bidea
