#include "bidea/roots.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace bidea {

RootResult solve_root(const RootProblem& problem) {
    if (!(problem.tolerance > 0.0)) throw DomainError("root tolerance must be positive");
    if (problem.max_iters < 1) throw DomainError("max_iters must be >= 1");

    double a = problem.lo;
    double b = problem.hi;
    double fa = problem.residual(a);
    double fb = problem.residual(b);
    if (std::fabs(fa) <= problem.tolerance) return {a, fa, 0};
    if (std::fabs(fb) <= problem.tolerance) return {b, fb, 0};
    if ((fa > 0.0) == (fb > 0.0)) {
        throw BadBracket("residual has the same sign at both bracket ends [" +
                         std::to_string(a) + ", " + std::to_string(b) + "]");
    }

    double x = 0.5 * (a + b);
    double fx = problem.residual(x);
    for (int iter = 1; iter <= problem.max_iters; ++iter) {
        if (std::fabs(fx) <= problem.tolerance) return {x, fx, iter};
        // Keep the bracket current.
        if ((fx > 0.0) == (fa > 0.0)) {
            a = x; fa = fx;
        } else {
            b = x; fb = fx;
        }
        // Secant step from the bracket endpoints, bisection fallback.
        double xn = x - fx * (b - a) / (fb - fa);
        if (!std::isfinite(xn) || xn <= std::min(a, b) || xn >= std::max(a, b)) {
            xn = 0.5 * (a + b);
        }
        x = xn;
        fx = problem.residual(x);
        if (std::fabs(b - a) < 1e-300) return {x, fx, iter};
    }
    if (std::fabs(fx) <= problem.tolerance) return {x, fx, problem.max_iters};
    throw NoConvergence("scalar root solve did not reach tolerance " +
                        std::to_string(problem.tolerance) + " in " +
                        std::to_string(problem.max_iters) + " iterations");
}

Root2Result solve_root2(const Root2Problem& problem) {
    if (!(problem.tolerance > 0.0)) throw DomainError("root tolerance must be positive");
    if (problem.max_iters < 1) throw DomainError("max_iters must be >= 1");

    auto norm = [](const std::array<double, 2>& r) {
        return std::max(std::fabs(r[0]), std::fabs(r[1]));
    };

    std::array<double, 2> x = problem.guess;
    if (problem.project) problem.project(x);
    std::array<double, 2> r = problem.residual(x);
    double rn = norm(r);

    for (int iter = 1; iter <= problem.max_iters; ++iter) {
        if (rn <= problem.tolerance) return {x, rn, iter - 1};

        // Finite-difference Jacobian, step scaled to the variable.
        double J[2][2];
        for (int j = 0; j < 2; ++j) {
            const double h = 1e-7 * std::max(1.0, std::fabs(x[j]));
            std::array<double, 2> xp = x;
            xp[j] += h;
            if (problem.project) problem.project(xp);
            const double hj = xp[j] - x[j];
            if (hj == 0.0) throw NoConvergence("Jacobian step clamped to zero");
            const std::array<double, 2> rp = problem.residual(xp);
            J[0][j] = (rp[0] - r[0]) / hj;
            J[1][j] = (rp[1] - r[1]) / hj;
        }
        const double det = J[0][0] * J[1][1] - J[0][1] * J[1][0];
        if (!std::isfinite(det) || std::fabs(det) < 1e-300) {
            throw NoConvergence("singular Jacobian in 2-vector Newton");
        }
        const std::array<double, 2> dx = {
            (-r[0] * J[1][1] + r[1] * J[0][1]) / det,
            (-r[1] * J[0][0] + r[0] * J[1][0]) / det,
        };

        // Damped update: halve until the residual norm does not blow up.
        double step = 1.0;
        bool accepted = false;
        for (int backtrack = 0; backtrack < 14; ++backtrack) {
            std::array<double, 2> xt = {x[0] + step * dx[0], x[1] + step * dx[1]};
            if (problem.project) problem.project(xt);
            std::array<double, 2> rt;
            bool ok = true;
            try {
                rt = problem.residual(xt);
            } catch (const Error&) {
                ok = false;
            }
            if (ok && std::isfinite(rt[0]) && std::isfinite(rt[1]) && norm(rt) < rn) {
                x = xt; r = rt; rn = norm(rt);
                accepted = true;
                break;
            }
            step *= 0.5;
        }
        if (!accepted) {
            throw NoConvergence("2-vector Newton stalled (residual " +
                                std::to_string(rn) + ")");
        }
    }
    if (rn <= problem.tolerance) return {x, rn, problem.max_iters};
    throw NoConvergence("2-vector Newton did not reach tolerance " +
                        std::to_string(problem.tolerance) + " in " +
                        std::to_string(problem.max_iters) + " iterations");
}

} // namespace bidea
