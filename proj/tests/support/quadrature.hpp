#pragma once

// Test-only adaptive quadrature oracle, independent of the Carlson-based
// production path. Plain adaptive Simpson with interval bisection.

#include <cmath>
#include <functional>

namespace testsupport {

inline double simpson(const std::function<double(double)>& f, double a, double b,
                      double fa, double fm, double fb) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

inline double adaptive_step(const std::function<double(double)>& f, double a, double b,
                            double fa, double fm, double fb, double whole, double tol,
                            int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = simpson(f, a, m, fa, flm, fm);
    const double right = simpson(f, m, b, fm, frm, fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::fabs(delta) <= 15.0 * tol) {
        return left + right + delta / 15.0;
    }
    return adaptive_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           adaptive_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

/// Adaptive Simpson integral of f over [a, b] with absolute tolerance tol.
inline double integrate(const std::function<double(double)>& f, double a, double b,
                        double tol = 1e-13, int max_depth = 48) {
    if (a == b) return 0.0;
    const double fa = f(a);
    const double fb = f(b);
    const double fm = f(0.5 * (a + b));
    const double whole = simpson(f, a, b, fa, fm, fb);
    return adaptive_step(f, a, b, fa, fm, fb, whole, tol, max_depth);
}

/// Defining-integral oracles for the incomplete elliptic integrals.
inline double ellip_f_quadrature(double k, double phi, double tol = 1e-13) {
    return integrate([k](double t) {
        const double s = std::sin(t);
        return 1.0 / std::sqrt(1.0 - k * k * s * s);
    }, 0.0, phi, tol);
}

inline double ellip_e_quadrature(double k, double phi, double tol = 1e-13) {
    return integrate([k](double t) {
        const double s = std::sin(t);
        return std::sqrt(1.0 - k * k * s * s);
    }, 0.0, phi, tol);
}

} // namespace testsupport
