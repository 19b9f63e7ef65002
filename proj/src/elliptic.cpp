#include "bidea/elliptic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace bidea {

namespace {

constexpr double kPi = std::numbers::pi;

void check_modulus(double k) {
    if (!(k >= 0.0 && k <= 1.0)) {
        throw DomainError("elliptic modulus k must lie in [0, 1], got k=" + std::to_string(k));
    }
}

// Incomplete integrals on the principal range |phi| <= pi/2 via the
// Carlson reductions F = s*RF, E = s*RF - k^2 s^3 RD / 3 with
// s = sin(phi), c = cos(phi).
double f_principal(double k, double phi) {
    if (phi == 0.0) return 0.0;
    const double s = std::sin(phi);
    const double c = std::cos(phi);
    const double y = (1.0 - k * s) * (1.0 + k * s);
    return s * carlson::rf(c * c, y, 1.0);
}

double e_principal(double k, double phi) {
    if (phi == 0.0) return 0.0;
    if (k == 1.0) return std::sin(phi); // integrand reduces to cos(t)
    const double s = std::sin(phi);
    const double c = std::cos(phi);
    const double y = (1.0 - k * s) * (1.0 + k * s);
    const double rf = carlson::rf(c * c, y, 1.0);
    const double rd = carlson::rd(c * c, y, 1.0);
    return s * rf - k * k * s * s * s * rd / 3.0;
}

// Reduce phi to n*pi + r with r in [-pi/2, pi/2].
void reduce_amplitude(double phi, long long& n, double& r) {
    const double q = std::nearbyint(phi / kPi);
    n = static_cast<long long>(q);
    r = phi - q * kPi;
    if (r > kPi / 2.0) { r -= kPi; n += 1; }
    if (r < -kPi / 2.0) { r += kPi; n -= 1; }
}

} // namespace

namespace carlson {

// Duplication-theorem evaluation of RF and RD, after Carlson,
// Numerical Algorithms 10 (1995). The loop tolerance is far below the
// truncation error of the closing series, so results are accurate to
// double precision rounding.

double rf(double x, double y, double z) {
    constexpr double errtol = 1.0e-10;
    double xt = x, yt = y, zt = z;
    double ave = (xt + yt + zt) / 3.0;
    for (int iter = 0; iter < 300; ++iter) {
        ave = (xt + yt + zt) / 3.0;
        const double eps =
            std::max({std::fabs(xt - ave), std::fabs(yt - ave), std::fabs(zt - ave)}) / ave;
        if (eps < errtol) break;
        const double sx = std::sqrt(xt);
        const double sy = std::sqrt(yt);
        const double sz = std::sqrt(zt);
        const double lambda = sx * (sy + sz) + sy * sz;
        xt = 0.25 * (xt + lambda);
        yt = 0.25 * (yt + lambda);
        zt = 0.25 * (zt + lambda);
    }
    const double delx = (ave - xt) / ave;
    const double dely = (ave - yt) / ave;
    const double delz = (ave - zt) / ave;
    const double e2 = delx * dely - delz * delz;
    const double e3 = delx * dely * delz;
    const double s = 1.0 + (e2 / 24.0 - 0.1 - 3.0 * e3 / 44.0) * e2 + e3 / 14.0;
    return s / std::sqrt(ave);
}

double rd(double x, double y, double z) {
    constexpr double errtol = 1.0e-10;
    double xt = x, yt = y, zt = z;
    double sum = 0.0;
    double fac = 1.0;
    double ave = (xt + yt + 3.0 * zt) / 5.0;
    for (int iter = 0; iter < 300; ++iter) {
        ave = (xt + yt + 3.0 * zt) / 5.0;
        const double eps =
            std::max({std::fabs(xt - ave), std::fabs(yt - ave), std::fabs(zt - ave)}) / ave;
        if (eps < errtol) break;
        const double sx = std::sqrt(xt);
        const double sy = std::sqrt(yt);
        const double sz = std::sqrt(zt);
        const double lambda = sx * (sy + sz) + sy * sz;
        sum += fac / (sz * (zt + lambda));
        fac *= 0.25;
        xt = 0.25 * (xt + lambda);
        yt = 0.25 * (yt + lambda);
        zt = 0.25 * (zt + lambda);
    }
    const double delx = (ave - xt) / ave;
    const double dely = (ave - yt) / ave;
    const double delz = (ave - zt) / ave;
    const double ea = delx * dely;
    const double eb = delz * delz;
    const double ec = ea - eb;
    const double ed = ea - 6.0 * eb;
    const double ee = ed + ec + ec;
    const double s = 1.0
        + ed * (-3.0 / 14.0 + 9.0 / 88.0 * ed - 4.5 / 26.0 * delz * ee)
        + delz * (ee / 6.0 + delz * (-9.0 / 22.0 * ec + 3.0 / 26.0 * delz * ea));
    return 3.0 * sum + fac * s / (ave * std::sqrt(ave));
}

} // namespace carlson

double ellip_k_complete(double k) {
    check_modulus(k);
    if (k == 1.0) {
        throw DomainError("F(k, phi) diverges at k = 1 for |phi| >= pi/2");
    }
    return carlson::rf(0.0, (1.0 - k) * (1.0 + k), 1.0);
}

double ellip_e_complete(double k) {
    check_modulus(k);
    if (k == 1.0) return 1.0;
    const double y = (1.0 - k) * (1.0 + k);
    return carlson::rf(0.0, y, 1.0) - k * k * carlson::rd(0.0, y, 1.0) / 3.0;
}

double ellip_f(const EllipticArgs& args) {
    check_modulus(args.k);
    long long n = 0;
    double r = 0.0;
    reduce_amplitude(args.phi, n, r);
    if (args.k == 1.0) {
        if (n != 0 || std::fabs(r) >= kPi / 2.0) {
            throw DomainError("F(k, phi) diverges at k = 1 for |phi| >= pi/2");
        }
        return f_principal(1.0, r);
    }
    double value = f_principal(args.k, r);
    if (n != 0) value += 2.0 * static_cast<double>(n) * ellip_k_complete(args.k);
    return value;
}

double ellip_e(const EllipticArgs& args) {
    check_modulus(args.k);
    long long n = 0;
    double r = 0.0;
    reduce_amplitude(args.phi, n, r);
    double value = e_principal(args.k, r);
    if (n != 0) value += 2.0 * static_cast<double>(n) * ellip_e_complete(args.k);
    return value;
}

} // namespace bidea
