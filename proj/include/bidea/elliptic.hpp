#pragma once

#include "bidea/errors.hpp"

namespace bidea {

/// Arguments of the incomplete elliptic integrals F(k, phi), E(k, phi).
///
/// The modulus k must lie in [0, 1]. The amplitude phi may be any real
/// value; integrals are extended past pi/2 through the quasi-periodic
/// identity F(k, n*pi + p) = 2n*K(k) + F(k, p) for p in [-pi/2, pi/2]
/// (and likewise for E).
struct EllipticArgs {
    double k = 0.0;
    double phi = 0.0;
};

/// Incomplete elliptic integral of the first kind,
/// F(k, phi) = integral_0^phi dt / sqrt(1 - k^2 sin^2 t).
///
/// Throws DomainError if k is outside [0, 1], or if k == 1 and the
/// integral diverges (|phi| >= pi/2).
double ellip_f(const EllipticArgs& args);

/// Incomplete elliptic integral of the second kind,
/// E(k, phi) = integral_0^phi sqrt(1 - k^2 sin^2 t) dt.
/// Finite for all k in [0, 1].
double ellip_e(const EllipticArgs& args);

/// Complete integrals K(k) = F(k, pi/2) and E(k) = E(k, pi/2).
double ellip_k_complete(double k);
double ellip_e_complete(double k);

namespace carlson {

/// Carlson symmetric form RF(x, y, z); at most one argument may be zero.
double rf(double x, double y, double z);

/// Carlson symmetric form RD(x, y, z); z must be positive.
double rd(double x, double y, double z);

} // namespace carlson

} // namespace bidea
