#pragma once

#include "bidea/errors.hpp"

#include <array>
#include <optional>
#include <vector>

namespace bidea::beam {

/// Geometry and material of one compliant link. All SI.
struct BeamSpec {
    double length = 21e-3;       ///< free length L (m)
    double modulus = 2.0e9;      ///< Young's modulus E (Pa)
    double width = 0.6e-3;       ///< section width b (m)
    double thickness = 1.0e-3;   ///< section thickness t (m)

    /// Second moment of area, I = b t^3 / 12.
    double inertia() const { return width * thickness * thickness * thickness / 12.0; }
    /// Section area, b t.
    double area() const { return width * thickness; }
    /// Bending rigidity E I.
    double rigidity() const { return modulus * inertia(); }

    void validate() const;
};

/// The two buckling-mode amplitude rules: First takes phi2 = pi - phi1,
/// Second takes phi2 = phi1 + 2 pi. Higher modes are out of scope.
enum class BucklingMode { First, Second };

/// Non-dimensional guided-end state produced by the forward map.
struct TipState {
    double x_over_l = 1.0;
    double y_over_l = 0.0;
    double alpha = 0.0; ///< P L^2 / (E I)
};

/// Forward elastica map (k, psi, mode) -> (xB/L, yB/L, alpha).
/// Requires k in [|cos(psi/2)|, 1); phi1 is the principal solution of
/// sin(phi1) = cos(psi/2)/k. The map covers guided ends with
/// non-negative transverse deflection; mirrored states are obtained by
/// symmetry (see solve_tip).
TipState forward_tip(double k, double psi, BucklingMode mode);

/// Amplitude-parameterized variant: phi1 in [-pi/2, pi/2] is the free
/// variable and k = cos(psi/2) / sin(phi1). Well conditioned where the
/// two mode families join (|phi1| -> pi/2, where the (k, psi) form has
/// a singular amplitude derivative). Requires sin(phi1) and cos(psi/2)
/// to share a sign and the implied modulus to lie in (0, 1].
TipState forward_tip_amp(double phi1, double psi, BucklingMode mode);

/// The modulus implied by an amplitude: k = cos(psi/2) / sin(phi1).
double modulus_from_amplitude(double phi1, double psi);

/// Fully solved elastica state of one fixed-guided link.
///
/// For mirrored solutions (yB < 0 targets) the canonical twin is solved
/// and sign-carrying quantities (yB, psi, end moments, transverse force)
/// are reflected; k, alpha, P, phi1, phi2 are reported for the canonical
/// orientation, on which the Eq-residual invariants hold.
struct BeamSolution {
    double k = 0.0;       ///< elliptic modulus (canonical orientation)
    double psi = 0.0;     ///< load angle (rad), reflected if mirrored
    double phi1 = 0.0;    ///< amplitude at the fixed end (canonical)
    double phi2 = 0.0;    ///< amplitude at the guided end (canonical)
    double alpha = 0.0;   ///< non-dimensional force magnitude
    double p = 0.0;       ///< reaction force magnitude (N)
    double m1 = 0.0;      ///< fixed-end moment (N m), reflected if mirrored
    double m2 = 0.0;      ///< guided-end moment (N m), reflected if mirrored
    BucklingMode mode = BucklingMode::First;
    bool mirrored = false;
    double x_b = 0.0;     ///< guided-end abscissa (m)
    double y_b = 0.0;     ///< guided-end ordinate (m), signed

    /// Force applied to the guided end, component along x / y (N).
    double force_x() const;
    double force_y() const;
    /// Bending strain energy of the elastica (J), closed form.
    double strain_energy(const BeamSpec& spec) const;
};

/// A point of the reconstructed centerline.
struct ShapePoint {
    double s = 0.0;     ///< arc length from the fixed end (m)
    double x = 0.0;
    double y = 0.0;
    double theta = 0.0; ///< local slope (rad)
};

/// Reconstructs the centerline on n points (for invariant checks and
/// plotting). Mirrored solutions are reflected back to true coordinates.
std::vector<ShapePoint> reconstruct_shape(const BeamSpec& spec, const BeamSolution& sol,
                                          int n = 201);

/// Inverse solve: reaction state of the link whose guided end sits at
/// (x_b, y_b), in the given mode. Throws DomainError when the target is
/// outside the reachable disk (chord >= L) and NoConvergence when the
/// iteration fails from every seed.
BeamSolution solve_tip(const BeamSpec& spec, double x_b, double y_b, BucklingMode mode,
                       std::optional<std::array<double, 2>> guess = std::nullopt);

/// Branch policy for sweeps: force one mode, or follow the
/// lower-strain-energy branch with continuation ("Auto").
enum class ModePolicy { FirstOnly, SecondOnly, Auto };

struct SweepSample {
    double y_b = 0.0;
    BeamSolution solution;
};

/// Continuation sweep at fixed abscissa over an ordered yB range.
/// Each solve is seeded by the previous sample; Auto policy evaluates
/// both modes where possible and keeps the lower-energy branch.
std::vector<SweepSample> sweep_beam(const BeamSpec& spec, double x_b_fixed,
                                    const std::vector<double>& y_values, ModePolicy policy);

} // namespace bidea::beam
