#pragma once

#include "bidea/beam.hpp"
#include "bidea/curve.hpp"
#include "bidea/errors.hpp"

#include <vector>

namespace bidea::mechanism {

/// Bi-stable four-link shuttle mechanism.
///
/// Four identical links connect the square shuttle to the inner frame.
/// Each link is fabricated straight with the shuttle offset by the bias
/// h from the frame centre, so the lateral anchor distance is
/// sqrt(L^2 - h^2) and the as-built link axis is inclined by
/// asin(h / L). The shuttle translates along y only; y is measured from
/// the frame centre, and the as-built state y = +h carries no force.
///
/// Links are treated as inextensible elastica in bending, in series
/// with the link's own axial stiffness E A / L. The axial term is what
/// bounds the force when a link approaches a taut (straight) geometry;
/// without it the h = 0 mechanism could not move at all.
struct MechanismSpec {
    double frame_inner = 50e-3;   ///< inner frame side (m)
    double shuttle = 8e-3;        ///< shuttle side (m)
    beam::BeamSpec link;          ///< one compliant link
    double bias = 4.5e-3;         ///< h, shuttle offset from frame centre (m)
    double stiffness_scale = 1.0; ///< calibration knock-down on the modulus

    /// Effective modulus after the knock-down.
    double effective_modulus() const { return link.modulus * stiffness_scale; }
    /// Lateral anchor distance, sqrt(L^2 - h^2).
    double span() const;
    /// As-built link inclination, asin(h / L).
    double incline() const;
    /// Series axial stiffness E A / L of one link.
    double axial_stiffness() const;
    /// Geometric travel bound: |yB| < L in the link frame.
    double travel_limit() const;

    void validate() const;
};

/// Solved state of the canonical link at one shuttle position.
struct LinkState {
    beam::BeamSolution solution;  ///< elastica state (straight if unbuckled)
    double x_anchor = 0.0;        ///< rigid anchor abscissa in the link frame (m)
    double x_end = 0.0;           ///< elastica end abscissa after axial relief (m)
    double energy = 0.0;          ///< elastica + axial spring energy (J)
    bool straight = false;        ///< pure-axial (unbuckled) branch
    double axial_force = 0.0;     ///< tip force along the link axis (N, tension +)
    double transverse_force = 0.0;///< tip force across the link axis (N)
};

/// Minimum-energy equilibrium of one link for shuttle position y.
LinkState solve_link(const MechanismSpec& spec, double shuttle_y);

/// Reaction force of the shuttle: F_M(y) = 4 P sin(psi) with (P, psi)
/// the per-link reaction in frame coordinates. Positive F_M pushes the
/// shuttle toward +y. Throws DomainError outside the geometric travel.
double mechanism_force(const MechanismSpec& spec, double shuttle_y);

/// Total stored energy of the four links at shuttle position y (J).
double mechanism_energy(const MechanismSpec& spec, double shuttle_y);

/// Samples F_M over [y_begin, y_end] with n_samples points (>= 16).
ForceDisplacementCurve mechanism_curve(const MechanismSpec& spec, double y_begin,
                                       double y_end, int n_samples);

/// Classified equilibria of a sampled curve.
struct EquilibriumSet {
    std::vector<double> stable;   ///< y (m)
    std::vector<double> unstable; ///< y (m)
    double peak_force = 0.0;      ///< max |F_M| between the outer stable states (N)
    double inter_state_stroke = 0.0; ///< distance between outermost stable roots (m)
};

/// Locates and classifies the zero crossings of F_M. The curve must be
/// sampled densely enough that adjacent crossings do not share an
/// interval. Throws DegenerateCurve when no crossing exists.
EquilibriumSet find_equilibria(const MechanismSpec& spec, const ForceDisplacementCurve& curve);

/// Smallest bias h (within [h_lo, h_hi]) for which the mechanism has
/// three equilibria, to 1e-5 m. Throws NotFound when the whole range is
/// monostable (or bistable below the lower endpoint).
double bistability_threshold(const MechanismSpec& base, double h_lo, double h_hi);

} // namespace bidea::mechanism
