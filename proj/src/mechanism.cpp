#include "bidea/mechanism.hpp"

#include "bidea/elliptic.hpp"
#include "bidea/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>

namespace bidea::mechanism {

namespace {

constexpr double kPi = std::numbers::pi;

struct LinkFrame {
    double length;      // L
    double span;        // D
    double incline;     // gamma
    double x_anchor;    // rigid anchor abscissa in the link frame
    double y_end;       // transverse end coordinate in the link frame
};

LinkFrame link_frame(const MechanismSpec& spec, double shuttle_y) {
    LinkFrame f;
    f.length = spec.link.length;
    f.span = spec.span();
    f.incline = spec.incline();
    // Rigid-body kinematics: the guided anchor sits at (D, y) in frame
    // coordinates; rotate into the link tangent frame.
    f.x_anchor = (f.span * f.span + spec.bias * shuttle_y) / f.length;
    f.y_end = f.span * (shuttle_y - spec.bias) / f.length;
    return f;
}

beam::BeamSpec effective_link(const MechanismSpec& spec) {
    beam::BeamSpec b = spec.link;
    b.modulus = spec.effective_modulus();
    return b;
}

// Straight-chord branch: the link lies along the anchor chord, the
// series spring carries the length mismatch, and the clamped-end
// transverse stiffness 12EI/L^3 acts in parallel. Valid under tension
// and under compression below the buckling load; past that the straight
// state is not a stable equilibrium and the elastica branches take over.
std::optional<LinkState> straight_candidate(const beam::BeamSpec& link, const LinkFrame& f,
                                            double k_ax) {
    const double L = f.length;
    const double xe = std::sqrt(std::max(0.0, L * L - f.y_end * f.y_end));
    if (!(xe > 0.2 * L)) return std::nullopt;
    const double axial = k_ax * (f.x_anchor - xe);
    const double p_crit = kPi * kPi * link.rigidity() / (L * L);
    // Compression: only below buckling and with a small misalignment,
    // where the linear superposition is meaningful.
    if (axial < 0.0 && (axial < -p_crit || std::fabs(f.y_end) > 0.15 * L)) {
        return std::nullopt;
    }
    const double kt = 12.0 * link.rigidity() / (L * L * L);
    LinkState s;
    s.straight = true;
    s.x_anchor = f.x_anchor;
    s.x_end = xe;
    s.axial_force = axial;
    s.transverse_force = axial * f.y_end / xe + kt * f.y_end;
    s.energy = 0.5 * k_ax * (f.x_anchor - xe) * (f.x_anchor - xe) +
               0.5 * kt * f.y_end * f.y_end;
    s.solution = beam::BeamSolution{};
    s.solution.x_b = xe;
    s.solution.y_b = f.y_end;
    s.solution.p = std::hypot(s.axial_force, s.transverse_force);
    s.solution.psi = std::atan2(s.transverse_force, s.axial_force);
    return s;
}

// Coupled elastica + axial-spring equilibrium in (k, psi): the guided
// end must reach the transverse target while the axial tip force
// balances the series spring against the rigid anchor abscissa.
struct CoupledRoot {
    double k = 0.0;
    double psi = 0.0;
};

void project_domain(std::array<double, 2>& v) {
    v[1] = std::clamp(v[1], -kPi, 3.0 * kPi);
    const double kmin = std::fabs(std::cos(0.5 * v[1])) + 1e-12;
    v[0] = std::clamp(v[0], kmin, 1.0 - 1e-12);
}

void push_unique(std::vector<CoupledRoot>& roots, double k, double psi) {
    for (const auto& q : roots) {
        if (std::fabs(q.k - k) < 1e-7 && std::fabs(q.psi - psi) < 1e-6) return;
    }
    roots.push_back({k, psi});
}

std::vector<CoupledRoot> coupled_roots(const beam::BeamSpec& link, const LinkFrame& f,
                                       double k_ax, beam::BucklingMode mode,
                                       double yb_canonical) {
    const double L = f.length;
    const double rig = link.rigidity();
    const double force_scale = k_ax * L;

    auto residual_at = [&](const beam::TipState& t, double psi) -> std::array<double, 2> {
        const double p = t.alpha * rig / (L * L);
        const double axial = p * std::cos(psi);
        const double spring = k_ax * (f.x_anchor - t.x_over_l * L);
        return {t.y_over_l - yb_canonical / L, (axial - spring) / force_scale};
    };

    std::vector<CoupledRoot> roots;

    // Pass 1: Newton in (k, psi) from a deterministic seed grid.
    Root2Problem prob;
    prob.residual = [&](const std::array<double, 2>& v) {
        return residual_at(beam::forward_tip(v[0], v[1], mode), v[1]);
    };
    prob.tolerance = 1e-10;
    prob.max_iters = 28;
    prob.project = project_domain;
    for (double psi : {1.6, 2.4, 2.9, kPi, 3.4, 3.9, 4.7}) {
        for (double k : {0.9995, 0.95, 0.6, 0.25, 0.1, 0.03}) {
            if (k < std::fabs(std::cos(0.5 * psi)) + 0.005) continue;
            prob.guess = {k, psi};
            try {
                const Root2Result r = solve_root2(prob);
                push_unique(roots, r.x[0], r.x[1]);
            } catch (const Error&) {
            }
        }
    }

    // Pass 2: Newton in (phi1, psi), which stays conditioned where the
    // two mode families join (k -> |cos(psi/2)|, |phi1| -> pi/2).
    Root2Problem amp;
    amp.residual = [&](const std::array<double, 2>& v) {
        return residual_at(beam::forward_tip_amp(v[0], v[1], mode), v[1]);
    };
    amp.tolerance = 1e-10;
    amp.max_iters = 28;
    amp.project = [](std::array<double, 2>& v) {
        v[0] = std::clamp(v[0], -kPi / 2.0, kPi / 2.0);
        v[1] = std::clamp(v[1], -kPi, 3.0 * kPi);
        // Keep the implied modulus inside (0, 1].
        const double c = std::cos(0.5 * v[1]);
        if (c >= 0.0) {
            v[0] = std::clamp(v[0], std::asin(std::min(1.0, c)), kPi / 2.0);
        } else {
            v[0] = std::clamp(v[0], -kPi / 2.0, std::asin(std::max(-1.0, c)));
        }
    };
    for (double dphi : {0.45, 0.2, 0.06}) {
        for (double psi : {2.4, 2.9, kPi, 3.4, 3.9}) {
            const double c = std::cos(0.5 * psi);
            const double phi1 = c >= 0.0 ? kPi / 2.0 - dphi : -(kPi / 2.0 - dphi);
            if (std::fabs(c) > std::fabs(std::sin(phi1))) continue;
            amp.guess = {phi1, psi};
            try {
                const Root2Result r = solve_root2(amp);
                push_unique(roots, beam::modulus_from_amplitude(r.x[0], r.x[1]), r.x[1]);
            } catch (const Error&) {
            }
        }
    }
    return roots;
}

void collect_mode_candidates(const MechanismSpec& spec, const LinkFrame& f, double k_ax,
                             beam::BucklingMode mode, std::vector<LinkState>& out) {
    const beam::BeamSpec link = effective_link(spec);
    const double L = f.length;
    const bool mirrored = f.y_end < 0.0;
    const double yb = std::fabs(f.y_end);

    for (const CoupledRoot& r : coupled_roots(link, f, k_ax, mode, yb)) {
        const beam::TipState t = beam::forward_tip(r.k, r.psi, mode);
        const double xe = t.x_over_l * L;
        if (!(xe > 0.2 * L) || !(xe * xe + yb * yb < L * L)) continue;

        beam::BeamSolution sol;
        sol.k = r.k;
        sol.psi = r.psi;
        sol.phi1 = std::asin(std::clamp(std::cos(0.5 * r.psi) / r.k, -1.0, 1.0));
        sol.phi2 = mode == beam::BucklingMode::First ? kPi - sol.phi1 : sol.phi1 + 2.0 * kPi;
        sol.alpha = t.alpha;
        sol.p = t.alpha * link.rigidity() / (L * L);
        const double m_scale = 2.0 * r.k * std::sqrt(link.rigidity() * sol.p);
        sol.m1 = m_scale * std::cos(sol.phi1);
        sol.m2 = m_scale * std::cos(sol.phi2);
        sol.mode = mode;
        sol.mirrored = mirrored;
        sol.x_b = xe;
        sol.y_b = f.y_end;
        if (mirrored) {
            sol.psi = 2.0 * kPi - r.psi;
            sol.m1 = -sol.m1;
            sol.m2 = -sol.m2;
        }

        LinkState st;
        st.solution = sol;
        st.x_anchor = f.x_anchor;
        st.x_end = xe;
        st.axial_force = sol.force_x();
        st.transverse_force = sol.force_y();
        const double stretch = f.x_anchor - xe;
        st.energy = sol.strain_energy(link) + 0.5 * k_ax * stretch * stretch;
        st.straight = false;
        out.push_back(st);
    }
}

} // namespace

double MechanismSpec::span() const {
    const double L = link.length;
    return std::sqrt(std::max(0.0, L * L - bias * bias));
}

double MechanismSpec::incline() const {
    return std::asin(std::clamp(bias / link.length, -1.0, 1.0));
}

double MechanismSpec::axial_stiffness() const {
    return effective_modulus() * link.area() / link.length;
}

double MechanismSpec::travel_limit() const {
    // |yB| < L in the link frame maps back to the shuttle ordinate.
    return link.length * link.length / span() + bias;
}

void MechanismSpec::validate() const {
    link.validate();
    if (!(bias >= 0.0)) throw DomainError("mechanism bias h must be non-negative");
    if (!(shuttle > 0.0 && frame_inner > shuttle)) {
        throw DomainError("mechanism requires 0 < shuttle < frame_inner");
    }
    if (!(bias < link.length)) {
        throw DomainError("mechanism bias h must stay below the link length");
    }
    if (span() > 0.5 * (frame_inner - shuttle) + 1e-12) {
        throw DomainError("link does not fit between shuttle and frame");
    }
    if (!(stiffness_scale > 0.0)) throw DomainError("stiffness_scale must be positive");
}

LinkState solve_link(const MechanismSpec& spec, double shuttle_y) {
    spec.validate();
    const LinkFrame f = link_frame(spec, shuttle_y);
    if (std::fabs(f.y_end) >= f.length * (1.0 - 1e-9)) {
        throw DomainError("shuttle position " + std::to_string(shuttle_y) +
                          " m is outside the link travel");
    }
    const double k_ax = spec.axial_stiffness();

    std::vector<LinkState> candidates;
    if (auto straight = straight_candidate(effective_link(spec), f, k_ax)) {
        candidates.push_back(*straight);
    }
    collect_mode_candidates(spec, f, k_ax, beam::BucklingMode::First, candidates);
    collect_mode_candidates(spec, f, k_ax, beam::BucklingMode::Second, candidates);

    if (candidates.empty()) {
        throw NoConvergence("no link equilibrium found at shuttle y=" +
                            std::to_string(shuttle_y));
    }
    const auto best = std::min_element(candidates.begin(), candidates.end(),
                                       [](const LinkState& a, const LinkState& b) {
                                           return a.energy < b.energy;
                                       });
    return *best;
}

double mechanism_force(const MechanismSpec& spec, double shuttle_y) {
    const LinkState st = solve_link(spec, shuttle_y);
    const double g = spec.incline();
    // Rotate the link-frame tip force back to frame coordinates.
    return 4.0 * (st.axial_force * std::sin(g) + st.transverse_force * std::cos(g));
}

double mechanism_energy(const MechanismSpec& spec, double shuttle_y) {
    return 4.0 * solve_link(spec, shuttle_y).energy;
}

ForceDisplacementCurve mechanism_curve(const MechanismSpec& spec, double y_begin,
                                       double y_end, int n_samples) {
    if (n_samples < 16) throw DomainError("mechanism_curve needs n_samples >= 16");
    if (!(y_end > y_begin)) throw DomainError("mechanism_curve range must be increasing");
    ForceDisplacementCurve curve;
    curve.provenance = "mechanism.elastica";
    curve.params = {{"h", spec.bias},
                    {"L", spec.link.length},
                    {"E", spec.effective_modulus()},
                    {"b", spec.link.width},
                    {"t", spec.link.thickness}};
    curve.samples.reserve(static_cast<std::size_t>(n_samples));
    for (int i = 0; i < n_samples; ++i) {
        const double y = y_begin + (y_end - y_begin) * i / (n_samples - 1);
        curve.samples.push_back({y, mechanism_force(spec, y)});
    }
    curve.validate();
    return curve;
}

EquilibriumSet find_equilibria(const MechanismSpec& spec, const ForceDisplacementCurve& curve) {
    curve.validate();
    const auto& s = curve.samples;
    if (s.size() < 2) throw DegenerateCurve("curve has fewer than 2 samples");

    std::vector<double> roots;
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
        const double fa = s[i].force;
        const double fb = s[i + 1].force;
        if (fa == 0.0) {
            roots.push_back(s[i].displacement);
            continue;
        }
        if ((fa > 0.0) == (fb > 0.0)) continue;
        RootProblem p;
        p.residual = [&spec](double y) { return mechanism_force(spec, y); };
        p.lo = s[i].displacement;
        p.hi = s[i + 1].displacement;
        p.tolerance = 1e-7; // N; positions polished well below 1e-9 m
        p.max_iters = 200;
        roots.push_back(solve_root(p).x);
    }
    if (!s.empty() && s.back().force == 0.0) roots.push_back(s.back().displacement);
    if (roots.empty()) throw DegenerateCurve("no zero crossing in the sampled range");

    std::sort(roots.begin(), roots.end());
    // Merge near-duplicates (a crossing landing on a sample point).
    std::vector<double> merged;
    for (double r : roots) {
        if (merged.empty() || r - merged.back() > 1e-9) merged.push_back(r);
    }

    EquilibriumSet eq;
    const double dy = 1e-6;
    for (double r : merged) {
        const double slope =
            (mechanism_force(spec, r + dy) - mechanism_force(spec, r - dy)) / (2.0 * dy);
        if (slope >= 0.0) {
            eq.stable.push_back(r);
        } else {
            eq.unstable.push_back(r);
        }
    }
    if (eq.stable.size() >= 2) {
        const double lo = eq.stable.front();
        const double hi = eq.stable.back();
        eq.inter_state_stroke = hi - lo;
        double peak = 0.0;
        for (const auto& smp : s) {
            if (smp.displacement > lo && smp.displacement < hi) {
                peak = std::max(peak, std::fabs(smp.force));
            }
        }
        eq.peak_force = peak;
    }
    return eq;
}

namespace {

int equilibrium_count(const MechanismSpec& spec, double h) {
    MechanismSpec probe = spec;
    probe.bias = h;
    const double margin = 0.4e-3;
    const double lo = -(1.45 * h + margin);
    const double hi = h + margin;
    const ForceDisplacementCurve c = mechanism_curve(probe, lo, hi, 201);
    try {
        const EquilibriumSet eq = find_equilibria(probe, c);
        return static_cast<int>(eq.stable.size() + eq.unstable.size());
    } catch (const DegenerateCurve&) {
        return 0;
    }
}

} // namespace

double bistability_threshold(const MechanismSpec& base, double h_lo, double h_hi) {
    if (!(h_lo >= 0.0 && h_hi > h_lo)) throw DomainError("invalid bias search range");
    if (equilibrium_count(base, h_hi) < 3) {
        throw NotFound("no bistable bias in [" + std::to_string(h_lo) + ", " +
                       std::to_string(h_hi) + "] m");
    }
    if (equilibrium_count(base, h_lo) >= 3) {
        throw NotFound("mechanism already bistable at the lower search bound");
    }
    double lo = h_lo, hi = h_hi;
    while (hi - lo > 1e-5) {
        const double mid = 0.5 * (lo + hi);
        if (equilibrium_count(base, mid) >= 3) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return hi;
}

} // namespace bidea::mechanism
