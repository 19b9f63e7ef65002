#include "bidea/beam.hpp"

#include "bidea/elliptic.hpp"
#include "bidea/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace bidea::beam {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kModulusCeil = 1.0 - 1e-12;
constexpr double kSqrtAlphaFloor = 1e-9;

double phi2_of(double phi1, BucklingMode mode) {
    return mode == BucklingMode::First ? kPi - phi1 : phi1 + 2.0 * kPi;
}

struct MapTerms {
    double phi1, phi2, f1, f2, e1, e2, sqrt_alpha;
};

MapTerms map_terms_at(double k, double phi1, BucklingMode mode) {
    if (!(k > 0.0 && k <= kModulusCeil)) {
        throw DomainError("elastica map: modulus k must lie in (0, 1)");
    }
    MapTerms t;
    t.phi1 = phi1;
    t.phi2 = phi2_of(phi1, mode);
    t.f1 = ellip_f({k, t.phi1});
    t.f2 = ellip_f({k, t.phi2});
    t.e1 = ellip_e({k, t.phi1});
    t.e2 = ellip_e({k, t.phi2});
    t.sqrt_alpha = t.f2 - t.f1;
    return t;
}

MapTerms map_terms(double k, double psi, BucklingMode mode) {
    const double c = std::cos(0.5 * psi);
    if (!(k >= std::fabs(c))) {
        throw DomainError("forward_tip: k=" + std::to_string(k) +
                          " below |cos(psi/2)|=" + std::to_string(std::fabs(c)) +
                          ", amplitude equation unsolvable");
    }
    if (!(k <= kModulusCeil)) {
        throw DomainError("forward_tip: modulus k must stay below 1");
    }
    return map_terms_at(k, std::asin(std::clamp(c / k, -1.0, 1.0)), mode);
}

TipState tip_from_terms(double k, double psi, const MapTerms& t) {
    if (t.sqrt_alpha < kSqrtAlphaFloor) {
        return {1.0, 0.0, 0.0};
    }
    const double cp = std::cos(psi);
    const double sp = std::sin(psi);
    const double c1 = std::cos(t.phi1);
    const double c2 = std::cos(t.phi2);
    const double bracket = 2.0 * t.e2 - 2.0 * t.e1 - t.f2 + t.f1;
    const double y = -(2.0 * k * cp * (c1 - c2) + sp * bracket) / t.sqrt_alpha;
    const double x = -(2.0 * k * sp * (c2 - c1) + cp * bracket) / t.sqrt_alpha;
    return {x, y, t.sqrt_alpha * t.sqrt_alpha};
}

} // namespace

void BeamSpec::validate() const {
    if (!(length > 0.0 && modulus > 0.0 && width > 0.0 && thickness > 0.0)) {
        throw DomainError("BeamSpec fields must all be positive");
    }
}

double modulus_from_amplitude(double phi1, double psi) {
    const double c = std::cos(0.5 * psi);
    const double s = std::sin(phi1);
    if (c == 0.0) {
        throw DomainError("modulus_from_amplitude: psi = pi leaves k unconstrained");
    }
    const double k = c / s;
    if (!(k > 0.0 && k <= 1.0)) {
        throw DomainError("modulus_from_amplitude: implied modulus outside (0, 1]");
    }
    return k;
}

TipState forward_tip_amp(double phi1, double psi, BucklingMode mode) {
    const double k = modulus_from_amplitude(phi1, psi);
    return tip_from_terms(k, psi, map_terms_at(k, phi1, mode));
}

// First-mode zero-load limit: phi1 -> pi/2 collapses the amplitude span
// and the map tends to the undeformed beam (handled in tip_from_terms).
TipState forward_tip(double k, double psi, BucklingMode mode) {
    return tip_from_terms(k, psi, map_terms(k, psi, mode));
}

double BeamSolution::force_x() const { return p * std::cos(psi); }
double BeamSolution::force_y() const { return p * std::sin(psi); }

double BeamSolution::strain_energy(const BeamSpec& spec) const {
    if (alpha <= 0.0) return 0.0;
    // U = (EI/2) * int theta'^2 ds = 2 EI lambda [(E2-E1) - (1-k^2)(F2-F1)],
    // lambda = sqrt(alpha)/L.
    const double f1 = ellip_f({k, phi1});
    const double f2 = ellip_f({k, phi2});
    const double e1 = ellip_e({k, phi1});
    const double e2 = ellip_e({k, phi2});
    const double lambda = std::sqrt(alpha) / spec.length;
    return 2.0 * spec.rigidity() * lambda * ((e2 - e1) - (1.0 - k * k) * (f2 - f1));
}

std::vector<ShapePoint> reconstruct_shape(const BeamSpec& spec, const BeamSolution& sol, int n) {
    std::vector<ShapePoint> pts;
    if (n < 2) throw DomainError("reconstruct_shape needs n >= 2");
    pts.reserve(static_cast<std::size_t>(n));
    if (sol.alpha <= 0.0) {
        for (int i = 0; i < n; ++i) {
            const double s = spec.length * i / (n - 1);
            pts.push_back({s, s, 0.0, 0.0});
        }
        return pts;
    }
    // The canonical twin's load angle: mirrored solutions carry the
    // reflected psi, undo it for the canonical evaluation.
    const double psi_c = sol.mirrored ? 2.0 * kPi - sol.psi : sol.psi;
    const double lambda = std::sqrt(sol.alpha) / spec.length;
    const double f1 = ellip_f({sol.k, sol.phi1});
    const double e1 = ellip_e({sol.k, sol.phi1});
    const double c1 = std::cos(sol.phi1);
    const double cp = std::cos(psi_c);
    const double sp = std::sin(psi_c);
    const double ysign = sol.mirrored ? -1.0 : 1.0;
    for (int i = 0; i < n; ++i) {
        const double phi = sol.phi1 + (sol.phi2 - sol.phi1) * i / (n - 1);
        const double f = ellip_f({sol.k, phi});
        const double e = ellip_e({sol.k, phi});
        const double grow = (f - f1) - 2.0 * (e - e1);
        const double cphi = std::cos(phi);
        const double x = (cp * grow + 2.0 * sol.k * sp * (c1 - cphi)) / lambda;
        const double y = (sp * grow + 2.0 * sol.k * cp * (cphi - c1)) / lambda;
        const double root = std::sqrt(std::max(0.0, 1.0 - sol.k * sol.k * std::sin(phi) * std::sin(phi)));
        const double theta = psi_c - 2.0 * std::atan2(root, sol.k * std::sin(phi));
        pts.push_back({(f - f1) / lambda, x, ysign * y, ysign * theta});
    }
    return pts;
}

namespace {

struct NormalizedSolve {
    double k, psi;
    double residual;
};

void project_into_domain(std::array<double, 2>& x) {
    // x = (k, psi). Keep psi in a generous window and k inside
    // (|cos(psi/2)|, 1).
    x[1] = std::clamp(x[1], -kPi, 3.0 * kPi);
    const double kmin = std::fabs(std::cos(0.5 * x[1])) + 1e-12;
    x[0] = std::clamp(x[0], kmin, kModulusCeil);
}

std::optional<NormalizedSolve> try_newton(double xt, double yt, BucklingMode mode,
                                          double k0, double psi0, double tol) {
    Root2Problem prob;
    prob.residual = [xt, yt, mode](const std::array<double, 2>& v) -> std::array<double, 2> {
        const TipState s = forward_tip(v[0], v[1], mode);
        return {s.x_over_l - xt, s.y_over_l - yt};
    };
    prob.guess = {k0, psi0};
    prob.tolerance = tol;
    prob.max_iters = 60;
    prob.project = project_into_domain;
    try {
        const Root2Result r = solve_root2(prob);
        return NormalizedSolve{r.x[0], r.x[1], r.residual_norm};
    } catch (const Error&) {
        return std::nullopt;
    }
}

// Deterministic seed ladder: the caller guess (or the default built from
// the displacement direction), then a fixed coarse grid. Near-unity
// moduli seed the boundary-layer (almost straight, taut) states.
std::vector<std::array<double, 2>> seed_ladder(double xt, double yt, BucklingMode mode,
                                               std::optional<std::array<double, 2>> guess) {
    std::vector<std::array<double, 2>> seeds;
    if (guess) seeds.push_back(*guess);
    const double psi0 = std::atan2(yt, xt - 1.0);
    const double k0 = std::max(std::fabs(std::cos(0.5 * psi0)) + 0.05, 0.6);
    seeds.push_back({std::min(k0, 0.999), psi0 < 0.05 ? 0.05 : psi0});
    if (mode == BucklingMode::Second) seeds.push_back({0.4, kPi});
    const double chord = std::hypot(xt, yt);
    if (chord > 0.99) {
        const double psi_c = std::atan2(yt, xt);
        seeds.push_back({0.99999, psi_c + 0.01});
        seeds.push_back({0.9999, psi_c + 0.05});
        seeds.push_back({0.999, 2.0 * kPi - psi_c - 0.05});
    }
    for (double psi : {0.8, 1.8, 2.6, kPi, 3.7, 4.6, 5.6}) {
        for (double k : {0.995, 0.9, 0.7, 0.45, 0.2}) {
            if (k < std::fabs(std::cos(0.5 * psi)) + 0.01) continue;
            seeds.push_back({k, psi});
        }
    }
    return seeds;
}

} // namespace

BeamSolution solve_tip(const BeamSpec& spec, double x_b, double y_b, BucklingMode mode,
                       std::optional<std::array<double, 2>> guess) {
    spec.validate();
    const double L = spec.length;
    const double xt = x_b / L;
    const bool mirrored = y_b < 0.0;
    const double yt = std::fabs(y_b) / L;

    const double chord2 = xt * xt + yt * yt;
    if (chord2 >= 1.0) {
        if (yt == 0.0 && std::fabs(xt - 1.0) < 1e-12) {
            // Undeformed straight beam.
            BeamSolution s;
            s.x_b = x_b;
            s.y_b = 0.0;
            s.mode = mode;
            s.phi1 = kPi / 2.0;
            s.phi2 = phi2_of(s.phi1, mode);
            return s;
        }
        throw DomainError("solve_tip: target chord " + std::to_string(std::sqrt(chord2)) +
                          " L exceeds the inextensible length");
    }

    const double tol = 1e-11;
    std::optional<NormalizedSolve> best;
    for (const auto& seed : seed_ladder(xt, yt, mode, guess)) {
        best = try_newton(xt, yt, mode, seed[0], seed[1], tol);
        if (best) break;
    }
    if (!best) {
        throw NoConvergence("solve_tip: no seed converged for xB/L=" + std::to_string(xt) +
                            ", yB/L=" + std::to_string(yt) +
                            (mode == BucklingMode::First ? " (First mode)" : " (Second mode)"));
    }

    const MapTerms t = map_terms(best->k, best->psi, mode);
    BeamSolution s;
    s.k = best->k;
    s.phi1 = t.phi1;
    s.phi2 = t.phi2;
    s.alpha = t.sqrt_alpha * t.sqrt_alpha;
    s.mode = mode;
    s.mirrored = mirrored;
    s.p = s.alpha * spec.rigidity() / (L * L);
    const double m_scale = 2.0 * best->k * std::sqrt(spec.rigidity() * s.p);
    s.m1 = m_scale * std::cos(t.phi1);
    s.m2 = m_scale * std::cos(t.phi2);
    s.psi = best->psi;
    s.x_b = x_b;
    s.y_b = y_b;
    if (mirrored) {
        s.psi = 2.0 * kPi - best->psi;
        s.m1 = -s.m1;
        s.m2 = -s.m2;
    }
    return s;
}

std::vector<SweepSample> sweep_beam(const BeamSpec& spec, double x_b_fixed,
                                    const std::vector<double>& y_values, ModePolicy policy) {
    if (y_values.empty()) return {};
    for (std::size_t i = 1; i < y_values.size(); ++i) {
        if (!(y_values[i] > y_values[i - 1])) {
            throw DomainError("sweep_beam: yB range must be strictly increasing");
        }
    }

    std::vector<SweepSample> out;
    out.reserve(y_values.size());
    std::optional<std::array<double, 2>> seed_first;
    std::optional<std::array<double, 2>> seed_second;

    auto attempt = [&](double yb, BucklingMode mode,
                       std::optional<std::array<double, 2>>& seed) -> std::optional<BeamSolution> {
        try {
            BeamSolution s = solve_tip(spec, x_b_fixed, yb, mode, seed);
            seed = {{s.k, s.mirrored ? 2.0 * kPi - s.psi : s.psi}};
            return s;
        } catch (const Error&) {
            return std::nullopt;
        }
    };

    for (double yb : y_values) {
        std::optional<BeamSolution> first;
        std::optional<BeamSolution> second;
        if (policy != ModePolicy::SecondOnly) first = attempt(yb, BucklingMode::First, seed_first);
        if (policy != ModePolicy::FirstOnly) second = attempt(yb, BucklingMode::Second, seed_second);

        std::optional<BeamSolution> chosen;
        if (first && second) {
            chosen = first->strain_energy(spec) <= second->strain_energy(spec) ? first : second;
        } else if (first) {
            chosen = first;
        } else if (second) {
            chosen = second;
        }
        if (!chosen) {
            throw NoConvergence("sweep_beam: no branch solvable at yB=" + std::to_string(yb));
        }
        out.push_back({yb, *chosen});
    }
    return out;
}

} // namespace bidea::beam
