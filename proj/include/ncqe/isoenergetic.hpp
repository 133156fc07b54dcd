#pragma once

#include <algorithm>
#include <cmath>

#include "ncqe/core.hpp"
#include "ncqe/cycle_result.hpp"
#include "ncqe/errors.hpp"

// Two-level cycle alternating constant-energy strokes (populations shift
// between (0,0) and (1,0) while the field changes) with population-frozen
// strokes. Stroke sizes are expressed through the Landau-radius scale x:
// omega_b(x) = omega_b1 / x^2, x = 1 at the hot corner.

namespace ncqe::isoenergetic {

struct OccupationState {
    double p00 = 1.0; // ground (0,0) weight
    double p10 = 0.0; // excited (1,0) weight

    void validate() const {
        if (p00 < 0.0 || p00 > 1.0 || p10 < 0.0 || p10 > 1.0)
            throw ValidationError("occupation weights must lie in [0,1]");
        if (std::abs(p00 + p10 - 1.0) > 1e-9)
            throw ValidationError("occupation weights must sum to one");
    }
};

struct IsoenergeticCycleSpec {
    double n_phi0 = 0.0; // flux quanta through the hot-corner Landau disc
    double gamma = 0.0;
    double sigma = 1.0;
    double omega = 1.0;
    double alpha = 1.0; // population-frozen expansion coefficient
    Orientation orientation = Orientation::positive;
    double hbar = 1.0;

    void validate() const {
        if (n_phi0 < 0.0) throw ValidationError("n_phi0 must be non-negative");
        if (gamma < 0.0) throw ValidationError("gamma must be non-negative");
        if (!(sigma > 0.0) || sigma > 1.0) throw ValidationError("sigma must lie in (0,1]");
        if (omega <= 0.0) throw ValidationError("omega must be positive");
        if (alpha <= 0.0) throw ValidationError("alpha must be positive");
        if (hbar <= 0.0) throw ValidationError("hbar must be positive");
    }

    EffectiveField field1() const {
        return EffectiveField::from_flux(n_phi0, gamma, omega, sigma, orientation);
    }
};

namespace detail {

// Energy held fixed along a constant-energy stroke that starts at `f` with
// ground weight p00: E = p00 E00 + (1-p00) E10 = E10 - p00 * gap.
inline double stroke_energy(const EffectiveField& f, double p00, double hbar) {
    return eigenenergy(QuantumLevel{1, 0}, f, hbar) - level_gap(f, hbar) * p00;
}

} // namespace detail

// Ground-state weight after sliding the field to omega_b_target at constant
// total energy. Values escaping [0,1] by more than round-off mean the target
// is not reachable along such a stroke.
inline double ground_probability(const EffectiveField& start, double p00_start,
                                 double omega_b_target, double hbar = 1.0) {
    start.validate();
    if (p00_start < 0.0 || p00_start > 1.0)
        throw ValidationError("p00 must lie in [0,1]");
    const EffectiveField target = start.with_omega_b(omega_b_target);
    const double energy = detail::stroke_energy(start, p00_start, hbar);
    const double p = (eigenenergy(QuantumLevel{1, 0}, target, hbar) - energy)
                     / level_gap(target, hbar);
    if (p < -1e-12 || p > 1.0 + 1e-12)
        throw DomainError("occupation_domain",
                          "target field not reachable along a constant-energy stroke");
    return std::clamp(p, 0.0, 1.0);
}

// Work done on the substance over a population-frozen stroke: the levels move,
// the weights do not.
inline double isoentropic_work(const OccupationState& occ, const EffectiveField& from,
                               double omega_b_to, double hbar = 1.0) {
    occ.validate();
    from.validate();
    const EffectiveField to = from.with_omega_b(omega_b_to);
    const QuantumLevel ground{0, 0};
    const QuantumLevel excited{1, 0};
    return occ.p00 * (eigenenergy(ground, to, hbar) - eigenenergy(ground, from, hbar))
         + occ.p10 * (eigenenergy(excited, to, hbar) - eigenenergy(excited, from, hbar));
}

// Heat absorbed over a constant-energy stroke. Integrating E dP with
// P(omega_b) pinned by energy conservation collapses to a log of the gap
// ratio times the conserved energy.
inline double heat_isoenergetic(const EffectiveField& from, double omega_b_to,
                                double p00_start, double hbar = 1.0) {
    from.validate();
    if (p00_start < 0.0 || p00_start > 1.0)
        throw ValidationError("p00 must lie in [0,1]");
    const EffectiveField to = from.with_omega_b(omega_b_to);
    const double energy = detail::stroke_energy(from, p00_start, hbar);
    return energy * std::log(level_gap(from, hbar) / level_gap(to, hbar));
}

// sqrt(1 + F^2) as a function of the Landau-radius scale x.
inline double theta_function(double x, const IsoenergeticCycleSpec& spec) {
    if (x <= 0.0) throw ValidationError("scale must be positive");
    return std::sqrt(1.0 + flux_factor(spec.field1().rescaled(x)));
}

// Scale ending the first constant-energy stroke: the ground level at the hot
// corner meets the excited level, Theta(1) = 3 Theta(alpha1). Quadratic in
// u = 1/alpha1^2; the branch keeps the stroke monotone in the weight.
inline double alpha1_closed(const IsoenergeticCycleSpec& spec) {
    spec.validate();
    const char* too_weak = "field too weak for the constant-energy expansion";
    if (spec.n_phi0 == 0.0) throw DomainError("field_too_weak", too_weak);
    const double s = orientation_sign(spec.orientation);
    const double n = spec.n_phi0;
    const double w = spec.omega;
    const double g = spec.gamma;
    const double so = spec.sigma * w;
    const double radicand = g * g + 2.0 * s * w * g * n + w * w * n * n - 8.0 * so * so;
    if (radicand < 0.0) throw DomainError("field_too_weak", too_weak);
    const double u = (std::sqrt(radicand) - 3.0 * s * g) / (3.0 * w * n);
    if (!(u > 0.0 && u < 1.0)) throw DomainError("field_too_weak", too_weak);
    return 1.0 / std::sqrt(u);
}

// Scale ending the second constant-energy stroke (a compression), entered at
// scale alpha*alpha1: Theta(alpha*alpha1*alpha3) = 3 Theta(alpha*alpha1).
// Always solvable and always < 1.
inline double alpha3_closed(const IsoenergeticCycleSpec& spec, double alpha_alpha1) {
    spec.validate();
    if (alpha_alpha1 <= 0.0) throw ValidationError("scale must be positive");
    const double b = spec.field1().omega_b;
    const double t = alpha_alpha1 * alpha_alpha1 / b; // signed
    const double g = spec.gamma;
    const double so = spec.sigma * spec.omega;
    const double v = std::sqrt((6.0 * g * t + 3.0) * (6.0 * g * t + 3.0)
                               + 32.0 * so * so * t * t)
                     - 2.0 * g * t;
    return 1.0 / std::sqrt(v);
}

inline CycleResult efficiency_isoenergetic(const IsoenergeticCycleSpec& spec) {
    spec.validate();
    const double a1 = alpha1_closed(spec);
    const double a3 = alpha3_closed(spec, spec.alpha * a1);

    const double th_1 = theta_function(1.0, spec);
    const double th_a1 = theta_function(a1, spec);
    const double th_aa1 = theta_function(spec.alpha * a1, spec);
    const double th_aa1a3 = theta_function(spec.alpha * a1 * a3, spec);
    const double shw = spec.sigma * spec.hbar * spec.omega;

    CycleResult r;
    r.q_in = shw * th_1 * std::log(th_1 / th_a1);
    r.q_out = 3.0 * shw * th_aa1 * std::log(th_aa1 / th_aa1a3);
    r.work = r.q_in + r.q_out;
    r.efficiency = 1.0
                   - 3.0 * (th_aa1 / th_1)
                         * std::log(th_aa1a3 / th_aa1) / std::log(th_1 / th_a1);
    r.degenerate = spec.alpha <= 1.0;
    r.flux_sq_hot = th_1 * th_1 - 1.0;
    r.flux_sq_cold = th_aa1 * th_aa1 - 1.0;
    r.alpha1 = a1;
    r.alpha3 = a3;
    const double b = spec.field1().omega_b;
    r.omega_b1 = b;
    r.omega_b2 = b / (a1 * a1);
    r.omega_b3 = b / ((spec.alpha * a1) * (spec.alpha * a1));
    r.omega_b4 = b / ((spec.alpha * a1 * a3) * (spec.alpha * a1 * a3));
    return r;
}

// Strong-field limit of the cycle efficiency.
inline double asymptotic_efficiency(double alpha) {
    if (alpha <= 0.0) throw ValidationError("alpha must be positive");
    return 1.0 - 1.0 / (alpha * alpha);
}

} // namespace ncqe::isoenergetic
