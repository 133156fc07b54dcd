#pragma once

#include <cmath>

#include "ncqe/core.hpp"
#include "ncqe/cycle_result.hpp"
#include "ncqe/errors.hpp"

// Four-stroke cycle between two field intensities at fixed level occupation
// swaps: the working substance absorbs the full gap 2 sigma hbar omega
// sqrt(1+F^2) at the strong field and rejects the corresponding gap at the
// weak field reached by a Landau-radius expansion alpha (omega_b -> omega_b/alpha^2).

namespace ncqe::isomagnetic {

struct IsomagneticCycleSpec {
    EffectiveField field_hot; // field at the absorbing leg
    double alpha = 1.0;       // Landau-radius expansion coefficient
    double hbar = 1.0;

    void validate() const {
        field_hot.validate();
        if (alpha <= 0.0) throw ValidationError("alpha must be positive");
        if (hbar <= 0.0) throw ValidationError("hbar must be positive");
    }
};

// Heat absorbed while the populations of (0,0) and (1,0) swap at fixed field:
// Q = E10 - E00 = 2 sigma hbar omega sqrt(1 + F^2) > 0.
inline double heat_hot(const EffectiveField& field, double hbar = 1.0) {
    return level_gap(field, hbar);
}

// Heat rejected on the return swap at the expanded field; always negative.
inline double heat_cold(const EffectiveField& field_hot, double alpha, double hbar = 1.0) {
    if (alpha <= 0.0) throw ValidationError("alpha must be positive");
    return -level_gap(field_hot.rescaled(alpha), hbar);
}

inline CycleResult efficiency_isomagnetic(const IsomagneticCycleSpec& spec) {
    spec.validate();
    CycleResult r;
    const EffectiveField cold = spec.field_hot.rescaled(spec.alpha);
    r.flux_sq_hot = flux_factor(spec.field_hot);
    r.flux_sq_cold = flux_factor(cold);
    r.q_in = heat_hot(spec.field_hot, spec.hbar);
    r.q_out = heat_cold(spec.field_hot, spec.alpha, spec.hbar);
    r.work = r.q_in + r.q_out;
    r.efficiency = 1.0 - std::sqrt((1.0 + r.flux_sq_cold) / (1.0 + r.flux_sq_hot));
    r.degenerate = spec.alpha <= 1.0;
    r.omega_b1 = spec.field_hot.omega_b;
    r.omega_b3 = cold.omega_b;
    return r;
}

// Entropy produced when heat dq flows from a reservoir at t_hot into the
// working substance at temperature t: ds = dq/t - dq/t_hot.
inline double entropy_generation(double dq, double t, double t_hot) {
    if (t <= 0.0 || t_hot <= 0.0)
        throw DomainError("temperature_domain", "temperatures must be positive");
    return dq / t - dq / t_hot;
}

} // namespace ncqe::isomagnetic
