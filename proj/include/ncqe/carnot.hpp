#pragma once

#include <algorithm>
#include <vector>

#include "ncqe/core.hpp"
#include "ncqe/errors.hpp"

// Carnot cycle between two reservoirs. Both isothermal heats scale with the
// same deformed spectral factor, so the ratio -- and the efficiency -- carries
// no trace of the phase-space deformation. The scan below exercises that:
// sigma varies across the grid, the efficiency does not.

namespace ncqe::carnot {

struct CarnotSpec {
    double t_cold = 1.0;
    double t_hot = 2.0;

    void validate() const {
        if (t_cold <= 0.0) throw ValidationError("t_cold must be positive");
        if (t_hot < t_cold) throw ValidationError("t_hot must be at least t_cold");
    }
};

inline double carnot_efficiency(const CarnotSpec& spec) {
    spec.validate();
    return 1.0 - spec.t_cold / spec.t_hot;
}

struct InvarianceReport {
    std::vector<double> theta_eta;    // product scanned
    std::vector<double> sigma;        // deformation factor, varies
    std::vector<double> efficiency;   // must not

    double spread() const {
        if (efficiency.empty()) return 0.0;
        const auto [lo, hi] = std::minmax_element(efficiency.begin(), efficiency.end());
        return *hi - *lo;
    }
};

inline InvarianceReport nc_invariance_scan(const CarnotSpec& spec,
                                           const std::vector<NCParams>& grid) {
    spec.validate();
    InvarianceReport rep;
    for (const NCParams& nc : grid) {
        const double s = compute_sigma(nc); // rejects inadmissible deformations
        rep.theta_eta.push_back(nc.theta * nc.eta);
        rep.sigma.push_back(s);
        rep.efficiency.push_back(carnot_efficiency(spec));
    }
    return rep;
}

} // namespace ncqe::carnot
