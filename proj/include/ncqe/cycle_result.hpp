#pragma once

#include <limits>

namespace ncqe {

// One cycle evaluation. Heats are signed: q_in > 0 is absorbed on the hot leg,
// q_out < 0 is rejected on the cold leg. Intermediates that do not apply to a
// given cycle stay NaN.
struct CycleResult {
    double q_in = 0.0;
    double q_out = 0.0;
    double work = 0.0; // q_in + q_out over the closed cycle
    double efficiency = 0.0;
    bool degenerate = false; // alpha <= 1: the cycle does not expand

    double flux_sq_hot = std::numeric_limits<double>::quiet_NaN();
    double flux_sq_cold = std::numeric_limits<double>::quiet_NaN();
    double alpha1 = std::numeric_limits<double>::quiet_NaN();
    double alpha3 = std::numeric_limits<double>::quiet_NaN();
    double omega_b1 = std::numeric_limits<double>::quiet_NaN();
    double omega_b2 = std::numeric_limits<double>::quiet_NaN();
    double omega_b3 = std::numeric_limits<double>::quiet_NaN();
    double omega_b4 = std::numeric_limits<double>::quiet_NaN();
};

} // namespace ncqe
