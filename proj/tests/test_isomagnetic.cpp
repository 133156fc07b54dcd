#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "ncqe/core.hpp"
#include "ncqe/errors.hpp"
#include "ncqe/isomagnetic.hpp"

using namespace ncqe;
using namespace ncqe::isomagnetic;
using Catch::Approx;

TEST_CASE("stroke heats at the spot field") {
    const EffectiveField f{8.0, 0.0, 1.0, 1.0};
    CHECK(heat_hot(f) == Approx(2.0 * std::sqrt(17.0)).epsilon(1e-14));
    CHECK(heat_cold(f, 2.0) == Approx(-2.0 * std::sqrt(2.0)).epsilon(1e-14));
    CHECK(heat_hot(f, 2.0) == Approx(4.0 * std::sqrt(17.0)).epsilon(1e-14));
    // a huge expansion washes the field out of the gap entirely
    const EffectiveField g{8.0, 0.0, 1.0, std::sqrt(0.75)};
    CHECK(heat_cold(g, 1e8) == Approx(-2.0 * std::sqrt(0.75)).epsilon(1e-9));
    CHECK_THROWS_AS(heat_cold(f, 0.0), ValidationError);
}

TEST_CASE("cycle efficiency at the spot field") {
    const EffectiveField f{8.0, 0.0, 1.0, 1.0};
    const auto r = efficiency_isomagnetic({f, 2.0, 1.0});
    CHECK(r.efficiency == Approx(1.0 - std::sqrt(2.0) / std::sqrt(17.0)).epsilon(1e-12));
    CHECK(r.efficiency == Approx(0.65700282971498233).epsilon(1e-12));
    CHECK(r.q_in == Approx(2.0 * std::sqrt(17.0)).epsilon(1e-14));
    CHECK(r.q_out == Approx(-2.0 * std::sqrt(2.0)).epsilon(1e-14));
    CHECK(r.work == Approx(r.q_in + r.q_out).epsilon(1e-14));
    CHECK(r.efficiency == Approx(1.0 + r.q_out / r.q_in).epsilon(1e-12));
    CHECK(r.flux_sq_hot == Approx(16.0).epsilon(1e-14));
    CHECK(r.flux_sq_cold == Approx(1.0).epsilon(1e-14));
    CHECK(r.omega_b1 == 8.0);
    CHECK(r.omega_b3 == 2.0);
    CHECK_FALSE(r.degenerate);
    CHECK(efficiency_isomagnetic({f, 1.0, 1.0}).degenerate);
    CHECK(efficiency_isomagnetic({f, 1.0, 1.0}).efficiency == 0.0);
    // infinite-expansion ceiling at this field
    CHECK(efficiency_isomagnetic({f, 1e8, 1.0}).efficiency
          == Approx(1.0 - 1.0 / std::sqrt(17.0)).epsilon(1e-9));
    CHECK_THROWS_AS(efficiency_isomagnetic({f, -1.0, 1.0}), ValidationError);
    CHECK_THROWS_AS(efficiency_isomagnetic({f, 2.0, 0.0}), ValidationError);
}

TEST_CASE("deformed and reversed anchors") {
    const double sg = std::sqrt(0.9); // theta*eta = 0.1
    const auto f = EffectiveField::from_flux(4.0, 0.1, 1.0, sg, Orientation::positive);
    const auto r = efficiency_isomagnetic({f, 2.0, 1.0});
    CHECK(r.efficiency == Approx(0.65483087067731562).epsilon(1e-12));
    CHECK(r.q_in == Approx(8.4166501650003251).epsilon(1e-12));
    CHECK(r.q_out == Approx(-2.90516780926679).epsilon(1e-12));

    const auto fr = EffectiveField::from_flux(4.0, 0.5, 1.0, sg, Orientation::reversed);
    const auto rr = efficiency_isomagnetic({fr, 2.0, 1.0});
    CHECK(rr.efficiency == Approx(0.70427635961443709).epsilon(1e-12));
    CHECK(rr.q_in == Approx(7.2525857457874981).epsilon(1e-12));
    CHECK(rr.q_out == Approx(-2.1447610589527217).epsilon(1e-12));
    CHECK(rr.omega_b1 == -8.0);
    CHECK(rr.omega_b3 == -2.0);
}

TEST_CASE("entropy generation of a heat flow") {
    CHECK(entropy_generation(2.0, 1.0, 2.0) == Approx(1.0).epsilon(1e-15));
    CHECK(entropy_generation(0.0, 1.0, 2.0) == 0.0);
    CHECK(entropy_generation(3.0, 2.0, 2.0) == 0.0); // reversible transfer
    CHECK_THROWS_AS(entropy_generation(1.0, 0.0, 2.0), DomainError);
    CHECK_THROWS_AS(entropy_generation(1.0, 1.0, -1.0), DomainError);
}

TEST_CASE("deformation helps the positive-orientation engine") {
    for (double alpha : {1.1, 1.5, 2.0, 2.5, 3.0}) {
        for (double g : {0.1, 0.5}) {
            double prev = -1.0;
            for (double te : {0.0, 0.1, 0.5}) {
                const auto f = EffectiveField::from_flux(4.0, g, 1.0, std::sqrt(1.0 - te),
                                                         Orientation::positive);
                const double n = efficiency_isomagnetic({f, alpha, 1.0}).efficiency;
                CHECK(n >= prev);
                prev = n;
            }
        }
    }
}

TEST_CASE("weak-flux reversed engine loses efficiency with the knob") {
    // at N = 0.5 the knob is past the reversed-field cancellation point
    for (double alpha : {1.1, 1.5, 2.0, 2.5, 3.0}) {
        for (double te : {0.0, 0.1, 0.5}) {
            const double sg = std::sqrt(1.0 - te);
            const auto lo = EffectiveField::from_flux(0.5, 0.1, 1.0, sg, Orientation::reversed);
            const auto hi = EffectiveField::from_flux(0.5, 0.5, 1.0, sg, Orientation::reversed);
            CHECK(efficiency_isomagnetic({hi, alpha, 1.0}).efficiency
                  <= efficiency_isomagnetic({lo, alpha, 1.0}).efficiency);
        }
    }
}

TEST_CASE("strong flux suppresses the deformation effect") {
    // |N(te) - N(0)| at fixed knob shrinks when the flux grows 4 -> 100
    const auto eff = [](double n, double te, double g, double alpha) {
        const auto f =
            EffectiveField::from_flux(n, g, 1.0, std::sqrt(1.0 - te), Orientation::positive);
        return efficiency_isomagnetic({f, alpha, 1.0}).efficiency;
    };
    for (double alpha : {1.1, 1.5, 2.0, 2.5, 3.0}) {
        for (double g : {0.1, 0.5}) {
            for (double te : {0.1, 0.5}) {
                CHECK(std::abs(eff(100.0, te, g, alpha) - eff(100.0, 0.0, g, alpha))
                      < std::abs(eff(4.0, te, g, alpha) - eff(4.0, 0.0, g, alpha)));
            }
        }
    }
}
