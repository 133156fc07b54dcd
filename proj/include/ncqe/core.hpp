#pragma once

#include <cmath>
#include <cstdlib>

#include "ncqe/errors.hpp"

// Core model for a charged 2D oscillator on a noncommutative phase space:
//   [q_i, q_j] = i theta eps_ij,  [q_i, p_j] = i hbar delta_ij,  [p_i, p_j] = i eta eps_ij.
// A linear phase-space map sends the deformed operators to canonical ones; the
// resulting effective Hamiltonian is an isotropic oscillator plus an angular
// momentum coupling, diagonalized by a Fock-Darwin-style spectrum.

namespace ncqe {

enum class Orientation { positive, reversed };

inline double orientation_sign(Orientation o) {
    return o == Orientation::reversed ? -1.0 : 1.0;
}

// Deformation parameters. theta*eta < hbar^2 is required for the map to exist;
// the check happens where sigma is computed so that invalid pairs are
// constructible (the commutator oracle uses them as failing fixtures).
struct NCParams {
    double theta = 0.0;
    double eta = 0.0;
    double hbar = 1.0;
};

// sigma = sqrt(1 - theta*eta/hbar^2); the phase-space volume scale factor.
inline double compute_sigma(const NCParams& nc) {
    if (nc.hbar <= 0.0)
        throw DomainError("hbar_domain", "hbar must be positive");
    const double t = nc.theta * nc.eta / (nc.hbar * nc.hbar);
    if (t >= 1.0)
        throw DomainError("sigma_domain",
                          "theta*eta must be below hbar^2 for the deformed algebra to map "
                          "to a canonical one");
    return std::sqrt(1.0 - t);
}

struct SystemConfig {
    double mass = 1.0;
    double omega = 1.0;   // trap frequency
    double charge = 1.0;

    void validate() const {
        if (mass <= 0.0) throw ValidationError("mass must be positive");
        if (omega <= 0.0) throw ValidationError("omega must be positive");
        if (charge <= 0.0) throw ValidationError("charge must be positive");
    }
};

// Coefficients of the linear map q = nu Q - (theta/2 nu hbar) JPi,
// p = mu Pi + (eta/2 mu hbar) JQ. Canonicity needs
// mu*nu + theta*eta/(4 mu nu hbar^2) = 1; holds for sw_constants output,
// deliberately violated by oracle fixtures.
struct SWConstants {
    double mu = 1.0;
    double nu = 1.0;

    double constraint_residual(const NCParams& nc) const {
        return mu * nu + nc.theta * nc.eta / (4.0 * mu * nu * nc.hbar * nc.hbar) - 1.0;
    }
};

// Symmetric branch mu = nu = sqrt((1+sigma)/2); mu*nu is then the larger root
// of x^2 - x + theta*eta/(4 hbar^2) = 0, which is exactly the constraint.
inline SWConstants sw_constants(const NCParams& nc) {
    const double sigma = compute_sigma(nc);
    const double m = std::sqrt((1.0 + sigma) / 2.0);
    return SWConstants{m, m};
}

// gamma = theta m Omega^2 / (2 hbar) + eta / (2 m hbar), the angular-momentum
// coupling generated by the deformation. capital_omega is the combined trap +
// cyclotron frequency Omega, Omega^2 = omega_B^2/4 + omega^2.
inline double gamma_effective(const NCParams& nc, const SystemConfig& sys, double capital_omega) {
    sys.validate();
    if (nc.hbar <= 0.0)
        throw DomainError("hbar_domain", "hbar must be positive");
    if (capital_omega < 0.0)
        throw DomainError("omega_domain", "capital_omega must be non-negative");
    return nc.theta * sys.mass * capital_omega * capital_omega / (2.0 * nc.hbar)
         + nc.eta / (2.0 * sys.mass * nc.hbar);
}

struct EffectiveCoefficients {
    double alpha_tilde_sq = 0.0; // coefficient of Q1^2 + Q2^2
    double beta_tilde_sq = 0.0;  // coefficient of Pi1^2 + Pi2^2
    double gamma = 0.0;          // derived angular-momentum coupling
};

// Quadratic-form coefficients of the mapped Hamiltonian. omega_b is signed;
// a negative value encodes the reversed field orientation.
inline EffectiveCoefficients effective_coefficients(const SWConstants& sw, const SystemConfig& sys,
                                                    double omega_b, const NCParams& nc) {
    sys.validate();
    if (nc.hbar <= 0.0)
        throw DomainError("hbar_domain", "hbar must be positive");
    const double hb = nc.hbar;
    const double m = sys.mass;
    const double cap_omega_sq = omega_b * omega_b / 4.0 + sys.omega * sys.omega;

    EffectiveCoefficients c;
    c.alpha_tilde_sq = sw.nu * sw.nu * m * cap_omega_sq / 2.0
                     + nc.eta * nc.eta / (8.0 * m * sw.mu * sw.mu * hb * hb)
                     + (sw.nu / sw.mu) * omega_b * nc.eta / (4.0 * hb);
    c.beta_tilde_sq = sw.mu * sw.mu / (2.0 * m)
                    + m * cap_omega_sq * nc.theta * nc.theta / (8.0 * sw.nu * sw.nu * hb * hb)
                    + (sw.mu / sw.nu) * omega_b * nc.theta / (4.0 * hb);
    c.gamma = gamma_effective(nc, sys, std::sqrt(cap_omega_sq));

    if (c.alpha_tilde_sq <= 0.0 || c.beta_tilde_sq <= 0.0)
        throw DomainError("coefficient_domain",
                          "effective quadratic coefficients must stay positive");
    return c;
}

struct QuantumLevel {
    int kappa = 0; // radial quantum number, >= 0
    int ell = 0;   // angular momentum quantum number

    void validate() const {
        if (kappa < 0) throw ValidationError("kappa must be non-negative");
    }
};

// A field point of the effective model. omega_b is signed: omega_b < 0 is the
// reversed orientation, making the gamma cross term in the flux factor
// destructive. gamma here is an independent knob (it may come from
// gamma_effective or be set directly).
struct EffectiveField {
    double omega_b = 0.0;
    double gamma = 0.0;
    double omega = 1.0;
    double sigma = 1.0;

    void validate() const {
        if (gamma < 0.0) throw ValidationError("gamma must be non-negative");
        if (omega <= 0.0) throw ValidationError("omega must be positive");
        if (!(sigma > 0.0) || sigma > 1.0)
            throw ValidationError("sigma must lie in (0, 1]");
    }

    static EffectiveField from_flux(double n_phi0, double gamma, double omega, double sigma,
                                    Orientation o) {
        if (n_phi0 < 0.0) throw ValidationError("n_phi0 must be non-negative");
        EffectiveField f{orientation_sign(o) * 2.0 * omega * n_phi0, gamma, omega, sigma};
        f.validate();
        return f;
    }

    // Bare flux number |omega_b| / (2 omega).
    double n_phi0() const { return std::abs(omega_b) / (2.0 * omega); }

    Orientation orientation() const {
        return omega_b < 0.0 ? Orientation::reversed : Orientation::positive;
    }

    EffectiveField with_omega_b(double wb) const { return EffectiveField{wb, gamma, omega, sigma}; }

    // Field after a Landau-radius expansion by alpha: omega_b -> omega_b / alpha^2.
    EffectiveField rescaled(double alpha) const {
        if (alpha <= 0.0) throw ValidationError("alpha must be positive");
        return with_omega_b(omega_b / (alpha * alpha));
    }
};

// F^2 = (omega_b^2/4 + gamma*omega_b + gamma^2) / (sigma^2 omega^2)
//     = ((omega_b/2 + gamma) / (sigma omega))^2.
// The perfect-square form keeps it non-negative and makes the reversed-field
// cancellation at |omega_b| = 2 gamma exact.
inline double flux_factor(const EffectiveField& f) {
    f.validate();
    const double x = (f.omega_b / 2.0 + f.gamma) / (f.sigma * f.omega);
    return x * x;
}

// E_{kappa,ell} = sigma hbar omega sqrt(1+F^2) (2 kappa + |ell| + 1)
//              - hbar (omega_b/2 + gamma) ell        (omega_b signed)
inline double eigenenergy(const QuantumLevel& lvl, const EffectiveField& f, double hbar = 1.0) {
    lvl.validate();
    if (hbar <= 0.0) throw DomainError("hbar_domain", "hbar must be positive");
    const double radial = f.sigma * hbar * f.omega * std::sqrt(1.0 + flux_factor(f))
                        * (2.0 * lvl.kappa + std::abs(lvl.ell) + 1.0);
    const double angular = hbar * (f.omega_b / 2.0 + f.gamma) * lvl.ell;
    return radial - angular;
}

// Gap E_{1,0} - E_{0,0} = 2 sigma hbar omega sqrt(1+F^2); always positive.
inline double level_gap(const EffectiveField& f, double hbar = 1.0) {
    if (hbar <= 0.0) throw DomainError("hbar_domain", "hbar must be positive");
    return 2.0 * f.sigma * hbar * f.omega * std::sqrt(1.0 + flux_factor(f));
}

// l_B = sqrt(hbar / (m omega_b)); callers pass the field magnitude.
inline double landau_radius(double omega_b, const SystemConfig& sys, double hbar = 1.0) {
    sys.validate();
    if (hbar <= 0.0) throw DomainError("hbar_domain", "hbar must be positive");
    if (omega_b <= 0.0)
        throw DomainError("field_domain", "landau radius needs a positive field magnitude");
    return std::sqrt(hbar / (sys.mass * omega_b));
}

} // namespace ncqe
