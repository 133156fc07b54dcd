#pragma once

#include <array>
#include <cmath>
#include <utility>

#include "ncqe/core.hpp"
#include "ncqe/errors.hpp"

// Independent numerical checks for the closed-form results: a symbolic
// commutator expansion over the canonical basis, normal-mode frequencies of
// the quadratic form via its Hamiltonian matrix, a deterministic root solver,
// and a derivative-free quadrature for leg heats. Everything here must stay
// structurally independent of the formulas it verifies.

namespace ncqe::oracle {

struct SolverSettings {
    double root_tol = 1e-12;
    int max_iterations = 200;
    double quad_rel_tol = 1e-6;
    int max_refinements = 12;
};

// --- commutator expansion -------------------------------------------------
//
// The mapped operators are linear in the canonical basis x = (Q1, Q2, Pi1, Pi2)
// with [Q_i, Pi_j] = i hbar delta_ij. For a = a.x, b = b.x the commutator is
// [a, b] = i hbar (a_Q1 b_P1 - a_P1 b_Q1 + a_Q2 b_P2 - a_P2 b_Q2).

struct CommutatorReport {
    // |[q1,q2] - i theta|, |[p1,p2] - i eta|, |[q_i,p_j] - i hbar delta_ij|
    double q1q2 = 0.0;
    double p1p2 = 0.0;
    double q1p1 = 0.0;
    double q1p2 = 0.0;
    double q2p1 = 0.0;
    double q2p2 = 0.0;

    double max_residual() const {
        double m = q1q2;
        for (double r : {p1p2, q1p1, q1p2, q2p1, q2p2})
            if (r > m) m = r;
        return m;
    }

    bool passes(double tol = 1e-12) const { return max_residual() <= tol; }
};

namespace detail {

using Coeffs = std::array<double, 4>; // over (Q1, Q2, Pi1, Pi2)

// imaginary part of [a, b] / i
inline double bracket(const Coeffs& a, const Coeffs& b, double hbar) {
    return hbar * (a[0] * b[2] - a[2] * b[0] + a[1] * b[3] - a[3] * b[1]);
}

} // namespace detail

// Expands all pairwise commutators of the mapped operators and reports the
// residuals against the deformed algebra. With the canonical constraint
// satisfied every residual vanishes; with mu = nu = 1 and theta*eta != 0 the
// diagonal [q_i, p_i] residual is exactly theta*eta / (4 hbar).
inline CommutatorReport verify_commutators(const SWConstants& sw, const NCParams& nc) {
    if (nc.hbar <= 0.0) throw DomainError("hbar_domain", "hbar must be positive");
    if (sw.mu == 0.0 || sw.nu == 0.0)
        throw DomainError("map_domain", "map coefficients must be nonzero");
    const double hb = nc.hbar;
    const detail::Coeffs q1{sw.nu, 0.0, 0.0, -nc.theta / (2.0 * sw.nu * hb)};
    const detail::Coeffs q2{0.0, sw.nu, nc.theta / (2.0 * sw.nu * hb), 0.0};
    const detail::Coeffs p1{0.0, nc.eta / (2.0 * sw.mu * hb), sw.mu, 0.0};
    const detail::Coeffs p2{-nc.eta / (2.0 * sw.mu * hb), 0.0, 0.0, sw.mu};

    CommutatorReport r;
    r.q1q2 = std::abs(detail::bracket(q1, q2, hb) - nc.theta);
    r.p1p2 = std::abs(detail::bracket(p1, p2, hb) - nc.eta);
    r.q1p1 = std::abs(detail::bracket(q1, p1, hb) - hb);
    r.q1p2 = std::abs(detail::bracket(q1, p2, hb));
    r.q2p1 = std::abs(detail::bracket(q2, p1, hb));
    r.q2p2 = std::abs(detail::bracket(q2, p2, hb) - hb);
    return r;
}

// --- quadratic form and normal modes ---------------------------------------

// H = x^T A x over x = (Q1, Q2, Pi1, Pi2).
class QuadraticHamiltonian {
public:
    QuadraticHamiltonian() { a_.fill({0.0, 0.0, 0.0, 0.0}); }

    double& at(int i, int j) { return a_[i][j]; }
    double at(int i, int j) const { return a_[i][j]; }

    double evaluate(const std::array<double, 4>& x) const {
        double s = 0.0;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                s += x[i] * a_[i][j] * x[j];
        return s;
    }

    // Sylvester criterion on the fixed sparsity pattern reduces to
    // alpha^2 > 0 and 4 alpha^2 beta^2 > coupling^2; keep the generic minors
    // so the check stays formula-independent.
    bool positive_definite() const {
        const double m1 = a_[0][0];
        const double m2 = a_[0][0] * a_[1][1] - a_[0][1] * a_[1][0];
        const double m3 = det3();
        const double m4 = det4();
        return m1 > 0.0 && m2 > 0.0 && m3 > 0.0 && m4 > 0.0;
    }

    double det4() const {
        std::array<std::array<double, 4>, 4> m = a_;
        return detail_det(m);
    }

private:
    double det3() const {
        const auto& a = a_;
        return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1])
             - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0])
             + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
    }

    static double detail_det(std::array<std::array<double, 4>, 4>& m) {
        // Gaussian elimination with partial pivoting; deterministic.
        double det = 1.0;
        for (int col = 0; col < 4; ++col) {
            int pivot = col;
            for (int r = col + 1; r < 4; ++r)
                if (std::abs(m[r][col]) > std::abs(m[pivot][col])) pivot = r;
            if (m[pivot][col] == 0.0) return 0.0;
            if (pivot != col) {
                std::swap(m[pivot], m[col]);
                det = -det;
            }
            det *= m[col][col];
            for (int r = col + 1; r < 4; ++r) {
                const double f = m[r][col] / m[col][col];
                for (int c = col; c < 4; ++c) m[r][c] -= f * m[col][c];
            }
        }
        return det;
    }

    std::array<std::array<double, 4>, 4> a_;
};

// A = diag(alpha^2, alpha^2, beta^2, beta^2) plus the angular coupling
// (omega_b/2 + gamma)(Pi1 Q2 - Pi2 Q1) split symmetrically.
inline QuadraticHamiltonian build_quadratic(const EffectiveCoefficients& c, double omega_b,
                                            double gamma) {
    if (c.alpha_tilde_sq <= 0.0 || c.beta_tilde_sq <= 0.0)
        throw DomainError("coefficient_domain", "quadratic coefficients must be positive");
    QuadraticHamiltonian h;
    h.at(0, 0) = h.at(1, 1) = c.alpha_tilde_sq;
    h.at(2, 2) = h.at(3, 3) = c.beta_tilde_sq;
    const double half = (omega_b / 2.0 + gamma) / 2.0;
    h.at(1, 2) = h.at(2, 1) = half;  // + Pi1 Q2
    h.at(0, 3) = h.at(3, 0) = -half; // - Pi2 Q1
    return h;
}

// Moduli of the eigenvalues of M = J * 2A (Hamilton's equations matrix),
// returned descending. M has eigenvalues +-i w_+, +-i w_-, so its
// characteristic polynomial is l^4 + c2 l^2 + c0 with
// c2 = w+^2 + w-^2 = -tr(M^2)/2 and c0 = w+^2 w-^2 = det(M).
inline std::pair<double, double> symplectic_frequencies(const QuadraticHamiltonian& h) {
    if (!h.positive_definite())
        throw DomainError("not_positive_definite",
                          "quadratic form is not positive definite; normal-mode "
                          "frequencies are not all real");
    std::array<std::array<double, 4>, 4> m{};
    // J over (Q1, Q2, Pi1, Pi2): dQ_i/dt = dH/dPi_i, dPi_i/dt = -dH/dQ_i.
    const int ofs[4] = {2, 3, 0, 1};
    const double sgn[4] = {1.0, 1.0, -1.0, -1.0};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            m[i][j] = sgn[i] * 2.0 * h.at(ofs[i], j);

    double tr_m2 = 0.0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            tr_m2 += m[i][j] * m[j][i];
    const double c2 = -tr_m2 / 2.0;
    const double c0 = [&] {
        QuadraticHamiltonian tmp;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                tmp.at(i, j) = m[i][j];
        return tmp.det4();
    }();

    double disc = c2 * c2 - 4.0 * c0;
    if (disc < 0.0) {
        if (disc < -1e-12 * std::max(1.0, c2 * c2))
            throw DomainError("not_positive_definite", "normal-mode frequencies are not real");
        disc = 0.0; // near-degenerate modes
    }
    const double root = std::sqrt(disc);
    const double hi = (c2 + root) / 2.0;
    const double lo = (c2 - root) / 2.0;
    if (hi < 0.0 || lo < 0.0)
        throw DomainError("not_positive_definite", "normal-mode frequencies are not real");
    return {std::sqrt(hi), std::sqrt(lo)};
}

// --- deterministic root solver ----------------------------------------------
//
// Bisection with a secant step whenever the secant candidate falls strictly
// inside the bracket. Bit-for-bit reproducible for a given f and bracket.
template <class F>
double root_solve(F&& f, double lo, double hi, const SolverSettings& s = {}) {
    if (!(lo < hi)) throw BracketError("bracket must satisfy lo < hi");
    double flo = f(lo);
    double fhi = f(hi);
    if (!std::isfinite(flo) || !std::isfinite(fhi))
        throw BracketError("f must be finite at the bracket endpoints");
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo > 0.0) == (fhi > 0.0))
        throw BracketError("bracket endpoints must have opposite signs");

    double a = lo, b = hi, fa = flo, fb = fhi;
    for (int it = 0; it < s.max_iterations; ++it) {
        double x = (a + b) / 2.0;
        // secant steps only on even iterations: the forced bisection in between
        // halves the bracket and rules out one-sided stagnation
        if ((it & 1) == 0 && fb != fa) {
            const double sec = b - fb * (b - a) / (fb - fa);
            if (sec > a && sec < b) x = sec;
        }
        if (x <= a || x >= b) return x; // bracket is at machine resolution
        const double fx = f(x);
        if (!std::isfinite(fx)) throw ConvergenceError("f became non-finite inside the bracket");
        if (std::abs(fx) <= s.root_tol || (b - a) <= s.root_tol * std::max(1.0, std::abs(x)))
            return x;
        if ((fx > 0.0) == (fa > 0.0)) {
            a = x;
            fa = fx;
        } else {
            b = x;
            fb = fx;
        }
    }
    throw ConvergenceError("root_solve hit the iteration cap");
}

// --- heat quadrature ----------------------------------------------------------
//
// Q = sum_levels int E dp along an isoenergetic trajectory, i.e. the heat the
// system absorbs while its populations rearrange. Discretized as a
// derivative-free trapezoid-weighted Stieltjes sum in the field variable,
// refined by doubling and Richardson-extrapolated (trapezoid error is O(h^2)).
template <class E00, class E10, class P00>
double heat_quadrature(E00&& e00, E10&& e10, P00&& p00, double b_a, double b_b, int steps,
                       const SolverSettings& s = {}) {
    if (steps < 100) throw ValidationError("heat_quadrature needs at least 100 steps");
    if (b_a == b_b) return 0.0;

    const auto trapezoid = [&](long n) {
        double total = 0.0;
        double x0 = b_a;
        double pa = p00(x0), ea0 = e00(x0), ea1 = e10(x0);
        for (long i = 1; i <= n; ++i) {
            const double x1 = b_a + (b_b - b_a) * static_cast<double>(i) / static_cast<double>(n);
            const double pb = p00(x1), eb0 = e00(x1), eb1 = e10(x1);
            total += 0.5 * (ea0 + eb0) * (pb - pa);        // ground level
            total += 0.5 * (ea1 + eb1) * ((1.0 - pb) - (1.0 - pa)); // excited level
            x0 = x1;
            pa = pb;
            ea0 = eb0;
            ea1 = eb1;
        }
        return total;
    };

    long n = steps;
    double t_prev = trapezoid(n);
    double r_prev = 0.0;
    bool have_r = false;
    for (int k = 0; k < s.max_refinements; ++k) {
        n *= 2;
        const double t = trapezoid(n);
        const double r = (4.0 * t - t_prev) / 3.0;
        if (have_r && std::abs(r - r_prev) <= s.quad_rel_tol * std::max(1.0, std::abs(r)))
            return r;
        t_prev = t;
        r_prev = r;
        have_r = true;
    }
    throw ConvergenceError("heat_quadrature refinements disagree beyond tolerance at the cap");
}

} // namespace ncqe::oracle
