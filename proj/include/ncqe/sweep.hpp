#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <limits>
#include <random>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "ncqe/carnot.hpp"
#include "ncqe/core.hpp"
#include "ncqe/errors.hpp"
#include "ncqe/isoenergetic.hpp"
#include "ncqe/isomagnetic.hpp"
#include "ncqe/oracle.hpp"

// Batch evaluation of cycle efficiencies over parameter grids, the key=value
// config format driving it, CSV emission, and the self-check battery that
// replays every closed form against an independent numerical route.

namespace ncqe::sweep {

enum class CycleKind { isomagnetic, isoenergetic };

inline const char* cycle_name(CycleKind c) {
    return c == CycleKind::isomagnetic ? "isomagnetic" : "isoenergetic";
}

inline const char* orientation_name(Orientation o) {
    return o == Orientation::positive ? "positive" : "reversed";
}

struct SweepConfig {
    CycleKind cycle = CycleKind::isomagnetic;
    Orientation orientation = Orientation::positive;
    std::vector<double> n_phi0;            // required
    std::vector<double> theta_eta = {0.0}; // product theta*eta, split evenly
    std::vector<double> gamma = {0.0};
    double alpha_min = 1.0;
    double alpha_max = 3.0;
    long alpha_count = 200;
    double hbar = 1.0;
    double omega = 1.0;
    double mass = 1.0;
    double tolerance = 1e-9;
    std::string out;

    void validate() const {
        if (n_phi0.empty()) throw ValidationError("n_phi0 is required");
        for (double v : n_phi0)
            if (v < 0.0) throw ValidationError("n_phi0 values must be non-negative");
        if (theta_eta.empty()) throw ValidationError("theta_eta list must not be empty");
        for (double v : theta_eta)
            if (v < 0.0) throw ValidationError("theta_eta values must be non-negative");
        if (gamma.empty()) throw ValidationError("gamma list must not be empty");
        for (double v : gamma)
            if (v < 0.0) throw ValidationError("gamma values must be non-negative");
        if (alpha_min <= 0.0) throw ValidationError("alpha_min must be positive");
        if (alpha_min >= alpha_max) throw ValidationError("alpha_min must be below alpha_max");
        if (alpha_count < 2) throw ValidationError("alpha count must be at least 2");
        if (hbar <= 0.0) throw ValidationError("hbar must be positive");
        if (omega <= 0.0) throw ValidationError("omega must be positive");
        if (mass <= 0.0) throw ValidationError("mass must be positive");
        if (tolerance <= 0.0) throw ValidationError("tolerance must be positive");
    }
};

namespace detail {

inline std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

inline double parse_number(std::string_view tok, std::size_t line) {
    tok = trim(tok);
    double v = 0.0;
    const auto* end = tok.data() + tok.size();
    const auto res = std::from_chars(tok.data(), end, v);
    if (res.ec != std::errc{} || res.ptr != end)
        throw ParseError(line, "expected a number, got '" + std::string(tok) + "'");
    return v;
}

inline long parse_count(std::string_view tok, std::size_t line) {
    tok = trim(tok);
    long v = 0;
    const auto* end = tok.data() + tok.size();
    const auto res = std::from_chars(tok.data(), end, v);
    if (res.ec != std::errc{} || res.ptr != end)
        throw ParseError(line, "expected an integer count, got '" + std::string(tok) + "'");
    return v;
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        if (pos == std::string_view::npos) {
            out.push_back(s.substr(start));
            return out;
        }
        out.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
}

inline std::vector<double> parse_list(std::string_view value, std::size_t line) {
    std::vector<double> out;
    for (const auto tok : split(value, ',')) out.push_back(parse_number(tok, line));
    return out;
}

inline void sort_unique(std::vector<double>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

} // namespace detail

// key = value lines; '#' starts a comment; lists are comma separated;
// `alpha = min, max, count` fixes the alpha grid. Later duplicates win.
inline SweepConfig parse_config(const std::string& text) {
    SweepConfig cfg;
    bool cycle_set = false;
    std::size_t line_no = 0;
    for (const auto raw_line : detail::split(text, '\n')) {
        ++line_no;
        std::string_view line = raw_line;
        if (const auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        line = detail::trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos)
            throw ParseError(line_no, "expected 'key = value'");
        const auto key = detail::trim(line.substr(0, eq));
        const auto value = detail::trim(line.substr(eq + 1));
        if (key.empty()) throw ParseError(line_no, "empty key");
        if (value.empty()) throw ParseError(line_no, "empty value for '" + std::string(key) + "'");

        if (key == "cycle") {
            if (value == "isomagnetic") cfg.cycle = CycleKind::isomagnetic;
            else if (value == "isoenergetic") cfg.cycle = CycleKind::isoenergetic;
            else throw ParseError(line_no, "cycle must be isomagnetic or isoenergetic");
            cycle_set = true;
        } else if (key == "orientation") {
            if (value == "positive") cfg.orientation = Orientation::positive;
            else if (value == "reversed") cfg.orientation = Orientation::reversed;
            else throw ParseError(line_no, "orientation must be positive or reversed");
        } else if (key == "n_phi0") {
            cfg.n_phi0 = detail::parse_list(value, line_no);
        } else if (key == "theta_eta") {
            cfg.theta_eta = detail::parse_list(value, line_no);
        } else if (key == "gamma") {
            cfg.gamma = detail::parse_list(value, line_no);
        } else if (key == "alpha") {
            const auto parts = detail::split(value, ',');
            if (parts.size() != 3)
                throw ParseError(line_no, "alpha needs exactly min, max, count");
            cfg.alpha_min = detail::parse_number(parts[0], line_no);
            cfg.alpha_max = detail::parse_number(parts[1], line_no);
            cfg.alpha_count = detail::parse_count(parts[2], line_no);
        } else if (key == "hbar") {
            cfg.hbar = detail::parse_number(value, line_no);
        } else if (key == "omega") {
            cfg.omega = detail::parse_number(value, line_no);
        } else if (key == "mass") {
            cfg.mass = detail::parse_number(value, line_no);
        } else if (key == "tolerance") {
            cfg.tolerance = detail::parse_number(value, line_no);
        } else if (key == "out") {
            cfg.out = std::string(value);
        } else {
            throw ParseError(line_no, "unknown key '" + std::string(key) + "'");
        }
    }
    if (!cycle_set) throw ValidationError("cycle is required");
    cfg.validate();
    detail::sort_unique(cfg.n_phi0);
    detail::sort_unique(cfg.theta_eta);
    detail::sort_unique(cfg.gamma);
    return cfg;
}

inline SweepConfig load_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open config file '" + path + "'");
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (in.bad()) throw IoError("failed reading config file '" + path + "'");
    return parse_config(text);
}

struct SweepRow {
    double n_phi0 = 0.0;
    double theta_eta = 0.0;
    double gamma = 0.0;
    double alpha = 1.0;
    double efficiency = std::numeric_limits<double>::quiet_NaN();
    std::string status = "ok";
};

inline SweepRow evaluate_row(const SweepConfig& cfg, double n_phi0, double theta_eta,
                             double gamma, double alpha) {
    SweepRow row;
    row.n_phi0 = n_phi0;
    row.theta_eta = theta_eta;
    row.gamma = gamma;
    row.alpha = alpha;
    try {
        const double split = std::sqrt(theta_eta); // theta = eta = sqrt(product)
        const double sigma = compute_sigma(NCParams{split, split, cfg.hbar});
        if (cfg.cycle == CycleKind::isomagnetic) {
            const auto field = EffectiveField::from_flux(n_phi0, gamma, cfg.omega, sigma,
                                                         cfg.orientation);
            row.efficiency =
                isomagnetic::efficiency_isomagnetic({field, alpha, cfg.hbar}).efficiency;
        } else {
            const isoenergetic::IsoenergeticCycleSpec spec{
                n_phi0, gamma, sigma, cfg.omega, alpha, cfg.orientation, cfg.hbar};
            row.efficiency = isoenergetic::efficiency_isoenergetic(spec).efficiency;
        }
    } catch (const DomainError& e) {
        row.efficiency = std::numeric_limits<double>::quiet_NaN();
        row.status = std::string("domain_error:") + e.code();
    }
    return row;
}

// Rows come out sorted by (n_phi0, theta_eta, gamma, alpha) and are bitwise
// independent of the worker count: every cell is computed from its grid
// indices alone.
inline std::vector<SweepRow> run_sweep(const SweepConfig& cfg, int jobs = 1) {
    cfg.validate();
    if (jobs < 1) throw ValidationError("jobs must be at least 1");

    std::vector<double> alphas(static_cast<std::size_t>(cfg.alpha_count));
    for (std::size_t i = 0; i < alphas.size(); ++i)
        alphas[i] = cfg.alpha_min
                    + (cfg.alpha_max - cfg.alpha_min) * static_cast<double>(i)
                          / static_cast<double>(cfg.alpha_count - 1);

    struct Cell {
        double n_phi0, theta_eta, gamma, alpha;
    };
    std::vector<Cell> cells;
    cells.reserve(cfg.n_phi0.size() * cfg.theta_eta.size() * cfg.gamma.size() * alphas.size());
    for (double n : cfg.n_phi0)
        for (double te : cfg.theta_eta)
            for (double g : cfg.gamma)
                for (double a : alphas) cells.push_back({n, te, g, a});

    std::vector<SweepRow> rows(cells.size());
    const int workers = std::min<int>(jobs, static_cast<int>(cells.size()) > 0
                                                ? static_cast<int>(cells.size())
                                                : 1);
    if (workers <= 1) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            const Cell& c = cells[i];
            rows[i] = evaluate_row(cfg, c.n_phi0, c.theta_eta, c.gamma, c.alpha);
        }
        return rows;
    }
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= cells.size()) return;
            const Cell& c = cells[i];
            rows[i] = evaluate_row(cfg, c.n_phi0, c.theta_eta, c.gamma, c.alpha);
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int t = 0; t < workers; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
    return rows;
}

// Locale-independent shortest-of-12-significant-digits rendering.
inline std::string format_double(double v) {
    std::array<char, 40> buf{};
    const auto res =
        std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::general, 12);
    return std::string(buf.data(), res.ptr);
}

inline std::string emit_csv(const SweepConfig& cfg, const std::vector<SweepRow>& rows) {
    std::string out = "cycle,orientation,n_phi0,theta_eta,gamma,alpha,efficiency,status\n";
    for (const SweepRow& r : rows) {
        out += cycle_name(cfg.cycle);
        out += ',';
        out += orientation_name(cfg.orientation);
        out += ',';
        out += format_double(r.n_phi0);
        out += ',';
        out += format_double(r.theta_eta);
        out += ',';
        out += format_double(r.gamma);
        out += ',';
        out += format_double(r.alpha);
        out += ',';
        if (r.status == "ok") out += format_double(r.efficiency);
        out += ',';
        out += r.status;
        out += '\n';
    }
    return out;
}

inline void write_csv(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open output file '" + path + "'");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out.good()) throw IoError("failed writing output file '" + path + "'");
}

// ---------------------------------------------------------------------------
// Self-check: every closed form replayed against an independent route.

struct SelfCheckOptions {
    int draws = 1000;
    std::uint64_t seed = 0x5eedULL;
    double alpha1_perturbation = 0.0; // tamper knob: nonzero must trip the root check
    oracle::SolverSettings settings{};
};

struct CheckEntry {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct SelfCheckReport {
    std::vector<CheckEntry> entries;

    bool all_passed() const {
        for (const auto& e : entries)
            if (!e.passed) return false;
        return true;
    }
};

namespace detail {

inline double rel_diff(double a, double b) {
    return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}

struct GridPoint {
    double n_phi0, theta_eta, gamma;
    Orientation orientation;
};

inline std::vector<GridPoint> check_grid() {
    std::vector<GridPoint> pts;
    for (double n : {4.0, 10.0, 100.0})
        for (double te : {0.0, 0.1, 0.5})
            for (double g : {0.0, 0.1, 0.5})
                for (auto o : {Orientation::positive, Orientation::reversed})
                    pts.push_back({n, te, g, o});
    return pts;
}

inline isoenergetic::IsoenergeticCycleSpec spec_at(const GridPoint& p, double alpha) {
    const double split = std::sqrt(p.theta_eta);
    const double sigma = compute_sigma(NCParams{split, split, 1.0});
    return {p.n_phi0, p.gamma, sigma, 1.0, alpha, p.orientation, 1.0};
}

} // namespace detail

inline SelfCheckReport self_check(const SelfCheckOptions& opt = {}) {
    SelfCheckReport report;
    std::mt19937_64 rng(opt.seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    auto uniform = [&](double lo, double hi) { return lo + (hi - lo) * unit(rng); };

    // 1. Phase-space map closure: the mapped commutators must reproduce the
    // deformed algebra. A deliberately unconstrained map must not.
    {
        CheckEntry e{"commutator_closure", true, ""};
        double worst = 0.0;
        for (int i = 0; i < opt.draws; ++i) {
            const double hb = uniform(0.5, 2.0);
            const NCParams nc{uniform(0.0, 0.9 * hb), uniform(0.0, 0.9 * hb), hb};
            const auto rep = oracle::verify_commutators(sw_constants(nc), nc);
            worst = std::max(worst, rep.max_residual());
            if (!rep.passes(1e-12)) {
                e.passed = false;
                e.detail = "residual " + format_double(rep.max_residual()) + " at theta="
                           + format_double(nc.theta) + " eta=" + format_double(nc.eta)
                           + " hbar=" + format_double(hb);
                break;
            }
        }
        if (e.passed) e.detail = "max residual " + format_double(worst);
        report.entries.push_back(e);
    }
    {
        CheckEntry e{"commutator_tamper_detection", true, ""};
        const NCParams nc{0.5, 0.5, 1.0};
        const double r = oracle::verify_commutators(SWConstants{1.0, 1.0}, nc).max_residual();
        if (r != 0.0625) {
            e.passed = false;
            e.detail = "unconstrained fixture residual " + format_double(r) + ", expected 0.0625";
        } else {
            e.detail = "unconstrained map correctly flagged (residual 0.0625)";
        }
        report.entries.push_back(e);
    }

    // 2. Spectrum identity: 4 a~^2 b~^2 == sigma^2 w^2 + (w_B/2 + gamma)^2.
    {
        CheckEntry e{"spectrum_identity", true, ""};
        double worst = 0.0;
        for (int i = 0; i < opt.draws; ++i) {
            const double hb = uniform(0.5, 2.0);
            const NCParams nc{uniform(0.0, 0.9 * hb), uniform(0.0, 0.9 * hb), hb};
            const SystemConfig sys{uniform(0.5, 2.0), uniform(0.5, 2.0), 1.0};
            const double wb = uniform(-6.0, 6.0);
            const auto c = effective_coefficients(sw_constants(nc), sys, wb, nc);
            const double lhs = 4.0 * c.alpha_tilde_sq * c.beta_tilde_sq;
            const double sg = compute_sigma(nc);
            const double rhs = sg * sg * sys.omega * sys.omega
                               + (wb / 2.0 + c.gamma) * (wb / 2.0 + c.gamma);
            const double d = detail::rel_diff(lhs, rhs);
            worst = std::max(worst, d);
            if (d > 1e-12) {
                e.passed = false;
                e.detail = "relative residual " + format_double(d) + " at theta="
                           + format_double(nc.theta) + " eta=" + format_double(nc.eta)
                           + " hbar=" + format_double(hb) + " m=" + format_double(sys.mass)
                           + " omega=" + format_double(sys.omega) + " omega_b="
                           + format_double(wb);
                break;
            }
        }
        if (e.passed) e.detail = "max relative residual " + format_double(worst);
        report.entries.push_back(e);
    }

    // 3. Normal-mode frequencies of the mapped Hamiltonian vs the closed pair.
    {
        CheckEntry e{"symplectic_frequencies", true, ""};
        double worst = 0.0;
        for (int i = 0; i < opt.draws; ++i) {
            const double hb = uniform(0.5, 2.0);
            const NCParams nc{uniform(0.0, 0.9 * hb), uniform(0.0, 0.9 * hb), hb};
            const SystemConfig sys{uniform(0.5, 2.0), uniform(0.5, 2.0), 1.0};
            const double wb = uniform(-6.0, 6.0);
            const auto c = effective_coefficients(sw_constants(nc), sys, wb, nc);
            const auto h = oracle::build_quadratic(c, wb, c.gamma);
            if (!h.positive_definite()) {
                e.passed = false;
                e.detail = "mapped Hamiltonian not positive definite at omega_b="
                           + format_double(wb);
                break;
            }
            const auto [hi, lo] = oracle::symplectic_frequencies(h);
            const double split = wb / 2.0 + c.gamma;
            const double sg = compute_sigma(nc);
            const double radial =
                std::sqrt(sg * sg * sys.omega * sys.omega + split * split);
            const double want_hi = radial + std::abs(split);
            const double want_lo = radial - std::abs(split);
            const double d =
                std::max(detail::rel_diff(hi, want_hi), detail::rel_diff(lo, want_lo));
            worst = std::max(worst, d);
            if (d > 1e-9) {
                e.passed = false;
                e.detail = "frequency mismatch " + format_double(d) + " at theta="
                           + format_double(nc.theta) + " eta=" + format_double(nc.eta)
                           + " hbar=" + format_double(hb) + " m=" + format_double(sys.mass)
                           + " omega=" + format_double(sys.omega) + " omega_b="
                           + format_double(wb);
                break;
            }
        }
        if (e.passed) e.detail = "max relative mismatch " + format_double(worst);
        report.entries.push_back(e);
    }

    // 4. Stroke-boundary scales: closed forms vs bracketed root solves.
    {
        CheckEntry e{"stroke_scale_roots", true, ""};
        double worst = 0.0;
        for (const auto& p : detail::check_grid()) {
            for (double alpha : {1.2, 1.5, 2.0, 2.5, 3.0}) {
                const auto spec = detail::spec_at(p, alpha);
                double a1_closed = 0.0;
                try {
                    a1_closed = isoenergetic::alpha1_closed(spec)
                                * (1.0 + opt.alpha1_perturbation);
                } catch (const DomainError&) {
                    continue; // stroke does not exist there; nothing to compare
                }
                const auto f1 = [&](double x) {
                    return isoenergetic::theta_function(1.0, spec)
                           - 3.0 * isoenergetic::theta_function(x, spec);
                };
                const double a1_root = oracle::root_solve(f1, 1.0, 8.0, opt.settings);
                const double x2 = alpha * a1_closed;
                const double a3_closed = isoenergetic::alpha3_closed(spec, x2);
                const auto f3 = [&](double y) {
                    return 3.0 * isoenergetic::theta_function(x2, spec)
                           - isoenergetic::theta_function(x2 * y, spec);
                };
                const double a3_root = oracle::root_solve(f3, 1e-3, 1.0, opt.settings);
                const double d = std::max(detail::rel_diff(a1_closed, a1_root),
                                          detail::rel_diff(a3_closed, a3_root));
                worst = std::max(worst, d);
                if (d > 1e-9) {
                    e.passed = false;
                    e.detail = "scale mismatch " + format_double(d) + " at n_phi0="
                               + format_double(p.n_phi0) + " theta_eta="
                               + format_double(p.theta_eta) + " gamma="
                               + format_double(p.gamma) + " alpha=" + format_double(alpha)
                               + " orientation=" + orientation_name(p.orientation);
                    break;
                }
            }
            if (!e.passed) break;
        }
        if (e.passed) e.detail = "max relative mismatch " + format_double(worst);
        report.entries.push_back(e);
    }

    // 5. Constant-energy stroke heats: closed log form vs direct quadrature of
    // E dP, plus the first law (Q = -W when the total energy is pinned).
    // Strokes whose populations would leave [0,1] mid-path (possible for a
    // reversed field crossing its cancellation point) are not realizable as
    // quasi-static processes, so the integral oracle skips them.
    {
        CheckEntry e{"stroke_heat_quadrature", true, ""};
        double worst_q = 0.0;
        double worst_fl = 0.0;
        int verified = 0;
        int infeasible = 0;
        for (const auto& p : detail::check_grid()) {
            if (p.theta_eta == 0.1 || p.gamma == 0.1) continue; // corners cover it
            const auto spec = detail::spec_at(p, 2.0);
            double a1 = 0.0;
            try {
                a1 = isoenergetic::alpha1_closed(spec);
            } catch (const DomainError&) {
                continue;
            }
            const double a3 = isoenergetic::alpha3_closed(spec, spec.alpha * a1);
            const auto field1 = spec.field1();
            const double b1 = field1.omega_b;

            struct Stroke {
                EffectiveField from;
                double to_wb;
                double p00_start;
            };
            const double x2 = spec.alpha * a1;
            const Stroke strokes[2] = {
                {field1, b1 / (a1 * a1), 1.0},
                {field1.with_omega_b(b1 / (x2 * x2)), b1 / ((x2 * a3) * (x2 * a3)), 0.0},
            };
            for (const Stroke& st : strokes) {
                const auto e00 = [&](double wb) {
                    return eigenenergy(QuantumLevel{0, 0}, st.from.with_omega_b(wb));
                };
                const auto e10 = [&](double wb) {
                    return eigenenergy(QuantumLevel{1, 0}, st.from.with_omega_b(wb));
                };
                const auto p00 = [&](double wb) {
                    return isoenergetic::ground_probability(st.from, st.p00_start, wb);
                };
                const double q_closed =
                    isoenergetic::heat_isoenergetic(st.from, st.to_wb, st.p00_start);
                double dq = 0.0;
                double dfl = 0.0;
                try {
                    const double q_quad = oracle::heat_quadrature(
                        e00, e10, p00, st.from.omega_b, st.to_wb, 1000, opt.settings);
                    dq = detail::rel_diff(q_closed, q_quad);

                    // trapezoid for W = integral of P dE over the same stroke
                    const int n = 20000;
                    double w_quad = 0.0;
                    double x_prev = st.from.omega_b;
                    double p_prev = p00(x_prev);
                    double e0_prev = e00(x_prev), e1_prev = e10(x_prev);
                    for (int i = 1; i <= n; ++i) {
                        const double x = st.from.omega_b
                                         + (st.to_wb - st.from.omega_b) * static_cast<double>(i)
                                               / static_cast<double>(n);
                        const double pc = p00(x), e0 = e00(x), e1 = e10(x);
                        w_quad += 0.5 * (p_prev + pc) * (e0 - e0_prev)
                                  + 0.5 * ((1.0 - p_prev) + (1.0 - pc)) * (e1 - e1_prev);
                        x_prev = x;
                        p_prev = pc;
                        e0_prev = e0;
                        e1_prev = e1;
                    }
                    dfl = std::abs(q_quad + w_quad) / std::max(1.0, std::abs(q_quad));
                } catch (const DomainError&) {
                    ++infeasible; // populations leave [0,1] mid-stroke
                    continue;
                }
                ++verified;
                worst_q = std::max(worst_q, dq);
                worst_fl = std::max(worst_fl, dfl);
                if (dq > 1e-6 || dfl > 1e-6) {
                    e.passed = false;
                    e.detail = "heat mismatch " + format_double(dq) + ", first-law residual "
                               + format_double(dfl) + " at n_phi0=" + format_double(p.n_phi0)
                               + " theta_eta=" + format_double(p.theta_eta) + " gamma="
                               + format_double(p.gamma) + " orientation="
                               + orientation_name(p.orientation);
                    break;
                }
            }
            if (!e.passed) break;
        }
        if (e.passed)
            e.detail = "max heat mismatch " + format_double(worst_q) + ", first-law residual "
                       + format_double(worst_fl) + " over " + std::to_string(verified)
                       + " strokes (" + std::to_string(infeasible) + " infeasible skipped)";
        report.entries.push_back(e);
    }

    // 6. Strong-field limit of the two-stroke-pair cycle efficiency.
    {
        CheckEntry e{"asymptotic_efficiency", true, ""};
        double worst = 0.0;
        for (double te : {0.0, 0.5}) {
            for (double g : {0.0, 0.5}) {
                for (auto o : {Orientation::positive, Orientation::reversed}) {
                    const auto spec = detail::spec_at({1e6, te, g, o}, 2.0);
                    const double got =
                        isoenergetic::efficiency_isoenergetic(spec).efficiency;
                    const double want = isoenergetic::asymptotic_efficiency(2.0);
                    const double d = std::abs(got - want);
                    worst = std::max(worst, d);
                    if (d > 1e-3) {
                        e.passed = false;
                        e.detail = "limit deviation " + format_double(d) + " at theta_eta="
                                   + format_double(te) + " gamma=" + format_double(g)
                                   + " orientation=" + orientation_name(o);
                    }
                }
            }
        }
        if (e.passed) e.detail = "max deviation from 1 - 1/alpha^2: " + format_double(worst);
        report.entries.push_back(e);
    }

    // 7. Carnot efficiency must not move across the deformation grid.
    {
        CheckEntry e{"carnot_invariance", true, ""};
        std::vector<NCParams> grid;
        for (double te : {0.0, 0.1, 0.5})
            grid.push_back({std::sqrt(te), std::sqrt(te), 1.0});
        const auto rep = carnot::nc_invariance_scan({1.0, 2.0}, grid);
        if (rep.spread() != 0.0) {
            e.passed = false;
            e.detail = "efficiency spread " + format_double(rep.spread());
        } else {
            e.detail = "efficiency spread 0 over " + std::to_string(grid.size())
                       + " deformation points";
        }
        report.entries.push_back(e);
    }

    return report;
}

} // namespace ncqe::sweep
