// Command-line front end: grid sweeps, figure-grid reproduction, single-point
// evaluation, and the oracle self-check battery.
//
// Exit codes: 0 success, 1 parse/validation failure, 2 self-check failure,
// 3 I/O failure.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ncqe/ncqe.hpp"

namespace {

using namespace ncqe;

std::string kv(const std::string& key, const std::string& value) {
    return key + "=" + value + "\n";
}

std::string kv(const std::string& key, double value) {
    return kv(key, sweep::format_double(value));
}

int run_sweep_cmd(const std::string& config_path, const std::string& out_override, int jobs) {
    sweep::SweepConfig cfg = sweep::load_config(config_path);
    if (!out_override.empty()) cfg.out = out_override;
    const auto rows = sweep::run_sweep(cfg, jobs);
    const std::string csv = sweep::emit_csv(cfg, rows);
    if (cfg.out.empty() || cfg.out == "-") {
        std::cout << csv;
        return 0;
    }
    sweep::write_csv(cfg.out, csv);
    std::cerr << "wrote " << rows.size() << " rows to " << cfg.out << "\n";
    return 0;
}

sweep::SweepConfig figure_grid(sweep::CycleKind cycle, Orientation orientation) {
    sweep::SweepConfig cfg;
    cfg.cycle = cycle;
    cfg.orientation = orientation;
    cfg.n_phi0 = {4.0, 10.0, 100.0};
    cfg.theta_eta = {0.0, 0.1, 0.5};
    cfg.gamma = {0.1, 0.5};
    return cfg; // alpha grid keeps its [1,3] x 200 default
}

void write_plot_script(const std::string& dir, int id,
                       const std::vector<std::string>& csv_names,
                       const sweep::SweepConfig& cfg) {
    std::string gp = "# gnuplot script, generated alongside the CSV\n"
                     "set datafile separator ','\n"
                     "set xlabel 'alpha'\n"
                     "set ylabel 'efficiency'\n"
                     "set key outside font ',8'\n";
    const long block = cfg.alpha_count;
    for (const auto& name : csv_names) {
        gp += "plot ";
        long curve = 0;
        bool first = true;
        for (double n : cfg.n_phi0)
            for (double te : cfg.theta_eta)
                for (double g : cfg.gamma) {
                    if (!first) gp += ", \\\n     ";
                    first = false;
                    const long a = 1 + curve * block;
                    const long b = a + block - 1;
                    gp += "'" + name + "' every ::" + std::to_string(a)
                          + "::" + std::to_string(b)
                          + " using 6:7 with lines title 'N=" + sweep::format_double(n)
                          + " te=" + sweep::format_double(te)
                          + " g=" + sweep::format_double(g) + "'";
                    ++curve;
                }
        gp += "\npause -1\n";
    }
    sweep::write_csv(dir + "/figure" + std::to_string(id) + ".gp", gp);
}

int run_figure_cmd(int id, const std::string& dir, int jobs, bool plot_script) {
    struct Panel {
        sweep::CycleKind cycle;
        Orientation orientation;
        std::string file;
    };
    std::vector<Panel> panels;
    if (id == 2) {
        panels.push_back({sweep::CycleKind::isomagnetic, Orientation::positive,
                          "figure2_isomagnetic.csv"});
    } else if (id == 3) {
        panels.push_back({sweep::CycleKind::isoenergetic, Orientation::positive,
                          "figure3_isoenergetic.csv"});
    } else {
        panels.push_back({sweep::CycleKind::isomagnetic, Orientation::reversed,
                          "figure4_isomagnetic.csv"});
        panels.push_back({sweep::CycleKind::isoenergetic, Orientation::reversed,
                          "figure4_isoenergetic.csv"});
    }
    std::vector<std::string> names;
    sweep::SweepConfig last;
    for (const Panel& p : panels) {
        const auto cfg = figure_grid(p.cycle, p.orientation);
        const auto rows = sweep::run_sweep(cfg, jobs);
        sweep::write_csv(dir + "/" + p.file, sweep::emit_csv(cfg, rows));
        std::cerr << "wrote " << rows.size() << " rows to " << dir << "/" << p.file << "\n";
        names.push_back(p.file);
        last = cfg;
    }
    if (plot_script) write_plot_script(dir, id, names, last);
    return 0;
}

int run_point_cmd(const std::string& cycle_s, const std::string& orientation_s, double n_phi0,
                  double theta_eta, double gamma, double alpha, double hbar, double omega) {
    const Orientation orientation =
        orientation_s == "reversed" ? Orientation::reversed : Orientation::positive;
    std::string out;
    out += kv("cycle", cycle_s);
    out += kv("orientation", orientation_s);
    out += kv("n_phi0", n_phi0);
    out += kv("theta_eta", theta_eta);
    out += kv("gamma", gamma);
    out += kv("alpha", alpha);
    try {
        const double split = std::sqrt(theta_eta);
        const double sigma = compute_sigma(NCParams{split, split, hbar});
        out += kv("sigma", sigma);
        CycleResult r;
        if (cycle_s == "isomagnetic") {
            const auto field = EffectiveField::from_flux(n_phi0, gamma, omega, sigma, orientation);
            r = isomagnetic::efficiency_isomagnetic({field, alpha, hbar});
        } else {
            r = isoenergetic::efficiency_isoenergetic(
                {n_phi0, gamma, sigma, omega, alpha, orientation, hbar});
            out += kv("alpha1", r.alpha1);
            out += kv("alpha3", r.alpha3);
        }
        out += kv("efficiency", r.efficiency);
        out += kv("q_in", r.q_in);
        out += kv("q_out", r.q_out);
        out += kv("work", r.work);
        out += kv("flux_sq_hot", r.flux_sq_hot);
        out += kv("flux_sq_cold", r.flux_sq_cold);
        out += kv("omega_b1", r.omega_b1);
        if (cycle_s == "isoenergetic") out += kv("omega_b2", r.omega_b2);
        out += kv("omega_b3", r.omega_b3);
        if (cycle_s == "isoenergetic") out += kv("omega_b4", r.omega_b4);
        out += kv("degenerate", r.degenerate ? "1" : "0");
        out += kv("status", "ok");
    } catch (const DomainError& e) {
        out += kv("status", std::string("domain_error:") + e.code());
    }
    std::cout << out;
    return 0;
}

int run_check_cmd(int draws, std::uint64_t seed, double perturb) {
    sweep::SelfCheckOptions opt;
    opt.draws = draws;
    opt.seed = seed;
    opt.alpha1_perturbation = perturb;
    if (const char* tol = std::getenv("NCQ_TOL")) {
        try {
            const double v = std::stod(tol);
            if (v <= 0.0) throw std::invalid_argument("non-positive");
            opt.settings.root_tol = v;
        } catch (const std::exception&) {
            std::cerr << "error: NCQ_TOL must be a positive number, got '" << tol << "'\n";
            return 1;
        }
    }
    const auto report = sweep::self_check(opt);
    for (const auto& e : report.entries)
        std::cout << (e.passed ? "[PASS] " : "[FAIL] ") << e.name << " — " << e.detail << "\n";
    if (!report.all_passed()) {
        std::cout << "self-check FAILED\n";
        return 2;
    }
    std::cout << "all checks passed\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"noncommutative phase-space quantum heat engine toolkit"};
    app.require_subcommand(1);

    auto* sweep_cmd = app.add_subcommand("sweep", "evaluate an efficiency grid from a config file");
    std::string config_path;
    std::string out_override;
    int sweep_jobs = 1;
    sweep_cmd->add_option("--config", config_path, "key = value config file")->required();
    sweep_cmd->add_option("--out", out_override, "output CSV path; '-' for stdout");
    sweep_cmd->add_option("--jobs", sweep_jobs, "worker threads")->check(CLI::PositiveNumber);

    auto* figure_cmd = app.add_subcommand("figure", "emit one of the predefined efficiency grids");
    int figure_id = 0;
    std::string figure_dir = ".";
    int figure_jobs = 1;
    bool plot_script = false;
    figure_cmd->add_option("--id", figure_id, "figure number")
        ->required()
        ->check(CLI::IsMember({2, 3, 4}));
    figure_cmd->add_option("--out", figure_dir, "output directory (default '.')");
    figure_cmd->add_option("--jobs", figure_jobs, "worker threads")->check(CLI::PositiveNumber);
    figure_cmd->add_flag("--plot-script", plot_script, "also emit a gnuplot script");

    auto* point_cmd = app.add_subcommand("point", "evaluate one cycle at explicit parameters");
    std::string cycle_s;
    std::string orientation_s = "positive";
    double n_phi0 = 0.0, theta_eta = 0.0, gamma = 0.0, alpha = 2.0, hbar = 1.0, omega = 1.0;
    point_cmd->add_option("--cycle", cycle_s, "cycle kind")
        ->required()
        ->check(CLI::IsMember({"isomagnetic", "isoenergetic"}));
    point_cmd->add_option("--orientation", orientation_s, "field orientation")
        ->check(CLI::IsMember({"positive", "reversed"}));
    point_cmd->add_option("--n-phi0", n_phi0, "flux quanta at the hot corner")->required();
    point_cmd->add_option("--theta-eta", theta_eta, "deformation product theta*eta");
    point_cmd->add_option("--gamma", gamma, "frequency-shift knob");
    point_cmd->add_option("--alpha", alpha, "expansion coefficient");
    point_cmd->add_option("--hbar", hbar, "hbar override");
    point_cmd->add_option("--omega", omega, "trap frequency override");

    auto* check_cmd = app.add_subcommand("check", "run the oracle self-check battery");
    int draws = 1000;
    std::uint64_t seed = 0x5eedULL;
    double perturb = 0.0;
    check_cmd->add_option("--draws", draws, "random draws per statistical check")
        ->check(CLI::PositiveNumber);
    check_cmd->add_option("--seed", seed, "random seed");
    check_cmd->add_option("--perturb-alpha1", perturb,
                          "tamper knob: offset the closed-form scale (must trip the check)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (sweep_cmd->parsed()) return run_sweep_cmd(config_path, out_override, sweep_jobs);
        if (figure_cmd->parsed())
            return run_figure_cmd(figure_id, figure_dir, figure_jobs, plot_script);
        if (point_cmd->parsed())
            return run_point_cmd(cycle_s, orientation_s, n_phi0, theta_eta, gamma, alpha, hbar,
                                 omega);
        if (check_cmd->parsed()) return run_check_cmd(draws, seed, perturb);
    } catch (const ncqe::IoError& e) {
        std::cerr << "I/O error: " << e.what() << "\n";
        return 3;
    } catch (const ncqe::ParseError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
