// Command-line front end: evolve / consistency / stability / convergence /
// end-to-end / walk-info. Parameters come from flags or a JSON config file
// (flags win). Outputs are deterministic for a fixed config and seed.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>
#include <fstream>
#include <iostream>
#include <random>

#include "dirac/analysis.hpp"
#include "dirac/errors.hpp"
#include "dirac/io.hpp"

using nlohmann::json;
using namespace dirac;

namespace {

struct ExperimentConfig {
    std::string command;
    int n = 1;
    double m = 1.0;
    double s = 0.0;
    double x0 = 1.0;
    std::vector<int> l_list = {8, 16, 32, 64};
    int grid_points = 0;  // 0: derive from rho and l
    int rho = 4;
    int fine_ratio = 8;
    double eps = 0.0;  // 0: derive from x0 / l
    int steps = 1000;
    std::uint64_t seed = 1;

    std::string state = "gaussian";  // gaussian | plane-wave | file
    double width = 0.0;              // 0: L/8
    std::vector<double> center;     // empty: L/2 per axis
    std::vector<double> carrier;    // empty: zeros
    std::vector<double> spinor;     // interleaved re,im; empty: basis state 0
    std::vector<int> mode;          // plane-wave mode numbers
    std::string input;              // field file for state = file

    std::string csv_path;
    std::string json_path;
    std::string output;

    json canonical() const {
        return json{{"command", command}, {"n", n},       {"m", m},
                    {"s", s},             {"x0", x0},     {"l", l_list},
                    {"N", grid_points},   {"rho", rho},   {"fine_ratio", fine_ratio},
                    {"eps", eps},         {"steps", steps}, {"seed", seed},
                    {"state", state},     {"width", width}, {"center", center},
                    {"carrier", carrier}, {"spinor", spinor}, {"mode", mode},
                    {"input", input}};
    }
};

int spinor_dim_for(int n) { return n == 3 ? 4 : 2; }

Eigen::VectorXcd parse_spinor(const std::vector<double>& raw, int d) {
    if (raw.empty()) {
        Eigen::VectorXcd v = Eigen::VectorXcd::Zero(d);
        v(0) = 1.0;
        return v;
    }
    if (static_cast<int>(raw.size()) != 2 * d)
        throw std::invalid_argument("spinor: expected " + std::to_string(2 * d) +
                                    " interleaved re,im values");
    Eigen::VectorXcd v(d);
    for (int i = 0; i < d; ++i) v(i) = Complex(raw[2 * i], raw[2 * i + 1]);
    if (v.norm() == 0.0) throw std::invalid_argument("spinor: zero vector");
    return v;
}

LatticeField initial_state(const ExperimentConfig& cfg, const GridSpec& grid) {
    const int d = spinor_dim_for(grid.dim);
    if (cfg.state == "file") {
        if (cfg.input.empty()) throw std::invalid_argument("state=file requires --input");
        LatticeField f = load_field(cfg.input);
        if (!(f.grid == grid))
            throw std::invalid_argument("input field grid does not match the requested grid");
        return f;
    }
    if (cfg.state == "plane-wave") {
        std::vector<int> mode = cfg.mode;
        if (mode.empty()) mode.assign(static_cast<std::size_t>(grid.dim), 1);
        if (static_cast<int>(mode.size()) != grid.dim)
            throw std::invalid_argument("mode: expected one integer per axis");
        return plane_wave_state(grid, mode, parse_spinor(cfg.spinor, d));
    }
    if (cfg.state == "gaussian") {
        const double L = grid.period();
        const double width = cfg.width > 0.0 ? cfg.width : L / 8.0;
        Eigen::VectorXd center(grid.dim), carrier(grid.dim);
        for (int j = 0; j < grid.dim; ++j) {
            center(j) = j < static_cast<int>(cfg.center.size())
                            ? cfg.center[static_cast<std::size_t>(j)]
                            : L / 2.0;
            carrier(j) = j < static_cast<int>(cfg.carrier.size())
                             ? cfg.carrier[static_cast<std::size_t>(j)]
                             : 0.0;
        }
        return gaussian_state(grid, width, center, carrier, parse_spinor(cfg.spinor, d));
    }
    throw std::invalid_argument("unknown state kind: " + cfg.state);
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path);
    out << text;
}

void emit_report(const ExperimentConfig& cfg, const ConvergenceReport& report,
                 const std::string& hash) {
    if (!cfg.csv_path.empty()) write_text(cfg.csv_path, report_to_csv(report, hash));
    if (!cfg.json_path.empty()) {
        json doc = report_to_json(report);
        doc["config_hash"] = hash;
        doc["config"] = cfg.canonical();
        write_text(cfg.json_path, doc.dump(2) + "\n");
    }
}

// A master state on the finest admissible grid; refinement-style experiments
// band-limit and resample it per row.
LatticeField master_state(const ExperimentConfig& cfg, int finest_points) {
    const double L = cfg.rho * cfg.x0;
    const GridSpec grid(cfg.n, finest_points, L / finest_points);
    return initial_state(cfg, grid);
}

int run_convergence(const ExperimentConfig& cfg, const std::string& hash) {
    std::vector<int> ls = cfg.l_list;
    std::sort(ls.begin(), ls.end());
    const LatticeField master = master_state(cfg, cfg.rho * ls.back());
    const auto report = convergence_study(master, cfg.m, cfg.x0, ls, cfg.s);
    emit_report(cfg, report, hash);
    if (std::isnan(report.fitted_order))
        std::cout << "convergence: exact scheme (errors at rounding level), order fit skipped\n";
    else
        std::cout << "convergence: order ~ " << format_double(report.fitted_order) << "\n";
    return 0;
}

int run_consistency(const ExperimentConfig& cfg, const std::string& hash) {
    std::vector<int> ls = cfg.l_list;
    std::sort(ls.begin(), ls.end());
    const LatticeField master = master_state(cfg, cfg.rho * ls.back());
    const LatticeField base = normalized(low_pass(master, cfg.rho * ls.front()));

    ConvergenceReport report{cfg.n,
                             cfg.m,
                             cfg.x0,
                             cfg.s,
                             consistency_constant(cfg.n),
                             kLowPassConstant,
                             {},
                             std::numeric_limits<double>::quiet_NaN()};
    double max_ratio = 0.0;
    for (int l : ls) {
        const double eps_l = cfg.x0 / l;
        const LatticeField phi = regrid(base, cfg.rho * l);
        const auto res = consistency_error(phi, cfg.m, eps_l, cfg.s);
        report.rows.push_back({l, eps_l, res.error, res.bound, true});
        max_ratio = std::max(max_ratio, res.error / res.bound);
    }
    bool degenerate = false;
    for (const auto& row : report.rows) degenerate |= row.error <= 1e-12;
    if (!degenerate && report.rows.size() >= 2) {
        std::vector<std::pair<double, double>> pts;
        for (const auto& row : report.rows) pts.emplace_back(row.eps, row.error);
        report.fitted_order = fit_order(pts);
    }
    emit_report(cfg, report, hash);
    std::cout << "consistency: max error/bound = " << format_double(max_ratio);
    if (!std::isnan(report.fitted_order))
        std::cout << ", single-step order ~ " << format_double(report.fitted_order);
    std::cout << "\n";
    return 0;
}

int run_stability(const ExperimentConfig& cfg, const std::string& hash) {
    const int points = cfg.grid_points > 0 ? cfg.grid_points : (cfg.n == 3 ? 16 : 64);
    const double eps = cfg.eps > 0.0 ? cfg.eps : cfg.x0 / cfg.l_list.front();
    const GridSpec grid(cfg.n, points, eps);

    std::mt19937_64 rng(cfg.seed);
    std::normal_distribution<double> dist(0.0, 1.0);
    LatticeField f(grid, spinor_dim_for(cfg.n));
    for (std::int64_t site = 0; site < grid.sites(); ++site)
        for (int c = 0; c < f.spinor_dim(); ++c)
            f.values(site, c) = Complex(dist(rng), dist(rng));
    f = normalized(f);

    double worst_single = 0.0;
    for (double s : {0.0, 1.0, 2.0})
        worst_single = std::max(worst_single, std::abs(stability_check(f, cfg.m, eps, s) - 1.0));

    const WalkOperator w = build_dirac_walk(cfg.n, cfg.m, eps);
    LatticeField cur = f;
    std::string csv = "# config_hash=" + hash + "\nstep,l2_drift\n";
    double drift = 0.0;
    for (int step = 1; step <= cfg.steps; ++step) {
        cur = apply_walk(w, cur);
        if ((step & (step - 1)) == 0 || step == cfg.steps) {
            drift = std::abs(l2_norm(cur) - 1.0);
            csv += std::to_string(step) + "," + format_double(drift) + "\n";
        }
    }
    if (!cfg.csv_path.empty()) write_text(cfg.csv_path, csv);
    std::cout << "stability: max |ratio-1| = " << format_double(worst_single)
              << " (s in {0,1,2}), drift after " << cfg.steps
              << " steps = " << format_double(drift) << "\n";
    return 0;
}

int run_end_to_end(const ExperimentConfig& cfg, const std::string& hash) {
    std::vector<int> ls = cfg.l_list;
    std::sort(ls.begin(), ls.end());
    const LatticeField master = master_state(cfg, cfg.rho * ls.back() * cfg.fine_ratio);

    ConvergenceReport report{cfg.n,
                             cfg.m,
                             cfg.x0,
                             cfg.s,
                             consistency_constant(cfg.n),
                             kLowPassConstant,
                             {},
                             std::numeric_limits<double>::quiet_NaN()};
    double max_ratio = 0.0, max_identity = 0.0;
    for (int l : ls) {
        // keep the fine/coarse ratio fixed by resampling the master per row
        const LatticeField fine = regrid(master, cfg.rho * l * cfg.fine_ratio);
        const auto res = end_to_end_error(fine, cfg.m, cfg.x0, l, cfg.s);
        report.rows.push_back({l, cfg.x0 / l, res.error, res.bound, true});
        max_ratio = std::max(max_ratio, res.error / res.bound);
        max_identity = std::max(max_identity, res.identity_residual);
    }
    emit_report(cfg, report, hash);
    std::cout << "end-to-end: max error/bound = " << format_double(max_ratio)
              << ", max identity residual = " << format_double(max_identity) << "\n";
    return 0;
}

int run_evolve(const ExperimentConfig& cfg, const std::string&) {
    const int l = cfg.l_list.front();
    const double eps = cfg.eps > 0.0 ? cfg.eps : cfg.x0 / l;
    const int points = cfg.grid_points > 0 ? cfg.grid_points : cfg.rho * l;
    const GridSpec grid(cfg.n, points, eps);
    const LatticeField phi = initial_state(cfg, grid);
    const WalkOperator w = build_dirac_walk(cfg.n, cfg.m, eps);
    const LatticeField out = apply_walk_steps(w, phi, l);
    if (!cfg.output.empty()) save_field(out, cfg.output);
    std::cout << "evolve: l=" << l << " eps=" << format_double(eps)
              << " norm_drift=" << format_double(std::abs(l2_norm(out) - l2_norm(phi))) << "\n";
    return 0;
}

int run_walk_info(const ExperimentConfig& cfg, const std::string& hash) {
    const double eps = cfg.eps > 0.0 ? cfg.eps : cfg.x0 / cfg.l_list.front();
    const WalkOperator w = build_dirac_walk(cfg.n, cfg.m, eps);
    json doc = describe_walk(w);
    doc["config_hash"] = hash;
    const std::string text = doc.dump(2) + "\n";
    if (!cfg.json_path.empty())
        write_text(cfg.json_path, text);
    else
        std::cout << text;
    std::cout << "walk-info: " << w.factors.size() << " factors, d=" << w.spinor_dim << "\n";
    return 0;
}

void apply_config_file(const std::string& path, ExperimentConfig& cfg, const CLI::App& cmd) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file " + path);
    json doc = json::parse(in);
    auto fill = [&](const char* flag, auto& target) {
        const CLI::Option* opt = cmd.get_option_no_throw(std::string("--") + flag);
        const bool given = opt != nullptr && opt->count() > 0;
        if (!given && doc.contains(flag)) doc.at(flag).get_to(target);
    };
    fill("n", cfg.n);
    fill("m", cfg.m);
    fill("s", cfg.s);
    fill("x0", cfg.x0);
    fill("l", cfg.l_list);
    fill("N", cfg.grid_points);
    fill("rho", cfg.rho);
    fill("fine-ratio", cfg.fine_ratio);
    fill("eps", cfg.eps);
    fill("steps", cfg.steps);
    fill("seed", cfg.seed);
    fill("state", cfg.state);
    fill("width", cfg.width);
    fill("center", cfg.center);
    fill("carrier", cfg.carrier);
    fill("spinor", cfg.spinor);
    fill("mode", cfg.mode);
    fill("input", cfg.input);
    fill("csv", cfg.csv_path);
    fill("json", cfg.json_path);
    fill("output", cfg.output);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Dirac quantum walk simulator and verification harness"};
    app.require_subcommand(1);

    ExperimentConfig cfg;
    std::string config_path;

    const std::vector<std::string> commands = {"evolve",      "consistency", "stability",
                                               "convergence", "end-to-end",  "walk-info"};
    std::vector<CLI::App*> subs;
    for (const auto& name : commands) {
        CLI::App* sub = app.add_subcommand(name);
        sub->add_option("--config", config_path, "JSON config file; flags override its values");
        sub->add_option("--n", cfg.n, "spatial dimension (1, 2 or 3)");
        sub->add_option("--m", cfg.m, "mass");
        sub->add_option("--s", cfg.s, "Sobolev index of the comparison norm");
        sub->add_option("--x0", cfg.x0, "total simulated time");
        sub->add_option("--l", cfg.l_list, "step counts (comma separated)")->delimiter(',');
        sub->add_option("--N", cfg.grid_points, "points per axis (default rho*l)");
        sub->add_option("--rho", cfg.rho, "period over x0 (L = rho*x0)");
        sub->add_option("--fine-ratio", cfg.fine_ratio, "fine grid refinement factor");
        sub->add_option("--eps", cfg.eps, "step size (default x0/l)");
        sub->add_option("--steps", cfg.steps, "iterated steps for stability");
        sub->add_option("--seed", cfg.seed, "seed for randomized suites");
        sub->add_option("--state", cfg.state, "initial state: gaussian | plane-wave | file");
        sub->add_option("--width", cfg.width, "gaussian width (default L/8)");
        sub->add_option("--center", cfg.center, "gaussian center per axis")->delimiter(',');
        sub->add_option("--carrier", cfg.carrier, "gaussian carrier momentum per axis")
            ->delimiter(',');
        sub->add_option("--spinor", cfg.spinor, "spinor as interleaved re,im")->delimiter(',');
        sub->add_option("--mode", cfg.mode, "plane-wave mode numbers")->delimiter(',');
        sub->add_option("--input", cfg.input, "input field file (state = file)");
        sub->add_option("--csv", cfg.csv_path, "CSV output path");
        sub->add_option("--json", cfg.json_path, "JSON output path");
        sub->add_option("--output", cfg.output, "output field file");
        subs.push_back(sub);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    CLI::App* active = nullptr;
    for (std::size_t i = 0; i < commands.size(); ++i)
        if (subs[i]->parsed()) {
            active = subs[i];
            cfg.command = commands[i];
        }

    try {
        if (!config_path.empty()) apply_config_file(config_path, cfg, *active);
        if (cfg.n < 1 || cfg.n > 3) throw std::invalid_argument("n must be 1, 2 or 3");
        if (cfg.m < 0.0) throw std::invalid_argument("m must be >= 0");
        if (cfg.s < 0.0) throw std::invalid_argument("s must be >= 0");
        if (cfg.l_list.empty()) throw std::invalid_argument("l must not be empty");
        for (int l : cfg.l_list)
            if (l < 1) throw std::invalid_argument("l entries must be >= 1");

        const std::string hash = fnv1a_hex(cfg.canonical().dump());
        if (cfg.command == "evolve") return run_evolve(cfg, hash);
        if (cfg.command == "consistency") return run_consistency(cfg, hash);
        if (cfg.command == "stability") return run_stability(cfg, hash);
        if (cfg.command == "convergence") return run_convergence(cfg, hash);
        if (cfg.command == "end-to-end") return run_end_to_end(cfg, hash);
        if (cfg.command == "walk-info") return run_walk_info(cfg, hash);
        std::cerr << "unknown command\n";
        return 1;
    } catch (const BoundViolation& e) {
        std::cerr << "bound violation: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
