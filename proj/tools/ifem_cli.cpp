// Command-line driver: marches the ODE schemes, reproduces the convergence
// and error-series experiments, runs invariance audits, and drives the
// semi-discrete Burgers solvers from a JSON config.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ifem/errors.hpp"
#include "ifem/experiments.hpp"

namespace {

std::pair<double, double> parse_interval(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos)
        throw ifem::config_error("--interval expects 'a,b'");
    try {
        const double a = std::stod(text.substr(0, comma));
        const double b = std::stod(text.substr(comma + 1));
        return {a, b};
    } catch (const std::exception&) {
        throw ifem::config_error("--interval expects numeric 'a,b', got '" + text + "'");
    }
}

std::vector<int> parse_n_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw ifem::config_error("--n-list expects comma-separated integers, got '" + text + "'");
        }
    }
    if (out.size() < 3)
        throw ifem::config_error("--n-list needs at least 3 resolutions");
    return out;
}

struct IcDefaults {
    double u0, ux0;
};

IcDefaults default_ic(ifem::ProblemId problem) {
    switch (problem) {
    case ifem::ProblemId::painleve_ode: return {1.0, 1.0};
    case ifem::ProblemId::linear_ode: return {1.0, 5.0}; // u = 3 e^x - 2 e^{-x}
    default: return {1.0, 0.0};
    }
}

int run(int argc, char** argv) {
    CLI::App app{"Symmetry-preserving finite element schemes for second-order ODEs "
                 "and semi-discrete Burgers' equation"};
    app.require_subcommand(1);

    // solve
    auto* solve = app.add_subcommand("solve", "March one scheme across one mesh and write x,u CSV");
    std::string solve_problem, solve_scheme, solve_interval = "0,1", solve_out, solve_startup;
    int solve_n = 100;
    double solve_u0 = 1.0, solve_ux0 = 0.0;
    bool solve_ic_given = false;
    solve->add_option("--problem", solve_problem, "exp|cubic|painleve|linear")->required();
    solve->add_option("--scheme", solve_scheme, "scheme id")->required();
    solve->add_option("--n", solve_n, "number of elements")->required();
    solve->add_option("--interval", solve_interval, "a,b (default 0,1)");
    solve->add_option("--u0", solve_u0, "u(a)")->each([&](const std::string&) { solve_ic_given = true; });
    solve->add_option("--ux0", solve_ux0, "u_x(a)")->each([&](const std::string&) { solve_ic_given = true; });
    solve->add_option("--out", solve_out, "output CSV path")->required();
    solve->add_option("--startup", solve_startup, "forward-difference|taylor2|exact-seed");

    // converge
    auto* converge = app.add_subcommand("converge", "Convergence study over a resolution ladder");
    std::string conv_problem, conv_scheme, conv_nlist, conv_json, conv_interval = "0,1", conv_startup;
    double conv_u0 = 0, conv_ux0 = 0;
    bool conv_ic_given = false;
    converge->add_option("--problem", conv_problem)->required();
    converge->add_option("--scheme", conv_scheme)->required();
    converge->add_option("--n-list", conv_nlist, "comma-separated resolutions")->required();
    converge->add_option("--json", conv_json, "optional JSON summary path");
    converge->add_option("--interval", conv_interval, "a,b (default 0,1)");
    converge->add_option("--u0", conv_u0)->each([&](const std::string&) { conv_ic_given = true; });
    converge->add_option("--ux0", conv_ux0)->each([&](const std::string&) { conv_ic_given = true; });
    converge->add_option("--startup", conv_startup, "override the experiment's start-up rule");

    // invariance
    auto* invariance = app.add_subcommand("invariance", "Zero-set equivariance audit");
    std::string inv_problem, inv_scheme;
    std::uint64_t inv_seed = 1;
    int inv_samples = 100;
    invariance->add_option("--problem", inv_problem)->required();
    invariance->add_option("--scheme", inv_scheme)->required();
    invariance->add_option("--seed", inv_seed)->required();
    invariance->add_option("--samples", inv_samples)->required();

    // painleve-series
    auto* series = app.add_subcommand("painleve-series",
                                      "Per-node error series of both Painleve schemes "
                                      "(dx=0.01 on [0,1], u(0)=1, u_x(0)=1)");
    std::string series_out;
    series->add_option("--out", series_out, "output CSV path")->required();

    // burgers
    auto* burgers = app.add_subcommand("burgers", "Semi-discrete Burgers run from a JSON config");
    std::string burgers_config, burgers_prefix;
    burgers->add_option("--config", burgers_config, "JSON config path")->required();
    burgers->add_option("--out-prefix", burgers_prefix, "output path prefix")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (solve->parsed()) {
        const ifem::ProblemId problem = ifem::problem_from_string(solve_problem);
        const ifem::SchemeId scheme = ifem::scheme_from_string(solve_scheme);
        const auto [a, b] = parse_interval(solve_interval);
        if (!solve_ic_given) {
            const IcDefaults ic = default_ic(problem);
            solve_u0 = ic.u0;
            solve_ux0 = ic.ux0;
        }
        const ifem::Mesh mesh = ifem::build_uniform_mesh(a, b, solve_n);
        const ifem::StartupRule startup = solve_startup.empty()
                                              ? ifem::StartupRule::taylor2
                                              : ifem::startup_from_string(solve_startup);
        const std::vector<double> u =
            ifem::solve_ode(problem, scheme, mesh, solve_u0, solve_ux0, startup);
        const ifem::OdeExactSolution exact =
            ifem::exact_solution_for(problem, solve_u0, solve_ux0);
        std::vector<double> xs(mesh.nodes().begin(), mesh.nodes().end());
        std::vector<double> ref(xs.size()), err(xs.size());
        for (std::size_t k = 0; k < xs.size(); ++k) {
            ref[k] = exact.eval(xs[k]);
            err[k] = std::abs(u[k] - ref[k]);
        }
        ifem::write_csv(solve_out, "x,u,u_exact,error", {xs, u, ref, err});
        std::printf("wrote %s (%zu nodes, rel linf error %.3e)\n", solve_out.c_str(), xs.size(),
                    ifem::relative_linf_error(u, ref));
        return 0;
    }

    if (converge->parsed()) {
        const ifem::ProblemId problem = ifem::problem_from_string(conv_problem);
        const ifem::SchemeId scheme = ifem::scheme_from_string(conv_scheme);
        const std::vector<int> n_list = parse_n_list(conv_nlist);
        const auto [a, b] = parse_interval(conv_interval);
        if (!conv_ic_given) {
            const IcDefaults ic = default_ic(problem);
            conv_u0 = ic.u0;
            conv_ux0 = ic.ux0;
        }
        std::optional<ifem::StartupRule> startup;
        if (!conv_startup.empty()) startup = ifem::startup_from_string(conv_startup);
        const ifem::ConvergenceTable table =
            ifem::run_convergence(problem, scheme, n_list, conv_u0, conv_ux0, a, b, startup);
        std::printf("# problem=%s scheme=%s interval=[%g,%g] u0=%g ux0=%g\n",
                    conv_problem.c_str(), conv_scheme.c_str(), a, b, conv_u0, conv_ux0);
        std::printf("%8s %14s %14s\n", "n", "h", "rel_linf_err");
        for (const auto& row : table.rows)
            std::printf("%8d %14.6e %14.6e\n", row.n_elements, row.h, row.rel_linf_error);
        std::printf("fitted order: %.4f\n", table.fitted_order);
        if (!conv_json.empty()) {
            std::ofstream out(conv_json, std::ios::binary);
            if (!out) throw ifem::config_error("cannot open '" + conv_json + "'");
            out << "{\n  \"problem\": \"" << conv_problem << "\",\n  \"scheme\": \""
                << conv_scheme << "\",\n  \"rows\": [\n";
            for (std::size_t i = 0; i < table.rows.size(); ++i) {
                char buf[160];
                std::snprintf(buf, sizeof(buf),
                              "    {\"n\": %d, \"h\": %.17g, \"rel_linf_error\": %.17g}%s\n",
                              table.rows[i].n_elements, table.rows[i].h,
                              table.rows[i].rel_linf_error,
                              i + 1 < table.rows.size() ? "," : "");
                out << buf;
            }
            char tail[64];
            std::snprintf(tail, sizeof(tail), "  ],\n  \"fitted_order\": %.17g\n}\n",
                          table.fitted_order);
            out << tail;
        }
        return 0;
    }

    if (invariance->parsed()) {
        const ifem::ProblemId problem = ifem::problem_from_string(inv_problem);
        if (problem == ifem::ProblemId::burgers) {
            const ifem::BurgersInvarianceReport report =
                ifem::run_burgers_invariance_audit(inv_seed, inv_samples);
            std::printf("burgers assembler audit (%d samples, seed %llu)\n", inv_samples,
                        static_cast<unsigned long long>(inv_seed));
            std::printf("  lagrangian equivariance drift: %.3e\n", report.lagrangian_drift);
            std::printf("  r-adaptive equivariance drift: %.3e\n", report.radaptive_drift);
            std::printf("  fixed-mesh galerkin boost witness drift: %.3e %s\n",
                        report.galerkin_witness_drift,
                        report.galerkin_witness_drift > 1e-6 ? "(witness found)" : "(no witness)");
            return 0;
        }
        const ifem::SchemeId scheme = ifem::scheme_from_string(inv_scheme);
        const ifem::InvarianceReport report =
            ifem::run_invariance_audit(problem, scheme, inv_seed, inv_samples);
        std::printf("%s / %s: %d requested, %d valid zero-set samples\n", inv_problem.c_str(),
                    inv_scheme.c_str(), report.requested_samples, report.valid_samples);
        if (report.valid_samples < report.requested_samples)
            std::printf("  note: %d samples were inconclusive (generator could not place them)\n",
                        report.requested_samples - report.valid_samples);
        std::printf("  max zero-set residual drift: %.3e\n", report.max_drift);
        if (report.expected_invariant) {
            std::printf("  scheme class: invariant (drift should be <= 1e-9): %s\n",
                        report.max_drift <= 1e-9 ? "ok" : "VIOLATED");
        } else if (report.witness) {
            const auto& w = *report.witness;
            std::printf("  non-invariance witness: drift %.3e at jet x=(%.6g,%.6g,%.6g) "
                        "u=(%.6g,%.6g,%.6g)\n",
                        w.drift, w.jet.x_prev, w.jet.x_mid, w.jet.x_next, w.jet.u_prev,
                        w.jet.u_mid, w.jet.u_next);
        } else {
            std::printf("  no witness above 1e-6 found (inconclusive)\n");
        }
        return 0;
    }

    if (series->parsed()) {
        const ifem::PainleveSeries s = ifem::run_painleve_error_series();
        ifem::write_csv(series_out, "x,err_invariant,err_noninvariant",
                        {s.x, s.err_invariant, s.err_noninvariant});
        double max_inv = 0, max_noninv = 0;
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            max_inv = std::max(max_inv, s.err_invariant[i]);
            max_noninv = std::max(max_noninv, s.err_noninvariant[i]);
        }
        std::printf("wrote %s; max rel error invariant %.3e, non-invariant %.3e\n",
                    series_out.c_str(), max_inv, max_noninv);
        return 0;
    }

    if (burgers->parsed()) {
        std::ifstream in(burgers_config);
        if (!in)
            throw ifem::config_error("cannot open config '" + burgers_config + "'");
        std::stringstream buffer;
        buffer << in.rdbuf();
        const ifem::BurgersConfig cfg = ifem::parse_burgers_config(buffer.str());
        const ifem::BurgersSummary summary = ifem::run_burgers(cfg, burgers_prefix);
        std::printf("wrote %s_trajectory.csv and %s_summary.json (%d snapshots, t=%g)\n",
                    burgers_prefix.c_str(), burgers_prefix.c_str(), summary.snapshots,
                    summary.final_time);
        if (summary.interior_linf_error)
            std::printf("  interior linf error vs reference: %.6e\n", *summary.interior_linf_error);
        if (summary.equivariance_drift)
            std::printf("  equivariance drift: %.6e\n", *summary.equivariance_drift);
        return 0;
    }

    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ifem::config_error& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 2;
    } catch (const ifem::numerical_error& e) {
        std::fprintf(stderr, "numerical failure: %s\n", e.what());
        return 3;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    }
}
