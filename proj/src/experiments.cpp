#include "ifem/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <utility>

#include <nlohmann/json.hpp>

#include "ifem/errors.hpp"
#include "ifem/moving_frames.hpp"
#include "ifem/rng.hpp"

namespace ifem {

double relative_linf_error(std::span<const double> numeric, std::span<const double> exact) {
    if (numeric.size() != exact.size())
        throw config_error("relative_linf_error: length mismatch");
    double num = 0, den = 0;
    for (std::size_t i = 0; i < numeric.size(); ++i) {
        num = std::max(num, std::abs(numeric[i] - exact[i]));
        den = std::max(den, std::abs(exact[i]));
    }
    if (!(den > 0))
        throw config_error("relative_linf_error: exact sequence has zero norm");
    return num / den;
}

std::string to_string(ProblemId problem) {
    switch (problem) {
    case ProblemId::exp_ode: return "exp";
    case ProblemId::cubic_ode: return "cubic";
    case ProblemId::painleve_ode: return "painleve";
    case ProblemId::linear_ode: return "linear";
    case ProblemId::burgers: return "burgers";
    }
    return "?";
}

std::string to_string(SchemeId scheme) {
    switch (scheme) {
    case SchemeId::exp_invariant: return "exp-invariant";
    case SchemeId::cubic_invariant: return "cubic-invariant";
    case SchemeId::cubic_alternative: return "cubic-alternative";
    case SchemeId::painleve_invariant: return "painleve-invariant";
    case SchemeId::painleve_noninvariant: return "painleve-noninvariant";
    case SchemeId::linear_invariant: return "linear-invariant";
    }
    return "?";
}

ProblemId problem_from_string(const std::string& name) {
    if (name == "exp") return ProblemId::exp_ode;
    if (name == "cubic") return ProblemId::cubic_ode;
    if (name == "painleve") return ProblemId::painleve_ode;
    if (name == "linear") return ProblemId::linear_ode;
    if (name == "burgers") return ProblemId::burgers;
    throw config_error("unknown problem id '" + name +
                       "' (expected exp|cubic|painleve|linear|burgers)");
}

SchemeId scheme_from_string(const std::string& name) {
    if (name == "exp-invariant") return SchemeId::exp_invariant;
    if (name == "cubic-invariant") return SchemeId::cubic_invariant;
    if (name == "cubic-alternative") return SchemeId::cubic_alternative;
    if (name == "painleve-invariant") return SchemeId::painleve_invariant;
    if (name == "painleve-noninvariant") return SchemeId::painleve_noninvariant;
    if (name == "linear-invariant") return SchemeId::linear_invariant;
    throw config_error("unknown scheme id '" + name + "'");
}

StartupRule startup_from_string(const std::string& name) {
    if (name == "forward-difference") return StartupRule::forward_difference;
    if (name == "taylor2") return StartupRule::taylor2;
    if (name == "exact-seed") return StartupRule::seeded;
    throw config_error("unknown startup rule '" + name +
                       "' (expected forward-difference|taylor2|exact-seed)");
}

StartupRule default_startup(ProblemId problem, SchemeId scheme) {
    switch (problem) {
    case ProblemId::exp_ode:
    case ProblemId::cubic_ode:
        return StartupRule::forward_difference;
    case ProblemId::painleve_ode:
        return scheme == SchemeId::painleve_invariant ? StartupRule::seeded
                                                      : StartupRule::taylor2;
    default:
        return StartupRule::taylor2;
    }
}

void require_compatible(ProblemId problem, SchemeId scheme) {
    switch (problem) {
    case ProblemId::exp_ode:
        if (scheme == SchemeId::exp_invariant) return;
        break;
    case ProblemId::cubic_ode:
        if (scheme == SchemeId::cubic_invariant || scheme == SchemeId::cubic_alternative) return;
        break;
    case ProblemId::painleve_ode:
        if (scheme == SchemeId::painleve_invariant || scheme == SchemeId::painleve_noninvariant)
            return;
        break;
    case ProblemId::linear_ode:
        if (scheme == SchemeId::linear_invariant) return;
        break;
    case ProblemId::burgers:
        throw config_error("the burgers problem is driven through the burgers subcommand");
    }
    throw config_error("scheme " + to_string(scheme) + " does not discretize problem " +
                       to_string(problem));
}

std::vector<double> solve_ode(ProblemId problem, SchemeId scheme, const Mesh& mesh,
                              double u0, double ux0, StartupRule startup) {
    require_compatible(problem, scheme);
    MarchOptions opt;
    opt.startup = startup;
    if (startup == StartupRule::seeded)
        opt.u1_seed = exact_solution_for(problem, u0, ux0).eval(mesh.node(1));
    const LinearProblem* lp =
        (problem == ProblemId::linear_ode) ? &canonical_linear_problem() : nullptr;
    return march_ivp(scheme, mesh, u0, ux0, opt, lp);
}

ConvergenceTable run_convergence(ProblemId problem, SchemeId scheme, std::span<const int> n_list,
                                 double u0, double ux0, double interval_a, double interval_b,
                                 std::optional<StartupRule> startup) {
    require_compatible(problem, scheme);
    if (n_list.size() < 3)
        throw config_error("run_convergence: need at least 3 resolutions");
    const StartupRule rule = startup.value_or(default_startup(problem, scheme));

    const OdeExactSolution exact = exact_solution_for(problem, u0, ux0);
    const LinearProblem* lp =
        (problem == ProblemId::linear_ode) ? &canonical_linear_problem() : nullptr;
    const double self_check = exact.substitution_residual(interval_a, interval_b, 20, lp);
    if (!(self_check <= 1e-6))
        throw numerical_error("run_convergence: exact solution failed its substitution self-check");

    ConvergenceTable table;
    table.rows.resize(n_list.size());
    std::vector<std::string> failures(n_list.size());

    // Resolutions are independent marches; rows land in indexed slots so the
    // schedule never changes the output.
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(n_list.size()); ++i) {
        try {
            const int n = n_list[i];
            const Mesh mesh = build_uniform_mesh(interval_a, interval_b, n);
            const std::vector<double> numeric = solve_ode(problem, scheme, mesh, u0, ux0, rule);
            std::vector<double> reference(mesh.node_count());
            for (std::size_t k = 0; k < reference.size(); ++k)
                reference[k] = exact.eval(mesh.node(k));
            table.rows[i] = {n, (interval_b - interval_a) / n,
                             relative_linf_error(numeric, reference)};
        } catch (const std::exception& e) {
            failures[i] = e.what();
        }
    }
    for (std::size_t i = 0; i < failures.size(); ++i)
        if (!failures[i].empty())
            throw numerical_error("run_convergence: march failed at n=" +
                                  std::to_string(n_list[i]) + ": " + failures[i]);

    std::sort(table.rows.begin(), table.rows.end(),
              [](const ConvergenceRow& a, const ConvergenceRow& b) { return a.h > b.h; });
    table.fitted_order = estimate_order(table.rows);
    return table;
}

namespace {

bool scheme_is_invariant(SchemeId scheme) {
    return scheme != SchemeId::painleve_noninvariant;
}

// Random jet with moderate gaps and values; the caller puts it on the zero
// set afterwards.
DiscreteJet random_jet(SplitMix64& rng) {
    DiscreteJet z;
    z.k = 1;
    z.x_prev = rng.uniform(-0.5, 0.5);
    z.x_mid = z.x_prev + rng.uniform(0.3, 1.0);
    z.x_next = z.x_mid + rng.uniform(0.3, 1.0);
    z.u_prev = rng.uniform(0.7, 1.8);
    z.u_mid = rng.uniform(0.7, 1.8);
    z.u_next = 0;
    return z;
}

bool solve_zero_set(SchemeId scheme, const LinearProblem* lp, DiscreteJet& z) {
    auto f = [&](double trial) {
        z.u_next = trial;
        return residual(scheme, z, lp);
    };
    auto df = [&](double trial) {
        const double step = 1e-7 * std::max(1.0, std::abs(trial));
        z.u_next = trial + step;
        const double fp = residual(scheme, z, lp);
        z.u_next = trial - step;
        const double fm = residual(scheme, z, lp);
        return (fp - fm) / (2.0 * step);
    };
    const double guess =
        z.u_mid + (z.u_mid - z.u_prev) / (z.x_mid - z.x_prev) * (z.x_next - z.x_mid);
    try {
        z.u_next = newton_scalar(f, df, guess);
    } catch (const numerical_error&) {
        return false;
    }
    return std::isfinite(z.u_next);
}

template <class G>
double jet_drift(SchemeId scheme, const LinearProblem* lp, const G& g, const DiscreteJet& z) {
    return std::abs(residual(scheme, act_jet(g, z), lp));
}

} // namespace

InvarianceReport run_invariance_audit(ProblemId problem, SchemeId scheme, std::uint64_t seed,
                                      int n_samples) {
    require_compatible(problem, scheme);
    InvarianceReport report;
    report.problem = problem;
    report.scheme = scheme;
    report.expected_invariant = scheme_is_invariant(scheme);
    report.requested_samples = n_samples;

    const LinearProblem* lp =
        (problem == ProblemId::linear_ode) ? &canonical_linear_problem() : nullptr;
    SplitMix64 rng(seed);

    const int max_attempts = 20 * n_samples;
    for (int attempt = 0; attempt < max_attempts && report.valid_samples < n_samples; ++attempt) {
        DiscreteJet z = random_jet(rng);
        if (scheme == SchemeId::linear_invariant) {
            // Any data works; the scheme's residual value is itself invariant.
            z.u_next = rng.uniform(0.7, 1.8);
            if (!solve_zero_set(scheme, lp, z)) continue;
        } else if (!solve_zero_set(scheme, lp, z)) {
            continue;
        }

        double drift = 0;
        bool applied = false;
        for (int redraw = 0; redraw < 8 && !applied; ++redraw) {
            try {
                switch (scheme) {
                case SchemeId::exp_invariant: {
                    const ExpGroupElement g{rng.uniform(-0.3, 0.3), rng.uniform(-0.3, 0.3),
                                            rng.uniform(-0.3, 0.3)};
                    drift = jet_drift(scheme, lp, g, z);
                    break;
                }
                case SchemeId::cubic_invariant:
                case SchemeId::cubic_alternative: {
                    const double alpha = 1.0 + rng.uniform(-0.3, 0.3);
                    const double beta = rng.uniform(-0.3, 0.3);
                    const double gamma = rng.uniform(-0.3, 0.3);
                    const Sl2Element g(alpha, beta, gamma, (1.0 + beta * gamma) / alpha);
                    drift = jet_drift(scheme, lp, g, z);
                    break;
                }
                case SchemeId::painleve_invariant: {
                    const PainleveElement g{rng.uniform(-0.3, 0.3), rng.uniform(-0.3, 0.3)};
                    drift = jet_drift(scheme, lp, g, z);
                    break;
                }
                case SchemeId::painleve_noninvariant: {
                    const PainleveElement g{0.2, 0.0}; // fixed witness element
                    drift = jet_drift(scheme, lp, g, z);
                    break;
                }
                case SchemeId::linear_invariant: {
                    const SuperpositionElement g{rng.uniform(-0.3, 0.3), rng.uniform(-0.3, 0.3),
                                                 lp->alpha, lp->gamma};
                    drift = jet_drift(scheme, lp, g, z);
                    break;
                }
                }
                applied = true;
            } catch (const numerical_error&) {
                // stencil folded or a precondition failed for this g; redraw
            }
        }
        if (!applied) continue;

        ++report.valid_samples;
        report.max_drift = std::max(report.max_drift, drift);
        if (!report.witness && drift > 1e-6)
            report.witness = InvarianceWitness{z, drift};
    }
    return report;
}

namespace {

BurgersState random_smooth_state(SplitMix64& rng, std::size_t n_nodes) {
    BurgersState s;
    s.nu = rng.uniform(0.05, 0.3);
    s.t = rng.uniform(0.0, 0.5);
    const double a = -1.0, b = 2.0;
    const double h = (b - a) / static_cast<double>(n_nodes - 1);
    s.x.resize(n_nodes);
    s.u.resize(n_nodes);
    for (std::size_t l = 0; l < n_nodes; ++l) {
        const double jitter = (l == 0 || l + 1 == n_nodes) ? 0.0 : rng.uniform(-0.3, 0.3);
        s.x[l] = a + (static_cast<double>(l) + jitter) * h;
    }
    const double c0 = rng.uniform(-0.5, 0.5);
    const double c1 = rng.uniform(-0.8, 0.8);
    const double c2 = rng.uniform(-0.8, 0.8);
    const double p1 = rng.uniform(0.0, 6.28);
    const double p2 = rng.uniform(0.0, 6.28);
    for (std::size_t l = 0; l < n_nodes; ++l)
        s.u[l] = c0 + c1 * std::sin(s.x[l] + p1) + c2 * std::cos(2.0 * s.x[l] + p2);
    return s;
}

double max_abs_diff(std::span<const double> a, std::span<const double> b) {
    double worst = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        worst = std::max(worst, std::abs(a[i] - b[i]));
    return worst;
}

} // namespace

BurgersInvarianceReport run_burgers_invariance_audit(std::uint64_t seed, int n_samples) {
    BurgersInvarianceReport report;
    SplitMix64 rng(seed);
    for (int s = 0; s < n_samples; ++s) {
        const BurgersState state = random_smooth_state(rng, 64);
        const BurgersElement g(rng.uniform(0.75, 1.3), rng.uniform(-0.3, 0.3),
                               rng.uniform(-0.3, 0.3), rng.uniform(-0.3, 0.3));
        const BurgersState transformed = act_state(g, state);
        const double lam3 = g.lambda() * g.lambda() * g.lambda();

        {
            const SemiDiscreteRhs r = assemble_invariant_lagrangian(state);
            const SemiDiscreteRhs rt = assemble_invariant_lagrangian(transformed);
            for (std::size_t l = 0; l < state.x.size(); ++l) {
                report.lagrangian_drift = std::max(
                    report.lagrangian_drift, std::abs(rt.du_dt[l] - r.du_dt[l] / lam3));
                report.lagrangian_drift = std::max(
                    report.lagrangian_drift,
                    std::abs(rt.dx_dt[l] - (r.dx_dt[l] + g.v()) / g.lambda()));
            }
        }
        {
            const SemiDiscreteRhs r = assemble_invariant_radaptive(state, MeshMotion::lagrangian);
            const SemiDiscreteRhs rt =
                assemble_invariant_radaptive(transformed, MeshMotion::lagrangian);
            for (std::size_t l = 0; l < state.x.size(); ++l) {
                report.radaptive_drift = std::max(
                    report.radaptive_drift, std::abs(rt.du_dt[l] - r.du_dt[l] / lam3));
                report.radaptive_drift = std::max(
                    report.radaptive_drift,
                    std::abs(rt.dx_dt[l] - (r.dx_dt[l] + g.v()) / g.lambda()));
            }
        }
        {
            const BurgersElement boost(1.0, 0.0, 0.0, rng.uniform(0.25, 1.0));
            const BurgersState boosted = act_state(boost, state);
            const SemiDiscreteRhs r = assemble_galerkin_fixed(state);
            const SemiDiscreteRhs rb = assemble_galerkin_fixed(boosted);
            report.galerkin_witness_drift =
                std::max(report.galerkin_witness_drift, max_abs_diff(r.du_dt, rb.du_dt));
        }
    }
    return report;
}

PainleveSeries run_painleve_error_series() {
    const Mesh mesh = build_uniform_mesh(0.0, 1.0, 100);
    const OdeExactSolution exact = exact_solution_for(ProblemId::painleve_ode, 1.0, 1.0);
    if (!(exact.substitution_residual(0.0, 1.0) <= 1e-6))
        throw numerical_error("painleve series: exact solution failed its self-check");

    MarchOptions opt;
    opt.startup = StartupRule::seeded;
    opt.u1_seed = exact.eval(mesh.node(1));
    const std::vector<double> inv = march_ivp(SchemeId::painleve_invariant, mesh, 1.0, 1.0, opt);
    const std::vector<double> noninv =
        march_ivp(SchemeId::painleve_noninvariant, mesh, 1.0, 1.0, opt);

    PainleveSeries series;
    series.x.resize(mesh.node_count());
    series.err_invariant.resize(mesh.node_count());
    series.err_noninvariant.resize(mesh.node_count());
    for (std::size_t k = 0; k < mesh.node_count(); ++k) {
        const double reference = exact.eval(mesh.node(k));
        series.x[k] = mesh.node(k);
        series.err_invariant[k] = std::abs(inv[k] - reference) / std::abs(reference);
        series.err_noninvariant[k] = std::abs(noninv[k] - reference) / std::abs(reference);
    }
    return series;
}

namespace {

using nlohmann::json;

double require_number(const json& j, const char* field) {
    if (!j.contains(field) || !j[field].is_number())
        throw config_error(std::string("burgers config: missing or non-numeric field '") + field +
                           "'");
    return j[field].get<double>();
}

std::string require_string(const json& j, const char* field) {
    if (!j.contains(field) || !j[field].is_string())
        throw config_error(std::string("burgers config: missing or non-string field '") + field +
                           "'");
    return j[field].get<std::string>();
}

} // namespace

BurgersConfig parse_burgers_config(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw config_error(std::string("burgers config: invalid JSON: ") + e.what());
    }

    BurgersConfig cfg;
    cfg.nu = require_number(j, "nu");
    if (!(cfg.nu > 0)) throw config_error("burgers config: field 'nu' must be positive");
    if (!j.contains("interval") || !j["interval"].is_array() || j["interval"].size() != 2)
        throw config_error("burgers config: field 'interval' must be [a, b]");
    cfg.interval_a = j["interval"][0].get<double>();
    cfg.interval_b = j["interval"][1].get<double>();
    if (!(cfg.interval_a < cfg.interval_b))
        throw config_error("burgers config: field 'interval' needs a < b");
    cfg.n = static_cast<int>(require_number(j, "n"));
    if (cfg.n < 2) throw config_error("burgers config: field 'n' must be at least 2");
    cfg.dt = require_number(j, "dt");
    if (!(cfg.dt > 0)) throw config_error("burgers config: field 'dt' must be positive");
    cfg.t_end = require_number(j, "t_end");
    if (!(cfg.t_end > 0)) throw config_error("burgers config: field 't_end' must be positive");

    cfg.scheme = require_string(j, "scheme");
    if (cfg.scheme != "galerkin" && cfg.scheme != "lagrangian" && cfg.scheme != "radaptive")
        throw config_error("burgers config: field 'scheme' must be galerkin|lagrangian|radaptive");
    cfg.motion = j.contains("motion") ? require_string(j, "motion")
                                      : (cfg.scheme == "lagrangian" ? "lagrangian" : "fixed");
    if (cfg.motion != "fixed" && cfg.motion != "lagrangian")
        throw config_error("burgers config: field 'motion' must be fixed|lagrangian");
    if (cfg.scheme == "galerkin" && cfg.motion != "fixed")
        throw config_error("burgers config: field 'motion' must be fixed for the galerkin scheme");
    if (cfg.scheme == "lagrangian" && cfg.motion != "lagrangian")
        throw config_error(
            "burgers config: field 'motion' must be lagrangian for the lagrangian scheme");

    if (!j.contains("ic") || !j["ic"].is_object())
        throw config_error("burgers config: missing object field 'ic'");
    const json& ic = j["ic"];
    cfg.ic.type = require_string(ic, "type");
    if (cfg.ic.type == "constant") {
        cfg.ic.value = require_number(ic, "value");
    } else if (cfg.ic.type == "traveling_wave") {
        cfg.ic.a = require_number(ic, "a");
        cfg.ic.c = require_number(ic, "c");
    } else {
        throw config_error("burgers config: ic.type must be constant|traveling_wave");
    }

    cfg.boundary = require_string(j, "boundary");
    if (cfg.boundary != "dirichlet_exact" && cfg.boundary != "dirichlet_const")
        throw config_error("burgers config: field 'boundary' must be dirichlet_exact|dirichlet_const");
    cfg.snapshot_stride = static_cast<int>(require_number(j, "snapshot_stride"));
    if (cfg.snapshot_stride < 1)
        throw config_error("burgers config: field 'snapshot_stride' must be at least 1");
    if (j.contains("interior_margin")) {
        cfg.interior_margin = require_number(j, "interior_margin");
        if (cfg.interior_margin < 0 || cfg.interior_margin > 0.45)
            throw config_error("burgers config: field 'interior_margin' must lie in [0, 0.45]");
    }
    if (j.contains("equivariance")) {
        const json& eq = j["equivariance"];
        if (!eq.is_object())
            throw config_error("burgers config: field 'equivariance' must be an object");
        BurgersEquivarianceRequest req;
        req.v = require_number(eq, "v");
        req.interior_margin =
            eq.contains("interior_margin") ? require_number(eq, "interior_margin") : 0.15;
        cfg.equivariance = req;
    }
    return cfg;
}

namespace {

struct BurgersSetup {
    std::function<double(double, double)> exact; // may be null for no reference
    Assembler assembler;
    std::optional<BoundaryPolicy> boundary;
    BurgersState initial;
};

Assembler make_assembler(const std::string& scheme, const std::string& motion) {
    if (scheme == "galerkin")
        return [](const BurgersState& s) { return assemble_galerkin_fixed(s); };
    if (scheme == "lagrangian")
        return [](const BurgersState& s) {
            SemiDiscreteRhs r = assemble_invariant_lagrangian(s);
            r.dx_dt.front() = r.dx_dt.back() = 0.0; // pinned boundary nodes
            return r;
        };
    const MeshMotion m = (motion == "lagrangian") ? MeshMotion::lagrangian : MeshMotion::fixed;
    return [m](const BurgersState& s) {
        std::vector<double> xdot(s.x.size(), 0.0);
        if (m == MeshMotion::lagrangian) {
            xdot = s.u;
            xdot.front() = xdot.back() = 0.0; // pinned boundary nodes
        }
        return assemble_invariant_radaptive(s, MeshMotion::prescribed, xdot);
    };
}

BurgersSetup make_setup(const BurgersConfig& cfg, double boost_v) {
    BurgersSetup setup;
    if (cfg.ic.type == "constant") {
        const double value = cfg.ic.value + boost_v;
        setup.exact = [value](double, double) { return value; };
    } else {
        const TravelingWave wave{cfg.nu, cfg.ic.a, cfg.ic.c};
        const double check = wave.substitution_residual(cfg.interval_a, cfg.interval_b, 0.0,
                                                        cfg.t_end);
        if (!(check <= 1e-6))
            throw numerical_error("burgers: traveling wave failed its substitution self-check");
        setup.exact = [wave, boost_v](double x, double t) {
            return wave(x - boost_v * t, t) + boost_v;
        };
    }

    setup.initial.t = 0.0;
    setup.initial.nu = cfg.nu;
    const Mesh mesh = build_uniform_mesh(cfg.interval_a, cfg.interval_b, cfg.n);
    setup.initial.x.assign(mesh.nodes().begin(), mesh.nodes().end());
    setup.initial.u.resize(setup.initial.x.size());
    for (std::size_t l = 0; l < setup.initial.x.size(); ++l)
        setup.initial.u[l] = setup.exact(setup.initial.x[l], 0.0);

    if (cfg.boundary == "dirichlet_exact") {
        setup.boundary = BoundaryPolicy{setup.exact};
    } else {
        const double left = setup.exact(cfg.interval_a, 0.0);
        const double right = setup.exact(cfg.interval_b, 0.0);
        const double a = cfg.interval_a;
        setup.boundary = BoundaryPolicy{[left, right, a](double x, double) {
            return x == a ? left : right;
        }};
    }
    setup.assembler = make_assembler(cfg.scheme, cfg.motion);
    return setup;
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

} // namespace

void write_csv(const std::string& path, const std::string& header,
               const std::vector<std::vector<double>>& columns) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw config_error("write_csv: cannot open '" + path + "' for writing");
    out << header << "\n";
    if (columns.empty()) return;
    const std::size_t rows = columns.front().size();
    for (const auto& col : columns)
        if (col.size() != rows)
            throw config_error("write_csv: ragged columns");
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < columns.size(); ++c) {
            if (c) out << ",";
            out << format_double(columns[c][r]);
        }
        out << "\n";
    }
}

BurgersSummary run_burgers(const BurgersConfig& cfg, const std::string& out_prefix) {
    const BurgersSetup setup = make_setup(cfg, 0.0);
    const std::vector<BurgersState> trajectory =
        simulate(setup.initial, setup.assembler, setup.boundary, cfg.dt, cfg.t_end,
                 cfg.snapshot_stride);

    std::vector<double> col_t, col_l, col_x, col_u;
    for (const BurgersState& snap : trajectory) {
        for (std::size_t l = 0; l < snap.x.size(); ++l) {
            col_t.push_back(snap.t);
            col_l.push_back(static_cast<double>(l));
            col_x.push_back(snap.x[l]);
            col_u.push_back(snap.u[l]);
        }
    }
    write_csv(out_prefix + "_trajectory.csv", "t,l,x,u", {col_t, col_l, col_x, col_u});

    BurgersSummary summary;
    const BurgersState& final_state = trajectory.back();
    summary.final_time = final_state.t;
    summary.steps = std::lround(cfg.t_end / cfg.dt);
    summary.snapshots = static_cast<int>(trajectory.size());

    const std::size_t n_nodes = final_state.x.size();
    const auto margin = static_cast<std::size_t>(cfg.interior_margin * static_cast<double>(n_nodes));
    double err = 0;
    for (std::size_t l = margin; l < n_nodes - margin; ++l)
        err = std::max(err, std::abs(final_state.u[l] - setup.exact(final_state.x[l], final_state.t)));
    summary.interior_linf_error = err;

    if (cfg.equivariance) {
        const double v = cfg.equivariance->v;
        const BurgersSetup boosted = make_setup(cfg, v);
        const std::vector<BurgersState> boosted_trajectory =
            simulate(boosted.initial, boosted.assembler, boosted.boundary, cfg.dt, cfg.t_end,
                     cfg.snapshot_stride);
        const BurgersState& a = trajectory.back();
        const BurgersState& b = boosted_trajectory.back();
        const auto eq_margin = static_cast<std::size_t>(cfg.equivariance->interior_margin *
                                                        static_cast<double>(n_nodes));
        double drift = 0;
        for (std::size_t l = eq_margin; l < n_nodes - eq_margin; ++l) {
            drift = std::max(drift, std::abs(b.x[l] - (a.x[l] + v * a.t)));
            drift = std::max(drift, std::abs(b.u[l] - (a.u[l] + v)));
        }
        summary.equivariance_drift = drift;
    }

    nlohmann::ordered_json out;
    out["scheme"] = cfg.scheme;
    out["motion"] = cfg.motion;
    out["nu"] = cfg.nu;
    out["n"] = cfg.n;
    out["dt"] = cfg.dt;
    out["final_time"] = summary.final_time;
    out["steps"] = summary.steps;
    out["snapshots"] = summary.snapshots;
    if (summary.interior_linf_error)
        out["interior_linf_error"] = *summary.interior_linf_error;
    if (summary.equivariance_drift)
        out["equivariance_drift"] = *summary.equivariance_drift;
    std::ofstream json_out(out_prefix + "_summary.json", std::ios::binary);
    if (!json_out)
        throw config_error("run_burgers: cannot open summary output");
    json_out << out.dump(2) << "\n";
    return summary;
}

} // namespace ifem
