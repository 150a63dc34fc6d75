#include <doctest.h>

#include <cmath>
#include <functional>
#include <string>

#include "ifem/errors.hpp"
#include "ifem/exact_solutions.hpp"
#include "ifem/ode_schemes.hpp"
#include "ifem/rng.hpp"
#include "oracles.hpp"

using namespace ifem;

namespace {

// Puts a random jet on the scheme's zero set by solving for u_next, the way
// the march does.  Returns false when Newton cannot place it.
bool solve_zero_set(SchemeId scheme, DiscreteJet& z, const LinearProblem* lp = nullptr) {
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

// Log-log slope of |residual| against h for samples of `exact` on a
// shrinking uniform stencil centered at x0.
double residual_decay_slope(SchemeId scheme, const std::function<double(double)>& exact,
                            double x0) {
    std::vector<ConvergenceRow> rows;
    int n = 10;
    for (const double h : {0.2, 0.1, 0.05, 0.025, 0.0125}) {
        const DiscreteJet z{1, x0 - h, x0, x0 + h, exact(x0 - h), exact(x0), exact(x0 + h)};
        rows.push_back({n, h, std::abs(residual(scheme, z))});
        n *= 2;
    }
    return estimate_order(rows);
}

} // namespace

TEST_CASE("exp residual: hand-evaluated value") {
    // x=(0,1,2), u=(0,1,2): 0 - e^{-1} - e^{-1}
    const DiscreteJet z{1, 0, 1, 2, 0, 1, 2};
    CHECK(residual_exp(z) == doctest::Approx(-2.0 * std::exp(-1.0)).epsilon(1e-15));
}

TEST_CASE("exp residual is exactly invariant under its group") {
    SplitMix64 rng(300);
    for (int trial = 0; trial < 200; ++trial) {
        const DiscreteJet z = oracles::random_jet(rng, -1.5, 1.5);
        const ExpGroupElement g{rng.uniform(-0.3, 0.3), rng.uniform(-0.3, 0.3),
                                rng.uniform(-0.3, 0.3)};
        const double drift = std::abs(residual_exp(act_jet(g, z)) - residual_exp(z));
        CHECK(drift <= 1e-12);
    }
}

TEST_CASE("exp residual decays on exact-solution samples") {
    const OdeExactSolution exact = exact_solution_for(ProblemId::exp_ode, 1.0, 0.0);
    CHECK(residual_decay_slope(SchemeId::exp_invariant, exact.eval, 0.5) >= 2.0);
}

TEST_CASE("cubic invariant residual: constant data evaluates to 1") {
    const DiscreteJet z{1, 0, 1, 2, 1, 1, 1};
    CHECK(residual_cubic_invariant(z) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("cubic alternative residual: constant data evaluates to -1") {
    const DiscreteJet z{1, 0, 1, 2, 1, 1, 1};
    CHECK(residual_cubic_alt(z) == doctest::Approx(-1.0).epsilon(1e-15));
}

TEST_CASE("cubic schemes: zero-set equivariance under near-identity sl2") {
    SplitMix64 rng(301);
    for (const SchemeId scheme : {SchemeId::cubic_invariant, SchemeId::cubic_alternative}) {
        int done = 0;
        while (done < 100) {
            DiscreteJet z = oracles::random_jet(rng);
            if (!solve_zero_set(scheme, z)) continue;
            const double alpha = 1.0 + rng.uniform(-0.3, 0.3);
            const double beta = rng.uniform(-0.3, 0.3);
            const double gamma = rng.uniform(-0.3, 0.3);
            try {
                const Sl2Element g(alpha, beta, gamma, (1.0 + beta * gamma) / alpha);
                const double drift = std::abs(residual(scheme, act_jet(g, z)));
                CHECK(drift <= 1e-9);
                ++done;
            } catch (const numerical_error&) {
            }
        }
    }
}

TEST_CASE("cubic residuals decay on sqrt(1+x^2) samples") {
    const OdeExactSolution exact = exact_solution_for(ProblemId::cubic_ode, 1.0, 0.0);
    CHECK(residual_decay_slope(SchemeId::cubic_invariant, exact.eval, 0.5) >= 1.8);
    CHECK(residual_decay_slope(SchemeId::cubic_alternative, exact.eval, 0.5) >= 1.8);
}

TEST_CASE("painleve residuals: constant data, exactness, invariance") {
    const DiscreteJet flat{1, 0, 1, 2, 1, 1, 1};
    CHECK(residual_painleve_noninv(flat) == 0.0);
    CHECK(residual_painleve_inv(flat) == 0.0);

    // the invariant scheme vanishes identically on c1 e^{c2 x} samples
    SplitMix64 rng(302);
    for (int trial = 0; trial < 100; ++trial) {
        DiscreteJet z = oracles::random_jet(rng);
        const double c1 = rng.uniform(0.5, 2.0);
        const double c2 = rng.uniform(-1.0, 1.0);
        z.u_prev = c1 * std::exp(c2 * z.x_prev);
        z.u_mid = c1 * std::exp(c2 * z.x_mid);
        z.u_next = c1 * std::exp(c2 * z.x_next);
        CHECK(std::abs(residual_painleve_inv(z)) <= 1e-13);
    }

    // exact invariance of the residual value
    for (int trial = 0; trial < 200; ++trial) {
        const DiscreteJet z = oracles::random_jet(rng);
        const PainleveElement g{rng.uniform(-0.3, 0.3), rng.uniform(-0.3, 0.3)};
        CHECK(std::abs(residual_painleve_inv(act_jet(g, z)) - residual_painleve_inv(z)) <= 1e-12);
    }
}

TEST_CASE("painleve non-invariant residual: third-order decay on e^x samples") {
    CHECK(residual_decay_slope(SchemeId::painleve_noninvariant,
                               [](double x) { return std::exp(x); }, 0.5) >= 2.8);
}

TEST_CASE("painleve non-invariant scheme has a non-invariance witness") {
    SplitMix64 rng(303);
    const PainleveElement g{0.2, 0.0};
    double worst = 0;
    for (int trial = 0; trial < 100; ++trial) {
        DiscreteJet z = oracles::random_jet(rng);
        if (!solve_zero_set(SchemeId::painleve_noninvariant, z)) continue;
        worst = std::max(worst, std::abs(residual_painleve_noninv(act_jet(g, z))));
    }
    CHECK(worst > 1e-6);
}

TEST_CASE("positivity preconditions are enforced") {
    const DiscreteJet negative{1, 0, 1, 2, 1.0, -0.5, 1.0};
    CHECK_THROWS_AS(residual_painleve_noninv(negative), numerical_error);
    CHECK_THROWS_AS(residual_painleve_inv(negative), numerical_error);
    const DiscreteJet zero{1, 0, 1, 2, 1.0, 0.0, 1.0};
    CHECK_THROWS_AS(residual_cubic_invariant(zero), numerical_error);
    CHECK_THROWS_AS(residual_cubic_alt(zero), numerical_error);
}

TEST_CASE("linear invariant residual: superposition data is exact") {
    const LinearProblem& lp = canonical_linear_problem();
    SplitMix64 rng(304);
    const std::vector<double> nodes = oracles::jittered_nodes(rng, 0.0, 1.0, 50);
    std::vector<double> u(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i)
        u[i] = 3.0 * std::exp(nodes[i]) - 2.0 * std::exp(-nodes[i]);
    const Mesh mesh(nodes);
    for (std::size_t k = 1; k + 1 < nodes.size(); ++k) {
        const double res = residual_linear_invariant(mesh.jet(k, u), lp);
        CHECK(std::abs(res) <= 1e-12);
    }
}

TEST_CASE("linear invariant residual: trivial equation with linear data") {
    const LinearProblem lp{
        [](double) { return 0.0; }, [](double) { return 0.0; }, [](double) { return 0.0; },
        [](double) { return 1.0; }, [](double x) { return x; }};
    const DiscreteJet z{1, 0.0, 0.7, 1.5, 2.0 - 3.0 * 0.0, 2.0 - 3.0 * 0.7, 2.0 - 3.0 * 1.5};
    CHECK(std::abs(residual_linear_invariant(z, lp)) <= 1e-14);
}

TEST_CASE("linear invariant residual: oscillator superposition is exact") {
    const LinearProblem lp{
        [](double) { return 0.0; }, [](double) { return 1.0; }, [](double) { return 0.0; },
        [](double x) { return std::cos(x); }, [](double x) { return std::sin(x); }};
    SplitMix64 rng(305);
    const std::vector<double> nodes = oracles::jittered_nodes(rng, 0.0, 2.0, 30);
    std::vector<double> u(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i)
        u[i] = 2.0 * std::cos(nodes[i]) - 3.0 * std::sin(nodes[i]);
    const Mesh mesh(nodes);
    for (std::size_t k = 1; k + 1 < nodes.size(); ++k)
        CHECK(std::abs(residual_linear_invariant(mesh.jet(k, u), lp)) <= 1e-12);
}

TEST_CASE("linear weak-form rows match a dense quadrature oracle") {
    // generic smooth coefficients; the implementation interpolates p, q, f
    // nodally, so the oracle integrates those interpolants exactly.
    const LinearProblem lp{
        [](double x) { return std::sin(x); },
        [](double x) { return std::cos(2.0 * x); },
        [](double x) { return x * x; },
        [](double x) { return std::exp(x); },
        [](double x) { return std::exp(-x); }};
    SplitMix64 rng(306);
    for (int trial = 0; trial < 30; ++trial) {
        const DiscreteJet z = oracles::random_jet(rng, -1.5, 1.5);
        const std::vector<double> xs{z.x_prev, z.x_mid, z.x_next};
        const std::vector<double> us{z.u_prev, z.u_mid, z.u_next};
        const std::vector<double> ps{lp.p(z.x_prev), lp.p(z.x_mid), lp.p(z.x_next)};
        const std::vector<double> qs{lp.q(z.x_prev), lp.q(z.x_mid), lp.q(z.x_next)};
        const std::vector<double> fs{lp.f(z.x_prev), lp.f(z.x_mid), lp.f(z.x_next)};
        const Mesh mesh(xs);
        auto integrand = [&](double x) {
            const double ux = oracles::pw_linear_slope(xs, us, x);
            const double uval = oracles::pw_linear(xs, us, x);
            const double pval = oracles::pw_linear(xs, ps, x);
            const double qval = oracles::pw_linear(xs, qs, x);
            const double fval = oracles::pw_linear(xs, fs, x);
            return -ux * hat_deriv(mesh, 1, x) +
                   (pval * ux + qval * uval - fval) * hat_eval(mesh, 1, x);
        };
        const double oracle =
            oracles::gauss(integrand, z.x_prev, z.x_mid) + oracles::gauss(integrand, z.x_mid, z.x_next);
        const double value = residual_linear_noninvariant(z, lp);
        CHECK(std::abs(value - oracle) <= 1e-12 * std::max(1.0, std::abs(oracle)));
    }
}

TEST_CASE("linear invariant residual value is invariant under superposition shifts") {
    const LinearProblem& lp = canonical_linear_problem();
    SplitMix64 rng(307);
    for (int trial = 0; trial < 100; ++trial) {
        const DiscreteJet z = oracles::random_jet(rng, -1.5, 1.5);
        const SuperpositionElement g{rng.uniform(-0.3, 0.3), rng.uniform(-0.3, 0.3), lp.alpha,
                                     lp.gamma};
        const double a = residual_linear_invariant(z, lp);
        const double b = residual_linear_invariant(act_jet(g, z), lp);
        CHECK(std::abs(a - b) <= 1e-12);
    }
}

TEST_CASE("march start-up rules") {
    const Mesh mesh = build_uniform_mesh(0.0, 1.0, 10);
    const double h = 0.1;
    {
        MarchOptions opt;
        opt.startup = StartupRule::forward_difference;
        const std::vector<double> u = march_ivp(SchemeId::exp_invariant, mesh, 1.0, 0.5, opt);
        CHECK(u[1] == 1.0 + h * 0.5);
    }
    {
        MarchOptions opt; // taylor2 default
        const std::vector<double> u = march_ivp(SchemeId::exp_invariant, mesh, 1.0, 0.5, opt);
        CHECK(u[1] == doctest::Approx(1.0 + h * 0.5 + 0.5 * h * h * std::exp(-0.5)).epsilon(1e-15));
    }
    {
        MarchOptions opt;
        opt.startup = StartupRule::seeded;
        opt.u1_seed = 1.2345;
        const std::vector<double> u = march_ivp(SchemeId::exp_invariant, mesh, 1.0, 0.5, opt);
        CHECK(u[1] == 1.2345);
    }
}

TEST_CASE("march is deterministic") {
    const Mesh mesh = build_uniform_mesh(0.0, 1.0, 64);
    const std::vector<double> a = march_ivp(SchemeId::cubic_invariant, mesh, 1.0, 0.0);
    const std::vector<double> b = march_ivp(SchemeId::cubic_invariant, mesh, 1.0, 0.0);
    CHECK(a == b);
}

TEST_CASE("march error magnitude sanity for the exp scheme") {
    const Mesh mesh = build_uniform_mesh(0.0, 1.0, 100);
    MarchOptions opt;
    opt.startup = StartupRule::forward_difference;
    const std::vector<double> u = march_ivp(SchemeId::exp_invariant, mesh, 1.0, 0.0, opt);
    const OdeExactSolution exact = exact_solution_for(ProblemId::exp_ode, 1.0, 0.0);
    double err = 0;
    for (std::size_t k = 0; k < u.size(); ++k)
        err = std::max(err, std::abs(u[k] - exact.eval(mesh.node(k))));
    CHECK(err > 1e-4);
    CHECK(err < 1e-2);
}

TEST_CASE("seeded march of the invariant painleve scheme is exact to round-off") {
    const Mesh mesh = build_uniform_mesh(0.0, 1.0, 100);
    MarchOptions opt;
    opt.startup = StartupRule::seeded;
    opt.u1_seed = std::exp(mesh.node(1));
    const std::vector<double> u = march_ivp(SchemeId::painleve_invariant, mesh, 1.0, 1.0, opt);
    for (std::size_t k = 0; k < u.size(); ++k)
        CHECK(std::abs(u[k] - std::exp(mesh.node(k))) <= 1e-11 * std::exp(mesh.node(k)));
}

TEST_CASE("seeded march of the linear invariant scheme continues the superposition") {
    const Mesh mesh = build_uniform_mesh(0.0, 1.0, 64);
    const OdeExactSolution exact = exact_solution_for(ProblemId::linear_ode, 1.0, 5.0);
    MarchOptions opt;
    opt.startup = StartupRule::seeded;
    opt.u1_seed = exact.eval(mesh.node(1));
    const std::vector<double> u = march_ivp(SchemeId::linear_invariant, mesh, 1.0, 5.0, opt,
                                            &canonical_linear_problem());
    for (std::size_t k = 0; k < u.size(); ++k)
        CHECK(std::abs(u[k] - exact.eval(mesh.node(k))) <= 1e-10);
}

TEST_CASE("march failures carry the failing node") {
    const Mesh mesh = build_uniform_mesh(0.0, 1.0, 10);
    MarchOptions opt;
    opt.newton.max_iter = 1;
    try {
        march_ivp(SchemeId::cubic_invariant, mesh, 1.0, 0.0, opt);
        FAIL("expected numerical_error");
    } catch (const numerical_error& e) {
        CHECK(std::string(e.what()).find("node") != std::string::npos);
        CHECK(e.index() >= 1);
    }
}

TEST_CASE("strong_rhs covers each scheme family") {
    CHECK(strong_rhs(SchemeId::exp_invariant, 0, 0, 1.0) == doctest::Approx(std::exp(-1.0)));
    CHECK(strong_rhs(SchemeId::cubic_invariant, 0, 2.0, 0) == doctest::Approx(0.125));
    CHECK(strong_rhs(SchemeId::painleve_invariant, 0, 2.0, 3.0) == doctest::Approx(4.5));
    CHECK(strong_rhs(SchemeId::linear_invariant, 0.0, 2.0, 1.0, &canonical_linear_problem()) ==
          doctest::Approx(2.0)); // f - p ux - q u = 0 - 0 + u
}
