#include <doctest.h>

#include <cmath>
#include <functional>

#include "ifem/errors.hpp"
#include "ifem/moving_frames.hpp"
#include "ifem/rng.hpp"
#include "oracles.hpp"

using namespace ifem;

namespace {

const std::function<double(double)> exp_pos = [](double x) { return std::exp(x); };
const std::function<double(double)> exp_neg = [](double x) { return std::exp(-x); };

// Jet with all the frame denominators comfortably nonzero.
DiscreteJet frame_safe_jet(SplitMix64& rng) {
    for (;;) {
        const DiscreteJet z = oracles::random_jet(rng);
        try {
            const StencilQuantities s = stencil_quantities(z);
            const double ux = s.ux_centered;
            const double b_prev = (z.x_prev - s.x_bar) * ux + s.u_bar;
            const double b_mid = (z.x_mid - s.x_bar) * ux + s.u_bar;
            const double b_next = (z.x_next - s.x_bar) * ux + s.u_bar;
            if (std::abs(b_prev) < 0.05 || std::abs(b_mid) < 0.05 || std::abs(b_next) < 0.05)
                continue;
            (void)frame_sl2_cubic(z);
            return z;
        } catch (const numerical_error&) {
        }
    }
}

double centered_slope(const DiscreteJet& z) {
    return (z.u_next - z.u_prev) / (z.x_next - z.x_prev);
}

} // namespace

TEST_CASE("sl2 frame on cross-section data is the identity") {
    const DiscreteJet z{1, -1, 0, 1, 1, 1, 1};
    const Sl2Element rho = frame_sl2_cubic(z);
    CHECK(rho.alpha() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(rho.beta() == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(rho.gamma() == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(rho.delta() == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("sl2 frame hand evaluations") {
    {
        const DiscreteJet z{1, 0, 1, 2, 1, 1, 1};
        const Sl2Element rho = frame_sl2_cubic(z);
        CHECK(rho.alpha() == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(rho.beta() == doctest::Approx(-1.0).epsilon(1e-14));
        CHECK(rho.gamma() == doctest::Approx(0.0).epsilon(1e-14));
        CHECK(rho.delta() == doctest::Approx(1.0).epsilon(1e-14));
    }
    {
        // x=(0,1,2), u=(1,1,3): ux=1, xbar=1, ubar=2
        const DiscreteJet z{1, 0, 1, 2, 1, 1, 3};
        const Sl2Element rho = frame_sl2_cubic(z);
        CHECK(rho.alpha() == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(rho.beta() == doctest::Approx(-1.0).epsilon(1e-14));
        CHECK(rho.gamma() == doctest::Approx(0.5).epsilon(1e-14));
        CHECK(rho.delta() == doctest::Approx(0.5).epsilon(1e-14));
        CHECK(rho.alpha() * rho.delta() - rho.beta() * rho.gamma() ==
              doctest::Approx(1.0).epsilon(1e-14));
    }
}

TEST_CASE("sl2 frame sends jets onto the cross-section") {
    SplitMix64 rng(100);
    for (int trial = 0; trial < 100; ++trial) {
        const DiscreteJet z = frame_safe_jet(rng);
        const Sl2Element rho = frame_sl2_cubic(z);
        const DiscreteJet w = act_jet(rho, z);
        CHECK(std::abs(w.x_mid) <= 1e-11);
        CHECK(std::abs(w.u_mid - 1.0) <= 1e-11);
        CHECK(std::abs(centered_slope(w)) <= 1e-11);
    }
}

TEST_CASE("superposition frame: trivial and exactly-cancelling data") {
    {
        const DiscreteJet z{1, 0, 0.5, 1, 0, 0, 0};
        const SuperpositionElement f = frame_superposition(z, exp_pos, exp_neg);
        CHECK(f.eps1 == 0.0);
        CHECK(f.eps2 == 0.0);
    }
    {
        // u sampled from alpha itself: eps1 = -1, eps2 = 0
        const DiscreteJet z{1, 0, 0.5, 1.2, exp_pos(0), exp_pos(0.5), exp_pos(1.2)};
        const SuperpositionElement f = frame_superposition(z, exp_pos, exp_neg);
        CHECK(f.eps1 == doctest::Approx(-1.0).epsilon(1e-13));
        CHECK(f.eps2 == doctest::Approx(0.0).epsilon(1e-13));
    }
}

TEST_CASE("superposition frame satisfies its normalization equations") {
    const std::function<double(double)> alpha = [](double x) { return std::cos(x); };
    const std::function<double(double)> gamma = [](double x) { return std::sin(x); };
    const double quarter_pi = 0.25 * M_PI;
    const DiscreteJet z{1, 0.0, quarter_pi, 2 * quarter_pi, 1.0, 1.0, 1.0};
    const SuperpositionElement f = frame_superposition(z, alpha, gamma);

    const double span = z.x_next - z.x_prev;
    const double a_x = (alpha(z.x_next) - alpha(z.x_prev)) / span;
    const double g_x = (gamma(z.x_next) - gamma(z.x_prev)) / span;
    const double residual_value = z.u_mid + f.eps1 * alpha(z.x_mid) + f.eps2 * gamma(z.x_mid);
    const double residual_slope = centered_slope(z) + f.eps1 * a_x + f.eps2 * g_x;
    CHECK(std::abs(residual_value) <= 1e-12);
    CHECK(std::abs(residual_slope) <= 1e-12);
}

TEST_CASE("superposition frame normalization on random jets") {
    SplitMix64 rng(101);
    for (int trial = 0; trial < 100; ++trial) {
        const DiscreteJet z = oracles::random_jet(rng, -1.5, 1.5);
        const SuperpositionElement f = frame_superposition(z, exp_pos, exp_neg);
        const DiscreteJet w = act_jet(f, z);
        CHECK(std::abs(w.u_mid) <= 1e-11);
        CHECK(std::abs(centered_slope(w)) <= 1e-11);
    }
}

TEST_CASE("painleve frame: cross-section data and hand evaluation") {
    {
        const DiscreteJet z{1, 0, 1, 2, 1, 1, 1};
        const PainleveElement f = frame_painleve(z);
        CHECK(f.a == 0.0);
        CHECK(f.b == 0.0);
    }
    {
        const DiscreteJet z{1, -1, 0, 1, std::exp(-1.0), 1.0, std::exp(1.0)};
        const PainleveElement f = frame_painleve(z);
        CHECK(f.a == doctest::Approx(-1.0).epsilon(1e-14));
        CHECK(f.b == doctest::Approx(0.0).epsilon(1e-14));
    }
}

TEST_CASE("painleve frame normalizes value and slope on random jets") {
    SplitMix64 rng(102);
    for (int trial = 0; trial < 100; ++trial) {
        const DiscreteJet z = oracles::random_jet(rng);
        const PainleveElement f = frame_painleve(z);
        const DiscreteJet w = act_jet(f, z);
        CHECK(std::abs(w.u_mid - 1.0) <= 1e-11);
        CHECK(std::abs(centered_slope(w)) <= 1e-11);
    }
}

TEST_CASE("burgers frame: cross-section point and hand evaluations") {
    {
        const BurgersElement f = frame_burgers(0, 0, 1, 0);
        CHECK(f.lambda() == 1.0);
        CHECK(f.a() == 0.0);
        CHECK(f.b() == 0.0);
        CHECK(f.v() == 0.0);
    }
    {
        const BurgersElement f = frame_burgers(1, 2, 4, 0);
        CHECK(f.lambda() == 2.0);
        CHECK(f.v() == -2.0);
        CHECK(f.a() == doctest::Approx(-2.0).epsilon(1e-15));
        CHECK(f.b() == 0.0);
    }
    {
        const BurgersElement f = frame_burgers(0, 0, 4, 1);
        CHECK(f.lambda() == 2.0);
        CHECK(f.v() == 0.0);
        CHECK(f.a() == 0.0);
        CHECK(f.b() == doctest::Approx(-4.0).epsilon(1e-15));
    }
}

TEST_CASE("burgers frame normalization on random tuples") {
    SplitMix64 rng(103);
    for (int trial = 0; trial < 100; ++trial) {
        const double x = rng.uniform(-1, 1);
        const double u = rng.uniform(-1, 1);
        const double ux = rng.uniform(0.2, 3.0);
        const double t = rng.uniform(0, 1);
        const BurgersElement f = frame_burgers(x, u, ux, t);
        const SpaceTimePoint p = f.act({x, t, u});
        CHECK(std::abs(p.x) <= 1e-11);
        CHECK(std::abs(p.t) <= 1e-11);
        CHECK(std::abs(p.u) <= 1e-11);
        // prolonged slope U_X = ux / lambda^2 must hit the cross-section value 1
        CHECK(std::abs(ux / (f.lambda() * f.lambda()) - 1.0) <= 1e-11);
    }
}

TEST_CASE("right equivariance of all four frames") {
    SplitMix64 rng(104);

    for (int trial = 0; trial < 100; ++trial) {
        // sl2 cubic
        for (;;) {
            const DiscreteJet z = frame_safe_jet(rng);
            const double alpha = 1.0 + rng.uniform(-0.3, 0.3);
            const double beta = rng.uniform(-0.3, 0.3);
            const double gamma = rng.uniform(-0.3, 0.3);
            const Sl2Element g(alpha, beta, gamma, (1.0 + beta * gamma) / alpha);
            try {
                const Sl2Element lhs = frame_sl2_cubic(act_jet(g, z)).compose(g);
                const Sl2Element rhs = frame_sl2_cubic(z);
                CHECK(std::abs(lhs.alpha() - rhs.alpha()) <= 1e-9);
                CHECK(std::abs(lhs.beta() - rhs.beta()) <= 1e-9);
                CHECK(std::abs(lhs.gamma() - rhs.gamma()) <= 1e-9);
                CHECK(std::abs(lhs.delta() - rhs.delta()) <= 1e-9);
                break;
            } catch (const numerical_error&) {
            }
        }

        // superposition
        {
            const DiscreteJet z = oracles::random_jet(rng, -1.5, 1.5);
            const SuperpositionElement g{rng.uniform(-0.3, 0.3), rng.uniform(-0.3, 0.3), exp_pos,
                                         exp_neg};
            const SuperpositionElement lhs =
                frame_superposition(act_jet(g, z), exp_pos, exp_neg).compose(g);
            const SuperpositionElement rhs = frame_superposition(z, exp_pos, exp_neg);
            CHECK(std::abs(lhs.eps1 - rhs.eps1) <= 1e-9);
            CHECK(std::abs(lhs.eps2 - rhs.eps2) <= 1e-9);
        }

        // painleve
        {
            const DiscreteJet z = oracles::random_jet(rng);
            const PainleveElement g{rng.uniform(-0.3, 0.3), rng.uniform(-0.3, 0.3)};
            const PainleveElement lhs = frame_painleve(act_jet(g, z)).compose(g);
            const PainleveElement rhs = frame_painleve(z);
            CHECK(std::abs(lhs.a - rhs.a) <= 1e-9);
            CHECK(std::abs(lhs.b - rhs.b) <= 1e-9);
        }

        // burgers (transform the point by g, slope by the prolonged law)
        {
            const double x = rng.uniform(-1, 1);
            const double u = rng.uniform(-1, 1);
            const double ux = rng.uniform(0.2, 3.0);
            const double t = rng.uniform(0, 1);
            const BurgersElement g(rng.uniform(0.75, 1.3), rng.uniform(-0.3, 0.3),
                                   rng.uniform(-0.3, 0.3), rng.uniform(-0.3, 0.3));
            const SpaceTimePoint q = g.act({x, t, u});
            const double ux_t = ux / (g.lambda() * g.lambda());
            const BurgersElement lhs = frame_burgers(q.x, q.u, ux_t, q.t).compose(g);
            const BurgersElement rhs = frame_burgers(x, u, ux, t);
            CHECK(std::abs(lhs.lambda() - rhs.lambda()) <= 1e-9);
            CHECK(std::abs(lhs.a() - rhs.a()) <= 1e-9);
            CHECK(std::abs(lhs.b() - rhs.b()) <= 1e-9);
            CHECK(std::abs(lhs.v() - rhs.v()) <= 1e-9);
        }
    }
}

TEST_CASE("invariantize_u: normalization, constants, and the replay oracle") {
    const DiscreteJet flat{1, 0, 1, 2, 1.7, 1.7, 1.7};
    CHECK(invariantize_u(flat, flat.x_mid, flat.u_mid) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(invariantize_u(flat, flat.x_prev, flat.u_prev) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(invariantize_u(flat, flat.x_next, flat.u_next) == doctest::Approx(1.0).epsilon(1e-14));

    SplitMix64 rng(105);
    for (int trial = 0; trial < 100; ++trial) {
        const DiscreteJet z = frame_safe_jet(rng);
        const Sl2Element rho = frame_sl2_cubic(z);
        const double x_l = rng.uniform(z.x_prev, z.x_next);
        const double u_l = rng.uniform(0.7, 1.8);
        double closed_form;
        try {
            closed_form = invariantize_u(z, x_l, u_l);
        } catch (const numerical_error&) {
            continue;
        }
        const PlanePoint replay = rho.act({x_l, u_l});
        CHECK(std::abs(closed_form - replay.u) <= 1e-12 * std::max(1.0, std::abs(replay.u)));
    }
}

TEST_CASE("painleve invariants: exponential data and constants give 1") {
    {
        const DiscreteJet z{1, 0, 1, 2, 1, 1, 1};
        const PainleveInvariants inv = painleve_invariants(z);
        CHECK(inv.i_k == 1.0);
        CHECK(inv.j_k == 1.0);
    }
    SplitMix64 rng(106);
    for (int trial = 0; trial < 50; ++trial) {
        DiscreteJet z = oracles::random_jet(rng);
        z.u_prev = std::exp(z.x_prev);
        z.u_mid = std::exp(z.x_mid);
        z.u_next = std::exp(z.x_next);
        const PainleveInvariants inv = painleve_invariants(z);
        CHECK(std::abs(inv.i_k - 1.0) <= 5e-15);
        CHECK(std::abs(inv.j_k - 1.0) <= 5e-15);
    }
}

TEST_CASE("painleve invariants are invariant under the group action") {
    SplitMix64 rng(107);
    for (int trial = 0; trial < 100; ++trial) {
        const DiscreteJet z = oracles::random_jet(rng);
        const PainleveElement g{rng.uniform(-0.3, 0.3), rng.uniform(-0.3, 0.3)};
        const PainleveInvariants a = painleve_invariants(z);
        const PainleveInvariants b = painleve_invariants(act_jet(g, z));
        CHECK(std::abs(a.i_k - b.i_k) <= 1e-12);
        CHECK(std::abs(a.j_k - b.j_k) <= 1e-12);
    }
}

TEST_CASE("degenerate frames are hard errors") {
    const DiscreteJet zero_mid{1, 0, 1, 2, 1.0, 0.0, 1.0};
    CHECK_THROWS_AS(frame_sl2_cubic(zero_mid), numerical_error);

    const DiscreteJet z{1, 0, 1, 2, 1, 1, 1};
    CHECK_THROWS_AS(frame_superposition(z, exp_pos, exp_pos), numerical_error); // Wronskian 0

    const DiscreteJet negative{1, 0, 1, 2, 1.0, -1.0, 1.0};
    CHECK_THROWS_AS(frame_painleve(negative), numerical_error);
    CHECK_THROWS_AS(painleve_invariants(negative), numerical_error);

    CHECK_THROWS_AS(frame_burgers(0, 0, -1.0, 0), numerical_error);
    CHECK_THROWS_AS(frame_burgers(0, 0, 0.0, 0), numerical_error);
}
