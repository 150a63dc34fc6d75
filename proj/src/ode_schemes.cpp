#include "ifem/ode_schemes.hpp"

#include <cmath>
#include <string>

#include "ifem/errors.hpp"
#include "ifem/moving_frames.hpp"

namespace ifem {

namespace {

void require_positive_u(const DiscreteJet& z, const char* who) {
    if (!(z.u_prev > 0) || !(z.u_mid > 0) || !(z.u_next > 0))
        throw numerical_error(std::string(who) + ": requires strictly positive u values",
                              static_cast<long>(z.k));
}

void require_nonzero_u(const DiscreteJet& z, const char* who) {
    if (z.u_prev == 0 || z.u_mid == 0 || z.u_next == 0)
        throw numerical_error(std::string(who) + ": u vanishes on the stencil",
                              static_cast<long>(z.k));
}

// Integral over one element of the product of two linear factors, each
// given by its endpoint values.
double int2(double h, double a0, double a1, double b0, double b1) {
    return h * (2 * a0 * b0 + a0 * b1 + a1 * b0 + 2 * a1 * b1) / 6.0;
}

// Same for three linear factors; 2-point Gauss is exact for the cubic.
double int3(double h, double a0, double a1, double b0, double b1, double c0, double c1) {
    constexpr double r = 0.28867513459481288225; // 1/(2 sqrt(3))
    const double s0 = 0.5 - r, s1 = 0.5 + r;
    auto lin = [](double v0, double v1, double s) { return v0 + (v1 - v0) * s; };
    return 0.5 * h * (lin(a0, a1, s0) * lin(b0, b1, s0) * lin(c0, c1, s0) +
                      lin(a0, a1, s1) * lin(b0, b1, s1) * lin(c0, c1, s1));
}

// One row of the discrete weak form of the linear equation at the jet's
// node, evaluated on nodal data (w_prev, w_mid, w_next):
//   int [ -w_x phi_k' + (p w_x + q w - f) phi_k ] dx
// with p, q, f replaced by their nodal interpolants.
double linear_weak_row(const DiscreteJet& z, const LinearProblem& lp,
                       double w_prev, double w_mid, double w_next, bool include_f) {
    const double dxl = z.x_mid - z.x_prev;
    const double dxr = z.x_next - z.x_mid;
    const double p_prev = lp.p(z.x_prev), p_mid = lp.p(z.x_mid), p_next = lp.p(z.x_next);
    const double q_prev = lp.q(z.x_prev), q_mid = lp.q(z.x_mid), q_next = lp.q(z.x_next);

    // left element [x_prev, x_mid]: phi_k ramps 0 -> 1, phi_k' = 1/dxl
    const double wxl = (w_mid - w_prev) / dxl;
    double row = -wxl; // int -w_x phi_k' = -wxl * (1/dxl) * dxl
    row += wxl * int2(dxl, p_prev, p_mid, 0.0, 1.0);
    row += int3(dxl, q_prev, q_mid, w_prev, w_mid, 0.0, 1.0);

    // right element [x_mid, x_next]: phi_k ramps 1 -> 0, phi_k' = -1/dxr
    const double wxr = (w_next - w_mid) / dxr;
    row += wxr; // int -w_x phi_k' = -wxr * (-1/dxr) * dxr
    row += wxr * int2(dxr, p_mid, p_next, 1.0, 0.0);
    row += int3(dxr, q_mid, q_next, w_mid, w_next, 1.0, 0.0);

    if (include_f) {
        const double f_prev = lp.f(z.x_prev), f_mid = lp.f(z.x_mid), f_next = lp.f(z.x_next);
        row -= int2(dxl, f_prev, f_mid, 0.0, 1.0);
        row -= int2(dxr, f_mid, f_next, 1.0, 0.0);
    }
    return row;
}

} // namespace

double residual_exp(const DiscreteJet& jet) {
    const StencilQuantities s = stencil_quantities(jet);
    return (s.dx_right + s.dx_left) * s.uxx
         - s.dx_left * std::exp(-s.ux_left)
         - s.dx_right * std::exp(-s.ux_right);
}

double residual_cubic_invariant(const DiscreteJet& jet) {
    require_nonzero_u(jet, "residual_cubic_invariant");
    const StencilQuantities s = stencil_quantities(jet);
    const double ux = s.ux_centered;
    const double br_prev = (jet.x_prev - s.x_bar) * ux + s.u_bar;
    const double br_mid = (jet.x_mid - s.x_bar) * ux + s.u_bar;
    const double br_next = (jet.x_next - s.x_bar) * ux + s.u_bar;
    if (std::abs(br_prev) < 1e-12 || std::abs(br_mid) < 1e-12 || std::abs(br_next) < 1e-12)
        throw numerical_error("residual_cubic_invariant: degenerate invariantization bracket",
                              static_cast<long>(jet.k));
    const double span = jet.x_next - jet.x_prev;
    const double u3_prev = jet.u_prev * jet.u_prev * jet.u_prev;
    const double u3_mid = jet.u_mid * jet.u_mid * jet.u_mid;
    const double u3_next = jet.u_next * jet.u_next * jet.u_next;
    return -s.ux_right + s.ux_left
         + s.dx_left * br_prev * br_prev / (6.0 * u3_prev * br_mid * br_mid)
         + span * br_mid * br_mid / (3.0 * u3_mid * br_next * br_prev)
         + s.dx_right * br_next * br_next / (6.0 * u3_next * br_mid * br_mid);
}

double residual_cubic_alt(const DiscreteJet& jet) {
    require_nonzero_u(jet, "residual_cubic_alt");
    const StencilQuantities s = stencil_quantities(jet);
    const double u2_mid = jet.u_mid * jet.u_mid;
    return s.ux_right - s.ux_left
         - s.dx_right / (2.0 * u2_mid * jet.u_next)
         - s.dx_left / (2.0 * u2_mid * jet.u_prev);
}

double residual_painleve_noninv(const DiscreteJet& jet) {
    require_positive_u(jet, "residual_painleve_noninv");
    const StencilQuantities s = stencil_quantities(jet);
    return -2.0 * (s.ux_right - s.ux_left)
         + jet.u_prev / s.dx_left * std::log(jet.u_prev / jet.u_mid)
         + jet.u_next / s.dx_right * std::log(jet.u_next / jet.u_mid);
}

double residual_painleve_inv(const DiscreteJet& jet) {
    const PainleveInvariants inv = painleve_invariants(jet);
    const double dxl = jet.x_mid - jet.x_prev;
    const double dxr = jet.x_next - jet.x_mid;
    return -2.0 * ((inv.i_k - 1.0) / dxr - (1.0 - inv.j_k) / dxl)
         + inv.j_k * std::log(inv.j_k) / dxl
         + inv.i_k * std::log(inv.i_k) / dxr;
}

double residual_linear_invariant(const DiscreteJet& jet, const LinearProblem& lp) {
    const SuperpositionElement frame = frame_superposition(jet, lp.alpha, lp.gamma);
    const double a_prev = lp.alpha(jet.x_prev), a_mid = lp.alpha(jet.x_mid), a_next = lp.alpha(jet.x_next);
    const double g_prev = lp.gamma(jet.x_prev), g_mid = lp.gamma(jet.x_mid), g_next = lp.gamma(jet.x_next);
    return linear_weak_row(jet, lp, jet.u_prev, jet.u_mid, jet.u_next, true)
         + frame.eps1 * linear_weak_row(jet, lp, a_prev, a_mid, a_next, false)
         + frame.eps2 * linear_weak_row(jet, lp, g_prev, g_mid, g_next, false);
}

double residual_linear_noninvariant(const DiscreteJet& jet, const LinearProblem& lp) {
    return linear_weak_row(jet, lp, jet.u_prev, jet.u_mid, jet.u_next, true);
}

double residual(SchemeId scheme, const DiscreteJet& jet, const LinearProblem* problem) {
    switch (scheme) {
    case SchemeId::exp_invariant: return residual_exp(jet);
    case SchemeId::cubic_invariant: return residual_cubic_invariant(jet);
    case SchemeId::cubic_alternative: return residual_cubic_alt(jet);
    case SchemeId::painleve_invariant: return residual_painleve_inv(jet);
    case SchemeId::painleve_noninvariant: return residual_painleve_noninv(jet);
    case SchemeId::linear_invariant:
        if (!problem)
            throw config_error("residual: linear_invariant needs a LinearProblem");
        return residual_linear_invariant(jet, *problem);
    }
    throw config_error("residual: unknown scheme");
}

double strong_rhs(SchemeId scheme, double x, double u, double ux, const LinearProblem* problem) {
    switch (scheme) {
    case SchemeId::exp_invariant: return std::exp(-ux);
    case SchemeId::cubic_invariant:
    case SchemeId::cubic_alternative:
        if (u == 0) throw numerical_error("strong_rhs: u = 0 in u^{-3}");
        return 1.0 / (u * u * u);
    case SchemeId::painleve_invariant:
    case SchemeId::painleve_noninvariant:
        if (u == 0) throw numerical_error("strong_rhs: u = 0 in u_x^2/u");
        return ux * ux / u;
    case SchemeId::linear_invariant:
        if (!problem)
            throw config_error("strong_rhs: linear_invariant needs a LinearProblem");
        return problem->f(x) - problem->p(x) * ux - problem->q(x) * u;
    }
    throw config_error("strong_rhs: unknown scheme");
}

namespace {

// Analytic d(residual)/d(u_next) where the closed form is short; the other
// schemes use a central difference.
bool analytic_derivative(SchemeId scheme, const DiscreteJet& z, double& out) {
    const double dxr = z.x_next - z.x_mid;
    switch (scheme) {
    case SchemeId::exp_invariant: {
        const double uxr = (z.u_next - z.u_mid) / dxr;
        out = 2.0 / dxr + std::exp(-uxr);
        return true;
    }
    case SchemeId::cubic_alternative: {
        out = 1.0 / dxr + dxr / (2.0 * z.u_mid * z.u_mid * z.u_next * z.u_next);
        return true;
    }
    case SchemeId::painleve_noninvariant: {
        out = -2.0 / dxr + (std::log(z.u_next / z.u_mid) + 1.0) / dxr;
        return true;
    }
    default:
        return false;
    }
}

} // namespace

std::vector<double> march_ivp(SchemeId scheme, const Mesh& mesh, double u0, double ux0,
                              const MarchOptions& options, const LinearProblem* problem) {
    const std::size_t n = mesh.node_count();
    std::vector<double> u(n);
    u[0] = u0;

    const double h0 = mesh.node(1) - mesh.node(0);
    switch (options.startup) {
    case StartupRule::forward_difference:
        u[1] = u0 + h0 * ux0;
        break;
    case StartupRule::taylor2:
        u[1] = u0 + h0 * ux0 + 0.5 * h0 * h0 * strong_rhs(scheme, mesh.node(0), u0, ux0, problem);
        break;
    case StartupRule::seeded:
        u[1] = options.u1_seed;
        break;
    }

    for (std::size_t k = 1; k + 1 < n; ++k) {
        DiscreteJet z{k, mesh.node(k - 1), mesh.node(k), mesh.node(k + 1), u[k - 1], u[k], 0.0};
        auto f = [&](double trial) {
            z.u_next = trial;
            return residual(scheme, z, problem);
        };
        auto df = [&](double trial) {
            z.u_next = trial;
            double d;
            if (analytic_derivative(scheme, z, d)) return d;
            const double step = 1e-7 * std::max(1.0, std::abs(trial));
            DiscreteJet zp = z, zm = z;
            zp.u_next = trial + step;
            zm.u_next = trial - step;
            return (residual(scheme, zp, problem) - residual(scheme, zm, problem)) / (2.0 * step);
        };
        const double guess = 2.0 * u[k] - u[k - 1];
        try {
            u[k + 1] = newton_scalar(f, df, guess, options.newton);
        } catch (const numerical_error& e) {
            throw numerical_error("march_ivp: step at node " + std::to_string(k) + " (x=" +
                                  std::to_string(mesh.node(k)) + ") failed: " + e.what(),
                                  static_cast<long>(k));
        }
    }
    return u;
}

} // namespace ifem
