#include "ifem/moving_frames.hpp"

#include <cmath>
#include <string>

#include "ifem/errors.hpp"

namespace ifem {

namespace {
constexpr double kDegenerateTol = 1e-12;

void require_positive_u(const DiscreteJet& z, const char* who) {
    if (!(z.u_prev > 0) || !(z.u_mid > 0) || !(z.u_next > 0))
        throw numerical_error(std::string(who) + ": requires strictly positive u values",
                              static_cast<long>(z.k));
}
} // namespace

Sl2Element frame_sl2_cubic(const DiscreteJet& jet) {
    const StencilQuantities s = stencil_quantities(jet);
    const double ux = s.ux_centered;
    if (std::abs(jet.u_mid) < kDegenerateTol)
        throw numerical_error("frame_sl2_cubic: u_k vanishes", static_cast<long>(jet.k));
    const double den = (jet.x_mid - s.x_bar) * ux + s.u_bar;
    if (std::abs(den) < kDegenerateTol)
        throw numerical_error("frame_sl2_cubic: cross-section not transverse at this jet",
                              static_cast<long>(jet.k));
    const double alpha = 1.0 / jet.u_mid;
    const double beta = -jet.x_mid / jet.u_mid;
    const double gamma = jet.u_mid * ux / den;
    const double delta = jet.u_mid * (s.u_bar - s.x_bar * ux) / den;
    return Sl2Element(alpha, beta, gamma, delta);
}

SuperpositionElement frame_superposition(const DiscreteJet& jet,
                                         const std::function<double(double)>& alpha_fn,
                                         const std::function<double(double)>& gamma_fn) {
    const StencilQuantities s = stencil_quantities(jet);
    const double a_k = alpha_fn(jet.x_mid);
    const double g_k = gamma_fn(jet.x_mid);
    const double span = jet.x_next - jet.x_prev;
    const double a_x = (alpha_fn(jet.x_next) - alpha_fn(jet.x_prev)) / span;
    const double g_x = (gamma_fn(jet.x_next) - gamma_fn(jet.x_prev)) / span;
    const double w = g_k * a_x - a_k * g_x;
    if (std::abs(w) < kDegenerateTol)
        throw numerical_error("frame_superposition: discrete Wronskian vanishes",
                              static_cast<long>(jet.k));
    const double ux = s.ux_centered;
    return {(jet.u_mid * g_x - g_k * ux) / w,
            (a_k * ux - jet.u_mid * a_x) / w,
            alpha_fn, gamma_fn};
}

PainleveElement frame_painleve(const DiscreteJet& jet) {
    require_positive_u(jet, "frame_painleve");
    const double span = jet.x_next - jet.x_prev;
    const double a = std::log(jet.u_prev / jet.u_next) / span;
    const double b = jet.x_mid * std::log(jet.u_next / jet.u_prev) / span - std::log(jet.u_mid);
    return {a, b};
}

BurgersElement frame_burgers(double x, double u, double ux, double t) {
    if (!(ux > 0))
        throw numerical_error("frame_burgers: cross-section u_x = 1 unreachable, slope " +
                              std::to_string(ux) + " is not positive");
    const double lambda = std::sqrt(ux);
    return BurgersElement(lambda, -lambda * (x - t * u), -t * ux, -u);
}

double invariantize_u(const DiscreteJet& jet, double x_l, double u_l) {
    const StencilQuantities s = stencil_quantities(jet);
    const double ux = s.ux_centered;
    const double num_bracket = (jet.x_mid - s.x_bar) * ux + s.u_bar;
    const double den_bracket = (x_l - s.x_bar) * ux + s.u_bar;
    if (std::abs(jet.u_mid) < kDegenerateTol || std::abs(den_bracket) < kDegenerateTol ||
        std::abs(num_bracket) < kDegenerateTol)
        throw numerical_error("invariantize_u: degenerate denominator", static_cast<long>(jet.k));
    return u_l * num_bracket / (jet.u_mid * den_bracket);
}

PainleveInvariants painleve_invariants(const DiscreteJet& jet) {
    require_positive_u(jet, "painleve_invariants");
    const double dx_right = jet.x_next - jet.x_mid;
    const double dx_left = jet.x_mid - jet.x_prev;
    const double span = jet.x_next - jet.x_prev;
    const double log_ratio = std::log(jet.u_next / jet.u_prev);
    PainleveInvariants inv;
    inv.i_k = jet.u_next / jet.u_mid * std::exp(-dx_right / span * log_ratio);
    inv.j_k = jet.u_prev / jet.u_mid * std::exp(dx_left / span * log_ratio);
    return inv;
}

} // namespace ifem
