#include "ifem/group_actions.hpp"

#include <cmath>
#include <string>

#include "ifem/errors.hpp"

namespace ifem {

namespace {
constexpr double kPoleTol = 1e-14;

double checked_denominator(double gamma, double delta, double x) {
    const double den = gamma * x + delta;
    if (std::abs(den) < kPoleTol)
        throw numerical_error("Sl2Element: pole of fractional-linear map at x=" + std::to_string(x));
    return den;
}
} // namespace

Sl2Element::Sl2Element(double alpha, double beta, double gamma, double delta)
    : alpha_(alpha), beta_(beta), gamma_(gamma), delta_(delta) {
    const double det = alpha_ * delta_ - beta_ * gamma_;
    if (!(det > 1e-12))
        throw config_error("Sl2Element: determinant must be positive, got " + std::to_string(det));
    const double s = std::sqrt(det);
    alpha_ /= s;
    beta_ /= s;
    gamma_ /= s;
    delta_ /= s;
}

double Sl2Element::act_x(double x) const {
    const double den = checked_denominator(gamma_, delta_, x);
    return (alpha_ * x + beta_) / den;
}

PlanePoint Sl2Element::act(PlanePoint p) const {
    const double den = checked_denominator(gamma_, delta_, p.x);
    return {(alpha_ * p.x + beta_) / den, p.u / den};
}

Sl2Element Sl2Element::compose(const Sl2Element& o) const {
    return Sl2Element(alpha_ * o.alpha_ + beta_ * o.gamma_,
                      alpha_ * o.beta_ + beta_ * o.delta_,
                      gamma_ * o.alpha_ + delta_ * o.gamma_,
                      gamma_ * o.beta_ + delta_ * o.delta_);
}

Sl2Element Sl2Element::inverse() const {
    return Sl2Element(delta_, -beta_, -gamma_, alpha_);
}

PlanePoint ExpGroupElement::act(PlanePoint p) const {
    const double s = std::exp(eps);
    return {s * p.x + a, s * p.u + eps * s * p.x + b};
}

ExpGroupElement ExpGroupElement::compose(const ExpGroupElement& o) const {
    const double s = std::exp(eps);
    return {eps + o.eps, a + s * o.a, b + s * o.b + eps * s * o.a};
}

ExpGroupElement ExpGroupElement::inverse() const {
    const double s = std::exp(-eps);
    return {-eps, -a * s, s * (eps * a - b)};
}

PlanePoint SuperpositionElement::act(PlanePoint p) const {
    return {p.x, p.u + eps1 * alpha_fn(p.x) + eps2 * gamma_fn(p.x)};
}

SuperpositionElement SuperpositionElement::compose(const SuperpositionElement& o) const {
    return {eps1 + o.eps1, eps2 + o.eps2, alpha_fn, gamma_fn};
}

SuperpositionElement SuperpositionElement::inverse() const {
    return {-eps1, -eps2, alpha_fn, gamma_fn};
}

PlanePoint PainleveElement::act(PlanePoint p) const {
    return {p.x, p.u * std::exp(a * p.x + b)};
}

PainleveElement PainleveElement::compose(const PainleveElement& o) const {
    return {a + o.a, b + o.b};
}

PainleveElement PainleveElement::inverse() const {
    return {-a, -b};
}

BurgersElement::BurgersElement(double lambda, double a, double b, double v)
    : lambda_(lambda), a_(a), b_(b), v_(v) {
    if (!(lambda > 0))
        throw config_error("BurgersElement: lambda must be positive");
}

SpaceTimePoint BurgersElement::act(SpaceTimePoint p) const {
    return {lambda_ * (p.x + v_ * p.t) + a_,
            lambda_ * lambda_ * p.t + b_,
            (p.u + v_) / lambda_};
}

BurgersElement BurgersElement::compose(const BurgersElement& o) const {
    return BurgersElement(lambda_ * o.lambda_,
                          a_ + lambda_ * o.a_ + lambda_ * v_ * o.b_,
                          b_ + lambda_ * lambda_ * o.b_,
                          o.v_ + o.lambda_ * v_);
}

BurgersElement BurgersElement::inverse() const {
    return BurgersElement(1.0 / lambda_,
                          (-a_ + v_ * b_ / lambda_) / lambda_,
                          -b_ / (lambda_ * lambda_),
                          -v_ / lambda_);
}

template <class G>
DiscreteJet act_jet(const G& g, const DiscreteJet& z) {
    const PlanePoint p = g.act({z.x_prev, z.u_prev});
    const PlanePoint m = g.act({z.x_mid, z.u_mid});
    const PlanePoint n = g.act({z.x_next, z.u_next});
    DiscreteJet out{z.k, p.x, m.x, n.x, p.u, m.u, n.u};
    if (!out.ordered())
        throw numerical_error("act_jet: transformed stencil lost its ordering",
                              static_cast<long>(z.k));
    return out;
}

template DiscreteJet act_jet<Sl2Element>(const Sl2Element&, const DiscreteJet&);
template DiscreteJet act_jet<ExpGroupElement>(const ExpGroupElement&, const DiscreteJet&);
template DiscreteJet act_jet<SuperpositionElement>(const SuperpositionElement&, const DiscreteJet&);
template DiscreteJet act_jet<PainleveElement>(const PainleveElement&, const DiscreteJet&);

double sl2_transform_hat(const Sl2Element& g, const Mesh& mesh, std::size_t k, double x) {
    const double den_x = checked_denominator(g.gamma(), g.delta(), x);
    const double den_k = checked_denominator(g.gamma(), g.delta(), mesh.node(k));
    return hat_eval(mesh, k, x) * den_k / den_x;
}

double sl2_transform_hat_deriv(const Sl2Element& g, const Mesh& mesh, std::size_t k, double x) {
    const double den_x = checked_denominator(g.gamma(), g.delta(), x);
    const double den_k = checked_denominator(g.gamma(), g.delta(), mesh.node(k));
    return den_k * (den_x * hat_deriv(mesh, k, x) - g.gamma() * hat_eval(mesh, k, x));
}

double sl2_form_factor(const Sl2Element& g, double x) {
    const double den = checked_denominator(g.gamma(), g.delta(), x);
    return 1.0 / (den * den);
}

} // namespace ifem
