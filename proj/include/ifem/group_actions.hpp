#ifndef IFEM_GROUP_ACTIONS_HPP
#define IFEM_GROUP_ACTIONS_HPP

#include <functional>

#include "ifem/mesh.hpp"

namespace ifem {

struct PlanePoint {
    double x = 0, u = 0;
};

struct SpaceTimePoint {
    double x = 0, t = 0, u = 0;
};

// X = (a x + b)/(c x + d) with a d - b c = 1, U = u/(c x + d).
// The constructor rescales the entries so the determinant is exactly
// normalized; a non-positive determinant is rejected.
class Sl2Element {
public:
    Sl2Element(double alpha, double beta, double gamma, double delta);
    static Sl2Element identity() { return Sl2Element(1, 0, 0, 1); }

    double alpha() const { return alpha_; }
    double beta() const { return beta_; }
    double gamma() const { return gamma_; }
    double delta() const { return delta_; }

    double act_x(double x) const;
    PlanePoint act(PlanePoint p) const;
    Sl2Element compose(const Sl2Element& other) const; // this after other
    Sl2Element inverse() const;

private:
    double alpha_, beta_, gamma_, delta_;
};

// X = e^eps x + a,  U = e^eps u + eps e^eps x + b.
struct ExpGroupElement {
    double eps = 0, a = 0, b = 0;

    static ExpGroupElement identity() { return {}; }
    PlanePoint act(PlanePoint p) const;
    ExpGroupElement compose(const ExpGroupElement& other) const;
    ExpGroupElement inverse() const;
};

// X = x,  U = u + eps1 alpha(x) + eps2 gamma(x), with alpha, gamma two
// linearly independent homogeneous solutions.  compose/inverse assume both
// elements carry the same pair of functions.
struct SuperpositionElement {
    double eps1 = 0, eps2 = 0;
    std::function<double(double)> alpha_fn, gamma_fn;

    PlanePoint act(PlanePoint p) const;
    SuperpositionElement compose(const SuperpositionElement& other) const;
    SuperpositionElement inverse() const;
};

// X = x,  U = u e^{a x + b}.
struct PainleveElement {
    double a = 0, b = 0;

    static PainleveElement identity() { return {}; }
    PlanePoint act(PlanePoint p) const;
    PainleveElement compose(const PainleveElement& other) const;
    PainleveElement inverse() const;
};

// X = lambda (x + v t) + a,  T = lambda^2 t + b,  U = (u + v)/lambda.
class BurgersElement {
public:
    BurgersElement() = default; // identity
    BurgersElement(double lambda, double a, double b, double v);
    static BurgersElement identity() { return {}; }

    double lambda() const { return lambda_; }
    double a() const { return a_; }
    double b() const { return b_; }
    double v() const { return v_; }

    SpaceTimePoint act(SpaceTimePoint p) const;
    BurgersElement compose(const BurgersElement& other) const;
    BurgersElement inverse() const;

private:
    double lambda_ = 1, a_ = 0, b_ = 0, v_ = 0;
};

template <class G>
PlanePoint act_point(const G& g, PlanePoint p) {
    return g.act(p);
}

inline SpaceTimePoint act_point(const BurgersElement& g, SpaceTimePoint p) {
    return g.act(p);
}

// Componentwise product action on a jet; the index is untouched.  Throws if
// the transformed stencil loses its ordering (a fractional-linear map can
// fold the stencil across its pole).
template <class G>
DiscreteJet act_jet(const G& g, const DiscreteJet& z);

// Transformation law of the hat function and of its derivative under a
// fractional-linear map; x is the untransformed coordinate.
double sl2_transform_hat(const Sl2Element& g, const Mesh& mesh, std::size_t k, double x);
double sl2_transform_hat_deriv(const Sl2Element& g, const Mesh& mesh, std::size_t k, double x);

// Density of the transformed one-form against dx: 1/(gamma x + delta)^2.
double sl2_form_factor(const Sl2Element& g, double x);

} // namespace ifem

#endif
