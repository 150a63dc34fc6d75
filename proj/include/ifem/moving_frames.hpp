#ifndef IFEM_MOVING_FRAMES_HPP
#define IFEM_MOVING_FRAMES_HPP

#include <functional>

#include "ifem/group_actions.hpp"
#include "ifem/mesh.hpp"

namespace ifem {

// Closed-form right moving frames.  Each frame sends its jet onto the
// group's cross-section; near-degenerate normalization denominators are hard
// errors rather than clamped values.

// Frame of the fractional-linear action for u_xx = u^{-3}; cross-section
// {x_k = 0, u_k = 1, u_x^k = 0} with the centered slope.
Sl2Element frame_sl2_cubic(const DiscreteJet& jet);

// Frame of the superposition action for the linear equation; cross-section
// {u_k = 0, u_x^k = 0}.
SuperpositionElement frame_superposition(const DiscreteJet& jet,
                                         const std::function<double(double)>& alpha_fn,
                                         const std::function<double(double)>& gamma_fn);

// Frame of the scaling action u -> u e^{a x + b}; cross-section
// {u_k = 1, u_x^k = 0}.  Requires positive u values.
PainleveElement frame_painleve(const DiscreteJet& jet);

// Frame of the Burgers subgroup at a single node; cross-section
// {x = t = u = 0, u_x = 1}.  The caller supplies the centered slope, which
// must be positive for the cross-section to be reachable.
BurgersElement frame_burgers(double x, double u, double ux, double t);

// Invariantization of u_l under the frame of frame_sl2_cubic's group,
// written out in closed form.
double invariantize_u(const DiscreteJet& jet, double x_l, double u_l);

// The two invariants of the symmetry-preserving scheme for u_xx = u_x^2/u.
struct PainleveInvariants {
    double i_k = 1, j_k = 1;
};
PainleveInvariants painleve_invariants(const DiscreteJet& jet);

} // namespace ifem

#endif
