#ifndef IFEM_BURGERS_HPP
#define IFEM_BURGERS_HPP

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "ifem/group_actions.hpp"

namespace ifem {

// Semi-discrete state of Burgers' equation u_t + u u_x = nu u_xx: node
// positions and nodal values at time t.  Nodes must stay strictly ordered.
struct BurgersState {
    double t = 0;
    std::vector<double> x;
    std::vector<double> u;
    double nu = 0;
};

// Checks shape, viscosity and node ordering; throws on violation.
void validate_state(const BurgersState& state);

struct SemiDiscreteRhs {
    std::vector<double> du_dt;
    std::vector<double> dx_dt;
};

enum class MeshMotion { fixed, lagrangian, prescribed };

// Fixed-mesh Galerkin baseline: solves the consistent-mass tridiagonal
// system for du/dt; dx/dt is zero.  Assembled rows are checked for strict
// diagonal dominance.
SemiDiscreteRhs assemble_galerkin_fixed(const BurgersState& state);

// Symmetry-preserving Lagrangian scheme: normalized mass rows, right-hand
// side nu u_xx - ((u_{l+1} - 2 u_l + u_{l-1})/3) u_x, mesh law dx/dt = u.
SemiDiscreteRhs assemble_invariant_lagrangian(const BurgersState& state);

// Symmetry-preserving scheme on an arbitrarily moving mesh; the mesh-velocity
// coupling terms sit on the right-hand side.  `prescribed` supplies nodal
// velocities when motion == prescribed and is ignored otherwise.
SemiDiscreteRhs assemble_invariant_radaptive(const BurgersState& state, MeshMotion motion,
                                             std::span<const double> prescribed = {});

// Serial reference implementations, kept for testing the parallel kernels
// and for the benchmark target.
namespace ref {
SemiDiscreteRhs assemble_galerkin_fixed(const BurgersState& state);
SemiDiscreteRhs assemble_invariant_lagrangian(const BurgersState& state);
SemiDiscreteRhs assemble_invariant_radaptive(const BurgersState& state, MeshMotion motion,
                                             std::span<const double> prescribed = {});
} // namespace ref

// Transforms an entire state (nodes, values, time) by a Burgers group
// element; the viscosity is untouched.
BurgersState act_state(const BurgersElement& g, const BurgersState& state);

using Assembler = std::function<SemiDiscreteRhs(const BurgersState&)>;

// Dirichlet boundary data u(x, t) applied to both end nodes after a step.
struct BoundaryPolicy {
    std::function<double(double, double)> value;
};

// Classical RK4 update of (x, u).  With a boundary policy present the end
// nodes are pinned in space, their velocities are zeroed during the stages
// and their values are overwritten from the policy at the new time.  A step
// that loses node ordering throws with the offending index.
BurgersState rk4_step(const BurgersState& state, double dt, const Assembler& assembler,
                      const std::optional<BoundaryPolicy>& boundary = std::nullopt);

// Repeated rk4_step until t_end; returns snapshots every `snapshot_stride`
// steps (the initial and final states always included).
std::vector<BurgersState> simulate(const BurgersState& initial, const Assembler& assembler,
                                   const std::optional<BoundaryPolicy>& boundary, double dt,
                                   double t_end, int snapshot_stride);

// RK4 stability bound for the stiff diffusion term: 0.25 min(dx)^2 / nu.
double advisory_dt_bound(const BurgersState& state);

} // namespace ifem

#endif
