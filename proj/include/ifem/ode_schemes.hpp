#ifndef IFEM_ODE_SCHEMES_HPP
#define IFEM_ODE_SCHEMES_HPP

#include <functional>
#include <vector>

#include "ifem/mesh.hpp"
#include "ifem/solvers.hpp"

namespace ifem {

enum class SchemeId {
    exp_invariant,        // u_xx = exp(-u_x), invariant scheme
    cubic_invariant,      // u_xx = u^{-3}, invariantized weak form
    cubic_alternative,    // u_xx = u^{-3}, (u^d)^{-3} discretization
    painleve_invariant,   // u_xx = u_x^2/u, invariant scheme
    painleve_noninvariant,// u_xx = u_x^2/u, plain weak form
    linear_invariant,     // u_xx + p u_x + q u = f, invariant weak form
};

// Coefficients and homogeneous solutions of u_xx + p u_x + q u = f.
struct LinearProblem {
    std::function<double(double)> p, q, f;
    std::function<double(double)> alpha, gamma; // homogeneous solutions
};

// Scheme residuals, each written as the displayed equation moved to one
// side (left minus right); a root in u_{k+1} defines one marching step.
double residual_exp(const DiscreteJet& jet);
double residual_cubic_invariant(const DiscreteJet& jet);
double residual_cubic_alt(const DiscreteJet& jet);
double residual_painleve_noninv(const DiscreteJet& jet);
double residual_painleve_inv(const DiscreteJet& jet);

// Invariant discrete weak form of the linear equation at the jet's node:
// the plain weak-form row plus the frame coefficients times the homogeneous
// rows.  Coefficient functions enter through their nodal interpolants so
// every element integral stays closed-form.
double residual_linear_invariant(const DiscreteJet& jet, const LinearProblem& problem);

// The plain (non-invariant) discrete weak-form row, kept as the
// non-invariance witness.
double residual_linear_noninvariant(const DiscreteJet& jet, const LinearProblem& problem);

double residual(SchemeId scheme, const DiscreteJet& jet, const LinearProblem* problem = nullptr);

// Strong-form right-hand side u_xx = Delta(x, u, u_x) of the scheme's
// underlying equation; used by the Taylor start-up.
double strong_rhs(SchemeId scheme, double x, double u, double ux, const LinearProblem* problem = nullptr);

// How the march obtains u_1 from the continuous initial data u(x_0), u_x(x_0).
enum class StartupRule {
    forward_difference, // (u_1 - u_0)/dx = u_x(0); first-order accurate
    taylor2,            // u_1 = u_0 + h u_x(0) + h^2/2 Delta(x_0, u_0, u_x(0))
    seeded,             // caller supplies u_1 (e.g. from an exact solution)
};

struct MarchOptions {
    StartupRule startup = StartupRule::taylor2;
    double u1_seed = 0; // read only when startup == seeded
    NewtonConfig newton{};
};

// Marches the implicit three-point scheme across the mesh as an initial
// value problem: u_{k+1} is the Newton root of the residual with
// (u_{k-1}, u_k) held fixed.  Newton failures and mid-march precondition
// violations abort with the failing node index.
std::vector<double> march_ivp(SchemeId scheme, const Mesh& mesh, double u0, double ux0,
                              const MarchOptions& options = {},
                              const LinearProblem* problem = nullptr);

} // namespace ifem

#endif
