#ifndef IFEM_EXACT_SOLUTIONS_HPP
#define IFEM_EXACT_SOLUTIONS_HPP

#include <functional>

#include "ifem/ode_schemes.hpp"

namespace ifem {

enum class ProblemId { exp_ode, cubic_ode, painleve_ode, linear_ode, burgers };

// Closed-form reference solution of one of the ODE problems, fitted to the
// initial data u(a) = u0, u_x(a) = ux0 at a = 0.
struct OdeExactSolution {
    ProblemId problem = ProblemId::exp_ode;
    std::function<double(double)> eval;

    // Max |u_xx - Delta(x, u, u_x)| over n_samples points of [a, b], all
    // derivatives taken by central differences.  Every registered solution
    // must pass this below 1e-6 before an experiment uses it.
    double substitution_residual(double a, double b, int n_samples = 20,
                                 const LinearProblem* lp = nullptr) const;
};

// The canonical linear problem used by the harness: p = 0, q = -1, f = 0,
// homogeneous solutions alpha = e^x, gamma = e^{-x}.
const LinearProblem& canonical_linear_problem();

OdeExactSolution exact_solution_for(ProblemId problem, double u0, double ux0);

// Viscous traveling wave u = c - a tanh(a (x - c t) / (2 nu)).
struct TravelingWave {
    double nu = 0.1, a = 0.5, c = 1.0;
    double operator()(double x, double t) const;
    // Max |u_t + u u_x - nu u_xx| by central differences over a sample grid.
    double substitution_residual(double x0, double x1, double t0, double t1,
                                 int n_samples = 20) const;
};

} // namespace ifem

#endif
