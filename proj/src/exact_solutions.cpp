#include "ifem/exact_solutions.hpp"

#include <cmath>

#include "ifem/errors.hpp"

namespace ifem {

namespace {

SchemeId representative_scheme(ProblemId problem) {
    switch (problem) {
    case ProblemId::exp_ode: return SchemeId::exp_invariant;
    case ProblemId::cubic_ode: return SchemeId::cubic_invariant;
    case ProblemId::painleve_ode: return SchemeId::painleve_invariant;
    case ProblemId::linear_ode: return SchemeId::linear_invariant;
    case ProblemId::burgers: break;
    }
    throw config_error("no strong form registered for this problem id");
}

} // namespace

double OdeExactSolution::substitution_residual(double a, double b, int n_samples,
                                               const LinearProblem* lp) const {
    const double h = 1e-4 * std::max(1.0, std::abs(b - a));
    double worst = 0;
    for (int i = 0; i < n_samples; ++i) {
        const double x = a + (b - a) * (i + 0.5) / n_samples;
        const double um = eval(x - h), u0 = eval(x), up = eval(x + h);
        const double ux = (up - um) / (2 * h);
        const double uxx = (up - 2 * u0 + um) / (h * h);
        const double res = uxx - strong_rhs(representative_scheme(problem), x, u0, ux, lp);
        worst = std::max(worst, std::abs(res));
    }
    return worst;
}

const LinearProblem& canonical_linear_problem() {
    static const LinearProblem lp{
        [](double) { return 0.0; },
        [](double) { return -1.0; },
        [](double) { return 0.0; },
        [](double x) { return std::exp(x); },
        [](double x) { return std::exp(-x); },
    };
    return lp;
}

OdeExactSolution exact_solution_for(ProblemId problem, double u0, double ux0) {
    switch (problem) {
    case ProblemId::exp_ode: {
        // u = (x + c1) ln(x + c1) - x + c2 with u_x = ln(x + c1)
        const double c1 = std::exp(ux0);
        const double c2 = u0 - ux0 * c1;
        return {problem, [c1, c2](double x) {
                    return (x + c1) * std::log(x + c1) - x + c2;
                }};
    }
    case ProblemId::cubic_ode: {
        // u^2 = 1/c1 + c1 (x + c2)^2
        const double c1 = (1.0 + u0 * u0 * ux0 * ux0) / (u0 * u0);
        const double c2 = u0 * ux0 / c1;
        return {problem, [c1, c2](double x) {
                    return std::sqrt(1.0 / c1 + c1 * (x + c2) * (x + c2));
                }};
    }
    case ProblemId::painleve_ode: {
        if (!(u0 > 0))
            throw config_error("painleve exact solution: u(0) must be positive");
        const double c2 = ux0 / u0;
        return {problem, [u0, c2](double x) { return u0 * std::exp(c2 * x); }};
    }
    case ProblemId::linear_ode: {
        // u = c1 e^x + c2 e^{-x} solves u_xx - u = 0
        const double c1 = 0.5 * (u0 + ux0);
        const double c2 = 0.5 * (u0 - ux0);
        return {problem, [c1, c2](double x) {
                    return c1 * std::exp(x) + c2 * std::exp(-x);
                }};
    }
    case ProblemId::burgers:
        break;
    }
    throw config_error("exact_solution_for: use TravelingWave for the Burgers problem");
}

double TravelingWave::operator()(double x, double t) const {
    return c - a * std::tanh(a * (x - c * t) / (2.0 * nu));
}

double TravelingWave::substitution_residual(double x0, double x1, double t0, double t1,
                                            int n_samples) const {
    const double hx = 1e-4 * std::max(1.0, std::abs(x1 - x0));
    const double ht = 1e-4 * std::max(1.0, std::abs(t1 - t0) + 1.0);
    double worst = 0;
    for (int i = 0; i < n_samples; ++i) {
        const double x = x0 + (x1 - x0) * (i + 0.5) / n_samples;
        const double t = t0 + (t1 - t0) * (i + 0.5) / n_samples;
        const double u = (*this)(x, t);
        const double ut = ((*this)(x, t + ht) - (*this)(x, t - ht)) / (2 * ht);
        const double ux = ((*this)(x + hx, t) - (*this)(x - hx, t)) / (2 * hx);
        const double uxx = ((*this)(x + hx, t) - 2 * u + (*this)(x - hx, t)) / (hx * hx);
        worst = std::max(worst, std::abs(ut + u * ux - nu * uxx));
    }
    return worst;
}

} // namespace ifem
