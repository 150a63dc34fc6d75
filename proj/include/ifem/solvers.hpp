#ifndef IFEM_SOLVERS_HPP
#define IFEM_SOLVERS_HPP

#include <cmath>
#include <span>
#include <string>
#include <vector>

#include "ifem/errors.hpp"

namespace ifem {

struct NewtonConfig {
    double tol = 1e-15; // on |step|, not on the residual
    int max_iter = 50;
};

// Scalar Newton iteration x <- x - f(x)/df(x).  Terminates when the last
// step is at most cfg.tol in magnitude (or f hits zero exactly); a vanishing
// derivative or exhausting max_iter raises with the last iterate attached.
template <class F, class DF>
double newton_scalar(F&& f, DF&& df, double x0, const NewtonConfig& cfg = {}) {
    double x = x0;
    for (int it = 0; it < cfg.max_iter; ++it) {
        const double fx = f(x);
        if (fx == 0.0) return x;
        const double dfx = df(x);
        if (std::abs(dfx) < 1e-300)
            throw numerical_error("newton_scalar: derivative vanished at iterate " +
                                  std::to_string(x) + " (iteration " + std::to_string(it) + ")");
        const double step = fx / dfx;
        x -= step;
        if (std::abs(step) <= cfg.tol) return x;
    }
    throw numerical_error("newton_scalar: no convergence within " + std::to_string(cfg.max_iter) +
                          " iterations; last iterate " + std::to_string(x));
}

// Thomas algorithm.  lower/upper have length n-1, diag and rhs length n.
std::vector<double> solve_tridiagonal(std::span<const double> lower,
                                      std::span<const double> diag,
                                      std::span<const double> upper,
                                      std::span<const double> rhs);

struct ConvergenceRow {
    int n_elements = 0;
    double h = 0;
    double rel_linf_error = 0;
};

struct ConvergenceTable {
    std::vector<ConvergenceRow> rows; // sorted by h descending
    double fitted_order = 0;
};

// Least-squares slope of log(error) against log(h); needs at least three
// rows with distinct h and positive errors.
double estimate_order(std::span<const ConvergenceRow> rows);

} // namespace ifem

#endif
