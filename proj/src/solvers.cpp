#include "ifem/solvers.hpp"

#include <cmath>

namespace ifem {

std::vector<double> solve_tridiagonal(std::span<const double> lower,
                                      std::span<const double> diag,
                                      std::span<const double> upper,
                                      std::span<const double> rhs) {
    const std::size_t n = diag.size();
    if (n == 0 || rhs.size() != n || lower.size() != n - 1 || upper.size() != n - 1)
        throw config_error("solve_tridiagonal: inconsistent band lengths");

    std::vector<double> c(n - 1), d(n), x(n);
    if (std::abs(diag[0]) < 1e-300)
        throw numerical_error("solve_tridiagonal: zero pivot at row 0", 0);
    if (n > 1) c[0] = upper[0] / diag[0];
    d[0] = rhs[0] / diag[0];
    for (std::size_t i = 1; i < n; ++i) {
        const double piv = diag[i] - lower[i - 1] * c[i - 1];
        if (std::abs(piv) < 1e-300)
            throw numerical_error("solve_tridiagonal: zero pivot at row " + std::to_string(i),
                                  static_cast<long>(i));
        if (i < n - 1) c[i] = upper[i] / piv;
        d[i] = (rhs[i] - lower[i - 1] * d[i - 1]) / piv;
    }
    x[n - 1] = d[n - 1];
    for (std::size_t i = n - 1; i-- > 0;)
        x[i] = d[i] - c[i] * x[i + 1];
    return x;
}

double estimate_order(std::span<const ConvergenceRow> rows) {
    if (rows.size() < 3)
        throw config_error("estimate_order: need at least 3 rows");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    double h_min = rows.front().h, h_max = rows.front().h;
    for (const auto& r : rows) {
        if (!(r.rel_linf_error > 0))
            throw config_error("estimate_order: errors must be positive");
        if (!(r.h > 0))
            throw config_error("estimate_order: h must be positive");
        h_min = std::min(h_min, r.h);
        h_max = std::max(h_max, r.h);
        const double lx = std::log(r.h);
        const double ly = std::log(r.rel_linf_error);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    if (!(h_max > h_min))
        throw config_error("estimate_order: h values must be distinct");
    const double n = static_cast<double>(rows.size());
    const double denom = n * sxx - sx * sx;
    return (n * sxy - sx * sy) / denom;
}

} // namespace ifem
