#ifndef IFEM_MESH_HPP
#define IFEM_MESH_HPP

#include <cstddef>
#include <span>
#include <vector>

namespace ifem {

// Three stencil points (x_{k-1},u_{k-1}), (x_k,u_k), (x_{k+1},u_{k+1})
// together with their node index k.  Every scheme residual and every moving
// frame is a function of one of these.
struct DiscreteJet {
    std::size_t k = 0;
    double x_prev = 0, x_mid = 0, x_next = 0;
    double u_prev = 0, u_mid = 0, u_next = 0;

    bool ordered() const { return x_prev < x_mid && x_mid < x_next; }
};

// Finite-difference quantities of one jet, computed together.  The centered
// slope equals the element-length weighted mean of the one-sided slopes,
// which tests use as a free self-check.
struct StencilQuantities {
    double dx_left = 0;      // x_k - x_{k-1}
    double dx_right = 0;     // x_{k+1} - x_k
    double ux_left = 0;      // (u_k - u_{k-1}) / dx_left
    double ux_right = 0;     // (u_{k+1} - u_k) / dx_right
    double ux_centered = 0;  // (u_{k+1} - u_{k-1}) / (x_{k+1} - x_{k-1})
    double uxx = 0;          // 2 (ux_right - ux_left) / (x_{k+1} - x_{k-1})
    double x_bar = 0;        // (x_{k+1} + x_{k-1}) / 2
    double u_bar = 0;        // (u_{k+1} + u_{k-1}) / 2
};

// Strictly increasing node coordinates, at least three of them.
class Mesh {
public:
    explicit Mesh(std::vector<double> nodes);

    std::size_t node_count() const { return nodes_.size(); }
    std::size_t element_count() const { return nodes_.size() - 1; }
    double node(std::size_t k) const { return nodes_[k]; }
    double front() const { return nodes_.front(); }
    double back() const { return nodes_.back(); }
    std::span<const double> nodes() const { return nodes_; }

    // Jet at interior node k (1 <= k <= node_count()-2) for nodal values u.
    DiscreteJet jet(std::size_t k, std::span<const double> u) const;

private:
    std::vector<double> nodes_;
};

// n_elements+1 equally spaced nodes from a to b inclusive.
Mesh build_uniform_mesh(double a, double b, int n_elements);

StencilQuantities stencil_quantities(const DiscreteJet& jet);

// Piecewise-linear nodal basis function k evaluated at x.  Boundary nodes
// carry half-hats (support truncated at the domain ends).  Zero outside
// [x_{k-1}, x_{k+1}].
double hat_eval(const Mesh& mesh, std::size_t k, double x);

// Derivative of hat k at x.  The derivative is undefined at the kinks, so
// querying exactly at a mesh node throws; integrate element-wise instead.
double hat_deriv(const Mesh& mesh, std::size_t k, double x);

} // namespace ifem

#endif
