#include "ifem/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ifem/errors.hpp"

namespace ifem {

Mesh::Mesh(std::vector<double> nodes) : nodes_(std::move(nodes)) {
    if (nodes_.size() < 3)
        throw config_error("Mesh: need at least 3 nodes, got " + std::to_string(nodes_.size()));
    for (std::size_t i = 0; i + 1 < nodes_.size(); ++i) {
        if (!std::isfinite(nodes_[i]) || !(nodes_[i] < nodes_[i + 1]))
            throw config_error("Mesh: nodes must be finite and strictly increasing (violated at index " +
                               std::to_string(i) + ")");
    }
    if (!std::isfinite(nodes_.back()))
        throw config_error("Mesh: nodes must be finite");
}

DiscreteJet Mesh::jet(std::size_t k, std::span<const double> u) const {
    if (k == 0 || k + 1 >= nodes_.size())
        throw config_error("Mesh::jet: k=" + std::to_string(k) + " is not an interior node");
    if (u.size() != nodes_.size())
        throw config_error("Mesh::jet: value array length does not match node count");
    return DiscreteJet{k,
                       nodes_[k - 1], nodes_[k], nodes_[k + 1],
                       u[k - 1],      u[k],      u[k + 1]};
}

Mesh build_uniform_mesh(double a, double b, int n_elements) {
    if (!(a < b))
        throw config_error("build_uniform_mesh: need a < b");
    if (n_elements < 2)
        throw config_error("build_uniform_mesh: need n_elements >= 2");
    std::vector<double> nodes(static_cast<std::size_t>(n_elements) + 1);
    const double h = (b - a) / n_elements;
    for (std::size_t i = 0; i < nodes.size(); ++i)
        nodes[i] = a + h * static_cast<double>(i);
    nodes.back() = b;
    return Mesh(std::move(nodes));
}

StencilQuantities stencil_quantities(const DiscreteJet& jet) {
    if (!jet.ordered())
        throw numerical_error("stencil_quantities: jet nodes not strictly ordered",
                              static_cast<long>(jet.k));
    StencilQuantities s;
    s.dx_left = jet.x_mid - jet.x_prev;
    s.dx_right = jet.x_next - jet.x_mid;
    s.ux_left = (jet.u_mid - jet.u_prev) / s.dx_left;
    s.ux_right = (jet.u_next - jet.u_mid) / s.dx_right;
    s.ux_centered = (jet.u_next - jet.u_prev) / (jet.x_next - jet.x_prev);
    s.uxx = 2.0 * (s.ux_right - s.ux_left) / (jet.x_next - jet.x_prev);
    s.x_bar = 0.5 * (jet.x_next + jet.x_prev);
    s.u_bar = 0.5 * (jet.u_next + jet.u_prev);
    return s;
}

double hat_eval(const Mesh& mesh, std::size_t k, double x) {
    if (k >= mesh.node_count())
        throw config_error("hat_eval: node index out of range");
    const double xc = mesh.node(k);
    if (x == xc) return 1.0;
    if (k > 0) {
        const double xl = mesh.node(k - 1);
        if (x >= xl && x < xc) return (x - xl) / (xc - xl);
    }
    if (k + 1 < mesh.node_count()) {
        const double xr = mesh.node(k + 1);
        if (x > xc && x <= xr) return (xr - x) / (xr - xc);
    }
    return 0.0;
}

double hat_deriv(const Mesh& mesh, std::size_t k, double x) {
    if (k >= mesh.node_count())
        throw config_error("hat_deriv: node index out of range");
    const auto nodes = mesh.nodes();
    const auto it = std::lower_bound(nodes.begin(), nodes.end(), x);
    if (it != nodes.end() && *it == x)
        throw numerical_error("hat_deriv: derivative undefined at mesh node x=" + std::to_string(x),
                              static_cast<long>(it - nodes.begin()));
    const double xc = mesh.node(k);
    if (k > 0) {
        const double xl = mesh.node(k - 1);
        if (x > xl && x < xc) return 1.0 / (xc - xl);
    }
    if (k + 1 < mesh.node_count()) {
        const double xr = mesh.node(k + 1);
        if (x > xc && x < xr) return -1.0 / (xr - xc);
    }
    return 0.0;
}

} // namespace ifem
