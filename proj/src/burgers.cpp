#include "ifem/burgers.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>

#include "ifem/errors.hpp"
#include "ifem/solvers.hpp"

namespace ifem {

void validate_state(const BurgersState& state) {
    if (state.x.size() != state.u.size())
        throw config_error("BurgersState: nodes and values must have the same length");
    if (state.x.size() < 3)
        throw config_error("BurgersState: need at least 3 nodes");
    if (!(state.nu > 0))
        throw config_error("BurgersState: viscosity must be positive");
    for (std::size_t l = 0; l + 1 < state.x.size(); ++l)
        if (!(state.x[l] < state.x[l + 1]))
            throw numerical_error("BurgersState: mesh tangled at index " + std::to_string(l),
                                  static_cast<long>(l));
}

namespace {

struct Bands {
    std::vector<double> lower, diag, upper, rhs;
    explicit Bands(std::size_t n)
        : lower(n - 1, 0.0), diag(n, 1.0), upper(n - 1, 0.0), rhs(n, 0.0) {}
};

// Row l of the fixed-mesh Galerkin system: consistent P1 mass against the
// exact element integrals of the diffusion and quadratic flux terms.
inline void galerkin_row(const BurgersState& s, std::size_t l, double& lo, double& di,
                         double& up, double& f) {
    const double dxl = s.x[l] - s.x[l - 1];
    const double dxr = s.x[l + 1] - s.x[l];
    const double ul = s.u[l - 1], um = s.u[l], ur = s.u[l + 1];
    lo = dxl / 6.0;
    di = (dxl + dxr) / 3.0;
    up = dxr / 6.0;
    f = s.nu * ((ur - um) / dxr - (um - ul) / dxl)
      + ((ul * ul + ul * um + um * um) - (um * um + um * ur + ur * ur)) / 6.0;
}

// Row l of the invariant schemes' normalized mass system together with the
// stencil quantities the right-hand sides share.
inline void invariant_mass_row(const BurgersState& s, std::size_t l, double& lo, double& di,
                               double& up, double& ux, double& uxx) {
    const double dxl = s.x[l] - s.x[l - 1];
    const double dxr = s.x[l + 1] - s.x[l];
    const double span = s.x[l + 1] - s.x[l - 1];
    lo = dxl / (3.0 * span);
    di = 2.0 / 3.0;
    up = dxr / (3.0 * span);
    ux = (s.u[l + 1] - s.u[l - 1]) / span;
    uxx = 2.0 / span * ((s.u[l + 1] - s.u[l]) / dxr - (s.u[l] - s.u[l - 1]) / dxl);
}

inline double lagrangian_forcing(const BurgersState& s, std::size_t l, double ux, double uxx) {
    return s.nu * uxx - ((s.u[l + 1] - 2.0 * s.u[l] + s.u[l - 1]) / 3.0) * ux;
}

inline double radaptive_forcing(const BurgersState& s, std::size_t l, double ux, double uxx,
                                std::span<const double> xdot) {
    const double span = s.x[l + 1] - s.x[l - 1];
    return s.nu * uxx - ((s.u[l + 1] + s.u[l] + s.u[l - 1]) / 3.0) * ux
         + ((s.u[l] - s.u[l - 1]) * xdot[l - 1] + (s.u[l + 1] - s.u[l]) * xdot[l + 1]) / (3.0 * span)
         + (2.0 / 3.0) * ux * xdot[l];
}

void check_dominance(const Bands& b) {
    for (std::size_t l = 1; l + 1 < b.diag.size(); ++l) {
        const double off = std::abs(b.lower[l - 1]) + std::abs(b.upper[l]);
        if (!(std::abs(b.diag[l]) > off))
            throw numerical_error("assembled mass system lost strict diagonal dominance at row " +
                                  std::to_string(l), static_cast<long>(l));
    }
}

std::vector<double> motion_velocities(const BurgersState& s, MeshMotion motion,
                                      std::span<const double> prescribed) {
    switch (motion) {
    case MeshMotion::fixed:
        return std::vector<double>(s.x.size(), 0.0);
    case MeshMotion::lagrangian:
        return s.u;
    case MeshMotion::prescribed:
        if (prescribed.size() != s.x.size())
            throw config_error("assemble_invariant_radaptive: prescribed velocities must cover all nodes");
        return {prescribed.begin(), prescribed.end()};
    }
    throw config_error("assemble_invariant_radaptive: unknown mesh motion");
}

} // namespace

SemiDiscreteRhs assemble_galerkin_fixed(const BurgersState& s) {
    validate_state(s);
    const std::size_t n = s.x.size();
    Bands b(n);
#pragma omp parallel for schedule(static)
    for (std::int64_t l = 1; l < static_cast<std::int64_t>(n) - 1; ++l)
        galerkin_row(s, static_cast<std::size_t>(l), b.lower[l - 1], b.diag[l], b.upper[l], b.rhs[l]);
    check_dominance(b);
    return {solve_tridiagonal(b.lower, b.diag, b.upper, b.rhs), std::vector<double>(n, 0.0)};
}

SemiDiscreteRhs assemble_invariant_lagrangian(const BurgersState& s) {
    validate_state(s);
    const std::size_t n = s.x.size();
    Bands b(n);
#pragma omp parallel for schedule(static)
    for (std::int64_t l = 1; l < static_cast<std::int64_t>(n) - 1; ++l) {
        double ux, uxx;
        invariant_mass_row(s, static_cast<std::size_t>(l), b.lower[l - 1], b.diag[l], b.upper[l], ux, uxx);
        b.rhs[l] = lagrangian_forcing(s, static_cast<std::size_t>(l), ux, uxx);
    }
    check_dominance(b);
    return {solve_tridiagonal(b.lower, b.diag, b.upper, b.rhs), s.u};
}

SemiDiscreteRhs assemble_invariant_radaptive(const BurgersState& s, MeshMotion motion,
                                             std::span<const double> prescribed) {
    validate_state(s);
    const std::size_t n = s.x.size();
    const std::vector<double> xdot = motion_velocities(s, motion, prescribed);
    Bands b(n);
#pragma omp parallel for schedule(static)
    for (std::int64_t l = 1; l < static_cast<std::int64_t>(n) - 1; ++l) {
        double ux, uxx;
        invariant_mass_row(s, static_cast<std::size_t>(l), b.lower[l - 1], b.diag[l], b.upper[l], ux, uxx);
        b.rhs[l] = radaptive_forcing(s, static_cast<std::size_t>(l), ux, uxx, xdot);
    }
    check_dominance(b);
    return {solve_tridiagonal(b.lower, b.diag, b.upper, b.rhs), xdot};
}

namespace ref {

SemiDiscreteRhs assemble_galerkin_fixed(const BurgersState& s) {
    validate_state(s);
    const std::size_t n = s.x.size();
    Bands b(n);
    for (std::size_t l = 1; l + 1 < n; ++l)
        galerkin_row(s, l, b.lower[l - 1], b.diag[l], b.upper[l], b.rhs[l]);
    check_dominance(b);
    return {solve_tridiagonal(b.lower, b.diag, b.upper, b.rhs), std::vector<double>(n, 0.0)};
}

SemiDiscreteRhs assemble_invariant_lagrangian(const BurgersState& s) {
    validate_state(s);
    const std::size_t n = s.x.size();
    Bands b(n);
    for (std::size_t l = 1; l + 1 < n; ++l) {
        double ux, uxx;
        invariant_mass_row(s, l, b.lower[l - 1], b.diag[l], b.upper[l], ux, uxx);
        b.rhs[l] = lagrangian_forcing(s, l, ux, uxx);
    }
    check_dominance(b);
    return {solve_tridiagonal(b.lower, b.diag, b.upper, b.rhs), s.u};
}

SemiDiscreteRhs assemble_invariant_radaptive(const BurgersState& s, MeshMotion motion,
                                             std::span<const double> prescribed) {
    validate_state(s);
    const std::size_t n = s.x.size();
    const std::vector<double> xdot = motion_velocities(s, motion, prescribed);
    Bands b(n);
    for (std::size_t l = 1; l + 1 < n; ++l) {
        double ux, uxx;
        invariant_mass_row(s, l, b.lower[l - 1], b.diag[l], b.upper[l], ux, uxx);
        b.rhs[l] = radaptive_forcing(s, l, ux, uxx, xdot);
    }
    check_dominance(b);
    return {solve_tridiagonal(b.lower, b.diag, b.upper, b.rhs), xdot};
}

} // namespace ref

BurgersState act_state(const BurgersElement& g, const BurgersState& state) {
    BurgersState out;
    out.nu = state.nu;
    out.t = g.lambda() * g.lambda() * state.t + g.b();
    out.x.resize(state.x.size());
    out.u.resize(state.u.size());
    for (std::size_t l = 0; l < state.x.size(); ++l) {
        const SpaceTimePoint p = g.act({state.x[l], state.t, state.u[l]});
        out.x[l] = p.x;
        out.u[l] = p.u;
    }
    return out;
}

namespace {

SemiDiscreteRhs eval_rhs(const BurgersState& s, const Assembler& assembler, bool pin_boundaries) {
    SemiDiscreteRhs r = assembler(s);
    if (r.du_dt.size() != s.x.size() || r.dx_dt.size() != s.x.size())
        throw config_error("rk4_step: assembler returned mismatching lengths");
    if (pin_boundaries) {
        r.du_dt.front() = r.du_dt.back() = 0.0;
        r.dx_dt.front() = r.dx_dt.back() = 0.0;
    }
    return r;
}

BurgersState shifted(const BurgersState& base, const SemiDiscreteRhs& k, double scale) {
    BurgersState s = base;
    for (std::size_t l = 0; l < s.x.size(); ++l) {
        s.x[l] += scale * k.dx_dt[l];
        s.u[l] += scale * k.du_dt[l];
    }
    s.t = base.t + scale;
    return s;
}

} // namespace

BurgersState rk4_step(const BurgersState& state, double dt, const Assembler& assembler,
                      const std::optional<BoundaryPolicy>& boundary) {
    if (!(dt > 0))
        throw config_error("rk4_step: dt must be positive");
    const bool pin = boundary.has_value();
    const SemiDiscreteRhs k1 = eval_rhs(state, assembler, pin);
    const SemiDiscreteRhs k2 = eval_rhs(shifted(state, k1, 0.5 * dt), assembler, pin);
    const SemiDiscreteRhs k3 = eval_rhs(shifted(state, k2, 0.5 * dt), assembler, pin);
    const SemiDiscreteRhs k4 = eval_rhs(shifted(state, k3, dt), assembler, pin);

    BurgersState out = state;
    out.t = state.t + dt;
    for (std::size_t l = 0; l < state.x.size(); ++l) {
        out.x[l] += dt / 6.0 * (k1.dx_dt[l] + 2.0 * k2.dx_dt[l] + 2.0 * k3.dx_dt[l] + k4.dx_dt[l]);
        out.u[l] += dt / 6.0 * (k1.du_dt[l] + 2.0 * k2.du_dt[l] + 2.0 * k3.du_dt[l] + k4.du_dt[l]);
    }
    if (pin) {
        out.u.front() = boundary->value(out.x.front(), out.t);
        out.u.back() = boundary->value(out.x.back(), out.t);
    }
    for (std::size_t l = 0; l + 1 < out.x.size(); ++l)
        if (!(out.x[l] < out.x[l + 1]))
            throw numerical_error("rk4_step: mesh tangled at index " + std::to_string(l) +
                                  " (t=" + std::to_string(out.t) + ")", static_cast<long>(l));
    return out;
}

std::vector<BurgersState> simulate(const BurgersState& initial, const Assembler& assembler,
                                   const std::optional<BoundaryPolicy>& boundary, double dt,
                                   double t_end, int snapshot_stride) {
    validate_state(initial);
    if (!(dt > 0) || !(t_end > initial.t))
        throw config_error("simulate: need dt > 0 and t_end past the initial time");
    if (snapshot_stride < 1)
        throw config_error("simulate: snapshot_stride must be at least 1");
    const double span = t_end - initial.t;
    const auto steps = static_cast<long>(std::llround(span / dt));
    if (steps < 1 || std::abs(steps * dt - span) > 1e-9 * std::max(1.0, std::abs(span)))
        throw config_error("simulate: t_end - t0 must be an integer multiple of dt");

    std::vector<BurgersState> snapshots;
    snapshots.push_back(initial);
    BurgersState current = initial;
    for (long s = 1; s <= steps; ++s) {
        try {
            current = rk4_step(current, dt, assembler, boundary);
        } catch (const numerical_error& e) {
            throw numerical_error("simulate: step " + std::to_string(s) + " (t=" +
                                  std::to_string(current.t) + "): " + e.what(), e.index());
        }
        if (s % snapshot_stride == 0 || s == steps)
            snapshots.push_back(current);
    }
    return snapshots;
}

double advisory_dt_bound(const BurgersState& state) {
    validate_state(state);
    double min_dx = state.x[1] - state.x[0];
    for (std::size_t l = 1; l + 1 < state.x.size(); ++l)
        min_dx = std::min(min_dx, state.x[l + 1] - state.x[l]);
    return 0.25 * min_dx * min_dx / state.nu;
}

} // namespace ifem
