// Benchmark of the OpenMP assembly kernels against the serial reference
// implementations.  Also cross-checks that both produce identical output.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ifem/burgers.hpp"

namespace {

ifem::BurgersState make_state(std::size_t n_nodes) {
    ifem::BurgersState s;
    s.nu = 0.1;
    s.t = 0.0;
    s.x.resize(n_nodes);
    s.u.resize(n_nodes);
    for (std::size_t l = 0; l < n_nodes; ++l) {
        const double x = -2.0 + 8.0 * static_cast<double>(l) / static_cast<double>(n_nodes - 1);
        s.x[l] = x + 0.2 * std::sin(3.0 * x) / static_cast<double>(n_nodes);
        s.u[l] = 1.0 - 0.5 * std::tanh(2.5 * x) + 0.1 * std::sin(5.0 * x);
    }
    return s;
}

template <class F>
double time_ms(F&& f, int reps) {
    const auto t0 = std::chrono::steady_clock::now();
    for (int r = 0; r < reps; ++r) f();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count() / reps;
}

double max_diff(const ifem::SemiDiscreteRhs& a, const ifem::SemiDiscreteRhs& b) {
    double worst = 0;
    for (std::size_t i = 0; i < a.du_dt.size(); ++i) {
        worst = std::max(worst, std::abs(a.du_dt[i] - b.du_dt[i]));
        worst = std::max(worst, std::abs(a.dx_dt[i] - b.dx_dt[i]));
    }
    return worst;
}

} // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads: %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP not enabled; parallel kernels run serially\n");
#endif
    std::printf("%-22s %10s %12s %12s %10s %10s\n", "assembler", "n", "serial(ms)", "omp(ms)",
                "speedup", "max diff");

    for (const std::size_t n : {100000UL, 1000000UL, 4000000UL}) {
        const ifem::BurgersState s = make_state(n);
        const int reps = n >= 1000000 ? 5 : 20;

        struct Case {
            const char* name;
            ifem::SemiDiscreteRhs (*omp)(const ifem::BurgersState&);
            ifem::SemiDiscreteRhs (*serial)(const ifem::BurgersState&);
        };
        const Case cases[] = {
            {"galerkin_fixed", &ifem::assemble_galerkin_fixed, &ifem::ref::assemble_galerkin_fixed},
            {"invariant_lagrangian", &ifem::assemble_invariant_lagrangian,
             &ifem::ref::assemble_invariant_lagrangian},
        };
        for (const Case& c : cases) {
            const ifem::SemiDiscreteRhs r_omp = c.omp(s);
            const ifem::SemiDiscreteRhs r_ser = c.serial(s);
            const double diff = max_diff(r_omp, r_ser);
            const double t_ser = time_ms([&] { (void)c.serial(s); }, reps);
            const double t_omp = time_ms([&] { (void)c.omp(s); }, reps);
            std::printf("%-22s %10zu %12.3f %12.3f %9.2fx %10.2e\n", c.name, n, t_ser, t_omp,
                        t_ser / t_omp, diff);
        }
        {
            const ifem::SemiDiscreteRhs r_omp =
                ifem::assemble_invariant_radaptive(s, ifem::MeshMotion::lagrangian);
            const ifem::SemiDiscreteRhs r_ser =
                ifem::ref::assemble_invariant_radaptive(s, ifem::MeshMotion::lagrangian);
            const double diff = max_diff(r_omp, r_ser);
            const double t_ser = time_ms(
                [&] { (void)ifem::ref::assemble_invariant_radaptive(s, ifem::MeshMotion::lagrangian); },
                reps);
            const double t_omp = time_ms(
                [&] { (void)ifem::assemble_invariant_radaptive(s, ifem::MeshMotion::lagrangian); },
                reps);
            std::printf("%-22s %10zu %12.3f %12.3f %9.2fx %10.2e\n", "invariant_radaptive", n,
                        t_ser, t_omp, t_ser / t_omp, diff);
        }
    }
    return 0;
}
