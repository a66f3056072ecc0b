// Timings of the OpenMP kernels against their serial references, with an
// equality check on the results.

#include <chrono>
#include <iostream>

#include "hilbsq/baselocus.hpp"
#include "hilbsq/sweep.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace hilbsq;

namespace {

template <typename F>
double time_seconds(F&& f) {
    const auto start = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void bench_sweep(long long max_coord) {
    std::vector<sweep::Cell> serial, parallel;
    const double t_serial =
        time_seconds([&] { serial = sweep::classify_grid_serial(max_coord, cones::Model::X); });
    const double t_parallel =
        time_seconds([&] { parallel = sweep::classify_grid(max_coord, cones::Model::X); });
    std::cout << "sweep max=" << max_coord << ": serial " << t_serial << " s, parallel "
              << t_parallel << " s, speedup " << t_serial / t_parallel << ", results "
              << (serial == parallel ? "identical" : "DIFFER") << "\n";
}

void bench_mayer(long bound) {
    const lattice::GramLattice g({{Int(0), Int(1)}, {Int(1), Int(-2)}});
    const std::vector<Int> h{Int(2), Int(1)};
    std::vector<baselocus::MayerDecomposition> serial, parallel;
    const double t_serial =
        time_seconds([&] { serial = baselocus::mayer_search_serial(g, h, Int(bound)); });
    const double t_parallel =
        time_seconds([&] { parallel = baselocus::mayer_search(g, h, Int(bound)); });
    std::cout << "mayer bound=" << bound << ": serial " << t_serial << " s, parallel "
              << t_parallel << " s, speedup " << t_serial / t_parallel << ", results "
              << (serial == parallel ? "identical" : "DIFFER") << "\n";
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::cout << "OpenMP enabled, max threads " << omp_get_max_threads() << "\n";
#else
    std::cout << "OpenMP disabled, parallel kernels fall back to serial\n";
#endif
    bench_sweep(300);
    bench_sweep(600);
    bench_mayer(60);
    bench_mayer(120);
    return 0;
}
