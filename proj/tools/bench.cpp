// Compares the serial reference DP kernel with the OpenMP layer-parallel one,
// and the extremal sweep at one thread vs all threads. Counts must agree
// exactly; timings are wall clock.

#include "tg/extremal.hpp"

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>

using namespace tg;

namespace {

double time_ms(const std::function<void()>& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

void bench_count(const char* name, const SimpleGraph& g) {
    CountOptions serial{30, DpKernel::serial};
    CountOptions parallel{30, DpKernel::parallel};
    HamiltonCount a, b;
    const double ts = time_ms([&] { a = count_hamilton_cycles(g, serial); });
    const double tp = time_ms([&] { b = count_hamilton_cycles(g, parallel); });
    std::printf("%-8s n=%2d  serial %9.1f ms  parallel %9.1f ms  speedup %5.2fx  count %s %s\n",
                name, g.order(), ts, tp, ts / tp, a.str().c_str(), a == b ? "(match)" : "(MISMATCH)");
}

void bench_sweep(int n) {
    SweepOptions opt;
    ExtremalReport one, all;
    const int max_threads = omp_get_max_threads();
    omp_set_num_threads(1);
    const double ts = time_ms([&] { one = verify_min_cycle_count(n, opt); });
    omp_set_num_threads(max_threads);
    const double tp = time_ms([&] { all = verify_min_cycle_count(n, opt); });
    std::printf("sweep    n=%2d  1 thread %8.1f ms  %2d threads %8.1f ms  speedup %5.2fx  min %s %s\n",
                n, ts, max_threads, tp, ts / tp, one.min_count.str().c_str(),
                one.min_count == all.min_count && one.minimizers == all.minimizers ? "(match)" : "(MISMATCH)");
}

}  // namespace

int main(int argc, char** argv) {
    int max_n = 20;
    if (argc > 1) max_n = std::atoi(argv[1]);
    std::printf("threads: %d\n\n", omp_get_max_threads());

    for (int n = 14; n <= max_n; n += 2) bench_count("G_n", build_gn(n).graph());
    for (int n = 14; n <= std::min(max_n, 18); n += 2) bench_count("K_n", SimpleGraph::complete(n));
    std::printf("\n");
    for (int n = 11; n <= 13; ++n) bench_sweep(n);
    return 0;
}
