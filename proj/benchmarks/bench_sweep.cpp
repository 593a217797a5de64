// Compares the serial reference verification sweep against the
// OpenMP-parallel kernel on identical workloads.
#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "springer/sweep.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace springer;
using Clock = std::chrono::steady_clock;

namespace {

double time_sweep(Theory th, int max_rank, bool parallel, long long* checked) {
    SweepOptions opts;
    opts.theory = th;
    opts.max_rank = max_rank;
    opts.parallel = parallel;
    auto t0 = Clock::now();
    auto res = run_verification(opts);
    double s = std::chrono::duration<double>(Clock::now() - t0).count();
    if (!res.failures.empty()) std::printf("  WARNING: sweep reported failures\n");
    *checked = res.rigid_checked;
    return s;
}

}  // namespace

int main(int argc, char** argv) {
    int max_rank = argc > 1 ? std::atoi(argv[1]) : 16;
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP not available; both paths run serially\n");
#endif
    for (Theory th : {Theory::B, Theory::C, Theory::D}) {
        long long checked = 0;
        double serial = time_sweep(th, max_rank, false, &checked);
        double parallel = time_sweep(th, max_rank, true, &checked);
        std::printf(
            "theory %c, max rank %d: %lld rigid partitions, serial %.3fs, "
            "parallel %.3fs, speedup %.2fx\n",
            "BCD"[static_cast<int>(th)], max_rank, checked, serial, parallel,
            serial / parallel);
    }
    return 0;
}
