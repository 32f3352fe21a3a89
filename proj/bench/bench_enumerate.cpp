// Timing comparison of the serial reference enumeration against the
// canonical-form pipeline at 1 thread and at N threads, per order.

#include <chrono>
#include <cstdio>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ringlab/enumerate.hpp"
#include "ringlab/reference.hpp"

using Clock = std::chrono::steady_clock;

static double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

int main(int argc, char** argv) {
  int max_order = argc > 1 ? std::atoi(argv[1]) : 8;
#ifdef _OPENMP
  int threads = omp_get_max_threads();
#else
  int threads = 1;
#endif

  std::printf("%-6s %-8s %12s %14s %14s %8s\n", "order", "classes", "reference_ms",
              "canonical_1t", "canonical_nt", "speedup");
  for (int n = 2; n <= max_order; ++n) {
    auto t0 = Clock::now();
    auto ref = ringlab::reference_enumerate(n);
    double ref_ms = ms_since(t0);

    t0 = Clock::now();
    auto serial = ringlab::enumerate_rings(n, {}, 1);
    double one_ms = ms_since(t0);

    t0 = Clock::now();
    auto parallel = ringlab::enumerate_rings(n, {}, threads);
    double par_ms = ms_since(t0);

    if (ref.size() != serial.size() || serial.size() != parallel.size()) {
      std::fprintf(stderr, "class count mismatch at order %d: %zu / %zu / %zu\n", n,
                   ref.size(), serial.size(), parallel.size());
      return 1;
    }
    std::printf("%-6d %-8zu %12.1f %14.1f %14.1f %7.2fx\n", n, serial.size(), ref_ms,
                one_ms, par_ms, par_ms > 0 ? one_ms / par_ms : 0.0);
  }
  std::printf("threads: %d\n", threads);
  return 0;
}
