// Timings for the interval-sweep kernels: the bitset route (serial and
// OpenMP-parallel) against the plain cover-graph reference.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>

#include "uncross/poset.hpp"

using namespace uncross;

namespace {

template <class F>
double time_of(F f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  const std::chrono::duration<double> d = std::chrono::steady_clock::now() - t0;
  return d.count();
}

}  // namespace

int main(int argc, char** argv) {
  int n = 4, jobs = 0, iters = 3;
  for (int i = 1; i < argc; ++i) {
    if (!std::strcmp(argv[i], "-n") && i + 1 < argc) n = std::atoi(argv[++i]);
    if (!std::strcmp(argv[i], "--jobs") && i + 1 < argc) jobs = std::atoi(argv[++i]);
    if (!std::strcmp(argv[i], "--iters") && i + 1 < argc) iters = std::atoi(argv[++i]);
  }
  std::printf("building bounded poset, n=%d ...\n", n);
  const GradedPoset P = GradedPoset::build(n, true);
  std::printf("%d elements, %zu covers\n", P.size(), P.covers().size());

  double best_naive = 1e30, best_serial = 1e30, best_par = 1e30, best_mob = 1e30;
  for (int it = 0; it < iters; ++it) {
    best_naive = std::min(best_naive, time_of([&] {
      long long acc = 0;
      for (int y = 0; y < P.size(); ++y)
        P.down_set(y).for_each([&](int x) {
          if (x != y) acc += P.chi_interval_naive(x, y);
        });
      if (acc != 0) std::printf("nonzero chi total: %lld\n", acc);
    }));
    best_serial = std::min(best_serial, time_of([&] { P.chi_all_intervals(1); }));
    best_par = std::min(best_par, time_of([&] { P.chi_all_intervals(jobs); }));
    best_mob = std::min(best_mob, time_of([&] { P.is_eulerian(jobs); }));
  }
  std::printf("chi over all intervals, cover-graph reference: %9.4f s\n", best_naive);
  std::printf("chi over all intervals, bitset kernel, 1 job:  %9.4f s\n", best_serial);
  std::printf("chi over all intervals, bitset kernel, jobs=%d: %8.4f s\n", jobs, best_par);
  std::printf("eulerian (mobius columns), jobs=%d:             %8.4f s\n", jobs, best_mob);
  return 0;
}
