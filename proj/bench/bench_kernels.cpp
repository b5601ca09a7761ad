// Wall-clock comparison of the parallel kernels against their serial references.
//   bench_kernels [repeats]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>

#include <omp.h>

#include "sl3cb/analysis.hpp"
#include "sl3cb/global.hpp"
#include "sl3cb/local.hpp"

using namespace sl3cb;

namespace {

double best_of(int repeats, const std::function<long()>& f, long& result) {
  double best = 1e300;
  for (int i = 0; i < repeats; ++i) {
    const auto start = std::chrono::steady_clock::now();
    result = f();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
  }
  return best;
}

void row(const char* name, int repeats, const std::function<long()>& serial,
         const std::function<long()>& parallel) {
  long a = 0, b = 0;
  const double ts = best_of(repeats, serial, a);
  const double tp = best_of(repeats, parallel, b);
  std::printf("%-40s %10.4f %10.4f %7.2fx %s\n", name, ts, tp, ts / tp, a == b ? "" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  const int repeats = argc > 1 ? std::atoi(argv[1]) : 3;
  std::printf("threads: %d, best of %d\n", omp_get_max_threads(), repeats);
  std::printf("%-40s %10s %10s %8s\n", "kernel", "serial s", "parallel s", "speedup");

  const auto c5 = caterpillar(5);
  row("sum_product caterpillar:5 L=3", repeats,
      [&] { return sum_product_serial(c5, std::nullopt, 3); },
      [&] { return sum_product(c5, std::nullopt, 3); });
  const auto g12 = gamma_graph(1, 2);
  row("sum_product gamma:1,2 L=6", repeats,
      [&] { return sum_product_serial(g12, std::nullopt, 6); },
      [&] { return sum_product(g12, std::nullopt, 6); });
  row("odometer vs tree, caterpillar:5 L=3", repeats,
      [&] { return sum_product_serial(c5, std::nullopt, 3); },
      [&] { return sum_product_tree(c5, std::nullopt, 3); });

  const Boundary big{Weight{6, 6}, Weight{6, 6}, Weight{6, 6}};
  row("enumerate_fiber (6,6)^3 L=18", repeats,
      [&] { return static_cast<long>(enumerate_fiber_serial(big, 18).size()); },
      [&] { return static_cast<long>(enumerate_fiber(big, 18).size()); });

  const auto g11 = gamma_graph(1, 1);
  row("indecomposables gamma:1,1 D=7", repeats,
      [&] { return static_cast<long>(indecomposables_up_to_serial(g11, 7).points.size()); },
      [&] { return static_cast<long>(indecomposables_up_to(g11, 7).points.size()); });
  row("indecomposables gamma:1,2 D=5", repeats,
      [&] { return static_cast<long>(indecomposables_up_to_serial(g12, 5).points.size()); },
      [&] { return static_cast<long>(indecomposables_up_to(g12, 5).points.size()); });
  return 0;
}
