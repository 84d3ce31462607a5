// Serial vs OpenMP comparison on the two heaviest benchmark shapes. The
// parallel driver must be bit-identical to the serial reference, so the last
// column is expected to read 0.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "hjfilter/engine.hpp"
#include "hjfilter/experiments.hpp"
#include "hjfilter/parallel.hpp"

using namespace hj;

namespace {

template <class F>
double best_of(int reps, F&& f) {
  double best = 1e300;
  for (int i = 0; i < reps; ++i) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    auto t1 = std::chrono::steady_clock::now();
    best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
  }
  return best;
}

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double m = 0.0;
  for (size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

struct Case {
  std::string label;
  std::vector<double> serial_u, parallel_u;
  double t_serial = 0.0, t_parallel = 0.0;
};

Case bench_1d(const char* id, const char* scheme, int n) {
  const Experiment& e = experiment(id);
  Problem1D p = make_problem(e, n, parse_scheme(scheme));
  Case c;
  c.label = std::string(id) + " " + scheme + " N=" + std::to_string(n);
  RunOptions ro;
  ro.record_masks = false;
  ro.exec = Exec::serial;
  c.t_serial = best_of(3, [&] { c.serial_u = run(p, ro).state.u; });
  ro.exec = Exec::parallel;
  c.t_parallel = best_of(3, [&] { c.parallel_u = run(p, ro).state.u; });
  return c;
}

Case bench_2d(const char* id, const char* scheme, int n) {
  const Experiment& e = experiment(id);
  Problem2D p = make_problem_2d(e, n, parse_scheme(scheme));
  Case c;
  c.label = std::string(id) + " " + scheme + " N=" + std::to_string(n) + "x" + std::to_string(n);
  RunOptions ro;
  ro.record_masks = false;
  ro.exec = Exec::serial;
  c.t_serial = best_of(3, [&] { c.serial_u = run_2d(p, ro).state.u; });
  ro.exec = Exec::parallel;
  c.t_parallel = best_of(3, [&] { c.parallel_u = run_2d(p, ro).state.u; });
  return c;
}

}  // namespace

int main() {
  std::printf("threads: %d\n\n", max_threads());
  std::printf("%-28s %12s %12s %9s %12s\n", "case", "serial[s]", "parallel[s]", "speedup",
              "max|du|");

  Case cases[] = {
      bench_1d("ex1b", "AF-HC", 400),
      bench_1d("ex4", "AF-LW4", 2560),
      bench_2d("ex5_shock", "AF-LWR", 80),
      bench_2d("ex5_shock", "AF-LWR", 160),
  };
  for (const Case& c : cases)
    std::printf("%-28s %12.4f %12.4f %8.2fx %12.3e\n", c.label.c_str(), c.t_serial, c.t_parallel,
                c.t_serial / c.t_parallel, max_abs_diff(c.serial_u, c.parallel_u));
  return 0;
}
