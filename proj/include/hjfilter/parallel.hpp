#pragma once

#include <cstdlib>
#include <limits>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hj {

// Every hot loop in the engine is a per-node pass with independent writes
// plus max-reductions, so the parallel driver is bit-identical to the serial
// reference driver. The serial path is kept as a plain loop (not an OpenMP
// special case) so tests can compare the two executions directly.
enum class Exec { serial, parallel };

// Worker cap: HJFILTER_THREADS wins over the OpenMP defaults when set.
inline int max_threads() {
  if (const char* s = std::getenv("HJFILTER_THREADS")) {
    int v = std::atoi(s);
    if (v >= 1) return v;
  }
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

// f(j) for j in [0, n); the parallel driver requires f to be safe for
// concurrent invocations on distinct j.
template <class F>
inline void for_each_node(Exec exec, int n, F&& f) {
#ifdef _OPENMP
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static) num_threads(max_threads())
    for (int j = 0; j < n; ++j) f(j);
    return;
  }
#endif
  for (int j = 0; j < n; ++j) f(j);
}

// max_j f(j); max of finite doubles is associative and commutative, so the
// reduction order cannot change the result.
template <class F>
inline double max_over_nodes(Exec exec, int n, F&& f) {
  double m = -std::numeric_limits<double>::infinity();
#ifdef _OPENMP
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static) reduction(max : m) num_threads(max_threads())
    for (int j = 0; j < n; ++j) m = std::max(m, f(j));
    return m;
  }
#endif
  for (int j = 0; j < n; ++j) m = std::max(m, f(j));
  return m;
}

}  // namespace hj
