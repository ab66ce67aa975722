#pragma once

#include <cstddef>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

// Parallel execution pattern used across the library: fill an index-addressed
// buffer (each slot touched by exactly one iteration), then reduce the buffer
// in a fixed order. The reduction never depends on thread scheduling, so
// Serial and Parallel produce bit-identical results.

namespace spinscat {

enum class ExecPolicy { Serial, Parallel };

template <class F>
void indexed_for(std::size_t n, ExecPolicy policy, F &&body) {
  if (policy == ExecPolicy::Parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (long long i = 0; i < static_cast<long long>(n); ++i)
      body(static_cast<std::size_t>(i));
  } else {
    for (std::size_t i = 0; i < n; ++i)
      body(i);
  }
}

// Fixed-order pairwise (cascade) summation. Same association tree for any
// thread count; also better rounding than a running sum.
template <class T>
T pairwise_sum(const std::vector<T> &xs, T zero) {
  if (xs.empty())
    return zero;
  std::vector<T> level = xs;
  while (level.size() > 1) {
    std::size_t half = level.size() / 2;
    std::vector<T> next;
    next.reserve(half + 1);
    for (std::size_t i = 0; i < half; ++i)
      next.push_back(level[2 * i] + level[2 * i + 1]);
    if (level.size() % 2 == 1)
      next.push_back(level.back());
    level.swap(next);
  }
  return level.front();
}

inline int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

} // namespace spinscat
