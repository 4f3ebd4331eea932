#pragma once

#include <cstddef>
#include <cstdlib>

#ifdef CHARWAVE_HAVE_OPENMP
#include <omp.h>
#endif

namespace charwave {

// Execution policy for the line-parallel kernels. Serial is the reference
// implementation; Par runs independent grid lines across OpenMP threads and
// must produce bit-identical fields (lines write disjoint ranges, and all
// reductions are performed serially over per-line partials).
enum class Exec { Serial, Par };

// Honors CHARWAVE_THREADS as an upper bound on the OpenMP thread pool.
inline void apply_thread_cap_from_env() {
#ifdef CHARWAVE_HAVE_OPENMP
  if (const char* cap = std::getenv("CHARWAVE_THREADS")) {
    const long n = std::strtol(cap, nullptr, 10);
    if (n >= 1) omp_set_num_threads(static_cast<int>(n));
  }
#endif
}

template <typename Fn>
void for_each_index(Exec exec, std::ptrdiff_t n, Fn&& fn) {
#ifdef CHARWAVE_HAVE_OPENMP
  if (exec == Exec::Par) {
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) fn(i);
    return;
  }
#else
  (void)exec;
#endif
  for (std::ptrdiff_t i = 0; i < n; ++i) fn(i);
}

}  // namespace charwave
