#pragma once

#ifdef _OPENMP
#include <omp.h>
#endif

namespace quench {

// Every parallel kernel has a serial twin selected by this switch; per-index
// work is independent, so both produce bit-identical results.
enum class Exec { serial, parallel };

template <class F>
void parallel_for(int n, Exec exec, F&& body) {
#ifdef _OPENMP
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n; ++i) body(i);
    return;
  }
#else
  (void)exec;
#endif
  for (int i = 0; i < n; ++i) body(i);
}

}  // namespace quench
