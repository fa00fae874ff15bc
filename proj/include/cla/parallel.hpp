#pragma once

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cla::parallel {

/// Worker count for tuple- and triple-parallel verification loops.
/// 1 disables OpenMP dispatch entirely.
int threads();
void set_threads(int n);

template <class F>
void par_for(int n, F&& body) {
#ifdef _OPENMP
  if (threads() > 1) {
#pragma omp parallel for schedule(dynamic) num_threads(cla::parallel::threads())
    for (int i = 0; i < n; ++i) body(i);
    return;
  }
#endif
  for (int i = 0; i < n; ++i) body(i);
}

}  // namespace cla::parallel
