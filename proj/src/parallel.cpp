#include "cla/parallel.hpp"

#include <atomic>

namespace cla::parallel {

namespace {
std::atomic<int> g_threads{
#ifdef _OPENMP
    0  // 0 = use OpenMP default
#else
    1
#endif
};
}

int threads() {
  int t = g_threads.load();
#ifdef _OPENMP
  if (t == 0) return omp_get_max_threads();
#endif
  return t > 0 ? t : 1;
}

void set_threads(int n) { g_threads.store(n < 1 ? 1 : n); }

}  // namespace cla::parallel
