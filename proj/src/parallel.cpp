#include "cvxlat/parallel.hpp"

#include <omp.h>

#include <atomic>

namespace cvxlat {

namespace {
std::atomic<int> configured{0};
}

void set_worker_count(int workers) { configured = workers < 0 ? 0 : workers; }

int worker_count() {
  const int w = configured.load();
  return w > 0 ? w : omp_get_max_threads();
}

}  // namespace cvxlat
