#pragma once

namespace cvxlat {

/// Number of OpenMP workers used by the parallel kernels. 0 means the OpenMP default.
void set_worker_count(int workers);
int worker_count();

}  // namespace cvxlat
