#pragma once

#ifdef _OPENMP
#include <omp.h>
#endif

namespace indep {

/// Worker count for an OpenMP region: `jobs` if positive, otherwise the
/// runtime default.
inline int resolve_jobs(int jobs) {
#ifdef _OPENMP
  return jobs > 0 ? jobs : omp_get_max_threads();
#else
  (void)jobs;
  return 1;
#endif
}

} // namespace indep
