#include "resgrass/parallel.hpp"

#include <exception>
#include <mutex>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace resgrass {

Exec default_exec() {
#ifdef _OPENMP
  return Exec::openmp;
#else
  return Exec::serial;
#endif
}

namespace detail {

// Exceptions must not escape an OpenMP region; the first one thrown is
// captured and rethrown after the loop.
void parallel_for_impl(std::size_t n, void (*body)(std::size_t, void*), void* ctx, Exec exec) {
#ifdef _OPENMP
  if (exec == Exec::openmp && n > 1) {
    std::exception_ptr first;
    std::mutex guard;
    const std::int64_t count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < count; ++i) {
      try {
        body(static_cast<std::size_t>(i), ctx);
      } catch (...) {
        std::lock_guard<std::mutex> lock(guard);
        if (!first) first = std::current_exception();
      }
    }
    if (first) std::rethrow_exception(first);
    return;
  }
#else
  (void)exec;
#endif
  for (std::size_t i = 0; i < n; ++i) body(i, ctx);
}

}  // namespace detail
}  // namespace resgrass
