#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace resgrass {

// Execution policy for the data-parallel loops: trial batches, gradient basis
// sweeps, operator-matrix assembly, sampling demos. Every loop writes to
// disjoint slots indexed by the loop counter, so the OpenMP and serial paths
// produce bit-identical results; the serial path is kept as the reference.
enum class Exec { serial, openmp };

Exec default_exec();

namespace detail {
void parallel_for_impl(std::size_t n, void (*body)(std::size_t, void*), void* ctx, Exec exec);
}

template <class F>
void parallel_for(std::size_t n, F&& f, Exec exec = default_exec()) {
  auto body = [](std::size_t i, void* ctx) { (*static_cast<F*>(ctx))(i); };
  detail::parallel_for_impl(n, body, &f, exec);
}

// max over f(0..n-1); reduction order is fixed by index, so the result does
// not depend on the thread count.
template <class F>
double max_over(std::size_t n, F&& f, Exec exec = default_exec()) {
  if (n == 0) return 0.0;
  std::vector<double> slots(n);
  parallel_for(
      n, [&](std::size_t i) { slots[i] = f(i); }, exec);
  double m = slots[0];
  for (std::size_t i = 1; i < n; ++i)
    if (slots[i] > m) m = slots[i];
  return m;
}

}  // namespace resgrass
