#pragma once

#include <cstddef>
#include <vector>

#ifdef BEQT_HAVE_OPENMP
#include <omp.h>
#endif

// Execution-mode switch for the pointwise kernels. Every data-parallel loop
// goes through for_n / sum_n so the serial path stays available as a
// reference for testing and benchmarking against the OpenMP path.
namespace beqt::par {

enum class Mode { Serial, OpenMP };

Mode mode();
void set_mode(Mode m);

// Thread cap; reads BEQT_THREADS on first use.
int max_threads();
void set_max_threads(int n);

template <typename F>
void for_n(std::size_t n, F&& body) {
#ifdef BEQT_HAVE_OPENMP
  if (mode() == Mode::OpenMP) {
#pragma omp parallel for schedule(static) num_threads(max_threads())
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
      body(static_cast<std::size_t>(i));
    }
    return;
  }
#endif
  for (std::size_t i = 0; i < n; ++i) body(i);
}

// Deterministic reduction: partial sums over a fixed chunk grid, accumulated
// in chunk order, so the result is bit-identical regardless of mode or
// thread count.
template <typename F>
double sum_n(std::size_t n, F&& term) {
  constexpr std::size_t kChunks = 64;
  if (n == 0) return 0.0;
  const std::size_t chunk = (n + kChunks - 1) / kChunks;
  const std::size_t nchunks = (n + chunk - 1) / chunk;
  std::vector<double> partial(nchunks, 0.0);
  for_n(nchunks, [&](std::size_t c) {
    const std::size_t lo = c * chunk;
    const std::size_t hi = lo + chunk < n ? lo + chunk : n;
    double s = 0.0;
    for (std::size_t i = lo; i < hi; ++i) s += term(i);
    partial[c] = s;
  });
  double total = 0.0;
  for (double p : partial) total += p;
  return total;
}

}  // namespace beqt::par
