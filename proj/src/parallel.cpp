#include "beqt/parallel.hpp"

#include <atomic>
#include <cstdlib>

namespace beqt::par {

namespace {
std::atomic<Mode> g_mode{Mode::OpenMP};

int default_threads() {
  if (const char* env = std::getenv("BEQT_THREADS")) {
    int n = std::atoi(env);
    if (n >= 1) return n;
  }
#ifdef BEQT_HAVE_OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

std::atomic<int> g_threads{0};
}  // namespace

Mode mode() { return g_mode.load(std::memory_order_relaxed); }
void set_mode(Mode m) { g_mode.store(m, std::memory_order_relaxed); }

int max_threads() {
  int n = g_threads.load(std::memory_order_relaxed);
  if (n == 0) {
    n = default_threads();
    g_threads.store(n, std::memory_order_relaxed);
  }
  return n;
}

void set_max_threads(int n) {
  g_threads.store(n >= 1 ? n : 1, std::memory_order_relaxed);
}

}  // namespace beqt::par
