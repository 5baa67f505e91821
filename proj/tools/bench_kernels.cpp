// Times representative kernels in serial and OpenMP execution modes.

#include <chrono>
#include <cstdio>
#include <functional>

#include "beqt/energy.hpp"
#include "beqt/evolution.hpp"
#include "beqt/initial_data.hpp"
#include "beqt/model_terms.hpp"
#include "beqt/parallel.hpp"

namespace {

double time_ms(const std::function<void()>& body, int reps) {
  body();  // warm up (FFT plans, caches)
  const auto t0 = std::chrono::steady_clock::now();
  for (int i = 0; i < reps; ++i) body();
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count() / reps;
}

void report(const char* name, const std::function<void()>& body, int reps) {
  beqt::par::set_mode(beqt::par::Mode::Serial);
  const double serial = time_ms(body, reps);
  beqt::par::set_mode(beqt::par::Mode::OpenMP);
  const double parallel = time_ms(body, reps);
  std::printf("%-24s serial %8.3f ms   openmp %8.3f ms   speedup %.2fx\n",
              name, serial, parallel, serial / parallel);
}

}  // namespace

int main() {
  const int N = 256;
  auto g = beqt::SpectralGrid::make(N);
  beqt::ModelParams p;
  p.a = -0.2;
  beqt::InitialDataSpec spec;
  spec.seed = 7;
  spec.kmax = 32;
  beqt::SimState state = beqt::make_random_band_state(g, p, spec);

  std::printf("grid %dx%d, %d max threads\n", N, N, beqt::par::max_threads());

  volatile double sink = 0.0;
  report("pointwise product", [&] {
    sink = sink + beqt::l2_norm(beqt::multiply(state.Q.q11, state.Q.q12));
  }, 20);
  report("molecular field H", [&] {
    sink = sink + beqt::l2_norm(beqt::compute_H(state.Q, state.params));
  }, 10);
  report("full Q rhs", [&] {
    sink = sink + beqt::l2_norm(beqt::rhs_Q(state));
  }, 5);
  report("full u rhs", [&] {
    sink = sink + beqt::l2_norm(beqt::rhs_u(state));
  }, 5);
  report("energy report", [&] {
    sink = sink + beqt::total_energy(state).total;
  }, 10);
  beqt::Stepper stepper(beqt::StepperConfig{1e-4, beqt::Scheme::ImexSbdf2, 0.0, false});
  report("imex step", [&] {
    beqt::SimState s2 = stepper.step(state);
    sink = sink + s2.t;
  }, 5);
  return 0;
}
