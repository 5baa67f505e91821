#include "beqt/grid.hpp"

#include <fftw3.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "beqt/parallel.hpp"

namespace beqt {

namespace {
bool power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }
}  // namespace

SpectralGrid::SpectralGrid(int N, DealiasRule rule) : N_(N), rule_(rule) {
  if (!power_of_two(N) || N < 16)
    throw std::invalid_argument("SpectralGrid: N must be a power of two >= 16");
  const double two_pi = 2.0 * std::numbers::pi;
  cell_area_ = (two_pi / N) * (two_pi / N);
  domain_area_ = two_pi * two_pi;
  mask_radius_ = rule == DealiasRule::TwoThirds ? N / 3.0 : N / 4.0;

  mask_.resize(size());
  for (std::size_t m = 0; m < size(); ++m) {
    const int a = std::abs(k1(m));
    const int b = std::abs(k2(m));
    mask_[m] = (a < mask_radius_ && b < mask_radius_) ? 1 : 0;
  }

  buf_in_.resize(size());
  buf_out_.resize(size());
  plan_fwd_ = fftw_plan_dft_2d(
      N, N, reinterpret_cast<fftw_complex*>(buf_in_.data()),
      reinterpret_cast<fftw_complex*>(buf_out_.data()), FFTW_FORWARD, FFTW_ESTIMATE);
  plan_bwd_ = fftw_plan_dft_2d(
      N, N, reinterpret_cast<fftw_complex*>(buf_in_.data()),
      reinterpret_cast<fftw_complex*>(buf_out_.data()), FFTW_BACKWARD, FFTW_ESTIMATE);
  if (!plan_fwd_ || !plan_bwd_) throw std::runtime_error("SpectralGrid: FFTW plan creation failed");
}

SpectralGrid::~SpectralGrid() {
  fftw_destroy_plan(static_cast<fftw_plan>(plan_fwd_));
  fftw_destroy_plan(static_cast<fftw_plan>(plan_bwd_));
}

SpectralGrid::Ptr SpectralGrid::make(int N, DealiasRule rule) {
  return Ptr(new SpectralGrid(N, rule));
}

void SpectralGrid::fft_forward(const std::complex<double>* phys,
                               std::complex<double>* hat) const {
  const double inv = 1.0 / static_cast<double>(size());
  std::lock_guard<std::mutex> lock(fft_mutex_);
  for (std::size_t m = 0; m < size(); ++m) buf_in_[m] = phys[m];
  fftw_execute(static_cast<fftw_plan>(plan_fwd_));
  for (std::size_t m = 0; m < size(); ++m) hat[m] = buf_out_[m] * inv;
}

void SpectralGrid::fft_backward(const std::complex<double>* hat,
                                std::complex<double>* phys) const {
  std::lock_guard<std::mutex> lock(fft_mutex_);
  for (std::size_t m = 0; m < size(); ++m) buf_in_[m] = hat[m];
  fftw_execute(static_cast<fftw_plan>(plan_bwd_));
  for (std::size_t m = 0; m < size(); ++m) phys[m] = buf_out_[m];
}

void SpectralGrid::to_physical(const std::complex<double>* hat, double* phys) const {
  std::lock_guard<std::mutex> lock(fft_mutex_);
  for (std::size_t m = 0; m < size(); ++m) buf_in_[m] = hat[m];
  fftw_execute(static_cast<fftw_plan>(plan_bwd_));
  for (std::size_t m = 0; m < size(); ++m) phys[m] = buf_out_[m].real();
}

void SpectralGrid::from_physical(const double* phys, std::complex<double>* hat) const {
  const double inv = 1.0 / static_cast<double>(size());
  std::lock_guard<std::mutex> lock(fft_mutex_);
  for (std::size_t m = 0; m < size(); ++m) buf_in_[m] = {phys[m], 0.0};
  fftw_execute(static_cast<fftw_plan>(plan_fwd_));
  for (std::size_t m = 0; m < size(); ++m) hat[m] = buf_out_[m] * inv;
}

}  // namespace beqt
