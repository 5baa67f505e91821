#pragma once

#include <complex>
#include <cstddef>
#include <memory>
#include <mutex>
#include <vector>

namespace beqt {

enum class DealiasRule { TwoThirds, Half };

// Periodic grid on [0, 2pi)^2 with N points per dimension (power of two,
// >= 16). Holds the wavenumber lattice, the dealias mask and the FFT plans.
// Immutable after construction; FFT execution is internally synchronized.
class SpectralGrid {
 public:
  using Ptr = std::shared_ptr<const SpectralGrid>;

  static Ptr make(int N, DealiasRule rule = DealiasRule::TwoThirds);
  ~SpectralGrid();

  SpectralGrid(const SpectralGrid&) = delete;
  SpectralGrid& operator=(const SpectralGrid&) = delete;

  int N() const { return N_; }
  std::size_t size() const { return static_cast<std::size_t>(N_) * N_; }
  DealiasRule rule() const { return rule_; }

  // Signed integer wavenumber for a row/column index in [0, N).
  int wav(int idx) const { return idx <= N_ / 2 - 1 ? idx : idx - N_; }
  int k1(std::size_t m) const { return wav(static_cast<int>(m) / N_); }
  int k2(std::size_t m) const { return wav(static_cast<int>(m) % N_); }
  double ksq(std::size_t m) const {
    const double a = k1(m), b = k2(m);
    return a * a + b * b;
  }

  // True when the mode survives the dealias mask.
  bool in_mask(std::size_t m) const { return mask_[m] != 0; }
  double mask_radius() const { return mask_radius_; }

  double cell_area() const { return cell_area_; }
  double domain_area() const { return domain_area_; }

  // Unitary-in-coefficients convention: hat holds Fourier coefficients of
  // f(x) = sum_k hat_k e^{i k.x}; forward divides by N^2.
  void fft_forward(const std::complex<double>* phys, std::complex<double>* hat) const;
  void fft_backward(const std::complex<double>* hat, std::complex<double>* phys) const;

  void to_physical(const std::complex<double>* hat, double* phys) const;
  void from_physical(const double* phys, std::complex<double>* hat) const;

 private:
  SpectralGrid(int N, DealiasRule rule);

  int N_;
  DealiasRule rule_;
  double mask_radius_;
  double cell_area_;
  double domain_area_;
  std::vector<unsigned char> mask_;

  void* plan_fwd_;   // fftw_plan
  void* plan_bwd_;   // fftw_plan
  mutable std::vector<std::complex<double>> buf_in_;
  mutable std::vector<std::complex<double>> buf_out_;
  mutable std::mutex fft_mutex_;
};

}  // namespace beqt
