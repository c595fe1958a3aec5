#pragma once

#include <complex>
#include <cstddef>
#include <memory>

#include "bnls/aligned.hpp"

namespace bnls {

// Shared FFTW plan pair for one transform size. Plans are created once per
// size (FFTW_ESTIMATE keeps the algorithm choice deterministic run-to-run)
// and executed on caller buffers; execution on distinct arrays is
// thread-safe, plan creation is serialized internally.
class FftEngine {
 public:
  // 2D n-by-n complex-to-complex, in-place.
  static std::shared_ptr<const FftEngine> plan2d(int n);
  // 1D length-n complex-to-complex, in-place (time transforms).
  static std::shared_ptr<const FftEngine> plan1d(int n);

  ~FftEngine();
  FftEngine(const FftEngine&) = delete;
  FftEngine& operator=(const FftEngine&) = delete;

  // Unnormalized FFTW transforms; callers apply the unitary weights.
  void forward(std::complex<double>* data) const;
  void backward(std::complex<double>* data) const;

  std::size_t size() const { return size_; }

 private:
  FftEngine() = default;
  struct Impl;
  std::unique_ptr<Impl> impl_;
  std::size_t size_ = 0;
};

}  // namespace bnls
