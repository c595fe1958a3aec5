#include "bnls/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>

namespace bnls {

struct FftEngine::Impl {
  fftw_plan fwd = nullptr;
  fftw_plan bwd = nullptr;
  ~Impl() {
    if (fwd) fftw_destroy_plan(fwd);
    if (bwd) fftw_destroy_plan(bwd);
  }
};

namespace {

std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

// Keyed caches; engines are immutable after creation and shared.
std::map<int, std::shared_ptr<const FftEngine>>& cache2d() {
  static std::map<int, std::shared_ptr<const FftEngine>> c;
  return c;
}
std::map<int, std::shared_ptr<const FftEngine>>& cache1d() {
  static std::map<int, std::shared_ptr<const FftEngine>> c;
  return c;
}

}  // namespace

std::shared_ptr<const FftEngine> FftEngine::plan2d(int n) {
  std::lock_guard<std::mutex> lock(planner_mutex());
  auto& slot = cache2d()[n];
  if (!slot) {
    auto eng = std::shared_ptr<FftEngine>(new FftEngine());
    eng->impl_ = std::make_unique<Impl>();
    eng->size_ = static_cast<std::size_t>(n) * n;
    // Plan on a 32-byte aligned scratch buffer; all field buffers share that
    // alignment class, so new-array execution below is valid.
    aligned_vector<std::complex<double>> scratch(eng->size_);
    auto* p = reinterpret_cast<fftw_complex*>(scratch.data());
    eng->impl_->fwd = fftw_plan_dft_2d(n, n, p, p, FFTW_FORWARD, FFTW_ESTIMATE);
    eng->impl_->bwd = fftw_plan_dft_2d(n, n, p, p, FFTW_BACKWARD, FFTW_ESTIMATE);
    slot = eng;
  }
  return slot;
}

std::shared_ptr<const FftEngine> FftEngine::plan1d(int n) {
  std::lock_guard<std::mutex> lock(planner_mutex());
  auto& slot = cache1d()[n];
  if (!slot) {
    auto eng = std::shared_ptr<FftEngine>(new FftEngine());
    eng->impl_ = std::make_unique<Impl>();
    eng->size_ = static_cast<std::size_t>(n);
    aligned_vector<std::complex<double>> scratch(eng->size_);
    auto* p = reinterpret_cast<fftw_complex*>(scratch.data());
    eng->impl_->fwd = fftw_plan_dft_1d(n, p, p, FFTW_FORWARD, FFTW_ESTIMATE);
    eng->impl_->bwd = fftw_plan_dft_1d(n, p, p, FFTW_BACKWARD, FFTW_ESTIMATE);
    slot = eng;
  }
  return slot;
}

FftEngine::~FftEngine() = default;

void FftEngine::forward(std::complex<double>* data) const {
  auto* p = reinterpret_cast<fftw_complex*>(data);
  fftw_execute_dft(impl_->fwd, p, p);
}

void FftEngine::backward(std::complex<double>* data) const {
  auto* p = reinterpret_cast<fftw_complex*>(data);
  fftw_execute_dft(impl_->bwd, p, p);
}

}  // namespace bnls
