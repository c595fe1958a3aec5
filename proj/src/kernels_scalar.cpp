// Scalar reference kernels. These define the semantics; the AVX2 variants in
// kernels_avx2.cpp are checked against them.

#include <cmath>

#include "bnls/kernels.hpp"

namespace bnls::kern {
namespace {

void scale_s(cplx* z, std::size_t n, double a) {
  for (std::size_t i = 0; i < n; ++i) z[i] *= a;
}

void cmul_s(cplx* z, const cplx* w, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) z[i] *= w[i];
}

void rmul_s(cplx* z, const double* w, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) z[i] *= w[i];
}

void quintic_phase_s(cplx* z, std::size_t n, double dt) {
  for (std::size_t i = 0; i < n; ++i) {
    double m = z[i].real() * z[i].real() + z[i].imag() * z[i].imag();
    double phi = -dt * m * m;
    z[i] *= cplx(std::cos(phi), std::sin(phi));
  }
}

double sum_abs2_s(const cplx* z, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    acc += z[i].real() * z[i].real() + z[i].imag() * z[i].imag();
  return acc;
}

double sum_abs2_w_s(const cplx* z, const double* w, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    acc += w[i] * (z[i].real() * z[i].real() + z[i].imag() * z[i].imag());
  return acc;
}

double sum_abs6_s(const cplx* z, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double m = z[i].real() * z[i].real() + z[i].imag() * z[i].imag();
    acc += m * m * m;
  }
  return acc;
}

double max_abs2_s(const cplx* z, std::size_t n) {
  double best = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double m = z[i].real() * z[i].real() + z[i].imag() * z[i].imag();
    if (m > best) best = m;
  }
  return best;
}

double diff_abs2_s(const cplx* a, const cplx* b, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double dr = a[i].real() - b[i].real();
    double di = a[i].imag() - b[i].imag();
    acc += dr * dr + di * di;
  }
  return acc;
}

}  // namespace

const KernelTable scalar_table = {
    "scalar",   scale_s,      cmul_s,     rmul_s,     quintic_phase_s,
    sum_abs2_s, sum_abs2_w_s, sum_abs6_s, max_abs2_s, diff_abs2_s,
};

double sum_abs_pow(const cplx* z, std::size_t n, double p) {
  if (p == 2.0) return sum_abs2(z, n);
  if (p == 6.0) return sum_abs6(z, n);
  double acc = 0.0;
  if (p == 4.0) {
    for (std::size_t i = 0; i < n; ++i) {
      double m = z[i].real() * z[i].real() + z[i].imag() * z[i].imag();
      acc += m * m;
    }
    return acc;
  }
  for (std::size_t i = 0; i < n; ++i) {
    double m = z[i].real() * z[i].real() + z[i].imag() * z[i].imag();
    acc += std::pow(m, 0.5 * p);
  }
  return acc;
}

}  // namespace bnls::kern
