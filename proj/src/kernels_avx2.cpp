// AVX2+FMA kernels. Complex<double> is interleaved [re, im], two complexes
// per 256-bit register. The quintic phase kernel vectorizes the modulus work
// and leaves sincos to libm so results track the scalar path closely.

#include "bnls/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <cmath>

namespace bnls::kern {
namespace {

inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

inline double hmax(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_max_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_max_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

void scale_v(cplx* z, std::size_t n, double a) {
  double* p = reinterpret_cast<double*>(z);
  std::size_t m = 2 * n;
  __m256d va = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + 4 <= m; i += 4)
    _mm256_storeu_pd(p + i, _mm256_mul_pd(_mm256_loadu_pd(p + i), va));
  for (; i < m; ++i) p[i] *= a;
}

// [zr0,zi0,zr1,zi1] * [wr0,wi0,wr1,wi1] via the fmaddsub pattern.
inline __m256d cmul2(__m256d z, __m256d w) {
  __m256d wre = _mm256_movedup_pd(w);          // [wr0,wr0,wr1,wr1]
  __m256d wim = _mm256_permute_pd(w, 0xF);     // [wi0,wi0,wi1,wi1]
  __m256d zsw = _mm256_permute_pd(z, 0x5);     // [zi0,zr0,zi1,zr1]
  return _mm256_fmaddsub_pd(z, wre, _mm256_mul_pd(zsw, wim));
}

void cmul_v(cplx* z, const cplx* w, std::size_t n) {
  double* zp = reinterpret_cast<double*>(z);
  const double* wp = reinterpret_cast<const double*>(w);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d vz = _mm256_loadu_pd(zp + 2 * i);
    __m256d vw = _mm256_loadu_pd(wp + 2 * i);
    _mm256_storeu_pd(zp + 2 * i, cmul2(vz, vw));
  }
  for (; i < n; ++i) z[i] *= w[i];
}

void rmul_v(cplx* z, const double* w, std::size_t n) {
  double* zp = reinterpret_cast<double*>(z);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m128d lo = _mm_loaddup_pd(w + i);
    __m128d hi = _mm_loaddup_pd(w + i + 1);
    __m256d ww = _mm256_set_m128d(hi, lo);     // [w0,w0,w1,w1]
    __m256d vz = _mm256_loadu_pd(zp + 2 * i);
    _mm256_storeu_pd(zp + 2 * i, _mm256_mul_pd(vz, ww));
  }
  for (; i < n; ++i) z[i] *= w[i];
}

void quintic_phase_v(cplx* z, std::size_t n, double dt) {
  double* zp = reinterpret_cast<double*>(z);
  std::size_t i = 0;
  alignas(32) double m4[4];
  for (; i + 4 <= n; i += 4) {
    __m256d a = _mm256_loadu_pd(zp + 2 * i);      // z[i],   z[i+1]
    __m256d b = _mm256_loadu_pd(zp + 2 * i + 4);  // z[i+2], z[i+3]
    __m256d a2 = _mm256_mul_pd(a, a);
    __m256d b2 = _mm256_mul_pd(b, b);
    // hadd pairs then unscramble to [m0,m1,m2,m3]
    __m256d ms = _mm256_permute4x64_pd(_mm256_hadd_pd(a2, b2), 0xD8);
    _mm256_store_pd(m4, _mm256_mul_pd(ms, ms));   // |z|^4
    for (int j = 0; j < 4; ++j) {
      double phi = -dt * m4[j];
      z[i + j] *= cplx(std::cos(phi), std::sin(phi));
    }
  }
  for (; i < n; ++i) {
    double m = z[i].real() * z[i].real() + z[i].imag() * z[i].imag();
    double phi = -dt * m * m;
    z[i] *= cplx(std::cos(phi), std::sin(phi));
  }
}

double sum_abs2_v(const cplx* z, std::size_t n) {
  const double* p = reinterpret_cast<const double*>(z);
  std::size_t m = 2 * n;
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= m; i += 4) {
    __m256d v = _mm256_loadu_pd(p + i);
    acc = _mm256_fmadd_pd(v, v, acc);
  }
  double s = hsum(acc);
  for (; i < m; ++i) s += p[i] * p[i];
  return s;
}

double sum_abs2_w_v(const cplx* z, const double* w, std::size_t n) {
  const double* zp = reinterpret_cast<const double*>(z);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m128d lo = _mm_loaddup_pd(w + i);
    __m128d hi = _mm_loaddup_pd(w + i + 1);
    __m256d ww = _mm256_set_m128d(hi, lo);
    __m256d v = _mm256_loadu_pd(zp + 2 * i);
    acc = _mm256_fmadd_pd(_mm256_mul_pd(v, v), ww, acc);
  }
  double s = hsum(acc);
  for (; i < n; ++i)
    s += w[i] * (z[i].real() * z[i].real() + z[i].imag() * z[i].imag());
  return s;
}

double sum_abs6_v(const cplx* z, std::size_t n) {
  const double* p = reinterpret_cast<const double*>(z);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d a = _mm256_loadu_pd(p + 2 * i);
    __m256d b = _mm256_loadu_pd(p + 2 * i + 4);
    __m256d ms = _mm256_hadd_pd(_mm256_mul_pd(a, a), _mm256_mul_pd(b, b));
    acc = _mm256_fmadd_pd(_mm256_mul_pd(ms, ms), ms, acc);
  }
  double s = hsum(acc);
  for (; i < n; ++i) {
    double m = z[i].real() * z[i].real() + z[i].imag() * z[i].imag();
    s += m * m * m;
  }
  return s;
}

double max_abs2_v(const cplx* z, std::size_t n) {
  const double* p = reinterpret_cast<const double*>(z);
  __m256d best = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d a = _mm256_loadu_pd(p + 2 * i);
    __m256d b = _mm256_loadu_pd(p + 2 * i + 4);
    __m256d ms = _mm256_hadd_pd(_mm256_mul_pd(a, a), _mm256_mul_pd(b, b));
    best = _mm256_max_pd(best, ms);
  }
  double s = hmax(best);
  for (; i < n; ++i) {
    double m = z[i].real() * z[i].real() + z[i].imag() * z[i].imag();
    if (m > s) s = m;
  }
  return s;
}

double diff_abs2_v(const cplx* a, const cplx* b, std::size_t n) {
  const double* ap = reinterpret_cast<const double*>(a);
  const double* bp = reinterpret_cast<const double*>(b);
  std::size_t m = 2 * n;
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= m; i += 4) {
    __m256d d = _mm256_sub_pd(_mm256_loadu_pd(ap + i), _mm256_loadu_pd(bp + i));
    acc = _mm256_fmadd_pd(d, d, acc);
  }
  double s = hsum(acc);
  for (; i < m; ++i) {
    double d = ap[i] - bp[i];
    s += d * d;
  }
  return s;
}

}  // namespace

const KernelTable avx2_table = {
    "avx2",     scale_v,      cmul_v,     rmul_v,     quintic_phase_v,
    sum_abs2_v, sum_abs2_w_v, sum_abs6_v, max_abs2_v, diff_abs2_v,
};

}  // namespace bnls::kern

#else  // non-x86 fallback: alias the scalar table so dispatch stays uniform.

namespace bnls::kern {
const KernelTable avx2_table = scalar_table;
}

#endif
