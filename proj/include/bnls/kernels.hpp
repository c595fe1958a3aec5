#pragma once

#include <complex>
#include <cstddef>
#include <string>

namespace bnls::kern {

using cplx = std::complex<double>;

// Data-parallel inner loops of the solver and the norm evaluators.
// Every operation has a scalar reference implementation and an AVX2 variant;
// the active table is chosen once at startup from cpuid (override with
// force() or the BNLS_KERNEL_ISA environment variable, values "scalar" or
// "avx2"). The two variants are equivalence-tested against each other;
// reductions may differ by reassociation roundoff only.
struct KernelTable {
  const char* name;
  void (*scale)(cplx*, std::size_t, double);
  void (*cmul)(cplx*, const cplx*, std::size_t);          // z[i] *= w[i]
  void (*rmul)(cplx*, const double*, std::size_t);        // z[i] *= w[i]
  void (*quintic_phase)(cplx*, std::size_t, double);      // z[i] *= exp(-i |z[i]|^4 dt)
  double (*sum_abs2)(const cplx*, std::size_t);           // sum |z|^2
  double (*sum_abs2_w)(const cplx*, const double*, std::size_t);  // sum w |z|^2
  double (*sum_abs6)(const cplx*, std::size_t);           // sum |z|^6
  double (*max_abs2)(const cplx*, std::size_t);           // max |z|^2
  double (*diff_abs2)(const cplx*, const cplx*, std::size_t);  // sum |a-b|^2
};

extern const KernelTable scalar_table;
extern const KernelTable avx2_table;

const KernelTable& active();
bool cpu_has_avx2();
void force(const std::string& name);  // "scalar" | "avx2"

// Convenience forwarders through the active table.
inline void scale(cplx* z, std::size_t n, double a) { active().scale(z, n, a); }
inline void cmul(cplx* z, const cplx* w, std::size_t n) { active().cmul(z, w, n); }
inline void rmul(cplx* z, const double* w, std::size_t n) { active().rmul(z, w, n); }
inline void quintic_phase(cplx* z, std::size_t n, double dt) {
  active().quintic_phase(z, n, dt);
}
inline double sum_abs2(const cplx* z, std::size_t n) { return active().sum_abs2(z, n); }
inline double sum_abs2_w(const cplx* z, const double* w, std::size_t n) {
  return active().sum_abs2_w(z, w, n);
}
inline double sum_abs6(const cplx* z, std::size_t n) { return active().sum_abs6(z, n); }
inline double max_abs2(const cplx* z, std::size_t n) { return active().max_abs2(z, n); }
inline double diff_abs2(const cplx* a, const cplx* b, std::size_t n) {
  return active().diff_abs2(a, b, n);
}

// General |z|^p reduction; arbitrary p stays scalar (libm pow), p=2,4,6 hit
// the vector paths above.
double sum_abs_pow(const cplx* z, std::size_t n, double p);

}  // namespace bnls::kern
