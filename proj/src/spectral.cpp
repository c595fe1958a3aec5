#include "bnls/spectral.hpp"

#include <cmath>
#include <limits>

namespace bnls {

bool is_dyadic(double N) {
  if (!(N > 0.0) || !std::isfinite(N)) return false;
  double j = std::log2(N);
  return std::abs(j - std::round(j)) < 1e-12;
}

Field2D bilaplacian(const Field2D& f) {
  Field2D out = in_rep(f, Rep::frequency);
  auto ksq = freq_sq_table(out.grid());
  for (auto& w : ksq) w *= w;
  kern::rmul(out.data(), ksq.data(), out.size());
  return out;
}

Field2D gradient_power(const Field2D& f, double s) {
  Field2D out = in_rep(f, Rep::frequency);
  auto w = freq_sq_table(out.grid());
  for (auto& v : w) v = v > 0.0 ? std::pow(v, 0.5 * s) : 0.0;
  kern::rmul(out.data(), w.data(), out.size());
  return out;
}

double sobolev_norm(const Field2D& f, double s, bool homogeneous) {
  Field2D fr = in_rep(f, Rep::frequency);
  auto w = freq_sq_table(fr.grid());
  for (auto& v : w) {
    double base = homogeneous ? v : 1.0 + v;
    v = base > 0.0 ? std::pow(base, s) : 0.0;  // (w^2)^s = w^{2s}
  }
  return std::sqrt(kern::sum_abs2_w(fr.data(), w.data(), fr.size()));
}

double lp_norm(const Field2D& f, double p) {
  if (!(p >= 1.0)) throw ConfigError("lp_norm: p must be >= 1");
  Field2D fp = in_rep(f, Rep::physical);
  if (std::isinf(p)) return std::sqrt(kern::max_abs2(fp.data(), fp.size()));
  double s = kern::sum_abs_pow(fp.data(), fp.size(), p);
  return std::pow(s * fp.grid().cell_area(), 1.0 / p);
}

Field2D lp_project(const Field2D& f, double N, ProjKind kind) {
  if (!is_dyadic(N)) throw ConfigError("lp_project: N must be a power of 2");
  Field2D out = in_rep(f, Rep::frequency);
  BumpProfile phi;
  auto w = freq_sq_table(out.grid());
  for (auto& v : w) {
    double r = std::sqrt(v) / N;
    switch (kind) {
      case ProjKind::band: v = phi(r) - phi(2.0 * r); break;
      case ProjKind::low:  v = phi(r); break;
      case ProjKind::high: v = 1.0 - phi(r); break;
    }
  }
  kern::rmul(out.data(), w.data(), out.size());
  return out;
}

double bernstein_ratio(const Field2D& f, double N, double s, double p) {
  double denom = lp_norm(f, p);
  if (!(denom > 0.0))
    throw NumericalError("bernstein_ratio: zero band content, ratio undefined");
  double numer = lp_norm(gradient_power(f, s), p);
  return numer / (std::pow(N, s) * denom);
}

}  // namespace bnls
