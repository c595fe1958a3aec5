#include "bnls/imethod.hpp"

#include <cmath>

#include "bnls/bump.hpp"
#include "bnls/rng.hpp"
#include "bnls/spectral.hpp"

namespace bnls {

IMultiplier::IMultiplier(double cutoff, double regularity)
    : N(cutoff), s(regularity) {
  if (!is_dyadic(N) || N < 2.0)
    throw ConfigError("imethod: N must be a dyadic >= 2");
  if (!(s > 8.0 / 7.0 && s < 2.0))
    throw ConfigError("imethod: s must lie in (8/7, 2)");
}

double IMultiplier::value_abs(double abs_xi) const {
  double r = abs_xi / N;
  if (r <= 1.0) return 1.0;
  if (r >= 2.0) return std::pow(r, s - 2.0);
  double chi = BumpProfile::blend(r - 1.0);
  return (1.0 - chi) + chi * std::pow(r, s - 2.0);
}

double IMultiplier::value_sq(double xi_sq) const {
  return value_abs(std::sqrt(xi_sq));
}

aligned_vector<double> IMultiplier::table(const GridSpec& g) const {
  auto t = freq_sq_table(g);
  for (auto& v : t) v = value_sq(v);
  return t;
}

Field2D apply_I(const IMultiplier& m, const Field2D& f) {
  Field2D out = in_rep(f, Rep::frequency);
  auto t = m.table(out.grid());
  kern::rmul(out.data(), t.data(), out.size());
  return out;
}

double energy(const Field2D& f, double sextic_coefficient) {
  Field2D fr = in_rep(f, Rep::frequency);
  auto w = freq_sq_table(fr.grid());
  for (auto& v : w) v *= v;  // |xi|^4
  double kinetic = 0.5 * kern::sum_abs2_w(fr.data(), w.data(), fr.size());
  Field2D fp = in_rep(fr, Rep::physical);
  double sextic = kern::sum_abs6(fp.data(), fp.size()) * fp.grid().cell_area();
  return kinetic + sextic_coefficient * sextic;
}

double modified_energy(const IMultiplier& m, const Field2D& f) {
  return energy(apply_I(m, f), 1.0 / 6.0);
}

SandwichReport me_hs_sandwich_check(const IMultiplier& m, const Field2D& f,
                                    double u0_mass) {
  double me = modified_energy(m, f);
  double hdot = sobolev_norm(f, m.s, true);
  double l6 = lp_norm(f, 6.0);
  double d1 = std::pow(std::pow(m.N, 2.0 - m.s) * hdot, 2.0) + std::pow(l6, 6.0);
  double d2 = me + u0_mass * u0_mass;
  if (!(d1 > 0.0) || !(d2 > 0.0))
    throw NumericalError("me_hs_sandwich_check: degenerate input (zero field)");
  double hs = sobolev_norm(f, m.s, false);
  return {me / d1, hs * hs / d2};
}

namespace {

// Log-uniform dyadic magnitude in [lo, hi] (both powers of two).
double dyadic_between(PhiloxRng& rng, double lo, double hi) {
  int jlo = static_cast<int>(std::lround(std::log2(lo)));
  int jhi = static_cast<int>(std::lround(std::log2(hi)));
  int j = jlo + static_cast<int>(rng.uniform() * (jhi - jlo + 1));
  if (j > jhi) j = jhi;
  return std::ldexp(1.0, j);
}

}  // namespace

double case1_multiplier_bound(const IMultiplier& m, std::size_t sample_count,
                              std::uint64_t seed) {
  PhiloxRng rng(seed);
  double N = m.N;
  double worst = 0.0;
  for (std::size_t it = 0; it < sample_count; ++it) {
    // N2 in [N, 16N]; N3 in [1, N/4]; the rest descend from N3.
    double mag2 = dyadic_between(rng, N, 16.0 * N);
    double mag3 = dyadic_between(rng, 1.0, N / 4.0);
    double mag4 = dyadic_between(rng, 1.0, mag3);
    double mag5 = dyadic_between(rng, 1.0, mag4);
    double mag6 = dyadic_between(rng, 1.0, mag5);
    double sumx = 0.0, sumy = 0.0, prod = 1.0;
    const double mags[5] = {mag2, mag3, mag4, mag5, mag6};
    for (double mg : mags) {
      double r = rng.uniform(mg, 2.0 * mg);
      double th = rng.uniform(0.0, 2.0 * kPi);
      sumx += r * std::cos(th);
      sumy += r * std::sin(th);
      prod *= m.value_abs(r);
    }
    double m_sum = m.value_abs(std::hypot(sumx, sumy));
    double q = std::abs(1.0 - m_sum / prod) * (mag2 / mag3);
    if (q > worst) worst = q;
  }
  return worst;
}

}  // namespace bnls
