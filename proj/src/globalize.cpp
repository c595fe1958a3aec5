#include "bnls/globalize.hpp"

#include <cmath>
#include <limits>

#include "bnls/spectral.hpp"

namespace bnls {

Field2D rescale(const Field2D& f, double lambda, double max_box_length) {
  if (!(lambda > 0.0)) throw ConfigError("rescale: lambda must be positive");
  const GridSpec& g = f.grid();
  double new_L = lambda * g.box_length;
  if (new_L > max_box_length)
    throw ResourceError("rescale: target box exceeds the configured maximum");
  Field2D fr = in_rep(f, Rep::frequency);
  GridSpec target(new_L, g.n);
  return Field2D(target, Rep::frequency, fr.values());
}

double choose_lambda(double s, double N, double hs_norm_u0, double C0) {
  if (!(s > 8.0 / 7.0 && s < 2.0)) throw ConfigError("choose_lambda: s outside (8/7, 2)");
  if (!(N >= 2.0)) throw ConfigError("choose_lambda: N must be >= 2");
  if (!(C0 > 0.0)) throw ConfigError("choose_lambda: C0 must be positive");
  return std::pow(1.0 / (2.0 * C0), 1.0 / (2.0 * s)) *
         std::pow(N, (4.0 - 2.0 * s) / (2.0 * s)) *
         std::pow(1.0 + hs_norm_u0, 6.0 / (2.0 * s));
}

GlobalizationPlan plan(double s, double T0, double C1, double C0,
                       double hs_norm_u0) {
  if (!(s > 8.0 / 7.0))
    throw ConfigError("plan: the globalization argument requires s > 8/7");
  if (!(s < 2.0)) throw ConfigError("plan: s must be below the energy regularity 2");
  if (!(T0 > 1.0)) throw ConfigError("plan: T0 must exceed 1");
  if (!(C1 > 0.0)) throw ConfigError("plan: C1 must be positive");

  GlobalizationPlan out;
  out.s = s;
  out.T0 = T0;
  out.C0 = C0;
  out.C1 = C1;

  // N = T0^{s/(7s-8)} rounded up to a dyadic; a small snap absorbs the
  // representation error of the exponent so exact powers stay exact.
  double log2N = std::log2(T0) * s / (7.0 * s - 8.0);
  int j = static_cast<int>(std::ceil(log2N - 1e-9));
  out.N = std::ldexp(1.0, j);

  double log2_iters = std::log2(C1) + 3.0 * j;
  if (log2_iters >= 63.0) {
    out.iterations = UINT64_MAX;
    out.iterations_saturated = true;
  } else {
    out.iterations = static_cast<std::uint64_t>(std::llround(C1 * out.N * out.N * out.N));
  }

  out.lambda = choose_lambda(s, out.N, hs_norm_u0, C0);
  out.growth_exponent = (8.0 - 4.0 * s) / (7.0 * s - 8.0);
  out.predicted_hs_bound = std::pow(T0, out.growth_exponent);
  out.divergence_warning = out.growth_exponent > 100.0;
  return out;
}

double modified_energy_scaled_cutoff(const IMultiplier& m, const Field2D& f,
                                     double lambda) {
  Field2D fr = in_rep(f, Rep::frequency);
  const GridSpec& g = fr.grid();
  auto ksq = freq_sq_table(g);
  aligned_vector<double> mt(g.size());
  for (std::size_t i = 0; i < g.size(); ++i)
    mt[i] = m.value_abs(std::sqrt(ksq[i]) / lambda);
  aligned_vector<double> w(g.size());
  for (std::size_t i = 0; i < g.size(); ++i)
    w[i] = mt[i] * mt[i] * ksq[i] * ksq[i];
  double kinetic = 0.5 * kern::sum_abs2_w(fr.data(), w.data(), fr.size());
  Field2D iu = fr;
  kern::rmul(iu.data(), mt.data(), iu.size());
  Field2D ip = in_rep(iu, Rep::physical);
  double sextic = kern::sum_abs6(ip.data(), ip.size()) * g.cell_area() / 6.0;
  return kinetic + sextic;
}

SweepResult almost_conservation_sweep(const Field2D& u0, double s,
                                      const std::vector<double>& Ns,
                                      double delta, SolverConfig solver,
                                      std::uint64_t seed) {
  if (Ns.empty()) throw ConfigError("sweep: need at least one N");
  if (!(delta > 0.0)) throw ConfigError("sweep: delta must be positive");

  SweepResult out;
  out.Ns = Ns;
  out.seed = seed;

  std::vector<IMultiplier> ms;
  double n_min = Ns.front();
  for (double N : Ns) {
    ms.emplace_back(N, s);
    n_min = std::min(n_min, N);
  }

  // Band-limited below the smallest cutoff: every multiplier acts as the
  // identity and the increments reduce to plain integrator drift.
  {
    Field2D fr = in_rep(u0, Rep::frequency);
    auto ksq = freq_sq_table(fr.grid());
    double top = 0.0;
    for (std::size_t i = 0; i < fr.size(); ++i)
      if (std::norm(fr[i]) > 0.0) top = std::max(top, std::sqrt(ksq[i]));
    out.trivial_regime = top <= n_min;
  }

  const GridSpec& g = u0.grid();
  std::vector<aligned_vector<double>> mtabs, m2k4;
  auto k4 = freq_sq_table(g);
  for (auto& v : k4) v *= v;
  for (const auto& m : ms) {
    auto t = m.table(g);
    aligned_vector<double> w(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) w[i] = t[i] * t[i] * k4[i];
    mtabs.push_back(std::move(t));
    m2k4.push_back(std::move(w));
  }

  auto eng = FftEngine::plan2d(g.n);
  aligned_vector<std::complex<double>> scratch(g.size());
  std::vector<double> e0(Ns.size(), 0.0), sup(Ns.size(), 0.0);
  bool first = true;

  solver.t_end = delta;
  auto observer = [&](double, const aligned_vector<std::complex<double>>& uhat) {
    for (std::size_t a = 0; a < ms.size(); ++a) {
      double kin = 0.5 * kern::sum_abs2_w(uhat.data(), m2k4[a].data(), uhat.size());
      scratch = uhat;
      kern::rmul(scratch.data(), mtabs[a].data(), scratch.size());
      eng->backward(scratch.data());
      kern::scale(scratch.data(), scratch.size(), 1.0 / g.box_length);
      double sex = kern::sum_abs6(scratch.data(), scratch.size()) * g.cell_area() / 6.0;
      double e = kin + sex;
      if (first)
        e0[a] = e;
      else
        sup[a] = std::max(sup[a], std::abs(e - e0[a]));
    }
    first = false;
  };

  evolve(u0, solver, nullptr, observer);

  out.increments = sup;
  std::vector<double> lx, ly;
  for (std::size_t a = 0; a < Ns.size(); ++a) {
    lx.push_back(std::log2(Ns[a]));
    ly.push_back(std::log2(std::max(sup[a], 1e-300)));
  }
  out.slope = Ns.size() >= 2 ? fit_slope(lx, ly) : 0.0;
  return out;
}

double rescaled_energy_identity_check(const Field2D& u0, double lambda,
                                      double t, const SolverConfig& solver,
                                      const IMultiplier& m) {
  Field2D u_l = rescale(u0, lambda);

  double lhs, rhs;
  if (t <= 0.0) {
    lhs = modified_energy_scaled_cutoff(m, u0, lambda);
    rhs = std::pow(lambda, 4.0) * modified_energy(m, u_l);
  } else {
    SolverConfig cfg = solver;
    cfg.record_every = std::numeric_limits<int>::max();
    cfg.store_fields = true;
    cfg.t_end = t;
    Trajectory a = evolve(u0, cfg);
    cfg.t_end = std::pow(lambda, 4.0) * t;
    Trajectory b = evolve(u_l, cfg);
    lhs = modified_energy_scaled_cutoff(m, a.fields.back(), lambda);
    rhs = std::pow(lambda, 4.0) * modified_energy(m, b.fields.back());
  }
  double scale = std::max(std::abs(lhs), 1e-300);
  return std::abs(lhs - rhs) / scale;
}

}  // namespace bnls
