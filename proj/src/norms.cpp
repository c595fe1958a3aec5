#include "bnls/norms.hpp"

#include <algorithm>
#include <cmath>

#include "bnls/datagen.hpp"
#include "bnls/spectral.hpp"

namespace bnls {

namespace {
constexpr double kTol = 1e-12;
inline double inv(double x) { return std::isinf(x) ? 0.0 : 1.0 / x; }
}  // namespace

AdmissibleVerdict validate_admissible(double p, double q, double mu, int d) {
  if (!(p >= 2.0)) return {false, "p must be >= 2"};
  if (!(q >= 2.0)) return {false, "q must be >= 2"};
  if (mu < -kTol || mu > 1.0 + kTol) return {false, "mu must lie in [0, 1]"};
  // Lower p range: p >= 2/(1-mu); mu = 1 admits only p = infinity.
  if (mu >= 1.0 - kTol) {
    if (!std::isinf(p)) return {false, "mu = 1 requires p = infinity"};
  } else if (p + kTol < 2.0 / (1.0 - mu)) {
    return {false, "p below 2/(1-mu)"};
  }
  double lhs = 4.0 * inv(q);
  double rhs = static_cast<double>(d) * (0.5 - inv(p)) + mu;
  if (std::abs(lhs - rhs) > kTol)
    return {false, "scaling relation 4/q = d(1/2 - 1/p) + mu fails"};
  if (std::isinf(p) && q == 2.0 && d == 4 && mu <= kTol)
    return {false, "(p,q,d) = (inf,2,4) is excluded"};
  if (d >= 5 && mu <= kTol) {
    double pmax = 2.0 * d / (d - 4.0);
    if (!(p < pmax - kTol)) return {false, "p must be < 2d/(d-4) for d >= 5"};
  }
  return {true, "admissible"};
}

double mixed_norm(const Trajectory& traj, double q, double p) {
  if (traj.fields.empty())
    throw ConfigError("mixed_norm: trajectory has no stored fields");
  double acc = 0.0, sup = 0.0;
  for (std::size_t i = 0; i < traj.fields.size(); ++i) {
    double lp = lp_norm(traj.fields[i], p);
    if (std::isinf(q)) {
      sup = std::max(sup, lp);
    } else {
      // trapezoid on the (possibly nonuniform) record times
      double wl = i > 0 ? 0.5 * (traj.times[i] - traj.times[i - 1]) : 0.0;
      double wr = i + 1 < traj.times.size()
                      ? 0.5 * (traj.times[i + 1] - traj.times[i])
                      : 0.0;
      acc += (wl + wr) * std::pow(lp, q);
    }
  }
  return std::isinf(q) ? sup : std::pow(acc, 1.0 / q);
}

StrichartzStats strichartz_constant_sample(const AdmissiblePair& pair,
                                           int trial_count, std::uint64_t seed,
                                           const GridSpec& grid,
                                           const TimeWindow& window,
                                           double shell_N, double eps) {
  auto verdict = validate_admissible(pair.p, pair.q, pair.mu, pair.d);
  if (!verdict.ok)
    throw ConfigError("strichartz_constant_sample: invalid pair: " + verdict.reason);
  if (trial_count < 1) throw ConfigError("strichartz_constant_sample: trials >= 1");

  StrichartzStats stats;
  PhiloxRng base(seed);
  for (int trial = 0; trial < trial_count; ++trial) {
    Field2D phi = [&]() {
      if (shell_N > 0.0) {
        DataRecipe r;
        r.kind = Recipe::custom_spectrum;
        r.shape = "packet";
        r.shell_N = shell_N;
        Field2D raw = generate_data(r, seed + static_cast<std::uint64_t>(trial), grid);
        return lp_project(raw, shell_N, ProjKind::band);
      }
      DataRecipe r;
      r.kind = Recipe::custom_spectrum;
      r.shape = "gauss";
      r.spec_sigma = 0.25 * grid.nyquist();
      return generate_data(r, seed + static_cast<std::uint64_t>(trial), grid);
    }();

    double l2 = phi.l2_norm();
    if (!(l2 > 0.0)) throw NumericalError("strichartz sample: zero data");
    kern::scale(phi.data(), phi.size(), 1.0 / l2);

    SpaceTimeField stf =
        SpaceTimeField::linear_flow(phi, window, /*support_only=*/shell_N > 0.0);
    double mixed = stf.mixed_norm(pair.q, pair.p);
    double ratio;
    if (shell_N > 0.0) {
      double xsb = stf.xsb_norm(0.0, 0.5 + eps);
      ratio = std::pow(shell_N, pair.mu) * mixed / xsb;
    } else {
      ratio = mixed;  // phi was L^2-normalized
    }
    stats.ratios.push_back(ratio);
  }
  std::vector<double> sorted = stats.ratios;
  std::sort(sorted.begin(), sorted.end());
  stats.max_ratio = sorted.back();
  stats.median_ratio = sorted[sorted.size() / 2];
  return stats;
}

double square_function_check(const Field2D& f, double p) {
  if (!(p > 1.0) || std::isinf(p))
    throw ConfigError("square_function_check: requires 1 < p < infinity");
  double up = lp_norm(f, p);
  if (!(up > 0.0)) throw NumericalError("square_function_check: zero field");

  const GridSpec& g = f.grid();
  // Ladder covering every nonzero lattice frequency: from below the lattice
  // spacing up to past the corner frequency.
  int jlo = static_cast<int>(std::floor(std::log2(g.dk())));
  int jhi = static_cast<int>(std::ceil(std::log2(g.nyquist() * std::sqrt(2.0)))) + 1;

  aligned_vector<double> sumsq(g.size(), 0.0);
  auto eng = FftEngine::plan2d(g.n);
  Field2D fr = in_rep(f, Rep::frequency);
  auto ksq = freq_sq_table(g);
  BumpProfile phi;
  aligned_vector<std::complex<double>> band(g.size());
  for (int j = jlo; j <= jhi; ++j) {
    double N = std::ldexp(1.0, j);
    for (std::size_t i = 0; i < g.size(); ++i) {
      double r = std::sqrt(ksq[i]) / N;
      band[i] = fr[i] * (phi(r) - phi(2.0 * r));
    }
    eng->backward(band.data());
    kern::scale(band.data(), band.size(), 1.0 / g.box_length);
    for (std::size_t i = 0; i < g.size(); ++i) sumsq[i] += std::norm(band[i]);
  }

  Field2D sq(g, Rep::physical);
  for (std::size_t i = 0; i < g.size(); ++i)
    sq[i] = {std::sqrt(sumsq[i]), 0.0};
  return lp_norm(sq, p) / up;
}

}  // namespace bnls
