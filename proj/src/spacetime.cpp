#include "bnls/spacetime.hpp"

#include <cmath>

#include "bnls/bump.hpp"
#include "bnls/spectral.hpp"

namespace bnls {

void TimeWindow::validate() const {
  if (!(delta > 0.0)) throw ConfigError("window: delta must be positive");
  if (n_t < 8 || n_t % 4 != 0)
    throw ConfigError("window: n_t must be >= 8 and divisible by 4");
}

double TimeWindow::weight(double t) const {
  if (boxcar) return 1.0;
  if (t >= 0.0 && t <= delta) return 1.0;
  if (t < 0.0) return BumpProfile::blend(2.0 * t / delta + 1.0);
  return BumpProfile::blend((1.5 * delta - t) / (0.5 * delta));
}

void SpaceTimeField::reserve(std::size_t n_modes, std::size_t max_bytes) {
  std::size_t bytes = n_modes * static_cast<std::size_t>(window_.n_t) *
                      sizeof(std::complex<double>);
  if (bytes > max_bytes)
    throw ResourceError("spacetime: sample storage exceeds memory cap");
  series_.assign(n_modes * window_.n_t, {0.0, 0.0});
}

SpaceTimeField SpaceTimeField::linear_flow(const Field2D& phi,
                                           const TimeWindow& w,
                                           bool support_only,
                                           std::size_t max_bytes) {
  w.validate();
  Field2D f0 = in_rep(phi, Rep::frequency);
  SpaceTimeField stf(f0.grid(), w);
  for (std::size_t i = 0; i < f0.size(); ++i)
    if (!support_only || std::norm(f0[i]) > 0.0) stf.modes_.push_back(i);
  stf.reserve(stf.modes_.size(), max_bytes);

  auto ksq = freq_sq_table(f0.grid());
  for (std::size_t mi = 0; mi < stf.modes_.size(); ++mi) {
    std::size_t idx = stf.modes_[mi];
    double k4 = ksq[idx] * ksq[idx];
    std::complex<double> a0 = f0[idx];
    for (int j = 0; j < w.n_t; ++j) {
      double ph = -k4 * w.t_at(j);
      stf.series_[mi * w.n_t + j] = a0 * std::complex<double>(std::cos(ph), std::sin(ph));
    }
  }
  return stf;
}

SpaceTimeField SpaceTimeField::nonlinear_flow(const Field2D& u0,
                                              const TimeWindow& w,
                                              const SolverConfig& solver,
                                              std::size_t max_bytes) {
  w.validate();
  SpaceTimeField stf(u0.grid(), w);
  stf.modes_.resize(u0.grid().size());
  for (std::size_t i = 0; i < stf.modes_.size(); ++i) stf.modes_[i] = i;
  stf.reserve(stf.modes_.size(), max_bytes);

  // Substeps per window sample, honoring the configured dt as a ceiling.
  int sub = std::max(1, static_cast<int>(std::ceil(w.dt() / solver.dt - 1e-12)));
  SolverConfig cfg = solver;

  auto store = [&](int j, const Field2D& state) {
    Field2D fr = in_rep(state, Rep::frequency);
    for (std::size_t mi = 0; mi < stf.modes_.size(); ++mi)
      stf.series_[mi * w.n_t + j] = fr[stf.modes_[mi]];
  };

  const int j0 = w.index_of_zero();
  // Backward sweep from t = 0 down to the window start.
  Field2D state = in_rep(u0, Rep::frequency);
  store(j0, state);
  cfg.dt = -w.dt() / sub;
  for (int j = j0 - 1; j >= 0; --j) {
    for (int k = 0; k < sub; ++k) state = step(state, cfg);
    store(j, state);
  }
  // Forward sweep across the rest of the period.
  state = in_rep(u0, Rep::frequency);
  cfg.dt = w.dt() / sub;
  for (int j = j0 + 1; j < w.n_t; ++j) {
    for (int k = 0; k < sub; ++k) state = step(state, cfg);
    store(j, state);
  }
  return stf;
}

SpaceTimeField SpaceTimeField::from_samples(
    const GridSpec& g, const TimeWindow& w,
    const std::vector<aligned_vector<std::complex<double>>>& slices) {
  w.validate();
  if (static_cast<int>(slices.size()) != w.n_t)
    throw ConfigError("spacetime: slice count must equal n_t");
  SpaceTimeField stf(g, w);
  stf.modes_.resize(g.size());
  for (std::size_t i = 0; i < stf.modes_.size(); ++i) stf.modes_[i] = i;
  stf.reserve(stf.modes_.size(), kDefaultBytes);
  for (int j = 0; j < w.n_t; ++j) {
    if (slices[j].size() != g.size())
      throw ConfigError("spacetime: slice size mismatch");
    for (std::size_t mi = 0; mi < stf.modes_.size(); ++mi)
      stf.series_[mi * w.n_t + j] = slices[j][mi];
  }
  return stf;
}

aligned_vector<std::complex<double>> SpaceTimeField::slice(int j) const {
  aligned_vector<std::complex<double>> out(grid_.size(), {0.0, 0.0});
  for (std::size_t mi = 0; mi < modes_.size(); ++mi)
    out[modes_[mi]] = series_[mi * window_.n_t + j];
  return out;
}

double SpaceTimeField::xsb_norm(double s, double b) const {
  auto eng = FftEngine::plan1d(window_.n_t);
  auto ksq = freq_sq_table(grid_);
  const int nt = window_.n_t;
  const double dt = window_.dt();
  const double ct = dt / std::sqrt(window_.period());  // unitary time weight
  const double dtau = 2.0 * kPi / window_.period();

  aligned_vector<std::complex<double>> buf(nt);
  std::vector<double> wgt(nt);
  for (int j = 0; j < nt; ++j) wgt[j] = window_.weight(window_.t_at(j));

  double acc = 0.0;
  for (std::size_t mi = 0; mi < modes_.size(); ++mi) {
    std::size_t idx = modes_[mi];
    double k4 = ksq[idx] * ksq[idx];
    double xi_w = std::pow(1.0 + ksq[idx], s);  // <xi>^{2s}
    for (int j = 0; j < nt; ++j) {
      double ph = k4 * window_.t_at(j);  // demodulation e^{+i |xi|^4 t}
      buf[j] = series_[mi * nt + j] * wgt[j] *
               std::complex<double>(std::cos(ph), std::sin(ph));
    }
    eng->forward(buf.data());
    double mode_acc = 0.0;
    for (int mm = 0; mm < nt; ++mm) {
      int sm = mm < nt / 2 ? mm : mm - nt;
      double tau = dtau * sm;
      mode_acc += std::pow(1.0 + tau * tau, b) * std::norm(buf[mm]);
    }
    acc += xi_w * mode_acc * ct * ct;
  }
  return std::sqrt(acc);
}

double SpaceTimeField::mixed_norm(double q, double p) const {
  const int j0 = window_.index_of_zero();
  const int j1 = window_.index_of_delta();
  auto eng = FftEngine::plan2d(grid_.n);
  double dt = window_.dt();

  double acc = 0.0, sup = 0.0;
  aligned_vector<std::complex<double>> phys;
  for (int j = j0; j <= j1; ++j) {
    phys = slice(j);
    eng->backward(phys.data());
    kern::scale(phys.data(), phys.size(), 1.0 / grid_.box_length);
    double lp;
    if (std::isinf(p)) {
      lp = std::sqrt(kern::max_abs2(phys.data(), phys.size()));
    } else {
      lp = std::pow(kern::sum_abs_pow(phys.data(), phys.size(), p) *
                        grid_.cell_area(),
                    1.0 / p);
    }
    if (std::isinf(q)) {
      sup = std::max(sup, lp);
    } else {
      double wq = (j == j0 || j == j1) ? 0.5 : 1.0;  // trapezoid
      acc += wq * std::pow(lp, q) * dt;
    }
  }
  return std::isinf(q) ? sup : std::pow(acc, 1.0 / q);
}

double window_constant(const TimeWindow& w, double b) {
  auto eng = FftEngine::plan1d(w.n_t);
  aligned_vector<std::complex<double>> buf(w.n_t);
  for (int j = 0; j < w.n_t; ++j) buf[j] = {w.weight(w.t_at(j)), 0.0};
  eng->forward(buf.data());
  double dtau = 2.0 * kPi / w.period();
  double num = 0.0, den = 0.0;
  for (int mm = 0; mm < w.n_t; ++mm) {
    int sm = mm < w.n_t / 2 ? mm : mm - w.n_t;
    double tau = dtau * sm;
    num += std::pow(1.0 + tau * tau, b) * std::norm(buf[mm]);
    den += std::norm(buf[mm]);
  }
  return den > 0.0 ? num / den : 0.0;
}

}  // namespace bnls
