#include "bnls/evolution.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <sstream>

namespace bnls {

void SolverConfig::validate() const {
  if (!(dt != 0.0) || !std::isfinite(dt)) throw ConfigError("solver: dt must be nonzero");
  if (!(dealias_fraction > 0.0 && dealias_fraction <= 1.0))
    throw ConfigError("solver: dealias_fraction must lie in (0, 1]");
  if (record_every < 1) throw ConfigError("solver: record_every must be >= 1");
}

Field2D linear_propagate(const Field2D& f, double t) {
  Field2D out = in_rep(f, Rep::frequency);
  auto k4 = freq_sq_table(out.grid());
  aligned_vector<std::complex<double>> phase(out.size());
  for (std::size_t i = 0; i < phase.size(); ++i) {
    double a = -t * k4[i] * k4[i];
    phase[i] = {std::cos(a), std::sin(a)};
  }
  kern::cmul(out.data(), phase.data(), out.size());
  return out;
}

Field2D nonlinear_phase_step(const Field2D& f, double dt) {
  Field2D out = in_rep(f, Rep::physical);
  kern::quintic_phase(out.data(), out.size(), dt);
  return out;
}

namespace {

using cvec = aligned_vector<std::complex<double>>;

// Split-step state bound to one grid + scheme + dt. Substep phase tables are
// cached per distinct linear time increment.
class Stepper {
 public:
  Stepper(const GridSpec& g, const SolverConfig& cfg)
      : grid_(g), cfg_(cfg), eng_(FftEngine::plan2d(g.n)), k4_(freq_sq_table(g)) {
    for (auto& v : k4_) v *= v;
    int cut = static_cast<int>(cfg.dealias_fraction * (g.n / 2) + 1e-12);
    if (cut < 1) throw ConfigError("solver: dealias_fraction retains no modes");
    mask_.assign(g.size(), 0.0);
    for (int ix = 0; ix < g.n; ++ix) {
      int sx = std::abs(g.signed_index(ix));
      for (int iy = 0; iy < g.n; ++iy) {
        int sy = std::abs(g.signed_index(iy));
        if (sx <= cut && sy <= cut)
          mask_[static_cast<std::size_t>(ix) * g.n + iy] = 1.0;
      }
    }
    build_plan();
  }

  void dealias(cvec& uhat) const { kern::rmul(uhat.data(), mask_.data(), uhat.size()); }

  // Relative magnitude of the largest coefficient the mask would remove.
  double masked_tail(const cvec& uhat) const {
    double peak = 0.0, tail = 0.0;
    for (std::size_t i = 0; i < uhat.size(); ++i) {
      double m = std::norm(uhat[i]);
      if (m > peak) peak = m;
      if (mask_[i] == 0.0 && m > tail) tail = m;
    }
    return peak > 0.0 ? std::sqrt(tail / peak) : 0.0;
  }

  void advance(cvec& uhat, cvec& scratch) {
    for (const auto& [kind, tau] : plan_) {
      if (kind == Sub::linear) {
        kern::cmul(uhat.data(), phase_table(tau).data(), uhat.size());
      } else {
        scratch = uhat;
        eng_->backward(scratch.data());
        kern::scale(scratch.data(), scratch.size(), 1.0 / grid_.box_length);
        kern::quintic_phase(scratch.data(), scratch.size(), tau);
        eng_->forward(scratch.data());
        kern::scale(scratch.data(), scratch.size(),
                    grid_.box_length / grid_.size());
        uhat = scratch;
        dealias(uhat);
      }
    }
  }

 private:
  enum class Sub { linear, nonlinear };

  void build_plan() {
    double dt = cfg_.dt;
    switch (cfg_.scheme) {
      case Scheme::lie:
        plan_ = {{Sub::linear, dt}, {Sub::nonlinear, dt}};
        break;
      case Scheme::strang:
        plan_ = {{Sub::linear, 0.5 * dt},
                 {Sub::nonlinear, dt},
                 {Sub::linear, 0.5 * dt}};
        break;
      case Scheme::yoshida4: {
        // Triple-jump composition of Strang steps.
        double w1 = 1.0 / (2.0 - std::cbrt(2.0));
        double w0 = 1.0 - 2.0 * w1;
        plan_ = {{Sub::linear, 0.5 * w1 * dt},
                 {Sub::nonlinear, w1 * dt},
                 {Sub::linear, 0.5 * (w1 + w0) * dt},
                 {Sub::nonlinear, w0 * dt},
                 {Sub::linear, 0.5 * (w1 + w0) * dt},
                 {Sub::nonlinear, w1 * dt},
                 {Sub::linear, 0.5 * w1 * dt}};
        break;
      }
    }
  }

  const cvec& phase_table(double tau) {
    auto it = phases_.find(tau);
    if (it != phases_.end()) return it->second;
    cvec table(grid_.size());
    for (std::size_t i = 0; i < table.size(); ++i) {
      double a = -tau * k4_[i];
      table[i] = {std::cos(a), std::sin(a)};
    }
    return phases_.emplace(tau, std::move(table)).first->second;
  }

  GridSpec grid_;
  SolverConfig cfg_;
  std::shared_ptr<const FftEngine> eng_;
  aligned_vector<double> k4_;
  aligned_vector<double> mask_;
  std::vector<std::pair<Sub, double>> plan_;
  std::map<double, cvec> phases_;
};

EnergyReport make_report(double t, const GridSpec& g, const cvec& uhat,
                         const aligned_vector<double>& k4,
                         const aligned_vector<double>* mtab,
                         const aligned_vector<double>* m2k4, double report_s,
                         cvec& scratch, const FftEngine& eng) {
  EnergyReport rep;
  rep.time = t;
  rep.mass = std::sqrt(kern::sum_abs2(uhat.data(), uhat.size()));

  double kinetic = 0.5 * kern::sum_abs2_w(uhat.data(), k4.data(), uhat.size());
  scratch = uhat;
  eng.backward(scratch.data());
  kern::scale(scratch.data(), scratch.size(), 1.0 / g.box_length);
  double sextic = kern::sum_abs6(scratch.data(), scratch.size()) * g.cell_area();
  rep.energy = kinetic + sextic / 6.0;
  rep.linf = std::sqrt(kern::max_abs2(scratch.data(), scratch.size()));

  // Nonhomogeneous H^s at the report regularity.
  double hs2 = 0.0;
  double dk = g.dk();
  for (int ix = 0; ix < g.n; ++ix) {
    double kx = dk * g.signed_index(ix);
    for (int iy = 0; iy < g.n; ++iy) {
      double ky = dk * g.signed_index(iy);
      std::size_t i = static_cast<std::size_t>(ix) * g.n + iy;
      hs2 += std::pow(1.0 + kx * kx + ky * ky, report_s) * std::norm(uhat[i]);
    }
  }
  rep.hs_norm = std::sqrt(hs2);

  if (mtab) {
    double kin_i = 0.5 * kern::sum_abs2_w(uhat.data(), m2k4->data(), uhat.size());
    scratch = uhat;
    kern::rmul(scratch.data(), mtab->data(), scratch.size());
    eng.backward(scratch.data());
    kern::scale(scratch.data(), scratch.size(), 1.0 / g.box_length);
    double sex_i = kern::sum_abs6(scratch.data(), scratch.size()) * g.cell_area();
    rep.modified_energy = kin_i + sex_i / 6.0;
  } else {
    rep.modified_energy = std::numeric_limits<double>::quiet_NaN();
  }
  return rep;
}

}  // namespace

Field2D step(const Field2D& f, const SolverConfig& cfg) {
  cfg.validate();
  Field2D out = in_rep(f, Rep::frequency);
  Stepper st(out.grid(), cfg);
  cvec scratch(out.size());
  st.advance(out.values(), scratch);
  return out;
}

Trajectory evolve(const Field2D& f0, const SolverConfig& cfg,
                  const IMultiplier* m, const EvolveObserver& observer) {
  cfg.validate();
  if (!(cfg.dt > 0.0)) throw ConfigError("evolve: dt must be positive");
  if (!(cfg.t_end >= cfg.dt)) throw ConfigError("evolve: requires dt <= t_end");
  std::size_t steps =
      static_cast<std::size_t>(std::llround(cfg.t_end / cfg.dt));
  if (steps == 0) steps = 1;
  if (steps > cfg.max_steps)
    throw ResourceError("evolve: step count exceeds max_steps cap");
  SolverConfig run = cfg;
  run.dt = cfg.t_end / static_cast<double>(steps);  // land exactly on t_end

  const GridSpec& g = f0.grid();
  Stepper st(g, run);
  Field2D state = in_rep(f0, Rep::frequency);
  Trajectory traj;
  traj.smoothness_warning = st.masked_tail(state.values()) > 1e-10;
  st.dealias(state.values());

  auto k4 = freq_sq_table(g);
  for (auto& v : k4) v *= v;
  aligned_vector<double> mtab, m2k4;
  if (m) {
    mtab = m->table(g);
    m2k4.resize(mtab.size());
    for (std::size_t i = 0; i < mtab.size(); ++i)
      m2k4[i] = mtab[i] * mtab[i] * k4[i];
  }

  auto eng = FftEngine::plan2d(g.n);
  cvec scratch(g.size());

  auto record = [&](double t) {
    EnergyReport rep = make_report(t, g, state.values(), k4,
                                   m ? &mtab : nullptr, m ? &m2k4 : nullptr,
                                   run.report_s, scratch, *eng);
    if (!std::isfinite(rep.mass) || !std::isfinite(rep.energy)) {
      std::ostringstream msg;
      msg << "evolve: blow-up detected at t=" << t << "; last good t="
          << (traj.times.empty() ? 0.0 : traj.times.back());
      throw NumericalError(msg.str());
    }
    traj.times.push_back(t);
    traj.reports.push_back(rep);
    if (run.store_fields) traj.fields.push_back(state);
    if (observer) observer(t, state.values());
  };

  record(0.0);
  for (std::size_t k = 1; k <= steps; ++k) {
    st.advance(state.values(), scratch);
    if (k % static_cast<std::size_t>(run.record_every) == 0 || k == steps)
      record(static_cast<double>(k) * run.dt);
  }
  return traj;
}

double fit_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2)
    throw ConfigError("fit_slope: need at least two points");
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= x.size();
  my /= y.size();
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (!(sxx > 0.0)) throw ConfigError("fit_slope: degenerate abscissae");
  return sxy / sxx;
}

ConvergenceFit convergence_study(const Field2D& f0, SolverConfig cfg_base,
                                 std::vector<double> dts,
                                 const Field2D* exact_final) {
  if (dts.size() < 3)
    throw ConfigError("convergence_study: need at least 3 dt values");
  for (std::size_t i = 1; i < dts.size(); ++i)
    if (!(dts[i] < dts[i - 1]))
      throw ConfigError("convergence_study: dts must be strictly decreasing");

  std::vector<Field2D> finals;
  finals.reserve(dts.size());
  for (double dt : dts) {
    SolverConfig cfg = cfg_base;
    cfg.dt = dt;
    cfg.record_every = std::numeric_limits<int>::max();
    cfg.store_fields = false;
    Field2D state = in_rep(f0, Rep::frequency);
    std::size_t steps = static_cast<std::size_t>(std::llround(cfg.t_end / dt));
    if (steps == 0) steps = 1;
    cfg.dt = cfg.t_end / static_cast<double>(steps);
    Stepper st(f0.grid(), cfg);
    cvec scratch(f0.grid().size());
    st.dealias(state.values());
    for (std::size_t k = 0; k < steps; ++k) st.advance(state.values(), scratch);
    finals.push_back(std::move(state));
  }

  const Field2D* ref = exact_final;
  Field2D ref_freq = ref ? in_rep(*ref, Rep::frequency) : finals.back();
  std::size_t fit_count = exact_final ? dts.size() : dts.size() - 1;

  ConvergenceFit fit;
  double rnorm = std::sqrt(kern::sum_abs2(ref_freq.data(), ref_freq.size()));
  std::vector<double> lx, ly;
  for (std::size_t i = 0; i < fit_count; ++i) {
    double err = std::sqrt(kern::diff_abs2(finals[i].data(), ref_freq.data(),
                                           ref_freq.size()));
    double rel = rnorm > 0.0 ? err / rnorm : err;
    fit.dts.push_back(dts[i]);
    fit.errors.push_back(rel);
    lx.push_back(std::log(dts[i]));
    ly.push_back(std::log(std::max(rel, 1e-300)));
  }
  fit.slope = fit_slope(lx, ly);
  return fit;
}

}  // namespace bnls
