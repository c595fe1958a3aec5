#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "bnls/field.hpp"
#include "bnls/imethod.hpp"

namespace bnls {

// i u_t - Delta^2 u = |u|^4 u, integrated by operator splitting with both
// sub-flows exact:
//   linear:    uhat <- e^{-i |xi|^4 tau} uhat     (see linear_propagate)
//   nonlinear: u    <- e^{-i |u|^4 tau} u         (pointwise, modulus kept)
// Dealiasing keeps |k|_inf <= dealias_fraction * (n/2) after every nonlinear
// sub-step (1/3 retains alias-free quintic products).

enum class Scheme { lie, strang, yoshida4 };

struct SolverConfig {
  double dt = 1e-4;
  double t_end = 0.1;
  Scheme scheme = Scheme::strang;
  double dealias_fraction = 1.0 / 3.0;
  int record_every = 1;
  double report_s = 1.5;             // s for the hs_norm trajectory column
  std::size_t max_steps = 4000000;   // resource cap
  bool store_fields = false;

  void validate() const;
};

struct EnergyReport {
  double time = 0.0;
  double mass = 0.0;             // L^2 norm
  double energy = 0.0;           // sextic coefficient 1/6
  double modified_energy = 0.0;  // NaN when no multiplier was supplied
  double hs_norm = 0.0;
  double linf = 0.0;
};

struct Trajectory {
  std::vector<double> times;
  std::vector<EnergyReport> reports;
  std::vector<Field2D> fields;  // populated only with store_fields
  bool smoothness_warning = false;
};

// Free propagator: uhat multiplied by e^{-i |xi|^4 t}. The propagator sign
// convention lives here and nowhere else; all diagnostics in this repo are
// invariant under conjugation, so a single convention suffices.
Field2D linear_propagate(const Field2D& f, double t);

// Exact flow of i u_t = |u|^4 u over dt: pointwise phase rotation.
Field2D nonlinear_phase_step(const Field2D& f, double dt);

// One step of the configured splitting (dt may be negative; used by the
// reversibility tests).
Field2D step(const Field2D& f, const SolverConfig& cfg);

// Called at each record point with the current frequency-side state.
using EvolveObserver =
    std::function<void(double t, const aligned_vector<std::complex<double>>& uhat)>;

Trajectory evolve(const Field2D& f0, const SolverConfig& cfg,
                  const IMultiplier* m = nullptr,
                  const EvolveObserver& observer = {});

struct ConvergenceFit {
  double slope = 0.0;
  std::vector<double> dts;
  std::vector<double> errors;
};

// Least-squares slope of log(error) vs log(dt); the reference is the exact
// final state when given, otherwise the finest-dt run.
ConvergenceFit convergence_study(const Field2D& f0, SolverConfig cfg_base,
                                 std::vector<double> dts,
                                 const Field2D* exact_final = nullptr);

// Shared helper: least-squares slope of y against x.
double fit_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace bnls
