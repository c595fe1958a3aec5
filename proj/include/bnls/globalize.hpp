#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bnls/datagen.hpp"
#include "bnls/evolution.hpp"

namespace bnls {

// Scaling symmetry at t = 0: u_lambda(x) = lambda^{-1} u(x / lambda),
// realized exactly in frequency space. With the per-box unitary convention
// the coefficient array is carried over verbatim onto the box of length
// lambda * L (frequencies scale by 1/lambda), so mass is invariant to
// roundoff and energies scale by exactly lambda^{-4}.
Field2D rescale(const Field2D& f, double lambda,
                double max_box_length = 1024.0 * kPi);

// lambda = (1/(2 C0))^{1/(2s)} N^{(4-2s)/(2s)} (1 + |u0|_{H^s})^{6/(2s)}.
double choose_lambda(double s, double N, double hs_norm_u0, double C0);

struct GlobalizationPlan {
  double s = 0.0;
  double T0 = 0.0;
  double N = 0.0;        // dyadic, from T0 ~ N^{(7s-8)/s}
  double lambda = 0.0;
  std::uint64_t iterations = 0;  // C1 * N^3, saturated on overflow
  bool iterations_saturated = false;
  double growth_exponent = 0.0;  // (8-4s)/(7s-8)
  double predicted_hs_bound = 0.0;  // T0^growth_exponent
  double C0 = 0.5;
  double C1 = 1.0;
  bool divergence_warning = false;  // exponent blows up as s -> 8/7
};

// Epsilon exponents of the continuum bookkeeping are dropped: N is the
// dyadic round-up of T0^{s/(7s-8)} and iterations = C1 N^3.
GlobalizationPlan plan(double s, double T0, double C1, double C0 = 0.5,
                       double hs_norm_u0 = 0.0);

struct SweepResult {
  std::vector<double> Ns;
  std::vector<double> increments;  // sup_t |E(I_N u)(t) - E(I_N u)(0)| per N
  double slope = 0.0;              // log-log fit
  std::uint64_t seed = 0;
  std::string config_digest;
  bool trivial_regime = false;     // data band-limited below min(Ns)
};

// One evolution per seed; modified energies for every N are tracked along
// the same trajectory. Data must arrive normalized to E(I_{Nmax} u0) <= 1.
SweepResult almost_conservation_sweep(const Field2D& u0, double s,
                                      const std::vector<double>& Ns,
                                      double delta, SolverConfig solver,
                                      std::uint64_t seed);

// E(I u(t)) vs lambda^4 E(I u_lambda(lambda^4 t)) with the cutoff on the
// unscaled side transformed consistently (m_N(xi/lambda), i.e. cutoff
// lambda N), so the identity is exact at t = 0. Returns the relative
// discrepancy.
double rescaled_energy_identity_check(const Field2D& u0, double lambda,
                                      double t, const SolverConfig& solver,
                                      const IMultiplier& m);

// E with multiplier weights m(|xi| / lambda): the modified energy whose
// cutoff sits at lambda N.
double modified_energy_scaled_cutoff(const IMultiplier& m, const Field2D& f,
                                     double lambda);

}  // namespace bnls
