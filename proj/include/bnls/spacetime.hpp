#pragma once

#include <vector>

#include "bnls/evolution.hpp"
#include "bnls/field.hpp"

namespace bnls {

// Smooth time cutoff for the windowed space-time norms: identically 1 on the
// core interval [0, delta], rising from 0 on [-delta/2, 0] and falling back
// on [delta, 3delta/2], so the windowed signal periodizes smoothly over a
// period of 2 delta. n_t uniform samples cover one period; n_t % 4 == 0 keeps
// 0 and delta on the sample grid.
struct TimeWindow {
  double delta = 0.05;
  int n_t = 64;
  bool boxcar = false;  // w == 1 everywhere (synthetic-coefficient tests)

  void validate() const;
  double period() const { return 2.0 * delta; }
  double dt() const { return period() / n_t; }
  double t_at(int j) const { return -0.5 * delta + j * dt(); }
  int index_of_zero() const { return n_t / 4; }      // t = 0
  int index_of_delta() const { return 3 * n_t / 4; } // t = delta
  double weight(double t) const;
};

// Complex field on grid x time window. Per-mode time series storage
// (series-major), over either every grid mode or a caller-selected subset;
// slices reconstruct to full spatial fields on demand.
class SpaceTimeField {
 public:
  // Free flow of phi sampled over the window grid.
  static SpaceTimeField linear_flow(const Field2D& phi, const TimeWindow& w,
                                    bool support_only = false,
                                    std::size_t max_bytes = kDefaultBytes);

  // Nonlinear flow through the window: integrates backward to -delta/2 and
  // forward to 3delta/2 with the supplied splitting config.
  static SpaceTimeField nonlinear_flow(const Field2D& u0, const TimeWindow& w,
                                       const SolverConfig& solver,
                                       std::size_t max_bytes = kDefaultBytes);

  // Synthetic construction from explicit frequency-side samples.
  static SpaceTimeField from_samples(const GridSpec& g, const TimeWindow& w,
                                     const std::vector<aligned_vector<std::complex<double>>>& slices);

  const GridSpec& grid() const { return grid_; }
  const TimeWindow& window() const { return window_; }
  std::size_t mode_count() const { return modes_.size(); }

  // Frequency-side spatial slice at sample j (zeros off the stored subset).
  aligned_vector<std::complex<double>> slice(int j) const;

  // Windowed X^{s,b} surrogate:
  //   || <xi>^s <tau + |xi|^4>^b (w u)~ ||_{l^2}
  // evaluated in the interaction picture: each mode series is demodulated by
  // e^{+i |xi|^4 t} before the time DFT, which moves the weight to <tau'>
  // with tau' = tau + |xi|^4 and keeps the discrete tau grid resolvable for
  // every |xi|. Reported values are upper-bound surrogates for the infimum
  // restriction norm (one fixed canonical extension).
  double xsb_norm(double s, double b) const;

  // L^q_t L^p_x over the core interval [0, delta], trapezoidal in time.
  double mixed_norm(double q, double p) const;

  static constexpr std::size_t kDefaultBytes = 1ull << 30;

 private:
  SpaceTimeField(GridSpec g, TimeWindow w) : grid_(g), window_(w) {}
  void reserve(std::size_t n_modes, std::size_t max_bytes);

  GridSpec grid_;
  TimeWindow window_;
  std::vector<std::size_t> modes_;                 // flat grid indices
  aligned_vector<std::complex<double>> series_;    // [mode][time]
};

// Window constant sum_m <tau_m>^{2b} |W_m|^2 / sum_m |W_m|^2 for the window's
// own spectrum; xsb of a free flow equals sqrt(C_w) * ||<nabla>^s phi||.
double window_constant(const TimeWindow& w, double b);

}  // namespace bnls
