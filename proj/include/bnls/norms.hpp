#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bnls/spacetime.hpp"

namespace bnls {

// Admissibility for the fourth-order dispersion: the exponent relation is
//   4/q = 2 (1/2 - 1/p) + mu   (d = 2; general d uses d (1/2 - 1/p) at mu=0)
// with 0 <= mu <= 1, 2/(1-mu) <= p <= infinity, 2 <= q <= infinity, and the
// excluded endpoint (p, q, d) = (inf, 2, 4).
struct AdmissiblePair {
  double p = 6.0;
  double q = 6.0;
  double mu = 0.0;
  int d = 2;
};

struct AdmissibleVerdict {
  bool ok = false;
  std::string reason;
};

AdmissibleVerdict validate_admissible(double p, double q, double mu, int d = 2);

// L^q_t L^p_x over a trajectory with stored fields (trapezoid in time).
double mixed_norm(const Trajectory& traj, double q, double p);

struct StrichartzStats {
  double max_ratio = 0.0;
  double median_ratio = 0.0;
  std::vector<double> ratios;
};

// Free-flow constant sampling over seeded random data.
//   mu = 0 variant: ratio = ||e^{it Delta^2} phi||_{L^q L^p} / ||phi||_{L^2}
//     over Gaussian-spectrum random phi.
//   derivative-gain variant (shell_N > 0): band-limited wave-packet data at
//     dyadic shell N; ratio = N^mu * mixed / xsb(0, 1/2 + eps).
StrichartzStats strichartz_constant_sample(const AdmissiblePair& pair,
                                           int trial_count, std::uint64_t seed,
                                           const GridSpec& grid,
                                           const TimeWindow& window,
                                           double shell_N = 0.0,
                                           double eps = 0.01);

// || (sum_N |P_N u|^2)^{1/2} ||_p / ||u||_p over the dyadic ladder covering
// the grid's nonzero frequencies. The DC mode lies outside the partition;
// sweep recipes feed zero-mean data.
double square_function_check(const Field2D& f, double p);

}  // namespace bnls
