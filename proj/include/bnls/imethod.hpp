#pragma once

#include <cstdint>

#include "bnls/field.hpp"

namespace bnls {

// Smoothing multiplier of the modified-energy method: radial, nonincreasing,
//   m(xi) = 1                 for |xi| <= N,
//   m(xi) = (|xi|/N)^{s-2}    for |xi| >= 2N,
// blended monotonically on (N, 2N) as
//   m = (1 - chi(r)) + chi(r) r^{s-2},  r = |xi|/N,
// with chi the C-infinity smoothstep rising 0 -> 1 on (1, 2).
struct IMultiplier {
  double N;  // dyadic cutoff >= 2
  double s;  // regularity in (8/7, 2)

  IMultiplier(double cutoff, double regularity);

  double value_abs(double abs_xi) const;
  double value_sq(double xi_sq) const;

  // m(xi) over a grid in storage order.
  aligned_vector<double> table(const GridSpec& g) const;
};

// Frequency-wise multiplication by m: (I u)^hat = m uhat.
Field2D apply_I(const IMultiplier& m, const Field2D& f);

// (1/2) ||Delta f||_{L^2}^2 + c ||f||_{L^6}^6. The flow of the equation
// conserves this only for c = 1/6 (see the conservation tests).
double energy(const Field2D& f, double sextic_coefficient = 1.0 / 6.0);

double modified_energy(const IMultiplier& m, const Field2D& f);

struct SandwichReport {
  double r1;  // E(Iu) / ((N^{2-s} |u|_{Hdot^s})^2 + |u|_{L^6}^6)
  double r2;  // |u|_{H^s}^2 / (E(Iu) + mass^2)
};

// Both ratios should stay below kSandwichConstant (sampled bracket).
SandwichReport me_hs_sandwich_check(const IMultiplier& m, const Field2D& f,
                                    double u0_mass);

inline constexpr double kSandwichConstant = 10.0;

// Max over seeded random frequency 6-tuples (xi_1 = -(xi_2+...+xi_6), dyadic
// magnitudes in the regime N1 ~ N2 >~ N >> N3 >= N4 >= N5 >= N6) of
//   |1 - m(xi_2+...+xi_6) / (m(xi_2)...m(xi_6))| * N2 / N3.
double case1_multiplier_bound(const IMultiplier& m, std::size_t sample_count,
                              std::uint64_t seed);

// Sampled bracket for the bound above (s = 1.5, N = 16, 1e5 samples).
inline constexpr double kCase1Constant = 10.0;

}  // namespace bnls
