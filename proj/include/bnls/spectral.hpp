#pragma once

#include "bnls/bump.hpp"
#include "bnls/field.hpp"

namespace bnls {

// Frequency-diagonal operators and norms on the periodic box.

// Biharmonic operator: multiplies uhat by |xi|^4.
Field2D bilaplacian(const Field2D& f);

// |nabla|^s: multiplies uhat by |xi|^s (the DC mode maps to zero).
Field2D gradient_power(const Field2D& f, double s);

// Sobolev norm (sum over modes of w(xi)^{2s} |uhat|^2)^{1/2} with
// w = |xi| (homogeneous) or sqrt(1 + |xi|^2).
double sobolev_norm(const Field2D& f, double s, bool homogeneous);

// Midpoint-rule L^p norm, p in [1, inf]; pass p = infinity for the sup norm.
double lp_norm(const Field2D& f, double p);

enum class ProjKind { band, low, high };

// Littlewood-Paley projection at dyadic N = 2^j (j may be negative; sub-unit
// bands are needed on large boxes where the lattice spacing is below 1):
//   band: phi(xi/N) - phi(2 xi/N),  low: phi(xi/N),  high: 1 - phi(xi/N).
Field2D lp_project(const Field2D& f, double N, ProjKind kind);

// || |nabla|^s P_N u ||_p / (N^s ||P_N u||_p) for an already band-limited u.
double bernstein_ratio(const Field2D& f, double N, double s, double p);

bool is_dyadic(double N);

}  // namespace bnls
