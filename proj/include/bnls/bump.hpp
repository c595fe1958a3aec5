#pragma once

#include <cmath>

namespace bnls {

// Smooth radial cutoff: phi(r) = 1 for r <= 1, 0 for r >= 2, monotone
// C-infinity blend in between built from f(x) = exp(-1/x):
//   phi(r) = B(2 - r),  B(x) = f(x) / (f(x) + f(1 - x)).
struct BumpProfile {
  static double blend(double x) {  // 0 -> 0, 1 -> 1, smooth and monotone
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    double a = std::exp(-1.0 / x);
    double b = std::exp(-1.0 / (1.0 - x));
    return a / (a + b);
  }

  double operator()(double r) const {
    if (r <= 1.0) return 1.0;
    if (r >= 2.0) return 0.0;
    return blend(2.0 - r);
  }
};

}  // namespace bnls
