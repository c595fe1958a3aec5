#pragma once

#include <cmath>
#include <cstddef>

#include "bnls/aligned.hpp"
#include "bnls/errors.hpp"

namespace bnls {

inline constexpr double kPi = 3.141592653589793238462643383279502884;

// Square periodic box [0, L)^2 sampled on an n-by-n uniform grid.
// Discrete frequencies are xi = (2 pi / L) * (sx, sy) with signed indices
// s in [-n/2, n/2). Storage is row-major, index i = ix * n + iy.
struct GridSpec {
  double box_length = 16.0 * kPi;  // default: large box approximating R^2
  int n = 64;

  GridSpec() = default;
  GridSpec(double L, int points) : box_length(L), n(points) { validate(); }

  void validate() const {
    if (!(box_length > 0.0)) throw ConfigError("grid: box_length must be positive");
    if (n < 8 || n % 2 != 0) throw ConfigError("grid: n must be even and >= 8");
  }

  std::size_t size() const { return static_cast<std::size_t>(n) * n; }
  double spacing() const { return box_length / n; }
  double cell_area() const { return spacing() * spacing(); }
  double dk() const { return 2.0 * kPi / box_length; }
  double nyquist() const { return dk() * (n / 2); }

  int signed_index(int i) const { return i < n / 2 ? i : i - n; }

  double freq_x(std::size_t idx) const {
    return dk() * signed_index(static_cast<int>(idx / n));
  }
  double freq_y(std::size_t idx) const {
    return dk() * signed_index(static_cast<int>(idx % n));
  }
  double freq_sq(std::size_t idx) const {
    double kx = freq_x(idx), ky = freq_y(idx);
    return kx * kx + ky * ky;
  }

  double x_of(std::size_t idx) const { return spacing() * (idx / n); }
  double y_of(std::size_t idx) const { return spacing() * (idx % n); }

  bool operator==(const GridSpec& o) const {
    return box_length == o.box_length && n == o.n;
  }
};

// |xi|^2 table in storage order; derived weights (|xi|^4, |xi|^s, ...) are
// built from it by the consumers.
aligned_vector<double> freq_sq_table(const GridSpec& g);

}  // namespace bnls
