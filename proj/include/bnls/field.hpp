#pragma once

#include <complex>
#include <utility>

#include "bnls/fft.hpp"
#include "bnls/grid.hpp"
#include "bnls/kernels.hpp"

namespace bnls {

enum class Rep { physical, frequency };

// Complex scalar field on a GridSpec, in physical or frequency representation.
//
// Transform normalization is unitary per box: with h = L/n,
//   uhat(xi_s) = (h^2 / L) * sum_j u(x_j) e^{-i x_j . xi_s}
//   u(x_j)    = (1 / L)   * sum_s uhat(xi_s) e^{+i x_j . xi_s}
// so Plancherel is weight-free: sum_j |u_j|^2 h^2 = sum_s |uhat_s|^2, and a
// constant field u = 1 carries the single coefficient uhat(0) = L.
//
// Public operations treat fields as immutable values; mutating helpers are
// provided for the solver's private buffers.
class Field2D {
 public:
  Field2D(GridSpec grid, Rep rep)
      : grid_(grid), rep_(rep), values_(grid.size()) {
    grid_.validate();
  }
  Field2D(GridSpec grid, Rep rep, aligned_vector<std::complex<double>> values)
      : grid_(grid), rep_(rep), values_(std::move(values)) {
    grid_.validate();
    if (values_.size() != grid_.size())
      throw ConfigError("field: value array does not match grid");
  }

  const GridSpec& grid() const { return grid_; }
  Rep rep() const { return rep_; }
  std::size_t size() const { return values_.size(); }

  const std::complex<double>* data() const { return values_.data(); }
  std::complex<double>* data() { return values_.data(); }
  const aligned_vector<std::complex<double>>& values() const { return values_; }
  aligned_vector<std::complex<double>>& values() { return values_; }

  std::complex<double> operator[](std::size_t i) const { return values_[i]; }
  std::complex<double>& operator[](std::size_t i) { return values_[i]; }

  // In-place representation changes (used by the solver and the pure
  // wrappers below).
  void to_frequency();
  void to_physical();

  // L^2 norm, valid in either representation (Plancherel).
  double l2_norm() const;

 private:
  GridSpec grid_;
  Rep rep_;
  aligned_vector<std::complex<double>> values_;
};

// Pure transform operations; wrong input representation is a usage error.
Field2D forward_transform(const Field2D& f);
Field2D inverse_transform(const Field2D& f);

// Copies that are guaranteed to be in the requested representation.
Field2D in_rep(const Field2D& f, Rep rep);

}  // namespace bnls
