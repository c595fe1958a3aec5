#include "bnls/field.hpp"

#include <cmath>

namespace bnls {

void Field2D::to_frequency() {
  if (rep_ == Rep::frequency) return;
  auto eng = FftEngine::plan2d(grid_.n);
  eng->forward(values_.data());
  // h^2 / L = L / n^2
  kern::scale(values_.data(), values_.size(), grid_.box_length / grid_.size());
  rep_ = Rep::frequency;
}

void Field2D::to_physical() {
  if (rep_ == Rep::physical) return;
  auto eng = FftEngine::plan2d(grid_.n);
  eng->backward(values_.data());
  kern::scale(values_.data(), values_.size(), 1.0 / grid_.box_length);
  rep_ = Rep::physical;
}

double Field2D::l2_norm() const {
  double s = kern::sum_abs2(values_.data(), values_.size());
  if (rep_ == Rep::physical) s *= grid_.cell_area();
  return std::sqrt(s);
}

Field2D forward_transform(const Field2D& f) {
  if (f.rep() != Rep::physical)
    throw ConfigError("forward_transform: field already in frequency representation");
  Field2D out = f;
  out.to_frequency();
  return out;
}

Field2D inverse_transform(const Field2D& f) {
  if (f.rep() != Rep::frequency)
    throw ConfigError("inverse_transform: field already in physical representation");
  Field2D out = f;
  out.to_physical();
  return out;
}

Field2D in_rep(const Field2D& f, Rep rep) {
  Field2D out = f;
  if (rep == Rep::frequency)
    out.to_frequency();
  else
    out.to_physical();
  return out;
}

aligned_vector<double> freq_sq_table(const GridSpec& g) {
  aligned_vector<double> t(g.size());
  double dk = g.dk();
  for (int ix = 0; ix < g.n; ++ix) {
    double kx = dk * g.signed_index(ix);
    for (int iy = 0; iy < g.n; ++iy) {
      double ky = dk * g.signed_index(iy);
      t[static_cast<std::size_t>(ix) * g.n + iy] = kx * kx + ky * ky;
    }
  }
  return t;
}

}  // namespace bnls
