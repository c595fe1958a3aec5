#include "bnls/datagen.hpp"

#include <cmath>

namespace bnls {

Recipe recipe_from_name(const std::string& name) {
  if (name == "gaussian") return Recipe::gaussian;
  if (name == "plane-wave") return Recipe::plane_wave;
  if (name == "rough-tail") return Recipe::rough_tail;
  if (name == "custom-spectrum") return Recipe::custom_spectrum;
  throw ConfigError("unknown data recipe: " + name);
}

namespace {

Field2D gaussian_field(const DataRecipe& r, const GridSpec& g) {
  Field2D f(g, Rep::physical);
  double cx = 0.5 * g.box_length, cy = 0.5 * g.box_length;
  double inv2w2 = 1.0 / (2.0 * r.width * r.width);
  for (std::size_t i = 0; i < g.size(); ++i) {
    double dx = g.x_of(i) - cx, dy = g.y_of(i) - cy;
    f[i] = {r.amplitude * std::exp(-(dx * dx + dy * dy) * inv2w2), 0.0};
  }
  return f;
}

Field2D plane_wave_field(const DataRecipe& r, const GridSpec& g) {
  Field2D f(g, Rep::frequency);
  int ix = r.mode_x >= 0 ? r.mode_x : r.mode_x + g.n;
  int iy = r.mode_y >= 0 ? r.mode_y : r.mode_y + g.n;
  if (ix < 0 || ix >= g.n || iy < 0 || iy >= g.n)
    throw ConfigError("plane-wave: mode outside grid");
  f[static_cast<std::size_t>(ix) * g.n + iy] = {r.amplitude * g.box_length, 0.0};
  return f;
}

Field2D spectrum_field(const DataRecipe& r, std::uint64_t seed, const GridSpec& g,
                       bool rough_tail) {
  PhiloxRng rng(seed);
  Field2D f(g, Rep::frequency);
  auto ksq = freq_sq_table(g);
  int cut = static_cast<int>(r.band_fraction * (g.n / 2) + 1e-12);

  // Packet parameters drawn once per field.
  double carrier = 1.5 * r.shell_N;
  double theta = rng.uniform(0.0, 2.0 * kPi);
  double kcx = carrier * std::cos(theta), kcy = carrier * std::sin(theta);
  double xc = rng.uniform(0.0, g.box_length), yc = rng.uniform(0.0, g.box_length);
  double sigma_k = 0.25 * r.shell_N;

  for (int ix = 0; ix < g.n; ++ix) {
    int sx = g.signed_index(ix);
    for (int iy = 0; iy < g.n; ++iy) {
      int sy = g.signed_index(iy);
      std::size_t i = static_cast<std::size_t>(ix) * g.n + iy;
      // The phase draw stays in lockstep across shapes so that streams are
      // reproducible mode-for-mode.
      double phase = rng.uniform(0.0, 2.0 * kPi);
      if (rough_tail && (std::abs(sx) > cut || std::abs(sy) > cut)) continue;
      double amp = 0.0;
      double kk = ksq[i];
      if (rough_tail) {
        amp = std::pow(1.0 + kk, -0.5 * (r.s + 1.0));
      } else if (r.shape == "power") {
        amp = std::pow(1.0 + kk, 0.5 * r.spec_exponent);
      } else if (r.shape == "gauss") {
        amp = std::exp(-kk / (2.0 * r.spec_sigma * r.spec_sigma));
      } else if (r.shape == "shell") {
        double a = std::sqrt(kk);
        amp = (a >= r.shell_N && a < 2.0 * r.shell_N) ? 1.0 : 0.0;
      } else if (r.shape == "packet") {
        double kx = g.dk() * sx, ky = g.dk() * sy;
        double dx = kx - kcx, dy = ky - kcy;
        amp = std::exp(-(dx * dx + dy * dy) / (2.0 * sigma_k * sigma_k));
        phase = -(kx * xc + ky * yc);  // coherent: packet centered at (xc, yc)
      } else {
        throw ConfigError("custom-spectrum: unknown shape " + r.shape);
      }
      f[i] = std::polar(r.amplitude * amp, phase);
    }
  }
  if (r.zero_mean) f[0] = {0.0, 0.0};
  return f;
}

}  // namespace

Field2D generate_data(const DataRecipe& recipe, std::uint64_t seed,
                      const GridSpec& grid) {
  grid.validate();
  switch (recipe.kind) {
    case Recipe::gaussian: return gaussian_field(recipe, grid);
    case Recipe::plane_wave: return plane_wave_field(recipe, grid);
    case Recipe::rough_tail: return spectrum_field(recipe, seed, grid, true);
    case Recipe::custom_spectrum: return spectrum_field(recipe, seed, grid, false);
  }
  throw ConfigError("generate_data: bad recipe");
}

Field2D normalize_modified_energy(Field2D f, const IMultiplier& m, double target) {
  // E(alpha u) = alpha^2 K + alpha^6 S with both parts fixed by u, so the
  // scaling solves K y + S y^3 = target in y = alpha^2 (strictly monotone).
  Field2D iu = apply_I(m, f);
  Field2D fr = in_rep(iu, Rep::frequency);
  auto w = freq_sq_table(fr.grid());
  for (auto& v : w) v *= v;
  double K = 0.5 * kern::sum_abs2_w(fr.data(), w.data(), fr.size());
  Field2D fp = in_rep(fr, Rep::physical);
  double S = kern::sum_abs6(fp.data(), fp.size()) * fp.grid().cell_area() / 6.0;
  if (!(K + S > 0.0))
    throw NumericalError("normalize_modified_energy: zero field cannot reach target");
  double lo = 0.0, hi = 1.0;
  auto e_of = [&](double y) { return K * y + S * y * y * y; };
  while (e_of(hi) < target) hi *= 2.0;
  for (int it = 0; it < 500; ++it) {
    double mid = 0.5 * (lo + hi);
    (e_of(mid) < target ? lo : hi) = mid;
  }
  kern::scale(f.data(), f.size(), std::sqrt(0.5 * (lo + hi)));
  return f;
}

}  // namespace bnls
