#pragma once

#include <cstdint>
#include <string>

#include "bnls/field.hpp"
#include "bnls/imethod.hpp"
#include "bnls/rng.hpp"

namespace bnls {

enum class Recipe { gaussian, plane_wave, rough_tail, custom_spectrum };

Recipe recipe_from_name(const std::string& name);

// Deterministic initial-data recipes: identical (recipe, seed, grid) triples
// produce bit-identical fields (Philox streams, no platform-dependent state).
struct DataRecipe {
  Recipe kind = Recipe::gaussian;
  double amplitude = 1.0;

  // gaussian: amplitude * exp(-|x - center|^2 / (2 width^2)), box-centered.
  double width = 1.0;

  // plane_wave: e^{i x . xi0}, xi0 = (2 pi / L) * (mode_x, mode_y).
  int mode_x = 1;
  int mode_y = 0;

  // rough_tail: coefficients ~ <xi>^{-s-1} e^{i theta}, seeded phases,
  // supported on |k|_inf <= band_fraction * n/2, DC zeroed.
  double s = 1.5;
  double band_fraction = 1.0 / 3.0;

  // custom_spectrum shapes: "power"  <xi>^{spec_exponent} random phases
  //                         "gauss"  exp(-|xi|^2/(2 spec_sigma^2)) random phases
  //                         "shell"  indicator of |xi| in [shell_N, 2 shell_N)
  //                         "packet" Gaussian ball of radius ~shell_N/4 around a
  //                                  random carrier |xi_c| = 1.5 shell_N with a
  //                                  random spatial center (coherent packet)
  std::string shape = "power";
  double spec_exponent = -2.5;
  double spec_sigma = 2.0;
  double shell_N = 8.0;
  bool zero_mean = true;
};

Field2D generate_data(const DataRecipe& recipe, std::uint64_t seed,
                      const GridSpec& grid);

// Amplitude rescaling so that the modified energy hits the target exactly
// (monotone in the amplitude; zero fields cannot be normalized).
Field2D normalize_modified_energy(Field2D f, const IMultiplier& m,
                                  double target = 1.0);

}  // namespace bnls
