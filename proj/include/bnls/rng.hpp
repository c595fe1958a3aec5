#pragma once

#include <array>
#include <cmath>
#include <cstdint>

namespace bnls {

// Philox4x64-10 counter-based generator (Salmon et al., "Parallel Random
// Numbers: As Easy as 1, 2, 3"). Bit-compatible with numpy.random.Philox:
// identical raw 64-bit stream for the same (key, counter), so ports in other
// languages can reproduce every sampled constant in this repo exactly.
// Known-answer vectors are pinned in tests/test_rng.cpp.
//
// Derived streams: uniform doubles are (u64 >> 11) * 2^-53 in [0,1);
// standard normals use the Box-Muller map documented at normal().
class PhiloxRng {
 public:
  explicit PhiloxRng(std::uint64_t key0, std::uint64_t key1 = 0)
      : key_{key0, key1}, counter_{0, 0, 0, 0} {}

  // Distinct sub-streams: bumping the high counter word gives a stream that
  // never collides with sequential draws from the base stream.
  PhiloxRng stream(std::uint64_t id) const {
    PhiloxRng r(key_[0], key_[1]);
    r.counter_[3] = id;
    return r;
  }

  std::uint64_t next_u64() {
    if (idx_ == 4) {
      block_ = round10(counter_, key_);
      advance_counter();
      idx_ = 0;
    }
    return block_[idx_++];
  }

  // One keystream block for an explicit counter; used by the known-answer
  // tests and handy for ports validating their round function.
  static std::array<std::uint64_t, 4> block_at(std::uint64_t key0,
                                               std::uint64_t key1,
                                               std::array<std::uint64_t, 4> ctr) {
    return round10(ctr, {key0, key1});
  }

  // Uniform double in [0,1), 53 random bits.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Standard normal via Box-Muller:
  //   r = sqrt(-2 ln(1-u1)), z0 = r cos(2 pi u2), z1 = r sin(2 pi u2).
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = uniform();
    double u2 = uniform();
    double r = std::sqrt(-2.0 * std::log1p(-u1));
    double a = 2.0 * M_PI * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

 private:
  using Block = std::array<std::uint64_t, 4>;

  static constexpr std::uint64_t kMul0 = 0xD2E7470EE14C6C93ULL;
  static constexpr std::uint64_t kMul1 = 0xCA5A826395121157ULL;
  static constexpr std::uint64_t kWeyl0 = 0x9E3779B97F4A7C15ULL;
  static constexpr std::uint64_t kWeyl1 = 0xBB67AE8584CAA73BULL;

  static void mulhilo(std::uint64_t a, std::uint64_t b, std::uint64_t& hi,
                      std::uint64_t& lo) {
    unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
    hi = static_cast<std::uint64_t>(p >> 64);
    lo = static_cast<std::uint64_t>(p);
  }

  static Block round10(Block ctr, std::array<std::uint64_t, 2> key) {
    for (int round = 0; round < 10; ++round) {
      std::uint64_t hi0, lo0, hi1, lo1;
      mulhilo(kMul0, ctr[0], hi0, lo0);
      mulhilo(kMul1, ctr[2], hi1, lo1);
      ctr = Block{hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
      key[0] += kWeyl0;
      key[1] += kWeyl1;
    }
    return ctr;
  }

  void advance_counter() {
    for (int i = 0; i < 4; ++i) {
      if (++counter_[i] != 0) break;
    }
  }

  std::array<std::uint64_t, 2> key_;
  Block counter_;
  Block block_{};
  int idx_ = 4;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace bnls
