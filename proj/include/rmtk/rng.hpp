#pragma once

#include <cmath>
#include <cstdint>

// Splittable counter-style generator: the state is derived from
// (master_seed, stream_id) by SplitMix64 mixing, so identical pairs reproduce
// bit-identical draws and distinct pairs give independent streams regardless
// of how many workers consume them.

namespace rmtk {

class RngStream {
 public:
  RngStream(std::uint64_t master_seed, std::uint64_t stream_id)
      : master_seed_(master_seed), stream_id_(stream_id) {
    state_ = mix(mix(master_seed + 0x9e3779b97f4a7c15ull) ^
                 mix(stream_id + 0xbf58476d1ce4e5b9ull));
  }

  std::uint64_t master_seed() const { return master_seed_; }
  std::uint64_t stream_id() const { return stream_id_; }

  std::uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ull;
    return mix(state_);
  }

  // Uniform in (0, 1).
  double uniform() {
    const double u = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    return u > 0.0 ? u : 0x1.0p-53;
  }

  // Standard normal via Box-Muller (pairwise, second value cached).
  double normal() {
    if (have_cached_) {
      have_cached_ = false;
      return cached_;
    }
    const double u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    cached_ = r * std::sin(2.0 * M_PI * u2);
    have_cached_ = true;
    return r * std::cos(2.0 * M_PI * u2);
  }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xbf58476d1ce4e5b9ull;
    z ^= z >> 27;
    z *= 0x94d049bb133111ebull;
    z ^= z >> 31;
    return z;
  }

  std::uint64_t master_seed_;
  std::uint64_t stream_id_;
  std::uint64_t state_;
  double cached_ = 0.0;
  bool have_cached_ = false;
};

} // namespace rmtk
