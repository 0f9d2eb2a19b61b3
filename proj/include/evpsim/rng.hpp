#pragma once

#include <cstdint>
#include <limits>

namespace evpsim {

inline constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Counter-based stream: output k is mix64(key + k * golden_gamma). Cheap to copy, no shared state.
class CounterRng {
 public:
  using result_type = std::uint64_t;

  explicit CounterRng(std::uint64_t seed) : key_(mix64(seed ^ 0x6a09e667f3bcc909ULL)) {}

  std::uint64_t operator()() { return mix64(key_ + (++counter_) * kGamma); }
  /// Uniform on [0,1) with 53 bits of resolution.
  double uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }
  std::uint64_t draws() const { return counter_; }

  static constexpr std::uint64_t min() { return 0; }
  static constexpr std::uint64_t max() { return std::numeric_limits<std::uint64_t>::max(); }

 private:
  static constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

enum class SeedRole : std::uint64_t { protocol_following = 0x485f54ULL, deviating = 0x4144565ULL, auxiliary = 0x415558ULL };

/// Seed for trial `trial` of role `role`, derived from a master seed.
inline std::uint64_t derive_seed(std::uint64_t master, SeedRole role, std::uint64_t trial) {
  std::uint64_t z = mix64(master + 0x9e3779b97f4a7c15ULL);
  z = mix64(z ^ static_cast<std::uint64_t>(role));
  return mix64(z + trial * 0xd1b54a32d192ed03ULL);
}

}  // namespace evpsim
