#pragma once

// Seeded random streams. Every consumer draws from its own std::mt19937_64
// whose seed is derived from (master seed, purpose, index) through splitmix64
// mixing. The engine's output sequence is fixed by the standard and the
// conversions below avoid std:: distributions (whose algorithms are
// implementation-defined), so a seed reproduces bit-identically everywhere.
//
// Stream assignment (stable; changing it changes every result):
//   purpose 1  placement         index 0
//   purpose 2  batteries         index 0
//   purpose 3  traffic offsets   index 0
//   purpose 4  traffic dests     index 0
//   purpose 5  mobility          index = phone id

#include <cstdint>
#include <random>

namespace sosnet::rng {

enum class Purpose : std::uint64_t {
  placement = 1,
  batteries = 2,
  offsets = 3,
  traffic = 4,
  mobility = 5,
};

constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t derive_seed(std::uint64_t master, Purpose purpose,
                                    std::uint64_t index = 0) {
  std::uint64_t s = splitmix64(master);
  s = splitmix64(s ^ static_cast<std::uint64_t>(purpose));
  return splitmix64(s ^ (index * 0xd1b54a32d192ed03ULL));
}

inline std::mt19937_64 stream(std::uint64_t master, Purpose purpose,
                              std::uint64_t index = 0) {
  return std::mt19937_64(derive_seed(master, purpose, index));
}

/// Uniform in [0, 1) with 53 random bits.
inline double uniform01(std::mt19937_64& g) {
  return static_cast<double>(g() >> 11) * 0x1.0p-53;
}

/// Uniform integer in [0, bound) by rejection; bound > 0.
inline std::uint64_t uniform_below(std::mt19937_64& g, std::uint64_t bound) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x = g();
  while (x >= limit) x = g();
  return x % bound;
}

/// Standard normal via Box-Muller (one output per call).
double standard_normal(std::mt19937_64& g);

}  // namespace sosnet::rng
