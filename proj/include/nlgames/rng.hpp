#pragma once

#include <cstdint>
#include <random>

namespace nlgames {

// All randomness in the library flows through std::mt19937_64 with doubles
// derived from the raw 64-bit stream, so seeded runs are bit-reproducible
// across platforms (std distributions are implementation-defined and are
// deliberately avoided).

/// splitmix64 mix; used to derive independent sub-seeds from (seed, stream).
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (stream + 1ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

/// Uniform double in [0, 1) from the top 53 bits of one engine draw.
inline double uniform_double(std::mt19937_64& eng) {
  return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

}  // namespace nlgames
