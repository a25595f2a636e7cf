#pragma once

#include <cstdint>
#include <random>

namespace wfgcri {

// The library-wide generator. mt19937_64 output is fixed by the standard, and
// uniforms below use an explicit 53-bit construction, so every sampling path
// is bit-reproducible across platforms given (seed).
inline constexpr const char* kRngName = "mt19937_64/inverse-transform";

// Uniform on the open interval (0, 1): 53-bit mantissa, offset half an ulp so
// 0 and 1 are never produced (quantile transforms stay finite).
inline double uniform01(std::mt19937_64& eng) {
  return (static_cast<double>(eng() >> 11) + 0.5) * 0x1.0p-53;
}

// splitmix64 round; the standard counter-based seed mixer.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// Derive an independent stream seed from (base seed, counters). Used for
// per-replication and per-config streams so parallel schedules cannot change
// which random numbers a given replication sees.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a,
                                 std::uint64_t b = 0) {
  std::uint64_t h = splitmix64(seed ^ 0x6a09e667f3bcc909ull);
  h = splitmix64(h ^ splitmix64(a));
  h = splitmix64(h ^ splitmix64(b + 0x3c6ef372fe94f82bull));
  return h;
}

}  // namespace wfgcri
