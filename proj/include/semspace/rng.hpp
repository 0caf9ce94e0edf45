#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace semspace {

// splitmix64 step (Vigna). Used both as a mixer and as the stream
// derivation primitive: every random consumer derives its own seed from
// the single run seed plus a purpose tag, so adding a consumer never
// shifts the draws of another.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

inline std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xCBF29CE484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001B3ull;
  }
  return h;
}

inline std::uint64_t derive_stream(std::uint64_t seed, std::string_view tag) {
  std::uint64_t s = seed ^ fnv1a64(tag);
  splitmix64(s);
  return splitmix64(s);
}

inline std::mt19937_64 make_rng(std::uint64_t seed, std::string_view tag) {
  return std::mt19937_64(derive_stream(seed, tag));
}

}  // namespace semspace
