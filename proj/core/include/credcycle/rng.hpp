#pragma once

#include <cstdint>
#include <random>

namespace credcycle {

// splitmix64; used to derive independent per-path streams from a master
// seed so changing the path count never perturbs earlier paths.
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::mt19937_64 path_rng(std::uint64_t seed, std::uint64_t path_index) {
  return std::mt19937_64(mix64(seed ^ mix64(path_index)));
}

}  // namespace credcycle
