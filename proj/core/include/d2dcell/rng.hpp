#pragma once

#include <cstdint>
#include <random>

namespace d2dcell {

inline constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Deterministic substream generator for (seed, stream, phase). Streams index
// independent realizations, phases separate the draw stages within one
// realization so that adding draws to one stage never shifts another.
inline std::mt19937_64 make_stream_rng(std::uint64_t seed, std::uint64_t stream,
                                       std::uint64_t phase) {
  const std::uint64_t a = splitmix64(seed);
  const std::uint64_t b = splitmix64(a ^ splitmix64(stream + 0x632be59bd9b4e019ULL));
  return std::mt19937_64(splitmix64(b ^ splitmix64(phase + 0x9e6c63d0876a9a47ULL)));
}

}  // namespace d2dcell
