#pragma once

#include <cstdint>
#include <random>

namespace bcapprox {

using Rng = std::mt19937_64;

// Independent substreams keyed by (master seed, stream, index). Every sample
// owns its own engine, so results do not depend on which worker drew it.
enum class Stream : std::uint64_t {
  kDiameter = 1,
  kPeeling = 2,
  kProgressive = 3,
  kProbe = 4,
};

constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  // splitmix64 finalizer
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline Rng substream(std::uint64_t master, Stream stream, std::uint64_t index) {
  const std::uint64_t key =
      mix64(mix64(master ^ mix64(static_cast<std::uint64_t>(stream))) ^ index);
  return Rng(key);
}

}  // namespace bcapprox
