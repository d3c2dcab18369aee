#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>

namespace tspforge {

// xoshiro256++ seeded through splitmix64. The standard library's
// distributions are implementation-defined, so every random draw the
// toolkit makes goes through this generator's pinned algorithms; replaying
// a seed reproduces every artifact byte for byte on any platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next_u64();

  // Uniform on [0, bound), bound >= 1. Unbiased (rejection sampling).
  std::uint64_t below(std::uint64_t bound);

  // Uniform on [0, 1), 53-bit resolution.
  double unit_real();

  bool coin_flip() { return (next_u64() >> 63) != 0; }

  // Fisher-Yates.
  template <typename T>
  void shuffle(T* data, std::size_t n) {
    for (std::size_t i = n; i > 1; --i) {
      const std::size_t j = static_cast<std::size_t>(below(i));
      T tmp = data[i - 1];
      data[i - 1] = data[j];
      data[j] = tmp;
    }
  }

 private:
  std::array<std::uint64_t, 4> s_;
};

// splitmix64 finalizer; also used as the seed-derivation mixer.
std::uint64_t mix64(std::uint64_t x);

// Deterministic per-task seed from a master seed and a stream path, e.g.
// derive_seed(master, {kSeedFitness, generation, index}).
std::uint64_t derive_seed(std::uint64_t master,
                          std::initializer_list<std::uint64_t> path);

// Stream tags (first element of a derivation path). Values are part of the
// reproducibility contract; never renumber.
inline constexpr std::uint64_t kSeedGenRandom = 1;
inline constexpr std::uint64_t kSeedInitPopulation = 2;
inline constexpr std::uint64_t kSeedOffspring = 3;
inline constexpr std::uint64_t kSeedFitness = 4;
inline constexpr std::uint64_t kSeedSolve = 5;
inline constexpr std::uint64_t kSeedRun = 6;
inline constexpr std::uint64_t kSeedBootstrap = 7;

}  // namespace tspforge
