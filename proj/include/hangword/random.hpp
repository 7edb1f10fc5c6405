#pragma once

#include <cstdint>
#include <random>

namespace hangword {

  inline constexpr std::uint64_t kDefaultSeed = 42;

  // splitmix64 finaliser.
  std::uint64_t mix64(std::uint64_t x) noexcept;

  // Seed of child `index` of a node seeded with `parent`. Lets subtrees draw
  // from independent streams regardless of evaluation order.
  std::uint64_t derive_seed(std::uint64_t parent, std::uint64_t index) noexcept;

  // Uniform integer in [0, bound) by rejection; unlike
  // std::uniform_int_distribution the result is the same on every standard
  // library.
  std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

  // Uniform double in [0, 1) from the top 53 bits.
  double uniform_unit(std::mt19937_64& rng);

}  // namespace hangword
