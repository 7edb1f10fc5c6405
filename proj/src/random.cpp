#include "hangword/random.hpp"

#include "hangword/errors.hpp"

namespace hangword {

  std::uint64_t mix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }

  std::uint64_t derive_seed(std::uint64_t parent,
                            std::uint64_t index) noexcept {
    return mix64(mix64(parent) ^ mix64(index + 0x632be59bd9b4e019ULL));
  }

  std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    if (bound == 0) {
      throw InputError("uniform_below needs a positive bound");
    }
    std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x;
    do {
      x = rng();
    } while (x >= limit);
    return x % bound;
  }

  double uniform_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
  }

}  // namespace hangword
