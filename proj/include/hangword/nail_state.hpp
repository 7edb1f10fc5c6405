#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "hangword/word.hpp"

namespace hangword {

  // Subset of {1..rank}; bit i-1 is set when nail i is present. Also used as
  // a plain generator set (forbidden pads, gate supports).
  class NailState {
   public:
    NailState(int rank, std::uint64_t mask);

    static NailState full(int rank);
    static NailState empty(int rank);
    static NailState of(int rank, std::initializer_list<int> indices);
    static NailState of(int rank, std::span<int const> indices);

    int rank() const noexcept {
      return _rank;
    }
    std::uint64_t mask() const noexcept {
      return _mask;
    }
    bool contains(Generator g) const noexcept {
      return g.index() <= _rank && ((_mask >> (g.index() - 1)) & 1U);
    }
    int count() const noexcept;
    bool is_subset_of(NailState const& other) const noexcept {
      return (_mask & ~other._mask) == 0;
    }

    NailState with(Generator g) const;
    std::vector<int> indices() const;

    bool operator==(NailState const&) const = default;

   private:
    int           _rank;
    std::uint64_t _mask;
  };

  inline std::uint64_t full_mask(int rank) noexcept {
    return rank >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << rank) - 1;
  }

  // "{1,3}"
  std::string to_string(NailState const& s);

}  // namespace hangword
