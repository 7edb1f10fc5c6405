#include "hangword/nail_state.hpp"

#include <bit>

#include "hangword/errors.hpp"

namespace hangword {

  NailState::NailState(int rank, std::uint64_t mask)
      : _rank(rank), _mask(mask) {
    check_rank(rank);
    if ((mask & ~full_mask(rank)) != 0) {
      throw InputError("nail state names a nail beyond rank "
                       + std::to_string(rank));
    }
  }

  NailState NailState::full(int rank) {
    check_rank(rank);
    return NailState(rank, full_mask(rank));
  }

  NailState NailState::empty(int rank) {
    return NailState(rank, 0);
  }

  NailState NailState::of(int rank, std::initializer_list<int> indices) {
    return of(rank, std::span<int const>(indices.begin(), indices.size()));
  }

  NailState NailState::of(int rank, std::span<int const> indices) {
    check_rank(rank);
    std::uint64_t mask = 0;
    for (int i : indices) {
      if (i < 1 || i > rank) {
        throw InputError("nail index " + std::to_string(i)
                         + " outside [1, " + std::to_string(rank) + "]");
      }
      mask |= std::uint64_t{1} << (i - 1);
    }
    return NailState(rank, mask);
  }

  int NailState::count() const noexcept {
    return std::popcount(_mask);
  }

  NailState NailState::with(Generator g) const {
    if (g.index() > _rank) {
      throw InputError("generator beyond rank");
    }
    return NailState(_rank, _mask | (std::uint64_t{1} << (g.index() - 1)));
  }

  std::vector<int> NailState::indices() const {
    std::vector<int> out;
    for (int i = 1; i <= _rank; ++i) {
      if ((_mask >> (i - 1)) & 1U) {
        out.push_back(i);
      }
    }
    return out;
  }

  std::string to_string(NailState const& s) {
    std::string out = "{";
    for (int i : s.indices()) {
      if (out.size() > 1) {
        out += ',';
      }
      out += std::to_string(i);
    }
    return out + "}";
  }

}  // namespace hangword
