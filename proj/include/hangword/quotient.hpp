#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hangword/nail_state.hpp"
#include "hangword/word.hpp"
#include "hangword/word_expr.hpp"

namespace hangword {

  // Image of w under the homomorphism that sends every generator outside
  // s to the identity.
  Word quotient(Word const& w, NailState const& s);
  Word quotient(WordExpr const& e, NailState const& s);

  // Decides whether the quotient is trivial without materialising it: one
  // stack pass that skips absent generators and cancels on the fly. Holds
  // its scratch stack so repeated calls do not allocate.
  class QuotientEvaluator {
   public:
    bool hangs(std::span<Letter const> letters, std::uint64_t present);

    bool hangs(Word const& w, NailState const& s) {
      return hangs(w.letters(), s.mask());
    }

   private:
    std::vector<std::int32_t> _stack;
  };

}  // namespace hangword
