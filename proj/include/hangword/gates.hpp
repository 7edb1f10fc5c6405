#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hangword/nail_state.hpp"
#include "hangword/word.hpp"
#include "hangword/word_expr.hpp"

namespace hangword {

  // Wraps an operand A as x^M A x^{-M}. Safe when neither x nor x^{-1}
  // occurs M or more times in the reduced operand.
  struct PaddingSpec {
    Generator     pad;
    std::uint64_t repetitions;

    bool operator==(PaddingSpec const&) const = default;
  };

  enum class PadPolicy {
    // M = max occurrence of the pad symbol in its operand, plus one.
    adaptive,
    // Always M = 1; selection throws unless a pad symbol absent from the
    // operand is available.
    unit,
  };

  // Recursive commutator over the generators of s in ascending order, split
  // at floor(|s|/2). Nontrivial with all of s present, trivial as soon as any
  // member of s is removed.
  WordExpr lambda(NailState const& s);

  // Picks the generator outside `forbidden` whose symbols occur least often
  // (either sign) in the reduced operand; ties go to the smallest index.
  PaddingSpec choose_padding(WordExpr const& operand,
                             NailState const& forbidden);

  // Pads for the blocks of one gate, pairwise distinct. Generators that
  // appear in none of the operands are preferred; once those run out the
  // remaining generators are ranked by occurrence in the block's operand.
  std::vector<PaddingSpec> choose_gate_pads(std::span<WordExpr const> operands,
                                            PadPolicy policy
                                            = PadPolicy::adaptive);

  WordExpr padded(WordExpr const& operand, PaddingSpec const& pad);

  // (x^M A x^{-M}) (y^M B y^{-M})
  WordExpr safe_or(WordExpr const& a,
                   WordExpr const& b,
                   PadPolicy       policy = PadPolicy::adaptive);

  // Padded commutator A B A^{-1} B^{-1}.
  WordExpr safe_and(WordExpr const& a,
                    WordExpr const& b,
                    PadPolicy       policy = PadPolicy::adaptive);

  // Padded A B C A^{-1} B^{-1} C^{-1}; trivial when two operands are.
  WordExpr safe_majority(WordExpr const& a,
                         WordExpr const& b,
                         WordExpr const& c,
                         PadPolicy       policy = PadPolicy::adaptive);

  // True iff the reduced form of pad^M w pad^{-M} starts and ends with a
  // pad symbol.
  bool begins_ends_with_pad(Word const& w, PaddingSpec const& pad);

}  // namespace hangword
