#include "hangword/gates.hpp"

#include <limits>
#include <optional>

#include "hangword/errors.hpp"

namespace hangword {

  namespace {
    WordExpr commutator_tree(std::span<int const> gens, int rank) {
      if (gens.size() == 1) {
        return WordExpr::generator(gens.front(), rank);
      }
      std::size_t split = gens.size() / 2;
      WordExpr    a     = commutator_tree(gens.subspan(0, split), rank);
      WordExpr    b     = commutator_tree(gens.subspan(split), rank);
      return WordExpr::concat(
          rank, {a, b, WordExpr::inverse(a), WordExpr::inverse(b)});
    }

    std::optional<PaddingSpec> best_pad(Word const&   operand,
                                        std::uint64_t forbidden) {
      std::optional<PaddingSpec> best;
      for (int i = 1; i <= operand.rank(); ++i) {
        if ((forbidden >> (i - 1)) & 1U) {
          continue;
        }
        std::uint64_t m = occurrences(operand, Generator(i)).max() + 1;
        if (!best || m < best->repetitions) {
          best = PaddingSpec{Generator(i), m};
        }
      }
      return best;
    }

    std::uint64_t support(Word const& w) {
      std::uint64_t mask = 0;
      for (Letter l : w.letters()) {
        mask |= std::uint64_t{1} << (l.index() - 1);
      }
      return mask;
    }

    int common_rank(std::span<WordExpr const> operands, int minimum) {
      int rank = operands.front().rank();
      for (auto const& op : operands) {
        if (op.rank() != rank) {
          throw RankMismatch(rank, op.rank());
        }
      }
      if (rank < minimum) {
        throw InputError("gate needs at least " + std::to_string(minimum)
                         + " generators for distinct pads, rank is "
                         + std::to_string(rank));
      }
      return rank;
    }
  }  // namespace

  WordExpr lambda(NailState const& s) {
    auto gens = s.indices();
    if (gens.empty()) {
      throw InputError("lambda of the empty set is undefined");
    }
    return commutator_tree(gens, s.rank());
  }

  PaddingSpec choose_padding(WordExpr const& operand,
                             NailState const& forbidden) {
    if (operand.rank() != forbidden.rank()) {
      throw RankMismatch(operand.rank(), forbidden.rank());
    }
    if (operand.rank() < 2) {
      throw InputError("padding needs rank >= 2");
    }
    auto pad = best_pad(flatten(operand), forbidden.mask());
    if (!pad) {
      throw InputError("no generator available for padding");
    }
    return *pad;
  }

  std::vector<PaddingSpec> choose_gate_pads(std::span<WordExpr const> operands,
                                            PadPolicy policy) {
    common_rank(operands, static_cast<int>(operands.size()));

    std::vector<Word> reduced;
    std::uint64_t     used = 0;
    for (auto const& op : operands) {
      reduced.push_back(flatten(op));
      used |= support(reduced.back());
    }

    std::vector<PaddingSpec> pads;
    std::uint64_t            taken = 0;
    for (auto const& op : reduced) {
      auto pad = best_pad(op, taken | used);
      if (!pad) {
        pad = best_pad(op, taken);
      }
      if (policy == PadPolicy::unit && pad->repetitions != 1) {
        throw InputError("unit padding is not legal here: every free pad "
                         "symbol already occurs in its operand");
      }
      taken |= std::uint64_t{1} << (pad->pad.index() - 1);
      pads.push_back(*pad);
    }
    return pads;
  }

  WordExpr padded(WordExpr const& operand, PaddingSpec const& pad) {
    int  rank = operand.rank();
    auto x    = WordExpr::generator(pad.pad.index(), rank);
    auto m    = static_cast<std::int64_t>(pad.repetitions);
    return WordExpr::concat(
        rank, {WordExpr::power(x, m), operand, WordExpr::power(x, -m)});
  }

  WordExpr safe_or(WordExpr const& a, WordExpr const& b, PadPolicy policy) {
    std::vector<WordExpr> ops{a, b};
    auto                  pads = choose_gate_pads(ops, policy);
    return WordExpr::concat(a.rank(), {padded(a, pads[0]), padded(b, pads[1])});
  }

  WordExpr safe_and(WordExpr const& a, WordExpr const& b, PadPolicy policy) {
    std::vector<WordExpr> ops{a, b};
    auto                  pads = choose_gate_pads(ops, policy);
    return WordExpr::concat(a.rank(),
                            {padded(a, pads[0]),
                             padded(b, pads[1]),
                             padded(WordExpr::inverse(a), pads[0]),
                             padded(WordExpr::inverse(b), pads[1])});
  }

  WordExpr safe_majority(WordExpr const& a,
                         WordExpr const& b,
                         WordExpr const& c,
                         PadPolicy       policy) {
    std::vector<WordExpr> ops{a, b, c};
    auto                  pads = choose_gate_pads(ops, policy);
    return WordExpr::concat(a.rank(),
                            {padded(a, pads[0]),
                             padded(b, pads[1]),
                             padded(c, pads[2]),
                             padded(WordExpr::inverse(a), pads[0]),
                             padded(WordExpr::inverse(b), pads[1]),
                             padded(WordExpr::inverse(c), pads[2])});
  }

  bool begins_ends_with_pad(Word const& w, PaddingSpec const& pad) {
    auto expr = padded(WordExpr::from_word(w), pad);
    Word r    = flatten(expr);
    if (r.is_identity()) {
      return false;
    }
    int g = pad.pad.index();
    return r.letters().front().index() == g && r.letters().back().index() == g;
  }

}  // namespace hangword
