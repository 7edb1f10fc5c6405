#include "hangword/quotient.hpp"

#include "hangword/errors.hpp"

namespace hangword {

  Word quotient(Word const& w, NailState const& s) {
    if (w.rank() != s.rank()) {
      throw RankMismatch(w.rank(), s.rank());
    }
    std::vector<Letter> kept;
    kept.reserve(w.length());
    for (Letter l : w.letters()) {
      if (s.contains(l.gen())) {
        kept.push_back(l);
      }
    }
    return reduce(kept, w.rank());
  }

  Word quotient(WordExpr const& e, NailState const& s) {
    return quotient(flatten(e), s);
  }

  bool QuotientEvaluator::hangs(std::span<Letter const> letters,
                                std::uint64_t           present) {
    _stack.clear();
    for (Letter l : letters) {
      if (((present >> (l.index() - 1)) & 1U) == 0) {
        continue;
      }
      if (!_stack.empty() && _stack.back() == -l.value()) {
        _stack.pop_back();
      } else {
        _stack.push_back(l.value());
      }
    }
    return !_stack.empty();
  }

}  // namespace hangword
