#include "hangword/word.hpp"

#include <algorithm>
#include <string>

#include "hangword/errors.hpp"

namespace hangword {

  void check_rank(int rank) {
    if (rank < 1 || rank > kMaxRank) {
      throw InputError("rank must be in [1, " + std::to_string(kMaxRank)
                       + "], got " + std::to_string(rank));
    }
  }

  Generator::Generator(int index) : _index(index) {
    if (index < 1) {
      throw InputError("generator index must be positive, got "
                       + std::to_string(index));
    }
  }

  Letter::Letter(Generator gen, int sign)
      : _value(sign * gen.index()) {
    if (sign != 1 && sign != -1) {
      throw InputError("letter sign must be +1 or -1");
    }
  }

  Letter Letter::from_signed(int value) {
    if (value == 0) {
      throw InputError("letter value 0 does not name a generator");
    }
    return Letter(value);
  }

  Word::Word(int rank) : _rank(rank) {
    check_rank(rank);
  }

  Word reduce(std::span<Letter const> letters, int rank) {
    check_rank(rank);
    std::vector<Letter> stack;
    stack.reserve(letters.size());
    for (Letter l : letters) {
      if (l.index() > rank) {
        throw InputError("generator x" + std::to_string(l.index())
                         + " exceeds rank " + std::to_string(rank));
      }
      if (!stack.empty() && stack.back().value() == -l.value()) {
        stack.pop_back();
      } else {
        stack.push_back(l);
      }
    }
    return Word(rank, std::move(stack));
  }

  Word concat(Word const& a, Word const& b) {
    if (a.rank() != b.rank()) {
      throw RankMismatch(a.rank(), b.rank());
    }
    std::vector<Letter> all(a.letters().begin(), a.letters().end());
    all.insert(all.end(), b.letters().begin(), b.letters().end());
    return reduce(all, a.rank());
  }

  Word inverse(Word const& w) {
    std::vector<Letter> out;
    out.reserve(w.length());
    for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
      out.push_back(it->inverse());
    }
    // Already reduced, the pass only copies.
    return reduce(out, w.rank());
  }

  Word power(Word const& w, std::int64_t exponent) {
    Word base = exponent < 0 ? inverse(w) : w;
    std::uint64_t times = exponent < 0 ? -static_cast<std::uint64_t>(exponent)
                                       : static_cast<std::uint64_t>(exponent);
    std::vector<Letter> out;
    out.reserve(base.length() * times);
    for (std::uint64_t i = 0; i < times; ++i) {
      out.insert(out.end(), base.letters().begin(), base.letters().end());
    }
    return reduce(out, w.rank());
  }

  Occurrences occurrences(Word const& w, Generator g) {
    Occurrences result;
    for (Letter l : w.letters()) {
      if (l.index() == g.index()) {
        (l.sign() > 0 ? result.positive : result.negative)++;
      }
    }
    return result;
  }

  std::string to_string(Word const& w) {
    if (w.is_identity()) {
      return "1";
    }
    std::string out;
    for (Letter l : w.letters()) {
      if (!out.empty()) {
        out += ' ';
      }
      out += 'x';
      out += std::to_string(l.index());
      if (l.sign() < 0) {
        out += '\'';
      }
    }
    return out;
  }

}  // namespace hangword
