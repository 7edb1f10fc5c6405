#include "hangword/word_expr.hpp"

#include "hangword/errors.hpp"

namespace hangword {

  struct WordExpr::Node {
    Kind                  kind;
    int                   rank;
    std::uint64_t         written;
    Letter                letter = Letter::from_signed(1);
    std::vector<WordExpr> children;
    std::int64_t          exponent = 1;
  };

  namespace {
    std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
      std::uint64_t r;
      if (__builtin_add_overflow(a, b, &r)) {
        throw InputError("written length overflows 64 bits");
      }
      return r;
    }

    std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
      std::uint64_t r;
      if (__builtin_mul_overflow(a, b, &r)) {
        throw InputError("written length overflows 64 bits");
      }
      return r;
    }

    std::uint64_t magnitude(std::int64_t e) {
      return e < 0 ? -static_cast<std::uint64_t>(e)
                   : static_cast<std::uint64_t>(e);
    }
  }  // namespace

  WordExpr WordExpr::identity(int rank) {
    return concat(rank, {});
  }

  WordExpr WordExpr::leaf(Letter letter, int rank) {
    check_rank(rank);
    if (letter.index() > rank) {
      throw InputError("generator x" + std::to_string(letter.index())
                       + " exceeds rank " + std::to_string(rank));
    }
    return WordExpr(std::make_shared<Node const>(
        Node{Kind::leaf, rank, 1, letter, {}, 1}));
  }

  WordExpr WordExpr::generator(int index, int rank) {
    return leaf(Letter(Generator(index), 1), rank);
  }

  WordExpr WordExpr::concat(int rank, std::vector<WordExpr> children) {
    check_rank(rank);
    std::uint64_t written = 0;
    for (auto const& c : children) {
      if (c.rank() != rank) {
        throw RankMismatch(rank, c.rank());
      }
      written = checked_add(written, c.written_length());
    }
    return WordExpr(std::make_shared<Node const>(
        Node{Kind::concat, rank, written, Letter::from_signed(1),
             std::move(children), 1}));
  }

  WordExpr WordExpr::concat(std::vector<WordExpr> children) {
    if (children.empty()) {
      throw InputError("concat of no words needs an explicit rank");
    }
    int rank = children.front().rank();
    return concat(rank, std::move(children));
  }

  WordExpr WordExpr::inverse(WordExpr child) {
    int           rank    = child.rank();
    std::uint64_t written = child.written_length();
    return WordExpr(std::make_shared<Node const>(
        Node{Kind::inverse, rank, written, Letter::from_signed(1),
             {std::move(child)}, 1}));
  }

  WordExpr WordExpr::power(WordExpr child, std::int64_t exponent) {
    int           rank = child.rank();
    std::uint64_t written
        = checked_mul(child.written_length(), magnitude(exponent));
    return WordExpr(std::make_shared<Node const>(
        Node{Kind::power, rank, written, Letter::from_signed(1),
             {std::move(child)}, exponent}));
  }

  WordExpr WordExpr::from_word(Word const& w) {
    std::vector<WordExpr> leaves;
    leaves.reserve(w.length());
    for (Letter l : w.letters()) {
      leaves.push_back(leaf(l, w.rank()));
    }
    return concat(w.rank(), std::move(leaves));
  }

  WordExpr::Kind WordExpr::kind() const noexcept {
    return _node->kind;
  }

  int WordExpr::rank() const noexcept {
    return _node->rank;
  }

  std::uint64_t WordExpr::written_length() const noexcept {
    return _node->written;
  }

  Letter WordExpr::letter() const {
    if (_node->kind != Kind::leaf) {
      throw InputError("letter() on a non-leaf expression");
    }
    return _node->letter;
  }

  std::span<WordExpr const> WordExpr::children() const {
    return _node->children;
  }

  std::int64_t WordExpr::exponent() const {
    return _node->exponent;
  }

  namespace {
    // Sink is called once per written letter, in order.
    template <typename Sink>
    void walk(WordExpr const& e, bool inverted, Sink& sink) {
      switch (e.kind()) {
        case WordExpr::Kind::leaf:
          sink(inverted ? e.letter().inverse() : e.letter());
          break;
        case WordExpr::Kind::concat: {
          auto children = e.children();
          if (inverted) {
            for (auto it = children.rbegin(); it != children.rend(); ++it) {
              walk(*it, true, sink);
            }
          } else {
            for (auto const& c : children) {
              walk(c, false, sink);
            }
          }
          break;
        }
        case WordExpr::Kind::inverse:
          walk(e.children().front(), !inverted, sink);
          break;
        case WordExpr::Kind::power: {
          bool flip  = inverted != (e.exponent() < 0);
          auto times = magnitude(e.exponent());
          for (std::uint64_t i = 0; i < times; ++i) {
            walk(e.children().front(), flip, sink);
          }
          break;
        }
      }
    }
  }  // namespace

  void WordExpr::expand_into(std::vector<Letter>& out) const {
    out.reserve(out.size() + written_length());
    auto sink = [&out](Letter l) { out.push_back(l); };
    walk(*this, false, sink);
  }

  std::vector<Letter> WordExpr::expand() const {
    std::vector<Letter> out;
    expand_into(out);
    return out;
  }

  Word flatten(WordExpr const& e) {
    // Cancel while walking so the written sequence is never materialised.
    std::vector<Letter> stack;
    auto                sink = [&stack](Letter l) {
      if (!stack.empty() && stack.back().value() == -l.value()) {
        stack.pop_back();
      } else {
        stack.push_back(l);
      }
    };
    walk(e, false, sink);
    return reduce(stack, e.rank());
  }

}  // namespace hangword
