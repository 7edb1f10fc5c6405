#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "hangword/word.hpp"

namespace hangword {

  // As-written word: a tree of letters, concatenations, inverses and powers.
  // Nothing cancels until flatten(), so written_length() counts the symbols
  // of the construction exactly as written. Subtrees are shared, which keeps
  // A and A^{-1} in a commutator from being copied.
  class WordExpr {
   public:
    enum class Kind { leaf, concat, inverse, power };

    static WordExpr identity(int rank);
    static WordExpr leaf(Letter letter, int rank);
    static WordExpr generator(int index, int rank);
    static WordExpr concat(int rank, std::vector<WordExpr> children);
    static WordExpr concat(std::vector<WordExpr> children);
    static WordExpr inverse(WordExpr child);
    static WordExpr power(WordExpr child, std::int64_t exponent);
    static WordExpr from_word(Word const& w);

    Kind kind() const noexcept;
    int rank() const noexcept;
    std::uint64_t written_length() const noexcept;

    // Only meaningful for the matching kind.
    Letter letter() const;
    std::span<WordExpr const> children() const;
    std::int64_t exponent() const;

    // Appends the letters as written, without any cancellation.
    void expand_into(std::vector<Letter>& out) const;
    std::vector<Letter> expand() const;

   private:
    struct Node;
    explicit WordExpr(std::shared_ptr<Node const> node)
        : _node(std::move(node)) {}

    std::shared_ptr<Node const> _node;
  };

  inline std::uint64_t written_length(WordExpr const& e) noexcept {
    return e.written_length();
  }

  Word flatten(WordExpr const& e);

  inline bool is_identity(WordExpr const& e) {
    return flatten(e).is_identity();
  }

  inline WordExpr operator*(WordExpr const& a, WordExpr const& b) {
    return WordExpr::concat({a, b});
  }

}  // namespace hangword
