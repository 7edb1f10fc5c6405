#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace hangword {

  // Ranks are capped so that a nail state fits in one 64-bit mask.
  inline constexpr int kMaxRank = 64;

  void check_rank(int rank);

  class Generator {
   public:
    explicit Generator(int index);

    int index() const noexcept {
      return _index;
    }

    auto operator<=>(Generator const&) const = default;

   private:
    int _index;
  };

  // A generator or its inverse, stored as a signed index: +i is x_i and -i
  // is x_i^{-1}.
  class Letter {
   public:
    Letter(Generator gen, int sign);

    static Letter from_signed(int value);

    Generator gen() const noexcept {
      return Generator(_value < 0 ? -_value : _value);
    }
    int index() const noexcept {
      return _value < 0 ? -_value : _value;
    }
    int sign() const noexcept {
      return _value < 0 ? -1 : 1;
    }
    int value() const noexcept {
      return _value;
    }
    Letter inverse() const noexcept {
      return Letter(-_value);
    }

    bool operator==(Letter const&) const = default;

   private:
    explicit Letter(int value) noexcept : _value(value) {}
    std::int32_t _value;
  };

  // Element of the free group on x_1..x_rank, always freely reduced.
  class Word {
   public:
    explicit Word(int rank);

    int rank() const noexcept {
      return _rank;
    }
    std::size_t length() const noexcept {
      return _letters.size();
    }
    bool is_identity() const noexcept {
      return _letters.empty();
    }
    std::span<Letter const> letters() const noexcept {
      return _letters;
    }

    bool operator==(Word const&) const = default;

    friend Word reduce(std::span<Letter const> letters, int rank);

   private:
    Word(int rank, std::vector<Letter> letters)
        : _rank(rank), _letters(std::move(letters)) {}

    int                 _rank;
    std::vector<Letter> _letters;
  };

  // Free reduction by a single left-to-right stack pass.
  Word reduce(std::span<Letter const> letters, int rank);

  Word concat(Word const& a, Word const& b);
  Word inverse(Word const& w);
  Word power(Word const& w, std::int64_t exponent);

  struct Occurrences {
    std::size_t positive = 0;
    std::size_t negative = 0;

    std::size_t max() const noexcept {
      return positive > negative ? positive : negative;
    }
    bool operator==(Occurrences const&) const = default;
  };

  Occurrences occurrences(Word const& w, Generator g);

  inline bool is_identity(Word const& w) noexcept {
    return w.is_identity();
  }

  // Human-readable form "x1 x2 x1' x2'"; the empty word prints as "1".
  std::string to_string(Word const& w);

}  // namespace hangword
