#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hangword {

  // Bad arguments or malformed input. The CLI maps every InputError to exit
  // code 2.
  class InputError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
  };

  class RankMismatch : public InputError {
   public:
    RankMismatch(int expected, int got)
        : InputError("rank mismatch: expected " + std::to_string(expected)
                     + ", got " + std::to_string(got)) {}
  };

  // A specification that no word can realize (constant or non-monotone).
  class Unrealizable : public InputError {
   public:
    using InputError::InputError;
  };

  class SyntaxError : public InputError {
   public:
    SyntaxError(std::string const& what, std::size_t offset)
        : InputError(what + " at offset " + std::to_string(offset)),
          _offset(offset) {}

    std::size_t offset() const noexcept {
      return _offset;
    }

   private:
    std::size_t _offset;
  };

}  // namespace hangword
