#pragma once

#include <string>

#include "hangword/word.hpp"

namespace hangword {

  // Static SVG of a word: the nails as dots on a top row, then one lane per
  // letter in which the wire loops around a copy of that letter's nail,
  // clockwise for x_i and counterclockwise for x_i^{-1}. Shows the homotopy
  // class only; it is not a physical wire layout. The empty word renders as
  // a straight wire.
  std::string render_svg(Word const& w);

}  // namespace hangword
