#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace hangword {

  // AND/OR tree over variables x1..xn. Gate nodes have at least two
  // children; chains such as "a & b & c" parse into one n-ary node.
  struct FormulaNode {
    enum class Kind { var, conj, disj };

    Kind                     kind = Kind::var;
    int                      var  = 0;
    std::vector<FormulaNode> children;

    static FormulaNode variable(int index);
    static FormulaNode all_of(std::vector<FormulaNode> children);
    static FormulaNode any_of(std::vector<FormulaNode> children);

    bool evaluate(std::uint64_t present) const;
    int max_var() const;

    bool operator==(FormulaNode const&) const = default;
  };

  // expr := term { "|" term } ; term := atom { "&" atom } ;
  // atom := var | "(" expr ")" ; var := "x" digits
  // Whitespace between tokens is ignored. Throws SyntaxError with the byte
  // offset of the offending token.
  FormulaNode parse_formula_tree(std::string_view text);

  // Fully parenthesised canonical text, e.g. "(x1 & x2) | x3".
  std::string to_string(FormulaNode const& f);

}  // namespace hangword
