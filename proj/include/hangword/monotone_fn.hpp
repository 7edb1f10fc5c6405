#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hangword/formula.hpp"
#include "hangword/nail_state.hpp"

namespace hangword {

  struct Threshold {
    int k;
  };

  // Antichain of nail sets (bitmasks), kept in canonical order: by size, then
  // lexicographically by ascending element list.
  struct MinimalSets {
    std::vector<std::uint64_t> sets;
  };

  struct Formula {
    FormulaNode root;
  };

  // Bit s is f(state s), with nail i at bit i-1 of s.
  struct TruthTable {
    std::vector<bool> bits;
  };

  // A nontrivial monotone boolean function of n nails. True means the picture
  // hangs. Every constructor validates, so constant and non-monotone
  // functions cannot be represented.
  class MonotoneFn {
   public:
    using Body = std::variant<Threshold, MinimalSets, Formula, TruthTable>;

    static MonotoneFn threshold(int n, int k);
    static MonotoneFn minimal_sets(int n, std::vector<std::uint64_t> sets);
    static MonotoneFn minimal_sets(int                                n,
                                   std::vector<std::vector<int>> const& sets);
    static MonotoneFn formula(int n, FormulaNode root);
    static MonotoneFn truth_table(int n, std::vector<bool> bits);

    int rank() const noexcept {
      return _rank;
    }
    Body const& body() const noexcept {
      return _body;
    }
    // "threshold", "minimal_sets", "formula" or "table".
    std::string_view kind() const noexcept;

    bool evaluate(NailState const& s) const;
    bool evaluate(std::uint64_t present) const;

   private:
    MonotoneFn(int rank, Body body) : _rank(rank), _body(std::move(body)) {}

    int  _rank;
    Body _body;
  };

  // Truth tables are limited to this many nails.
  inline constexpr int kMaxTableRank = 24;

  MonotoneFn parse_formula(std::string_view text, int n);

  // Canonical antichain of minimal sets on which f is true.
  std::vector<std::uint64_t> minimal_true_sets(MonotoneFn const& f);

  // Truth table of f over all 2^n states.
  std::vector<bool> tabulate(MonotoneFn const& f);

  struct Realizability {
    bool        ok;
    std::string reason;
  };

  // Monotone and nonconstant. Checks monotonicity first, then f(empty) and
  // f(full).
  Realizability check_realizable(int n, std::vector<bool> const& table);

  // Sorts into canonical antichain order.
  void canonical_order(std::vector<std::uint64_t>& sets);

  std::vector<std::vector<int>> to_index_lists(
      std::vector<std::uint64_t> const& sets);

}  // namespace hangword
