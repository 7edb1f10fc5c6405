#pragma once

#include <string>

#include "json.hpp"

#include "hangword/monotone_fn.hpp"
#include "hangword/word_expr.hpp"

namespace hangword {

  struct Provenance {
    std::string            construction;
    nlohmann::ordered_json parameters = nlohmann::ordered_json::object();
  };

  struct Compiled {
    WordExpr   word;
    Provenance provenance;
  };

  // Falls when any one of n nails is removed: recursive commutator on the
  // halves {1..n/2} and {n/2+1..n}. Written length is n^2 for powers of two.
  Compiled all_nails(int n);

  // Product of lambda(S) over the minimal true sets in canonical order.
  Compiled from_minimal_sets(MonotoneFn const& f);

  // Nested safe gates following a formula; n-ary nodes fold to the left.
  // Needs rank >= 2 and a formula body.
  Compiled from_formula(MonotoneFn const& f);

  // k-out-of-n by divide and conquer over the halves of sizes ceil(n/2) and
  // floor(n/2):
  //   B_k (A_1 B_{k-1} A_1^-1 B_{k-1}^-1) ... (A_{k-1} B_1 A_{k-1}^-1
  //   B_1^-1) A_k
  // with factors involving an impossible threshold dropped.
  Compiled kofn_dnc(int n, int k);

}  // namespace hangword
