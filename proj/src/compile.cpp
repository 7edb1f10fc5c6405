#include "hangword/compile.hpp"

#include <map>
#include <optional>

#include "hangword/errors.hpp"
#include "hangword/gates.hpp"

namespace hangword {

  namespace {
    WordExpr formula_word(FormulaNode const& node, int rank) {
      if (node.kind == FormulaNode::Kind::var) {
        return WordExpr::generator(node.var, rank);
      }
      WordExpr acc = formula_word(node.children.front(), rank);
      for (std::size_t i = 1; i < node.children.size(); ++i) {
        WordExpr next = formula_word(node.children[i], rank);
        acc = node.kind == FormulaNode::Kind::conj ? safe_and(acc, next)
                                                   : safe_or(acc, next);
      }
      return acc;
    }

    // Threshold words over a contiguous generator range, memoised on
    // (first, count, k) so shared sub-words are built once.
    class Dnc {
     public:
      explicit Dnc(int rank) : _rank(rank) {}

      // Empty when k exceeds the number of generators (the word would be
      // the identity).
      std::optional<WordExpr> word(int first, int count, int k) {
        if (k > count) {
          return std::nullopt;
        }
        auto key = std::make_tuple(first, count, k);
        if (auto it = _memo.find(key); it != _memo.end()) {
          return it->second;
        }
        WordExpr result = build(first, count, k);
        _memo.emplace(key, result);
        return result;
      }

     private:
      WordExpr build(int first, int count, int k) {
        if (count == 1) {
          return WordExpr::generator(first, _rank);
        }
        int left  = (count + 1) / 2;
        int right = count - left;

        std::vector<WordExpr> factors;
        if (auto b = word(first + left, right, k)) {
          factors.push_back(*b);
        }
        for (int j = 1; j < k; ++j) {
          auto a = word(first, left, j);
          auto b = word(first + left, right, k - j);
          if (a && b) {
            factors.push_back(WordExpr::concat(
                _rank,
                {*a, *b, WordExpr::inverse(*a), WordExpr::inverse(*b)}));
          }
        }
        if (auto a = word(first, left, k)) {
          factors.push_back(*a);
        }
        if (factors.size() == 1) {
          return factors.front();
        }
        return WordExpr::concat(_rank, std::move(factors));
      }

      int                                                _rank;
      std::map<std::tuple<int, int, int>, WordExpr> _memo;
    };
  }  // namespace

  Compiled all_nails(int n) {
    if (n < 1) {
      throw InputError("all_nails needs n >= 1");
    }
    Provenance p{"all-nails"};
    p.parameters["n"] = n;
    return {lambda(NailState::full(n)), std::move(p)};
  }

  Compiled from_minimal_sets(MonotoneFn const& f) {
    auto                  sets = minimal_true_sets(f);
    std::vector<WordExpr> factors;
    factors.reserve(sets.size());
    for (auto s : sets) {
      factors.push_back(lambda(NailState(f.rank(), s)));
    }
    Provenance p{"lambda"};
    p.parameters["n"]     = f.rank();
    p.parameters["kind"]  = f.kind();
    p.parameters["sets"]  = to_index_lists(sets);
    WordExpr word = factors.size() == 1
                        ? factors.front()
                        : WordExpr::concat(f.rank(), std::move(factors));
    return {std::move(word), std::move(p)};
  }

  Compiled from_formula(MonotoneFn const& f) {
    auto const* body = std::get_if<Formula>(&f.body());
    if (body == nullptr) {
      throw InputError("from_formula needs a formula specification, got "
                       + std::string(f.kind()));
    }
    if (f.rank() < 2) {
      throw InputError("formula compilation needs at least 2 generators; use "
                       "the lambda method for n = 1");
    }
    Provenance p{"formula"};
    p.parameters["n"]       = f.rank();
    p.parameters["formula"] = to_string(body->root);
    return {formula_word(body->root, f.rank()), std::move(p)};
  }

  Compiled kofn_dnc(int n, int k) {
    check_rank(n);
    if (k < 1 || k > n) {
      throw InputError("kofn_dnc needs 1 <= k <= n (k = " + std::to_string(k)
                       + ", n = " + std::to_string(n) + ")");
    }
    Dnc        dnc(n);
    Provenance p{"dnc"};
    p.parameters["n"] = n;
    p.parameters["k"] = k;
    return {*dnc.word(1, n, k), std::move(p)};
  }

}  // namespace hangword
