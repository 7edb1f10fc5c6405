#include "hangword/monotone_fn.hpp"

#include <algorithm>
#include <bit>

#include "hangword/errors.hpp"

namespace hangword {

  namespace {
    bool is_subset(std::uint64_t a, std::uint64_t b) {
      return (a & ~b) == 0;
    }

    // Drops every set that contains another member, then orders canonically.
    std::vector<std::uint64_t> minimize(std::vector<std::uint64_t> sets) {
      std::sort(sets.begin(), sets.end(), [](auto a, auto b) {
        return std::popcount(a) < std::popcount(b)
               || (std::popcount(a) == std::popcount(b) && a < b);
      });
      sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
      std::vector<std::uint64_t> kept;
      for (auto s : sets) {
        bool dominated = std::any_of(kept.begin(), kept.end(), [s](auto t) {
          return is_subset(t, s);
        });
        if (!dominated) {
          kept.push_back(s);
        }
      }
      canonical_order(kept);
      return kept;
    }

    std::vector<std::uint64_t> formula_sets(FormulaNode const& f) {
      switch (f.kind) {
        case FormulaNode::Kind::var:
          return {std::uint64_t{1} << (f.var - 1)};
        case FormulaNode::Kind::disj: {
          std::vector<std::uint64_t> all;
          for (auto const& c : f.children) {
            auto sub = formula_sets(c);
            all.insert(all.end(), sub.begin(), sub.end());
          }
          return minimize(std::move(all));
        }
        case FormulaNode::Kind::conj: {
          std::vector<std::uint64_t> acc{0};
          for (auto const& c : f.children) {
            auto                       sub = formula_sets(c);
            std::vector<std::uint64_t> next;
            next.reserve(acc.size() * sub.size());
            for (auto a : acc) {
              for (auto b : sub) {
                next.push_back(a | b);
              }
            }
            acc = minimize(std::move(next));
          }
          return acc;
        }
      }
      return {};
    }

    void k_subsets(int n, int k, int next, std::uint64_t acc,
                   std::vector<std::uint64_t>& out) {
      if (k == 0) {
        out.push_back(acc);
        return;
      }
      for (int i = next; i <= n - k + 1; ++i) {
        k_subsets(n, k - 1, i + 1, acc | (std::uint64_t{1} << (i - 1)), out);
      }
    }
  }  // namespace

  void canonical_order(std::vector<std::uint64_t>& sets) {
    // Lexicographic order on ascending element lists: the first differing
    // element decides, and that is the lowest bit of the symmetric
    // difference.
    std::sort(sets.begin(), sets.end(), [](std::uint64_t a, std::uint64_t b) {
      int ca = std::popcount(a), cb = std::popcount(b);
      if (ca != cb) {
        return ca < cb;
      }
      std::uint64_t diff = a ^ b;
      if (diff == 0) {
        return false;
      }
      std::uint64_t low = diff & (~diff + 1);
      return (a & low) != 0;
    });
  }

  std::vector<std::vector<int>> to_index_lists(
      std::vector<std::uint64_t> const& sets) {
    std::vector<std::vector<int>> out;
    for (auto s : sets) {
      std::vector<int> members;
      for (int i = 1; i <= 64; ++i) {
        if ((s >> (i - 1)) & 1U) {
          members.push_back(i);
        }
      }
      out.push_back(std::move(members));
    }
    return out;
  }

  MonotoneFn MonotoneFn::threshold(int n, int k) {
    check_rank(n);
    if (k < 1 || k > n) {
      throw Unrealizable("threshold k must satisfy 1 <= k <= n (k = "
                         + std::to_string(k) + ", n = " + std::to_string(n)
                         + ")");
    }
    return MonotoneFn(n, Threshold{k});
  }

  MonotoneFn MonotoneFn::minimal_sets(int n, std::vector<std::uint64_t> sets) {
    check_rank(n);
    if (sets.empty()) {
      throw Unrealizable("no minimal sets: the function is constant false");
    }
    for (auto s : sets) {
      if (s == 0) {
        throw Unrealizable(
            "empty minimal set: the function is constant true, f(∅) must be "
            "false");
      }
      if ((s & ~full_mask(n)) != 0) {
        throw InputError("minimal set names a nail beyond n = "
                         + std::to_string(n));
      }
    }
    for (std::size_t i = 0; i < sets.size(); ++i) {
      for (std::size_t j = 0; j < sets.size(); ++j) {
        if (i != j && is_subset(sets[i], sets[j])) {
          throw InputError("minimal sets must form an antichain");
        }
      }
    }
    canonical_order(sets);
    return MonotoneFn(n, MinimalSets{std::move(sets)});
  }

  MonotoneFn MonotoneFn::minimal_sets(
      int                                  n,
      std::vector<std::vector<int>> const& sets) {
    check_rank(n);
    std::vector<std::uint64_t> masks;
    for (auto const& members : sets) {
      masks.push_back(NailState::of(n, members).mask());
    }
    return minimal_sets(n, std::move(masks));
  }

  MonotoneFn MonotoneFn::formula(int n, FormulaNode root) {
    check_rank(n);
    if (root.max_var() > n) {
      throw InputError("formula variable x" + std::to_string(root.max_var())
                       + " exceeds n = " + std::to_string(n));
    }
    return MonotoneFn(n, Formula{std::move(root)});
  }

  MonotoneFn MonotoneFn::truth_table(int n, std::vector<bool> bits) {
    check_rank(n);
    if (n > kMaxTableRank) {
      throw InputError("truth tables are limited to n <= "
                       + std::to_string(kMaxTableRank));
    }
    if (bits.size() != (std::size_t{1} << n)) {
      throw InputError("truth table for n = " + std::to_string(n) + " needs "
                       + std::to_string(std::size_t{1} << n) + " bits, got "
                       + std::to_string(bits.size()));
    }
    auto verdict = check_realizable(n, bits);
    if (!verdict.ok) {
      throw Unrealizable(verdict.reason);
    }
    return MonotoneFn(n, TruthTable{std::move(bits)});
  }

  std::string_view MonotoneFn::kind() const noexcept {
    switch (_body.index()) {
      case 0:
        return "threshold";
      case 1:
        return "minimal_sets";
      case 2:
        return "formula";
      default:
        return "table";
    }
  }

  bool MonotoneFn::evaluate(NailState const& s) const {
    if (s.rank() != _rank) {
      throw RankMismatch(_rank, s.rank());
    }
    return evaluate(s.mask());
  }

  bool MonotoneFn::evaluate(std::uint64_t present) const {
    struct Visitor {
      std::uint64_t present;

      bool operator()(Threshold const& t) const {
        return std::popcount(present) >= t.k;
      }
      bool operator()(MinimalSets const& m) const {
        return std::any_of(m.sets.begin(), m.sets.end(), [this](auto s) {
          return is_subset(s, present);
        });
      }
      bool operator()(Formula const& f) const {
        return f.root.evaluate(present);
      }
      bool operator()(TruthTable const& t) const {
        return t.bits[present];
      }
    };
    return std::visit(Visitor{present}, _body);
  }

  MonotoneFn parse_formula(std::string_view text, int n) {
    return MonotoneFn::formula(n, parse_formula_tree(text));
  }

  std::vector<std::uint64_t> minimal_true_sets(MonotoneFn const& f) {
    int n = f.rank();
    struct Visitor {
      int n;

      std::vector<std::uint64_t> operator()(Threshold const& t) const {
        std::vector<std::uint64_t> out;
        k_subsets(n, t.k, 1, 0, out);
        canonical_order(out);
        return out;
      }
      std::vector<std::uint64_t> operator()(MinimalSets const& m) const {
        return m.sets;
      }
      std::vector<std::uint64_t> operator()(Formula const& f) const {
        return formula_sets(f.root);
      }
      std::vector<std::uint64_t> operator()(TruthTable const& t) const {
        std::vector<std::uint64_t> out;
        for (std::uint64_t s = 0; s < t.bits.size(); ++s) {
          if (!t.bits[s]) {
            continue;
          }
          bool minimal = true;
          for (std::uint64_t rest = s; rest != 0 && minimal;
               rest &= rest - 1) {
            std::uint64_t bit = rest & (~rest + 1);
            minimal           = !t.bits[s & ~bit];
          }
          if (minimal) {
            out.push_back(s);
          }
        }
        canonical_order(out);
        return out;
      }
    };
    return std::visit(Visitor{n}, f.body());
  }

  std::vector<bool> tabulate(MonotoneFn const& f) {
    if (f.rank() > kMaxTableRank) {
      throw InputError("cannot tabulate beyond n = "
                       + std::to_string(kMaxTableRank));
    }
    std::vector<bool> bits(std::size_t{1} << f.rank());
    for (std::uint64_t s = 0; s < bits.size(); ++s) {
      bits[s] = f.evaluate(s);
    }
    return bits;
  }

  Realizability check_realizable(int n, std::vector<bool> const& table) {
    if (n < 1 || n > kMaxTableRank
        || table.size() != (std::size_t{1} << n)) {
      return {false, "table size does not match n"};
    }
    for (std::uint64_t s = 0; s < table.size(); ++s) {
      if (!table[s]) {
        continue;
      }
      for (int i = 0; i < n; ++i) {
        if (!table[s | (std::uint64_t{1} << i)]) {
          return {false, "not monotone"};
        }
      }
    }
    if (table.front()) {
      return {false, "f(∅) must be false"};
    }
    if (!table.back()) {
      return {false, "f(full) must be true"};
    }
    return {true, ""};
  }

}  // namespace hangword
