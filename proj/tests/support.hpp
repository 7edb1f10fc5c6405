#pragma once

// Test-only generators and oracles. Nothing here calls into the reduction
// or quotient code under test.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "hangword/word.hpp"
#include "hangword/word_expr.hpp"

namespace hangword::testing {

  // Signed letters: +i is x_i, -i its inverse.
  using Raw = std::vector<int>;

  inline Raw random_raw(std::mt19937_64& rng, int rank, std::size_t max_len) {
    std::uniform_int_distribution<std::size_t> len(0, max_len);
    std::uniform_int_distribution<int>         gen(1, rank);
    std::bernoulli_distribution                neg(0.5);
    Raw                                        out(len(rng));
    for (auto& v : out) {
      v = gen(rng) * (neg(rng) ? -1 : 1);
    }
    return out;
  }

  // Repeatedly deletes the first adjacent inverse pair until none is left.
  // Quadratic, but obviously correct.
  inline Raw naive_reduce(Raw w) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        if (w[i] == -w[i + 1]) {
          w.erase(w.begin() + i, w.begin() + i + 2);
          changed = true;
          break;
        }
      }
    }
    return w;
  }

  inline Raw naive_quotient(Raw const& w, std::uint64_t present) {
    Raw kept;
    for (int v : w) {
      int i = v < 0 ? -v : v;
      if ((present >> (i - 1)) & 1U) {
        kept.push_back(v);
      }
    }
    return naive_reduce(kept);
  }

  inline Raw raw(Word const& w) {
    Raw out;
    for (Letter l : w.letters()) {
      out.push_back(l.value());
    }
    return out;
  }

  inline Raw raw(WordExpr const& e) {
    Raw out;
    for (Letter l : e.expand()) {
      out.push_back(l.value());
    }
    return out;
  }

  inline std::vector<Letter> letters(Raw const& w) {
    std::vector<Letter> out;
    for (int v : w) {
      out.push_back(Letter::from_signed(v));
    }
    return out;
  }

  inline Word word(int rank, Raw const& w) {
    return reduce(letters(w), rank);
  }

  // Random nontrivial reduced word.
  inline Raw random_nontrivial(std::mt19937_64& rng, int rank,
                               std::size_t max_len) {
    for (;;) {
      Raw w = naive_reduce(random_raw(rng, rank, max_len));
      if (!w.empty()) {
        return w;
      }
    }
  }

  // Oracle truth table of a word: bit s is set when the naive quotient at
  // state s is nontrivial.
  inline std::vector<bool> hanging_table(Raw const& w, int rank) {
    std::vector<bool> out(std::size_t{1} << rank);
    for (std::uint64_t s = 0; s < out.size(); ++s) {
      out[s] = !naive_quotient(w, s).empty();
    }
    return out;
  }

  // Every read-once formula (each variable used once, binary gates) over
  // exactly the variables in `vars`, as parenthesised text.
  inline std::vector<std::string> read_once_formulas(std::vector<int> const& vars) {
    if (vars.size() == 1) {
      return {"x" + std::to_string(vars[0])};
    }
    std::vector<std::string> out;
    int                      m = static_cast<int>(vars.size());
    // Fixing the last variable on the right side avoids mirrored duplicates.
    for (int mask = 1; mask < (1 << (m - 1)); ++mask) {
      std::vector<int> left, right;
      for (int i = 0; i < m; ++i) {
        ((mask >> i) & 1 ? left : right).push_back(vars[i]);
      }
      for (auto const& l : read_once_formulas(left)) {
        for (auto const& r : read_once_formulas(right)) {
          out.push_back("(" + l + " & " + r + ")");
          out.push_back("(" + l + " | " + r + ")");
        }
      }
    }
    return out;
  }

  // Read-once formulas over every nonempty subset of {1..n}.
  inline std::vector<std::string> read_once_corpus(int n) {
    std::vector<std::string> out;
    for (int sub = 1; sub < (1 << n); ++sub) {
      std::vector<int> vars;
      for (int i = 0; i < n; ++i) {
        if ((sub >> i) & 1) {
          vars.push_back(i + 1);
        }
      }
      auto part = read_once_formulas(vars);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }

  // Random formula text; variables may repeat.
  inline std::string random_formula(std::mt19937_64& rng, int n, int depth) {
    if (depth == 0 || rng() % 3 == 0) {
      return "x" + std::to_string(1 + rng() % n);
    }
    int         arity = 2 + static_cast<int>(rng() % 2);
    char const* op    = rng() % 2 ? " & " : " | ";
    std::string out   = "(";
    for (int i = 0; i < arity; ++i) {
      out += (i ? op : "") + random_formula(rng, n, depth - 1);
    }
    return out + ")";
  }

}  // namespace hangword::testing
