#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hangword/monotone_fn.hpp"
#include "hangword/nail_state.hpp"
#include "hangword/word.hpp"
#include "hangword/word_expr.hpp"

namespace hangword {

  struct Counterexample {
    NailState state;
    bool      expected_hang;
    bool      got_nontrivial;

    bool operator==(Counterexample const&) const = default;
  };

  enum class VerifyMode { exhaustive, sampled };

  struct VerifyReport {
    bool                        verified = false;
    VerifyMode                  mode     = VerifyMode::exhaustive;
    std::uint64_t               states_checked = 0;
    std::vector<Counterexample> counterexamples;
    // Total mismatches found; the list above may be truncated.
    std::uint64_t               counterexample_count = 0;
    std::size_t                 reduced_length       = 0;
    std::uint64_t               written_length       = 0;
    std::optional<std::uint64_t> seed;
    std::string                 verdict;

    bool operator==(VerifyReport const&) const = default;
  };

  struct VerifyOptions {
    int         exhaustive_cap      = 24;
    std::size_t counterexample_limit = 16;
    // 0 picks std::thread::hardware_concurrency().
    unsigned workers = 0;
  };

  // Checks every state in [first, last) (masks over the word's rank).
  // Counterexamples come out in increasing state order.
  VerifyReport verify_range(Word const&          w,
                            MonotoneFn const&    f,
                            std::uint64_t        first,
                            std::uint64_t        last,
                            VerifyOptions const& options = {});

  // Concatenates the reports of adjacent ranges, left before right.
  VerifyReport merge(VerifyReport left,
                     VerifyReport const& right,
                     std::size_t counterexample_limit);

  // All 2^n states, partitioned across worker threads.
  VerifyReport verify_exhaustive(Word const&          w,
                                 MonotoneFn const&    f,
                                 VerifyOptions const& options = {});
  VerifyReport verify_exhaustive(WordExpr const&      e,
                                 MonotoneFn const&    f,
                                 VerifyOptions const& options = {});

  // Uniformly random states. Never reports verified = true; the verdict
  // says how many trials found nothing.
  VerifyReport verify_sampled(Word const&          w,
                              MonotoneFn const&    f,
                              std::uint64_t        trials,
                              std::uint64_t        seed,
                              VerifyOptions const& options = {});
  VerifyReport verify_sampled(WordExpr const&      e,
                              MonotoneFn const&    f,
                              std::uint64_t        trials,
                              std::uint64_t        seed,
                              VerifyOptions const& options = {});

  // Samples nested pairs s of t and checks that hanging on s implies
  // hanging on t. Holds for every word; a failure means word-core is broken.
  bool monotonicity_probe(Word const& w, std::size_t samples, std::uint64_t seed);

  std::string to_string(VerifyMode mode);

}  // namespace hangword
