#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "hangword/gates.hpp"
#include "hangword/probability.hpp"
#include "hangword/random.hpp"
#include "hangword/verify.hpp"
#include "hangword/word_expr.hpp"

namespace hangword {

  struct SampleConfig {
    int           n           = 1;
    int           k           = 1;
    std::uint64_t seed        = kDefaultSeed;
    // Unset means default_depth(n, k).
    std::optional<int> depth;
    int           max_retries = 50;
    PadPolicy     pad_policy  = PadPolicy::adaptive;
  };

  // Depth at which the failure probability drops below 2^{-2n}.
  int default_depth(int n, int k);

  // m distinct generators (m drawn from the spec's two-point mix), written
  // as a product of positive letters in ascending index order.
  WordExpr sample_w0(InitializerSpec const& spec, std::mt19937_64& rng);

  // Random depth-d word: three independent depth-(d-1) samples joined by a
  // safe majority gate whose pads are chosen after the operands are drawn.
  // Child i of a node seeded s is seeded derive_seed(s, i), so the result
  // depends only on the configuration.
  WordExpr sample_word(SampleConfig const& config);

  using Verifier
      = std::function<VerifyReport(WordExpr const&, MonotoneFn const&)>;

  // Exhaustive up to the cap, sampled with `trials` states above it.
  Verifier default_verifier(VerifyOptions const& options = {},
                            std::uint64_t        trials  = 100000,
                            std::uint64_t        seed    = kDefaultSeed);

  struct FailedAttempt {
    std::uint64_t               seed;
    std::uint64_t               counterexample_count;
    std::vector<Counterexample> counterexamples;
  };

  struct FindResult {
    bool                        found = false;
    std::optional<WordExpr>     word;
    std::optional<VerifyReport> report;
    int                         attempts = 0;
    int                         depth    = 0;
    std::uint64_t               seed     = 0;
    std::uint64_t               written_length = 0;
    std::size_t                 reduced_length = 0;
    std::vector<FailedAttempt>  failures;
  };

  // Samples until the verifier finds no counterexample against
  // Threshold(k, n). Attempt i (from 0) uses seed derive_seed(config.seed, i).
  FindResult find_word(SampleConfig const& config,
                       Verifier const&     verifier = default_verifier());

}  // namespace hangword
