#include "hangword/kofn_random.hpp"

#include <algorithm>
#include <numeric>

#include "hangword/errors.hpp"

namespace hangword {

  namespace {
    void check_config(SampleConfig const& config) {
      check_rank(config.n);
      if (config.k < 1 || config.k > config.n) {
        throw InputError("random construction needs 1 <= k <= n");
      }
      if (config.depth && *config.depth < 0) {
        throw InputError("depth must be non-negative");
      }
      if (config.max_retries < 1) {
        throw InputError("max_retries must be at least 1");
      }
    }

    WordExpr sample_node(InitializerSpec const& spec,
                         std::uint64_t          seed,
                         int                    depth,
                         PadPolicy              policy) {
      if (depth == 0) {
        std::mt19937_64 rng(mix64(seed));
        return sample_w0(spec, rng);
      }
      auto a = sample_node(spec, derive_seed(seed, 0), depth - 1, policy);
      auto b = sample_node(spec, derive_seed(seed, 1), depth - 1, policy);
      auto c = sample_node(spec, derive_seed(seed, 2), depth - 1, policy);
      return safe_majority(a, b, c, policy);
    }

    int resolved_depth(SampleConfig const& config) {
      return config.depth ? *config.depth : default_depth(config.n, config.k);
    }
  }  // namespace

  int default_depth(int n, int k) {
    return depth_schedule(n, k, pow2_neg(2 * static_cast<unsigned>(n)));
  }

  WordExpr sample_w0(InitializerSpec const& spec, std::mt19937_64& rng) {
    int m = spec.m_low;
    if (!spec.fixed()
        && !(uniform_unit(rng) < static_cast<double>(spec.mix_q))) {
      m = spec.m_low + 1;
    }
    std::vector<int> pool(spec.n);
    std::iota(pool.begin(), pool.end(), 1);
    for (int i = 0; i < m; ++i) {
      auto j = i + static_cast<int>(uniform_below(rng, spec.n - i));
      std::swap(pool[i], pool[j]);
    }
    std::sort(pool.begin(), pool.begin() + m);
    std::vector<WordExpr> letters;
    for (int i = 0; i < m; ++i) {
      letters.push_back(WordExpr::generator(pool[i], spec.n));
    }
    if (letters.size() == 1) {
      return letters.front();
    }
    return WordExpr::concat(spec.n, std::move(letters));
  }

  WordExpr sample_word(SampleConfig const& config) {
    check_config(config);
    int  depth = resolved_depth(config);
    auto spec  = initializer(config.n, config.k);
    if (config.n == 1) {
      std::mt19937_64 rng(mix64(config.seed));
      return sample_w0(spec, rng);
    }
    if (config.n == 2 && depth > 0) {
      throw InputError("majority gates need 3 distinct pad generators; use "
                       "the dnc method for n = 2");
    }
    return sample_node(spec, config.seed, depth, config.pad_policy);
  }

  Verifier default_verifier(VerifyOptions const& options,
                            std::uint64_t        trials,
                            std::uint64_t        seed) {
    return [options, trials, seed](WordExpr const& w, MonotoneFn const& f) {
      if (f.rank() <= options.exhaustive_cap) {
        return verify_exhaustive(w, f, options);
      }
      return verify_sampled(w, f, trials, seed, options);
    };
  }

  FindResult find_word(SampleConfig const& config, Verifier const& verifier) {
    check_config(config);
    auto       target = MonotoneFn::threshold(config.n, config.k);
    FindResult result;
    result.depth = resolved_depth(config);
    for (int attempt = 0; attempt < config.max_retries; ++attempt) {
      SampleConfig trial = config;
      trial.seed         = derive_seed(config.seed, attempt);
      trial.depth        = result.depth;
      WordExpr     word  = sample_word(trial);
      VerifyReport report = verifier(word, target);
      result.attempts     = attempt + 1;
      if (report.counterexample_count == 0) {
        result.found          = true;
        result.seed           = trial.seed;
        result.written_length = word.written_length();
        result.reduced_length = report.reduced_length;
        result.word           = std::move(word);
        result.report         = std::move(report);
        return result;
      }
      result.failures.push_back({trial.seed, report.counterexample_count,
                                 std::move(report.counterexamples)});
    }
    return result;
  }

}  // namespace hangword
