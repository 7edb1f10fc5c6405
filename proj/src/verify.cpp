#include "hangword/verify.hpp"

#include <algorithm>
#include <thread>

#include "hangword/errors.hpp"
#include "hangword/quotient.hpp"
#include "hangword/random.hpp"

namespace hangword {

  namespace {
    // Below this many letter visits a single thread wins.
    constexpr std::uint64_t kParallelWork = std::uint64_t{1} << 20;

    void check_ranks(Word const& w, MonotoneFn const& f) {
      if (w.rank() != f.rank()) {
        throw RankMismatch(f.rank(), w.rank());
      }
    }

    void record(VerifyReport&    report,
                NailState const& state,
                bool             expected,
                bool             got,
                std::size_t      limit) {
      ++report.counterexample_count;
      if (report.counterexamples.size() < limit) {
        report.counterexamples.push_back({state, expected, got});
      }
    }

    void finish_exhaustive(VerifyReport& report) {
      report.verified = report.counterexample_count == 0;
      report.verdict
          = report.verified
                ? "verified on all " + std::to_string(report.states_checked)
                      + " states"
                : std::to_string(report.counterexample_count)
                      + " counterexample(s) in "
                      + std::to_string(report.states_checked) + " states";
    }
  }  // namespace

  std::string to_string(VerifyMode mode) {
    return mode == VerifyMode::exhaustive ? "exhaustive" : "sampled";
  }

  VerifyReport verify_range(Word const&          w,
                            MonotoneFn const&    f,
                            std::uint64_t        first,
                            std::uint64_t        last,
                            VerifyOptions const& options) {
    check_ranks(w, f);
    VerifyReport report;
    report.mode           = VerifyMode::exhaustive;
    report.reduced_length = w.length();
    report.written_length = w.length();
    QuotientEvaluator eval;
    for (std::uint64_t s = first; s < last; ++s) {
      bool expected = f.evaluate(s);
      bool got      = eval.hangs(w.letters(), s);
      if (expected != got) {
        record(report, NailState(w.rank(), s), expected, got,
               options.counterexample_limit);
      }
    }
    report.states_checked = last - first;
    finish_exhaustive(report);
    return report;
  }

  VerifyReport merge(VerifyReport left,
                     VerifyReport const& right,
                     std::size_t counterexample_limit) {
    left.states_checked += right.states_checked;
    left.counterexample_count += right.counterexample_count;
    for (auto const& c : right.counterexamples) {
      if (left.counterexamples.size() >= counterexample_limit) {
        break;
      }
      left.counterexamples.push_back(c);
    }
    if (left.mode == VerifyMode::exhaustive) {
      finish_exhaustive(left);
    }
    return left;
  }

  VerifyReport verify_exhaustive(Word const&          w,
                                 MonotoneFn const&    f,
                                 VerifyOptions const& options) {
    check_ranks(w, f);
    if (w.rank() > options.exhaustive_cap) {
      throw InputError("n = " + std::to_string(w.rank())
                       + " exceeds the exhaustive cap of "
                       + std::to_string(options.exhaustive_cap)
                       + "; use sampled verification (--trials)");
    }
    std::uint64_t states = std::uint64_t{1} << w.rank();
    std::uint64_t work   = states * std::max<std::uint64_t>(w.length(), 1);

    unsigned workers = options.workers != 0
                           ? options.workers
                           : std::max(1U, std::thread::hardware_concurrency());
    if (work < kParallelWork) {
      workers = 1;
    }
    workers = static_cast<unsigned>(
        std::min<std::uint64_t>(workers, states));

    std::vector<VerifyReport> parts(workers);
    auto bound = [&](unsigned i) { return states * i / workers; };
    if (workers == 1) {
      parts[0] = verify_range(w, f, 0, states, options);
    } else {
      std::vector<std::thread> threads;
      for (unsigned i = 0; i < workers; ++i) {
        threads.emplace_back([&, i] {
          parts[i] = verify_range(w, f, bound(i), bound(i + 1), options);
        });
      }
      for (auto& t : threads) {
        t.join();
      }
    }
    VerifyReport report = std::move(parts[0]);
    for (unsigned i = 1; i < workers; ++i) {
      report = merge(std::move(report), parts[i],
                     options.counterexample_limit);
    }
    return report;
  }

  VerifyReport verify_exhaustive(WordExpr const&      e,
                                 MonotoneFn const&    f,
                                 VerifyOptions const& options) {
    VerifyReport report  = verify_exhaustive(flatten(e), f, options);
    report.written_length = e.written_length();
    return report;
  }

  VerifyReport verify_sampled(Word const&          w,
                              MonotoneFn const&    f,
                              std::uint64_t        trials,
                              std::uint64_t        seed,
                              VerifyOptions const& options) {
    check_ranks(w, f);
    if (trials == 0) {
      throw InputError("sampled verification needs at least one trial");
    }
    VerifyReport report;
    report.mode           = VerifyMode::sampled;
    report.seed           = seed;
    report.reduced_length = w.length();
    report.written_length = w.length();

    std::mt19937_64   rng(seed);
    QuotientEvaluator eval;
    std::uint64_t     mask = full_mask(w.rank());
    for (std::uint64_t t = 0; t < trials; ++t) {
      std::uint64_t s        = rng() & mask;
      bool          expected = f.evaluate(s);
      bool          got      = eval.hangs(w.letters(), s);
      if (expected != got) {
        record(report, NailState(w.rank(), s), expected, got,
               options.counterexample_limit);
      }
    }
    report.states_checked = trials;
    report.verified       = false;
    report.verdict
        = report.counterexample_count == 0
              ? "no counterexample found in " + std::to_string(trials)
                    + " trials"
              : std::to_string(report.counterexample_count)
                    + " counterexample(s) in " + std::to_string(trials)
                    + " trials";
    return report;
  }

  VerifyReport verify_sampled(WordExpr const&      e,
                              MonotoneFn const&    f,
                              std::uint64_t        trials,
                              std::uint64_t        seed,
                              VerifyOptions const& options) {
    VerifyReport report = verify_sampled(flatten(e), f, trials, seed, options);
    report.written_length = e.written_length();
    return report;
  }

  bool monotonicity_probe(Word const&   w,
                          std::size_t   samples,
                          std::uint64_t seed) {
    std::mt19937_64   rng(seed);
    QuotientEvaluator eval;
    std::uint64_t     mask = full_mask(w.rank());
    for (std::size_t i = 0; i < samples; ++i) {
      std::uint64_t larger  = rng() & mask;
      std::uint64_t smaller = larger & rng();
      if (eval.hangs(w.letters(), smaller)
          && !eval.hangs(w.letters(), larger)) {
        return false;
      }
    }
    return true;
  }

}  // namespace hangword
