#include "hangword/bench.hpp"

#include <chrono>
#include <cstdio>

#include "hangword/compile.hpp"
#include "hangword/errors.hpp"
#include "hangword/kofn_random.hpp"

namespace hangword {

  namespace {
    struct Row {
      std::string   construction;
      int           n;
      int           k;
      std::string   depth;
      std::uint64_t written;
      std::size_t   reduced;
      std::string   verified;
      int           attempts;
      double        seconds;
    };

    void emit(std::ostream& csv, Row const& r, bool timing) {
      char seconds[32];
      std::snprintf(seconds, sizeof(seconds), "%.6f", timing ? r.seconds : 0.0);
      csv << r.construction << ',' << r.n << ',' << r.k << ',' << r.depth
          << ',' << r.written << ',' << r.reduced << ',' << r.verified << ','
          << r.attempts << ',' << (timing ? seconds : "0") << '\n';
    }

    std::string verdict(WordExpr const&      word,
                        MonotoneFn const&    f,
                        VerifyOptions const& options,
                        std::size_t&         reduced) {
      Word flat = flatten(word);
      reduced   = flat.length();
      if (f.rank() > options.exhaustive_cap) {
        return "unchecked";
      }
      return verify_exhaustive(flat, f, options).verified ? "true" : "false";
    }

    using Clock = std::chrono::steady_clock;

    double since(Clock::time_point start) {
      return std::chrono::duration<double>(Clock::now() - start).count();
    }
  }  // namespace

  BenchSuite parse_bench_suite(std::string const& name) {
    if (name == "all-nails") {
      return BenchSuite::all_nails;
    }
    if (name == "dnc") {
      return BenchSuite::dnc;
    }
    if (name == "random") {
      return BenchSuite::random;
    }
    throw InputError("unknown bench suite '" + name
                     + "' (expected all-nails, dnc or random)");
  }

  void run_bench(BenchOptions const& options, std::ostream& csv) {
    if (options.n_min < 1 || options.n_max < options.n_min) {
      throw InputError("bench needs 1 <= n-min <= n-max");
    }
    csv << kBenchHeader << '\n';
    for (int n = options.n_min; n <= options.n_max; ++n) {
      switch (options.suite) {
        case BenchSuite::all_nails: {
          auto start = Clock::now();
          auto c     = all_nails(n);
          Row  row{"all-nails", n, n, "", c.word.written_length(), 0, "", 1, 0};
          row.verified = verdict(c.word, MonotoneFn::threshold(n, n),
                                 options.verify, row.reduced);
          row.seconds  = since(start);
          emit(csv, row, options.timing);
          break;
        }
        case BenchSuite::dnc: {
          int k_lo = options.k.value_or(1);
          int k_hi = options.k.value_or(n);
          for (int k = k_lo; k <= std::min(k_hi, n); ++k) {
            auto start = Clock::now();
            auto c     = kofn_dnc(n, k);
            Row  row{"dnc", n, k, "", c.word.written_length(), 0, "", 1, 0};
            row.verified = verdict(c.word, MonotoneFn::threshold(n, k),
                                   options.verify, row.reduced);
            row.seconds  = since(start);
            emit(csv, row, options.timing);
          }
          break;
        }
        case BenchSuite::random: {
          if (n == 2) {
            continue;
          }
          int k = options.k.value_or((n + 1) / 2);
          if (k > n) {
            continue;
          }
          SampleConfig config;
          config.n           = n;
          config.k           = k;
          config.seed        = options.seed;
          config.depth       = options.depth;
          config.max_retries = options.max_retries;
          auto start  = Clock::now();
          auto result = find_word(config, default_verifier(options.verify));
          Row  row{"random",
                   n,
                   k,
                   std::to_string(result.depth),
                   result.written_length,
                   result.reduced_length,
                   result.found ? "true" : "false",
                   result.attempts,
                   since(start)};
          if (result.found && n > options.verify.exhaustive_cap) {
            row.verified = "sampled";
          }
          emit(csv, row, options.timing);
          break;
        }
      }
    }
  }

}  // namespace hangword
