#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include "hangword/random.hpp"
#include "hangword/verify.hpp"

namespace hangword {

  enum class BenchSuite { all_nails, dnc, random };

  BenchSuite parse_bench_suite(std::string const& name);

  struct BenchOptions {
    BenchSuite         suite = BenchSuite::all_nails;
    int                n_min = 2;
    int                n_max = 8;
    // dnc: restrict to one k (default every k). random: default (n+1)/2.
    std::optional<int> k;
    // random only; default is default_depth(n, k).
    std::optional<int> depth;
    std::uint64_t      seed        = kDefaultSeed;
    int                max_retries = 50;
    // Without timing the seconds column is 0 so output is reproducible
    // byte for byte.
    bool               timing = false;
    VerifyOptions      verify;
  };

  inline constexpr char const* kBenchHeader
      = "construction,n,k,depth,written_length,reduced_length,verified,"
        "attempts,seconds";

  void run_bench(BenchOptions const& options, std::ostream& csv);

}  // namespace hangword
