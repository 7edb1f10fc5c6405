#include "hangword/cli.hpp"

#include <optional>

#include "CLI11.hpp"

#include "hangword/bench.hpp"
#include "hangword/compile.hpp"
#include "hangword/errors.hpp"
#include "hangword/io.hpp"
#include "hangword/kofn_random.hpp"
#include "hangword/render.hpp"

namespace hangword {

  namespace {
    // Where the specification comes from; exactly one source may be set.
    struct FunctionSource {
      std::optional<int>              all_nails;
      std::vector<int>                threshold;
      std::optional<std::string>      formula;
      std::optional<std::string>      sets;
      std::optional<std::string>      table;
      std::optional<std::string>      file;
      std::optional<int>              n;

      void attach(CLI::App* app) {
        app->add_option("--threshold", threshold,
                        "k-out-of-n specification: K N")
            ->expected(2);
        app->add_option("--formula", formula,
                        "AND/OR formula such as \"x1&x2|x3\" (needs --n)");
        app->add_option("--sets", sets,
                        "minimal sets such as \"1,2;3\" (needs --n)");
        app->add_option("--table", table,
                        "truth table bitstring of length 2^n (needs --n)");
        app->add_option("--function", file, "function JSON file");
        app->add_option("--n", n, "number of nails");
      }

      std::size_t count() const {
        return all_nails.has_value() + !threshold.empty() + formula.has_value()
               + sets.has_value() + table.has_value() + file.has_value();
      }

      int need_n(char const* flag) const {
        if (!n) {
          throw InputError(std::string(flag) + " needs --n");
        }
        return *n;
      }

      MonotoneFn resolve() const {
        if (count() != 1) {
          throw InputError("give exactly one of --all-nails, --threshold, "
                           "--formula, --sets, --table, --function");
        }
        if (all_nails) {
          return MonotoneFn::threshold(*all_nails, *all_nails);
        }
        if (!threshold.empty()) {
          return MonotoneFn::threshold(threshold[1], threshold[0]);
        }
        if (formula) {
          return parse_formula(*formula, need_n("--formula"));
        }
        if (sets) {
          return MonotoneFn::minimal_sets(need_n("--sets"),
                                          parse_set_list(*sets));
        }
        if (table) {
          int n = need_n("--table");
          return MonotoneFn::truth_table(n, parse_table_bits(*table, n));
        }
        nlohmann::json j;
        try {
          j = nlohmann::json::parse(read_text_file(*file));
        } catch (nlohmann::json::parse_error const& e) {
          throw InputError("cannot parse '" + *file + "': " + e.what());
        }
        return function_from_json(j);
      }
    };

    struct RandomFlags {
      std::uint64_t      seed        = kDefaultSeed;
      std::optional<int> depth;
      int                max_retries = 50;
      std::uint64_t      trials      = 100000;
      int                exhaustive_cap = 24;
    };

    std::string default_method(FunctionSource const& source,
                               MonotoneFn const&     f) {
      if (source.all_nails) {
        return "all-nails";
      }
      switch (f.body().index()) {
        case 0:
          return "dnc";
        case 2:
          return "formula";
        default:
          return "lambda";
      }
    }

    void emit_text(std::optional<std::string> const& path,
                   std::string const&                text,
                   std::ostream&                     fallback) {
      if (path) {
        write_text_file(*path, text);
      } else {
        fallback << text;
      }
    }

    int compile_command(FunctionSource const&             source,
                        std::optional<std::string> const& method_flag,
                        RandomFlags const&                flags,
                        std::optional<std::string> const& out_path,
                        std::optional<std::string> const& provenance_path,
                        std::ostream&                     out,
                        std::ostream&                     err) {
      MonotoneFn  f      = source.resolve();
      std::string method = method_flag.value_or(default_method(source, f));
      auto const* threshold = std::get_if<Threshold>(&f.body());

      nlohmann::ordered_json prov;
      prov["method"]   = method;
      prov["function"] = function_to_json(f);

      std::optional<WordExpr> word;
      int                     exit_code = kExitOk;
      if (method == "all-nails") {
        if (!threshold || threshold->k != f.rank()) {
          throw InputError("all-nails realizes only k = n thresholds");
        }
        auto c = all_nails(f.rank());
        prov["construction"] = c.provenance.construction;
        prov["parameters"]   = c.provenance.parameters;
        word                 = c.word;
      } else if (method == "lambda") {
        auto c = from_minimal_sets(f);
        prov["construction"] = c.provenance.construction;
        prov["parameters"]   = c.provenance.parameters;
        word                 = c.word;
      } else if (method == "formula") {
        auto c = from_formula(f);
        prov["construction"] = c.provenance.construction;
        prov["parameters"]   = c.provenance.parameters;
        word                 = c.word;
        // Gate words can collapse when a pad nail is removed; check them.
        if (f.rank() <= flags.exhaustive_cap) {
          VerifyOptions options;
          options.exhaustive_cap = flags.exhaustive_cap;
          auto report            = verify_exhaustive(c.word, f, options);
          prov["verification"]   = report_to_json(report);
          if (!report.verified) {
            exit_code = kExitFailed;
          }
        }
      } else if (method == "dnc") {
        if (!threshold) {
          throw InputError("dnc needs a threshold specification");
        }
        auto c = kofn_dnc(f.rank(), threshold->k);
        prov["construction"] = c.provenance.construction;
        prov["parameters"]   = c.provenance.parameters;
        word                 = c.word;
      } else if (method == "random") {
        if (!threshold) {
          throw InputError("random needs a threshold specification");
        }
        SampleConfig config;
        config.n           = f.rank();
        config.k           = threshold->k;
        config.seed        = flags.seed;
        config.depth       = flags.depth;
        config.max_retries = flags.max_retries;
        VerifyOptions options;
        options.exhaustive_cap = flags.exhaustive_cap;
        auto result
            = find_word(config, default_verifier(options, flags.trials,
                                                 flags.seed));
        prov["construction"]       = "random-majority";
        prov["parameters"]["n"]    = config.n;
        prov["parameters"]["k"]    = config.k;
        prov["seed"]               = flags.seed;
        prov["depth"]              = result.depth;
        prov["max_retries"]        = flags.max_retries;
        prov["attempts"]           = result.attempts;
        prov["found"]              = result.found;
        prov["failures"]           = nlohmann::ordered_json::array();
        for (auto const& fail : result.failures) {
          nlohmann::ordered_json a;
          a["seed"]                 = fail.seed;
          a["counterexample_count"] = fail.counterexample_count;
          a["counterexamples"]      = nlohmann::ordered_json::array();
          for (auto const& c : fail.counterexamples) {
            a["counterexamples"].push_back(counterexample_to_json(c));
          }
          prov["failures"].push_back(a);
        }
        if (result.found) {
          prov["attempt_seed"] = result.seed;
          prov["verification"] = report_to_json(*result.report);
          word                 = *result.word;
        } else {
          exit_code = kExitFailed;
        }
      } else {
        throw InputError("unknown method '" + method
                         + "' (expected all-nails, lambda, formula, dnc or "
                           "random)");
      }

      if (word) {
        Word flat               = flatten(*word);
        prov["written_length"]  = word->written_length();
        prov["reduced_length"]  = flat.length();
        emit_text(out_path, format_word(flat), out);
      }
      emit_text(provenance_path, prov.dump(2) + "\n", err);
      return exit_code;
    }

    int verify_command(FunctionSource const& source,
                       std::string const&    word_path,
                       RandomFlags const&    flags,
                       bool                  sampled_requested,
                       std::size_t           limit,
                       std::ostream&         out) {
      MonotoneFn f = source.resolve();
      Word       w = parse_word(read_text_file(word_path));
      if (w.rank() != f.rank()) {
        throw RankMismatch(f.rank(), w.rank());
      }
      VerifyOptions options;
      options.exhaustive_cap       = flags.exhaustive_cap;
      options.counterexample_limit = limit;
      VerifyReport report
          = (sampled_requested || f.rank() > flags.exhaustive_cap)
                ? verify_sampled(w, f, flags.trials, flags.seed, options)
                : verify_exhaustive(w, f, options);
      out << report_to_json(report).dump(2) << '\n';
      return report.counterexample_count == 0 ? kExitOk : kExitFailed;
    }
  }  // namespace

  int run_cli(std::vector<std::string> const& args,
              std::ostream&                   out,
              std::ostream&                   err) {
    CLI::App app{"Compile and verify picture-hanging words in free groups",
                 "hangword"};
    app.require_subcommand(1);

    // compile
    FunctionSource             compile_source;
    RandomFlags                compile_flags;
    std::optional<std::string> method, compile_out, provenance;
    auto* compile = app.add_subcommand("compile", "Compile a specification");
    compile_source.attach(compile);
    compile->add_option("--all-nails", compile_source.all_nails,
                        "Fall on removal of any one of N nails");
    compile->add_option("--method", method,
                        "all-nails, lambda, formula, dnc or random");
    compile->add_option("--out,-o", compile_out, "Word file (default stdout)");
    compile->add_option("--provenance", provenance,
                        "Provenance JSON (default stderr)");
    compile->add_option("--seed", compile_flags.seed, "Random seed");
    compile->add_option("--depth", compile_flags.depth,
                        "Majority depth for the random method");
    compile->add_option("--max-retries", compile_flags.max_retries,
                        "Attempts for the random method")
        ->check(CLI::PositiveNumber);
    compile->add_option("--trials", compile_flags.trials,
                        "Sampled states above the exhaustive cap");
    compile->add_option("--exhaustive-cap", compile_flags.exhaustive_cap,
                        "Largest n verified exhaustively");

    // verify
    FunctionSource verify_source;
    RandomFlags    verify_flags;
    std::string    word_path;
    std::size_t    limit = 16;
    auto* verify = app.add_subcommand("verify", "Verify a word file");
    verify_source.attach(verify);
    verify->add_option("--all-nails", verify_source.all_nails,
                       "Specification: fall on removal of any one of N nails");
    verify->add_option("--word,-w", word_path, "Word file")->required();
    auto* trials_opt = verify->add_option(
        "--trials", verify_flags.trials, "Sample this many random states");
    verify->add_option("--seed", verify_flags.seed, "Seed for sampling");
    verify->add_option("--exhaustive-cap", verify_flags.exhaustive_cap,
                       "Largest n verified exhaustively");
    verify->add_option("--limit", limit, "Counterexamples listed");

    // bench
    BenchOptions bench_options;
    std::string  suite = "all-nails";
    auto* bench = app.add_subcommand("bench", "Length and timing sweeps (CSV)");
    bench->add_option("--suite", suite, "all-nails, dnc or random");
    bench->add_option("--n-min", bench_options.n_min, "Smallest n");
    bench->add_option("--n-max", bench_options.n_max, "Largest n");
    bench->add_option("--k", bench_options.k, "Fix k");
    bench->add_option("--depth", bench_options.depth, "Random depth");
    bench->add_option("--seed", bench_options.seed, "Random seed");
    bench->add_option("--max-retries", bench_options.max_retries,
                      "Attempts per random row")
        ->check(CLI::PositiveNumber);
    bench->add_option("--exhaustive-cap", bench_options.verify.exhaustive_cap,
                      "Largest n verified exhaustively");
    bench->add_flag("--timing", bench_options.timing,
                    "Fill the seconds column (output no longer reproducible)");

    // render
    std::string                render_word;
    std::optional<int>         render_rank;
    std::optional<std::string> render_out;
    auto* render = app.add_subcommand("render", "Draw a word as SVG");
    render->add_option("--word,-w", render_word, "Word file")->required();
    render->add_option("--rank", render_rank, "Expected rank");
    render->add_option("--out,-o", render_out, "SVG file (default stdout)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) {
      reversed.pop_back();
    }
    try {
      app.parse(reversed);
    } catch (CLI::CallForHelp const&) {
      out << app.help();
      return kExitOk;
    } catch (CLI::ParseError const& e) {
      err << "error: " << e.what() << '\n';
      return kExitInputError;
    }

    try {
      if (compile->parsed()) {
        return compile_command(compile_source, method, compile_flags,
                               compile_out, provenance, out, err);
      }
      if (verify->parsed()) {
        return verify_command(verify_source, word_path, verify_flags,
                              trials_opt->count() > 0, limit, out);
      }
      if (bench->parsed()) {
        bench_options.suite = parse_bench_suite(suite);
        run_bench(bench_options, out);
        return kExitOk;
      }
      if (render->parsed()) {
        Word w = parse_word(read_text_file(render_word));
        if (render_rank && *render_rank != w.rank()) {
          throw RankMismatch(*render_rank, w.rank());
        }
        emit_text(render_out, render_svg(w), out);
        return kExitOk;
      }
    } catch (InputError const& e) {
      err << "error: " << e.what() << '\n';
      return kExitInputError;
    }
    return kExitInputError;
  }

}  // namespace hangword
