#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "hangword/kofn_random.hpp"
#include "hangword/monotone_fn.hpp"
#include "hangword/verify.hpp"
#include "hangword/word.hpp"

namespace hangword {

  // Word files: a "rank=<n>" header line, then whitespace-separated tokens.
  // "x<N>" is generator N and "x<N>'" its inverse. On input, for n <= 26, a
  // token of plain letters is also accepted: 'a' is x1, 'A' is x1^{-1}, and
  // so on.
  std::string format_word(Word const& w);
  Word        parse_word(std::string_view text);

  std::string read_text_file(std::filesystem::path const& path);
  void        write_text_file(std::filesystem::path const& path,
                              std::string const&           text);

  // {"n": int, "kind": "threshold"|"minimal_sets"|"formula"|"table",
  //  "k": int, "sets": [[int]], "formula": string, "table": bitstring}
  // Character s of the table string is f at state s (nail i is bit i-1).
  MonotoneFn             function_from_json(nlohmann::json const& j);
  nlohmann::ordered_json function_to_json(MonotoneFn const& f);

  std::vector<bool> parse_table_bits(std::string_view bits, int n);
  std::string       format_table_bits(std::vector<bool> const& bits);

  // Parses "1,2;3" into {{1,2},{3}}.
  std::vector<std::vector<int>> parse_set_list(std::string_view text);

  nlohmann::ordered_json report_to_json(VerifyReport const& report);
  nlohmann::ordered_json counterexample_to_json(Counterexample const& c);

}  // namespace hangword
