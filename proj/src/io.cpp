#include "hangword/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "hangword/errors.hpp"

namespace hangword {

  namespace {
    constexpr std::size_t kTokensPerLine = 24;

    int parse_positive(std::string_view digits, std::string_view what) {
      if (digits.empty() || digits.size() > 9) {
        throw InputError("bad " + std::string(what) + " '"
                         + std::string(digits) + "'");
      }
      int value = 0;
      for (char c : digits) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
          throw InputError("bad " + std::string(what) + " '"
                           + std::string(digits) + "'");
        }
        value = value * 10 + (c - '0');
      }
      return value;
    }

    void append_token(std::string_view token, int rank,
                      std::vector<Letter>& out) {
      if (token.size() >= 2 && token[0] == 'x'
          && std::isdigit(static_cast<unsigned char>(token[1]))) {
        bool inverse = token.back() == '\'';
        auto digits  = token.substr(1, token.size() - 1 - (inverse ? 1 : 0));
        int  index   = parse_positive(digits, "generator token");
        if (index < 1 || index > rank) {
          throw InputError("token '" + std::string(token)
                           + "' is outside rank " + std::to_string(rank));
        }
        out.push_back(Letter(Generator(index), inverse ? -1 : 1));
        return;
      }
      for (char c : token) {
        if (!std::isalpha(static_cast<unsigned char>(c))) {
          throw InputError("unrecognised word token '" + std::string(token)
                           + "'");
        }
        bool upper = std::isupper(static_cast<unsigned char>(c));
        int  index = std::tolower(static_cast<unsigned char>(c)) - 'a' + 1;
        if (index > rank) {
          throw InputError("compact letter '" + std::string(1, c)
                           + "' is outside rank " + std::to_string(rank));
        }
        out.push_back(Letter(Generator(index), upper ? -1 : 1));
      }
    }
  }  // namespace

  std::string format_word(Word const& w) {
    std::string out = "rank=" + std::to_string(w.rank()) + "\n";
    std::size_t on_line = 0;
    for (Letter l : w.letters()) {
      if (on_line == kTokensPerLine) {
        out += '\n';
        on_line = 0;
      } else if (on_line > 0) {
        out += ' ';
      }
      out += 'x';
      out += std::to_string(l.index());
      if (l.sign() < 0) {
        out += '\'';
      }
      ++on_line;
    }
    if (on_line > 0) {
      out += '\n';
    }
    return out;
  }

  Word parse_word(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string        token;
    if (!(in >> token) || token.rfind("rank=", 0) != 0) {
      throw InputError("word file must start with a 'rank=<n>' header");
    }
    int rank = parse_positive(std::string_view(token).substr(5), "rank");
    check_rank(rank);
    std::vector<Letter> letters;
    while (in >> token) {
      append_token(token, rank, letters);
    }
    return reduce(letters, rank);
  }

  std::string read_text_file(std::filesystem::path const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw InputError("cannot open '" + path.string() + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
  }

  void write_text_file(std::filesystem::path const& path,
                       std::string const&           text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
      throw InputError("cannot write '" + path.string() + "'");
    }
    out << text;
  }

  std::vector<bool> parse_table_bits(std::string_view bits, int n) {
    check_rank(n);
    if (n > kMaxTableRank) {
      throw InputError("truth tables are limited to n <= "
                       + std::to_string(kMaxTableRank));
    }
    if (bits.size() != (std::size_t{1} << n)) {
      throw InputError("table needs " + std::to_string(std::size_t{1} << n)
                       + " bits for n = " + std::to_string(n));
    }
    std::vector<bool> out(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
      if (bits[i] != '0' && bits[i] != '1') {
        throw InputError("table bits must be '0' or '1'");
      }
      out[i] = bits[i] == '1';
    }
    return out;
  }

  std::string format_table_bits(std::vector<bool> const& bits) {
    std::string out;
    out.reserve(bits.size());
    for (bool b : bits) {
      out += b ? '1' : '0';
    }
    return out;
  }

  std::vector<std::vector<int>> parse_set_list(std::string_view text) {
    std::vector<std::vector<int>> sets;
    std::size_t                   start = 0;
    while (start <= text.size()) {
      auto end   = text.find(';', start);
      auto chunk = text.substr(start, end == std::string_view::npos
                                          ? std::string_view::npos
                                          : end - start);
      std::vector<int> members;
      std::size_t      pos = 0;
      while (pos <= chunk.size()) {
        auto comma = chunk.find(',', pos);
        auto item  = chunk.substr(pos, comma == std::string_view::npos
                                           ? std::string_view::npos
                                           : comma - pos);
        while (!item.empty() && std::isspace(static_cast<unsigned char>(item.front()))) {
          item.remove_prefix(1);
        }
        while (!item.empty() && std::isspace(static_cast<unsigned char>(item.back()))) {
          item.remove_suffix(1);
        }
        if (item.empty()) {
          throw InputError("empty element in set list '" + std::string(text)
                           + "'");
        }
        members.push_back(parse_positive(item, "set element"));
        if (comma == std::string_view::npos) {
          break;
        }
        pos = comma + 1;
      }
      sets.push_back(std::move(members));
      if (end == std::string_view::npos) {
        break;
      }
      start = end + 1;
    }
    return sets;
  }

  MonotoneFn function_from_json(nlohmann::json const& j) {
    try {
      int  n    = j.at("n").get<int>();
      auto kind = j.at("kind").get<std::string>();
      if (kind == "threshold") {
        return MonotoneFn::threshold(n, j.at("k").get<int>());
      }
      if (kind == "minimal_sets") {
        return MonotoneFn::minimal_sets(
            n, j.at("sets").get<std::vector<std::vector<int>>>());
      }
      if (kind == "formula") {
        return parse_formula(j.at("formula").get<std::string>(), n);
      }
      if (kind == "table") {
        return MonotoneFn::truth_table(
            n, parse_table_bits(j.at("table").get<std::string>(), n));
      }
      throw InputError("unknown function kind '" + kind + "'");
    } catch (nlohmann::json::exception const& e) {
      throw InputError(std::string("malformed function JSON: ") + e.what());
    }
  }

  nlohmann::ordered_json function_to_json(MonotoneFn const& f) {
    nlohmann::ordered_json j;
    j["n"]    = f.rank();
    j["kind"] = f.kind();
    if (auto const* t = std::get_if<Threshold>(&f.body())) {
      j["k"] = t->k;
    } else if (auto const* m = std::get_if<MinimalSets>(&f.body())) {
      j["sets"] = to_index_lists(m->sets);
    } else if (auto const* fo = std::get_if<Formula>(&f.body())) {
      j["formula"] = to_string(fo->root);
    } else if (auto const* tt = std::get_if<TruthTable>(&f.body())) {
      j["table"] = format_table_bits(tt->bits);
    }
    return j;
  }

  nlohmann::ordered_json counterexample_to_json(Counterexample const& c) {
    nlohmann::ordered_json j;
    j["state"]          = c.state.indices();
    j["expected_hang"]  = c.expected_hang;
    j["got_nontrivial"] = c.got_nontrivial;
    return j;
  }

  nlohmann::ordered_json report_to_json(VerifyReport const& report) {
    nlohmann::ordered_json j;
    j["verified"]       = report.verified;
    j["mode"]           = to_string(report.mode);
    j["verdict"]        = report.verdict;
    j["states_checked"] = report.states_checked;
    j["counterexample_count"] = report.counterexample_count;
    j["counterexamples"]      = nlohmann::ordered_json::array();
    for (auto const& c : report.counterexamples) {
      j["counterexamples"].push_back(counterexample_to_json(c));
    }
    j["reduced_length"] = report.reduced_length;
    j["written_length"] = report.written_length;
    if (report.seed) {
      j["seed"] = *report.seed;
    }
    return j;
  }

}  // namespace hangword
