#include "hangword/formula.hpp"

#include <cctype>
#include <limits>

#include "hangword/errors.hpp"

namespace hangword {

  FormulaNode FormulaNode::variable(int index) {
    if (index < 1) {
      throw InputError("formula variable index must be positive");
    }
    return FormulaNode{Kind::var, index, {}};
  }

  FormulaNode FormulaNode::all_of(std::vector<FormulaNode> children) {
    if (children.size() < 2) {
      throw InputError("AND node needs at least two operands");
    }
    return FormulaNode{Kind::conj, 0, std::move(children)};
  }

  FormulaNode FormulaNode::any_of(std::vector<FormulaNode> children) {
    if (children.size() < 2) {
      throw InputError("OR node needs at least two operands");
    }
    return FormulaNode{Kind::disj, 0, std::move(children)};
  }

  bool FormulaNode::evaluate(std::uint64_t present) const {
    switch (kind) {
      case Kind::var:
        return (present >> (var - 1)) & 1U;
      case Kind::conj:
        for (auto const& c : children) {
          if (!c.evaluate(present)) {
            return false;
          }
        }
        return true;
      case Kind::disj:
        for (auto const& c : children) {
          if (c.evaluate(present)) {
            return true;
          }
        }
        return false;
    }
    return false;
  }

  int FormulaNode::max_var() const {
    int m = kind == Kind::var ? var : 0;
    for (auto const& c : children) {
      m = std::max(m, c.max_var());
    }
    return m;
  }

  namespace {
    class Parser {
     public:
      explicit Parser(std::string_view text) : _text(text) {}

      FormulaNode parse() {
        FormulaNode result = expr();
        skip_space();
        if (_pos != _text.size()) {
          throw SyntaxError("unexpected '" + std::string(1, _text[_pos]) + "'",
                            _pos);
        }
        return result;
      }

     private:
      FormulaNode expr() {
        std::vector<FormulaNode> terms;
        terms.push_back(term());
        while (accept('|')) {
          terms.push_back(term());
        }
        return terms.size() == 1 ? std::move(terms.front())
                                 : FormulaNode::any_of(std::move(terms));
      }

      FormulaNode term() {
        std::vector<FormulaNode> atoms;
        atoms.push_back(atom());
        while (accept('&')) {
          atoms.push_back(atom());
        }
        return atoms.size() == 1 ? std::move(atoms.front())
                                 : FormulaNode::all_of(std::move(atoms));
      }

      FormulaNode atom() {
        skip_space();
        if (_pos == _text.size()) {
          throw SyntaxError("unexpected end of formula", _pos);
        }
        if (accept('(')) {
          FormulaNode inner = expr();
          skip_space();
          if (!accept(')')) {
            throw SyntaxError("expected ')'", _pos);
          }
          return inner;
        }
        if (_text[_pos] != 'x') {
          throw SyntaxError("expected variable or '('", _pos);
        }
        std::size_t start = _pos++;
        if (_pos == _text.size()
            || !std::isdigit(static_cast<unsigned char>(_text[_pos]))) {
          throw SyntaxError("expected digits after 'x'", _pos);
        }
        long long index = 0;
        while (_pos < _text.size()
               && std::isdigit(static_cast<unsigned char>(_text[_pos]))) {
          index = index * 10 + (_text[_pos++] - '0');
          if (index > std::numeric_limits<int>::max()) {
            throw SyntaxError("variable index too large", start);
          }
        }
        if (index == 0) {
          throw SyntaxError("variable index must be positive", start);
        }
        return FormulaNode::variable(static_cast<int>(index));
      }

      bool accept(char c) {
        skip_space();
        if (_pos < _text.size() && _text[_pos] == c) {
          ++_pos;
          return true;
        }
        return false;
      }

      void skip_space() {
        while (_pos < _text.size()
               && std::isspace(static_cast<unsigned char>(_text[_pos]))) {
          ++_pos;
        }
      }

      std::string_view _text;
      std::size_t      _pos = 0;
    };

    void print(FormulaNode const& f, std::string& out, bool nested) {
      if (f.kind == FormulaNode::Kind::var) {
        out += 'x';
        out += std::to_string(f.var);
        return;
      }
      if (nested) {
        out += '(';
      }
      char const* sep = f.kind == FormulaNode::Kind::conj ? " & " : " | ";
      for (std::size_t i = 0; i < f.children.size(); ++i) {
        if (i > 0) {
          out += sep;
        }
        print(f.children[i], out, true);
      }
      if (nested) {
        out += ')';
      }
    }
  }  // namespace

  FormulaNode parse_formula_tree(std::string_view text) {
    return Parser(text).parse();
  }

  std::string to_string(FormulaNode const& f) {
    std::string out;
    print(f, out, false);
    return out;
  }

}  // namespace hangword
