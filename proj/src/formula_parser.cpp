#include <cctype>

#include "dtk/logic.hpp"

namespace dtk {

namespace {

struct Token {
  enum Type { Word, Sym, End } type;
  std::string text;
  std::size_t pos;
};

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == '(' || c == ')' || c == '~' || c == '&' || c == '|') {
      out.push_back({Token::Sym, std::string(1, c), i});
      ++i;
    } else if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.') {
      auto start = i;
      while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_' ||
                              s[i] == '.'))
        ++i;
      out.push_back({Token::Word, std::string(s.substr(start, i - start)), start});
    } else {
      throw FormulaError(i, std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({Token::End, "", s.size()});
  return out;
}

class Cursor {
 public:
  explicit Cursor(std::string_view text) : toks_(lex(text)) {}

  const Token& peek() const { return toks_[i_]; }
  bool at(std::string_view t) const { return peek().type != Token::End && peek().text == t; }
  Token next() { return toks_[i_ < toks_.size() - 1 ? i_++ : i_]; }
  void expect(std::string_view t) {
    if (!at(t)) fail("expected '" + std::string(t) + "'");
    next();
  }
  [[noreturn]] void fail(const std::string& msg) const {
    auto got = peek().type == Token::End ? std::string("end of input") : "'" + peek().text + "'";
    throw FormulaError(peek().pos, msg + ", got " + got);
  }
  void finish() {
    if (peek().type != Token::End) fail("trailing input");
  }

 private:
  std::vector<Token> toks_;
  std::size_t i_ = 0;
};

class StateParser {
 public:
  explicit StateParser(std::string_view text) : c_(text) {}

  StateFormula run() {
    auto f = disjunction();
    c_.finish();
    return f;
  }

 private:
  StateFormula disjunction() {
    std::vector<StateFormula> parts{conjunction()};
    while (c_.at("|")) {
      c_.next();
      parts.push_back(conjunction());
    }
    return parts.size() == 1 ? parts.front() : StateFormula::disj(std::move(parts));
  }

  StateFormula conjunction() {
    std::vector<StateFormula> parts{unary()};
    while (c_.at("&")) {
      c_.next();
      parts.push_back(unary());
    }
    return parts.size() == 1 ? parts.front() : StateFormula::conj(std::move(parts));
  }

  StateFormula unary() {
    const auto& t = c_.peek();
    if (t.type == Token::End) c_.fail("expected formula");
    if (c_.at("~")) {
      c_.next();
      return StateFormula::neg(unary());
    }
    if (c_.at("(")) {
      c_.next();
      auto f = disjunction();
      c_.expect(")");
      return f;
    }
    if (t.type != Token::Word) c_.fail("expected formula");
    auto w = c_.next().text;
    if (w == "true") return StateFormula::top();
    if (w == "false") return StateFormula::bottom();
    if (w == "E") {
      c_.expect("(");
      auto f = disjunction();
      c_.expect("U");
      auto g = disjunction();
      c_.expect(")");
      return StateFormula::exists_until(std::move(f), std::move(g));
    }
    if (w == "EG") return StateFormula::exists_g(unary());
    if (w == "EGinf") return StateFormula::exists_g_inf(unary());
    if (w == "EF") return StateFormula::ef(unary());
    if (w == "AG") return StateFormula::ag(unary());
    if (w == "AF") return StateFormula::af(unary());
    if (w == "U") throw FormulaError(t.pos, "'U' outside E( ... )");
    return StateFormula::prop(w);
  }

  Cursor c_;
};

class PathParser {
 public:
  explicit PathParser(std::string_view text) : c_(text) {}

  PathFormula run() {
    auto f = until();
    c_.finish();
    return f;
  }

 private:
  PathFormula until() {
    auto f = disjunction();
    if (c_.at("U")) {
      c_.next();
      return PathFormula::until(std::move(f), until());
    }
    return f;
  }

  PathFormula disjunction() {
    std::vector<PathFormula> parts{conjunction()};
    while (c_.at("|")) {
      c_.next();
      parts.push_back(conjunction());
    }
    return parts.size() == 1 ? parts.front() : PathFormula::disj(std::move(parts));
  }

  PathFormula conjunction() {
    std::vector<PathFormula> parts{unary()};
    while (c_.at("&")) {
      c_.next();
      parts.push_back(unary());
    }
    return parts.size() == 1 ? parts.front() : PathFormula::conj(std::move(parts));
  }

  PathFormula unary() {
    const auto& t = c_.peek();
    if (t.type == Token::End) c_.fail("expected formula");
    if (c_.at("~")) {
      c_.next();
      return PathFormula::neg(unary());
    }
    if (c_.at("(")) {
      c_.next();
      auto f = until();
      c_.expect(")");
      return f;
    }
    if (t.type != Token::Word || t.text == "U") c_.fail("expected formula");
    auto w = c_.next().text;
    if (w == "true") return PathFormula::top();
    if (w == "false") return PathFormula::bottom();
    if (w == "inf") return PathFormula::infinity();
    return PathFormula::prop(w);
  }

  Cursor c_;
};

}  // namespace

StateFormula parse_formula(std::string_view text) { return StateParser(text).run(); }

PathFormula parse_path_formula(std::string_view text) { return PathParser(text).run(); }

}  // namespace dtk
