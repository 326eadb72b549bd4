#include "adelic/fv/parser.hpp"

#include "adelic/errors.hpp"

#include <cctype>
#include <string>
#include <vector>

namespace adelic::fv {

namespace {

struct Token {
  enum class Kind { Ident, Zero, One, Plus, Minus, Star, Amp, Bar, Tilde, Eq, LParen, RParen, Arrow, End };
  Kind kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

bool is_keyword(const std::string& s) {
  return s == "exists" || s == "forall" || s == "and" || s == "or" || s == "not" || s == "sub" ||
         s == "Fin";
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1;
  std::size_t i = 0;
  auto push = [&](Token::Kind k, std::string t, std::size_t len) {
    out.push_back({k, std::move(t), line, col});
    i += len;
    col += len;
  };
  while (i < text.size()) {
    const char c = text[i];
    if (c == '\n') {
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      ++col;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) {
        ++j;
      }
      push(Token::Kind::Ident, std::string(text.substr(i, j - i)), j - i);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      const std::string digits(text.substr(i, j - i));
      if (digits != "0" && digits != "1") {
        throw ParseError("only the constants 0 and 1 are allowed, found " + digits, line, col);
      }
      push(digits == "0" ? Token::Kind::Zero : Token::Kind::One, digits, j - i);
      continue;
    }
    if (c == '-' && i + 1 < text.size() && text[i + 1] == '>') {
      push(Token::Kind::Arrow, "->", 2);
      continue;
    }
    switch (c) {
      case '+': push(Token::Kind::Plus, "+", 1); continue;
      case '-': push(Token::Kind::Minus, "-", 1); continue;
      case '*': push(Token::Kind::Star, "*", 1); continue;
      case '&': push(Token::Kind::Amp, "&", 1); continue;
      case '|': push(Token::Kind::Bar, "|", 1); continue;
      case '~': push(Token::Kind::Tilde, "~", 1); continue;
      case '=': push(Token::Kind::Eq, "=", 1); continue;
      case '(': push(Token::Kind::LParen, "(", 1); continue;
      case ')': push(Token::Kind::RParen, ")", 1); continue;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", line, col);
    }
  }
  out.push_back({Token::Kind::End, "end of input", line, col});
  return out;
}

template <class AtomT>
class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(tokenize(text)) {}

  Formula<AtomT> parse() {
    Formula<AtomT> f = implication();
    if (peek().kind != Token::Kind::End) fail("unexpected '" + peek().text + "'");
    return f;
  }

 private:
  using F = Formula<AtomT>;

  const Token& peek() const { return tokens_[pos_]; }
  bool at_word(const char* w) const {
    return peek().kind == Token::Kind::Ident && peek().text == w;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, peek().line, peek().column);
  }
  void expect(Token::Kind k, const char* what) {
    if (peek().kind != k) fail(std::string("expected ") + what + ", found '" + peek().text + "'");
    ++pos_;
  }

  F implication() {
    F lhs = disjunction();
    if (peek().kind != Token::Kind::Arrow) return lhs;
    ++pos_;
    F rhs = implication();
    return binary(Connective::Implies, std::move(lhs), std::move(rhs));
  }

  F disjunction() {
    F f = conjunction();
    while (at_word("or")) {
      ++pos_;
      f = binary(Connective::Or, std::move(f), conjunction());
    }
    return f;
  }

  F conjunction() {
    F f = unary();
    while (at_word("and")) {
      ++pos_;
      f = binary(Connective::And, std::move(f), unary());
    }
    return f;
  }

  static F binary(Connective c, F a, F b) {
    F f;
    f.kind = c;
    f.sub.push_back(std::move(a));
    f.sub.push_back(std::move(b));
    return f;
  }

  F unary() {
    if (at_word("not")) {
      ++pos_;
      F f;
      f.kind = Connective::Not;
      f.sub.push_back(unary());
      return f;
    }
    if (at_word("exists") || at_word("forall")) {
      F f;
      f.kind = at_word("exists") ? Connective::Exists : Connective::Forall;
      ++pos_;
      if (peek().kind != Token::Kind::Ident || is_keyword(peek().text)) {
        fail("expected a variable after quantifier");
      }
      f.bound_name = peek().text;
      ++pos_;
      scope_.push_back(f.bound_name);
      f.sub.push_back(unary());
      scope_.pop_back();
      return f;
    }
    if (peek().kind == Token::Kind::LParen) {
      // "(" opens either a term of an atom or a parenthesized formula
      const std::size_t saved = pos_;
      try {
        F f;
        f.atom = atom();
        return f;
      } catch (const ParseError&) {
        pos_ = saved;
      }
      ++pos_;
      F f = implication();
      expect(Token::Kind::RParen, "')'");
      return f;
    }
    F f;
    f.atom = atom();
    return f;
  }

  Variable variable(const char* free_prefix) {
    const Token& t = peek();
    if (t.kind != Token::Kind::Ident || is_keyword(t.text)) fail("expected a term, found '" + t.text + "'");
    Variable v;
    v.name = t.text;
    for (std::size_t d = 0; d < scope_.size(); ++d) {
      if (scope_[scope_.size() - 1 - d] == t.text) {
        v.bound = true;
        v.index = d;
        ++pos_;
        return v;
      }
    }
    const std::string prefix(free_prefix);
    const bool digits = t.text.size() > prefix.size() &&
                        t.text.find_first_not_of("0123456789", prefix.size()) == std::string::npos;
    if (t.text.compare(0, prefix.size(), prefix) != 0 || !digits ||
        (t.text.size() > prefix.size() + 1 && t.text[prefix.size()] == '0')) {
      fail("unbound variable '" + t.text + "' (free variables are " + prefix + "0, " + prefix + "1, ...)");
    }
    if (t.text.size() - prefix.size() > 6) fail("variable index too large");
    v.index = std::stoul(t.text.substr(prefix.size()));
    ++pos_;
    return v;
  }

  // ring terms
  RingTerm ring_sum() {
    RingTerm t = ring_product();
    while (peek().kind == Token::Kind::Plus || peek().kind == Token::Kind::Minus) {
      const auto k = peek().kind == Token::Kind::Plus ? RingTerm::Kind::Add : RingTerm::Kind::Sub;
      ++pos_;
      RingTerm n;
      n.kind = k;
      n.args.push_back(std::move(t));
      n.args.push_back(ring_product());
      t = std::move(n);
    }
    return t;
  }

  RingTerm ring_product() {
    RingTerm t = ring_unary();
    while (peek().kind == Token::Kind::Star) {
      ++pos_;
      RingTerm n;
      n.kind = RingTerm::Kind::Mul;
      n.args.push_back(std::move(t));
      n.args.push_back(ring_unary());
      t = std::move(n);
    }
    return t;
  }

  RingTerm ring_unary() {
    if (peek().kind == Token::Kind::Minus) {
      ++pos_;
      RingTerm n;
      n.kind = RingTerm::Kind::Neg;
      n.args.push_back(ring_unary());
      return n;
    }
    RingTerm t;
    switch (peek().kind) {
      case Token::Kind::Zero:
        ++pos_;
        t.kind = RingTerm::Kind::Zero;
        return t;
      case Token::Kind::One:
        ++pos_;
        t.kind = RingTerm::Kind::One;
        return t;
      case Token::Kind::LParen: {
        ++pos_;
        t = ring_sum();
        expect(Token::Kind::RParen, "')'");
        return t;
      }
      default:
        t.kind = RingTerm::Kind::Var;
        t.var = variable("w");
        return t;
    }
  }

  // Boolean terms
  BooleTerm boole_join() {
    BooleTerm t = boole_meet();
    while (peek().kind == Token::Kind::Bar) {
      ++pos_;
      BooleTerm n;
      n.kind = BooleTerm::Kind::Join;
      n.args.push_back(std::move(t));
      n.args.push_back(boole_meet());
      t = std::move(n);
    }
    return t;
  }

  BooleTerm boole_meet() {
    BooleTerm t = boole_unary();
    while (peek().kind == Token::Kind::Amp) {
      ++pos_;
      BooleTerm n;
      n.kind = BooleTerm::Kind::Meet;
      n.args.push_back(std::move(t));
      n.args.push_back(boole_unary());
      t = std::move(n);
    }
    return t;
  }

  BooleTerm boole_unary() {
    if (peek().kind == Token::Kind::Tilde) {
      ++pos_;
      BooleTerm n;
      n.kind = BooleTerm::Kind::Complement;
      n.args.push_back(boole_unary());
      return n;
    }
    BooleTerm t;
    switch (peek().kind) {
      case Token::Kind::Zero:
        ++pos_;
        t.kind = BooleTerm::Kind::Zero;
        return t;
      case Token::Kind::One:
        ++pos_;
        t.kind = BooleTerm::Kind::One;
        return t;
      case Token::Kind::LParen: {
        ++pos_;
        t = boole_join();
        expect(Token::Kind::RParen, "')'");
        return t;
      }
      default:
        t.kind = BooleTerm::Kind::Var;
        t.var = variable("v");
        return t;
    }
  }

  AtomT atom() {
    if constexpr (std::is_same_v<AtomT, RingAtom>) {
      RingAtom a;
      a.lhs = ring_sum();
      expect(Token::Kind::Eq, "'='");
      a.rhs = ring_sum();
      return a;
    } else {
      BooleAtom a;
      if (at_word("Fin")) {
        ++pos_;
        expect(Token::Kind::LParen, "'(' after Fin");
        a.kind = BooleAtom::Kind::Fin;
        a.lhs = boole_join();
        expect(Token::Kind::RParen, "')'");
        return a;
      }
      a.lhs = boole_join();
      if (peek().kind == Token::Kind::Eq) {
        a.kind = BooleAtom::Kind::Equal;
      } else if (at_word("sub")) {
        a.kind = BooleAtom::Kind::Subset;
      } else {
        fail("expected '=' or 'sub', found '" + peek().text + "'");
      }
      ++pos_;
      a.rhs = boole_join();
      return a;
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::vector<std::string> scope_;
};

}  // namespace

RingFormula parse_ring_formula(std::string_view text) { return Parser<RingAtom>(text).parse(); }

BooleFormula parse_boole_formula(std::string_view text) { return Parser<BooleAtom>(text).parse(); }

}  // namespace adelic::fv
