#include "adelic/errors.hpp"
#include "adelic/poly.hpp"

#include <cctype>

namespace adelic {

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  IntPoly parse() {
    skip_space();
    if (at_end()) fail("empty polynomial");
    IntPoly p = expression();
    skip_space();
    if (!at_end()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return p;
  }

 private:
  IntPoly expression() {
    IntPoly acc = term();
    for (;;) {
      skip_space();
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  IntPoly term() {
    IntPoly acc = unary();
    for (;;) {
      skip_space();
      if (!accept('*')) return acc;
      acc *= unary();
    }
  }

  IntPoly unary() {
    skip_space();
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  IntPoly power() {
    IntPoly base = primary();
    skip_space();
    if (!accept('^')) return base;
    skip_space();
    if (at_end() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      fail("exponent must be a nonnegative integer");
    }
    mpz_class e = integer();
    if (e > 4096) fail("exponent too large");
    IntPoly result = IntPoly::constant(1);
    for (unsigned long k = e.get_ui(); k > 0; --k) result *= base;
    return result;
  }

  IntPoly primary() {
    skip_space();
    if (at_end()) fail("unexpected end of input");
    char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      IntPoly v = IntPoly::constant(integer());
      if (!at_end() && (text_[pos_] == '.' || text_[pos_] == '/')) {
        fail("coefficients must be integers");
      }
      return v;
    }
    if (c == 'x') {
      ++pos_;
      if (!at_end() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        fail("unknown variable; only x is allowed");
      }
      return IntPoly::x();
    }
    if (c == '(') {
      ++pos_;
      IntPoly inner = expression();
      skip_space();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      fail("unknown variable; only x is allowed");
    }
    if (c == '.') fail("coefficients must be integers");
    fail(std::string("unexpected '") + c + "'");
  }

  mpz_class integer() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  bool accept(char c) {
    if (!at_end() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& message) const {
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError(message, line, column);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

IntPoly parse_poly(std::string_view text) { return PolyParser(text).parse(); }

}  // namespace adelic
