#include "adelic/number_field.hpp"

#include "adelic/errors.hpp"
#include "adelic/primes.hpp"
#include "adelic/real_roots.hpp"

#include <sstream>

namespace adelic {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  std::size_t e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

bool has_integer_root(const IntPoly& f) {
  const mpz_class& a0 = f[0];
  if (a0 == 0) return true;
  std::vector<mpz_class> divisors{1};
  for (auto& [p, k] : factor_integer(a0)) {
    std::size_t existing = divisors.size();
    mpz_class power = 1;
    for (unsigned i = 1; i <= k; ++i) {
      power *= p;
      for (std::size_t j = 0; j < existing; ++j) divisors.push_back(divisors[j] * power);
    }
  }
  for (const auto& d : divisors) {
    if (f.evaluate(d) == 0 || f.evaluate(-d) == 0) return true;
  }
  return false;
}

}  // namespace

NumberField::NumberField(IntPoly min_poly, std::string label)
    : min_poly_(std::move(min_poly)), label_(std::move(label)) {
  if (min_poly_.degree() < 1) throw PreconditionError("number field polynomial must have degree >= 1");
  if (!min_poly_.is_monic()) throw PreconditionError("number field polynomial must be monic");
  disc_ = discriminant(min_poly_);
  if (disc_ == 0) throw PreconditionError("polynomial " + min_poly_.to_string() + " is not squarefree");
  if (min_poly_.degree() > 1 && has_integer_root(min_poly_)) {
    throw PreconditionError("polynomial " + min_poly_.to_string() + " has an integer root");
  }
  std::ostringstream key;
  for (std::size_t i = 0; i < min_poly_.coefficients().size(); ++i) {
    if (i) key << ',';
    key << min_poly_[i].get_str();
  }
  key_ = key.str();
}

NumberField NumberField::from_text(std::string_view text) {
  std::string label;
  std::string poly_line;
  std::size_t poly_line_number = 0;
  std::size_t line_number = 0;
  std::istringstream in{std::string(text)};
  for (std::string line; std::getline(in, line);) {
    ++line_number;
    std::string t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    if (t.rfind("label:", 0) == 0) {
      label = trim(std::string_view(t).substr(6));
      continue;
    }
    if (!poly_line.empty()) throw ParseError("more than one polynomial line", line_number, 1);
    poly_line = t;
    poly_line_number = line_number;
  }
  if (poly_line.empty()) throw ParseError("no polynomial found", line_number + 1, 1);
  try {
    return NumberField(parse_poly(poly_line), label);
  } catch (const ParseError& e) {
    throw ParseError(e.message(), poly_line_number, e.column());
  }
}

std::string NumberField::display_name() const {
  return label_.empty() ? min_poly_.to_string() : label_;
}

}  // namespace adelic
