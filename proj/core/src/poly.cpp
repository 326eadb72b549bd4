#include "adelic/poly.hpp"

#include "adelic/errors.hpp"
#include "adelic/primes.hpp"
#include "poly_internal.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace adelic {

namespace detail {

bool is_prime_modulus(const mpz_class& m) {
  thread_local std::map<mpz_class, bool> memo;
  if (auto it = memo.find(m); it != memo.end()) return it->second;
  if (memo.size() > 4096) memo.clear();
  bool prime = is_prime(m);
  memo.emplace(m, prime);
  return prime;
}

}  // namespace detail

namespace {

const mpz_class& zero_coefficient() {
  static const mpz_class zero = 0;
  return zero;
}

// Shared rendering for both polynomial kinds; coefficients as given.
std::string render(std::span<const mpz_class> c) {
  if (c.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = c.size(); k-- > 0;) {
    const mpz_class& a = c[k];
    if (a == 0) continue;
    mpz_class mag = abs(a);
    if (first) {
      if (a < 0) out << "-";
    } else {
      out << (a < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      out << mag.get_str();
      continue;
    }
    if (mag != 1) out << mag.get_str() << "*";
    out << "x";
    if (k > 1) out << "^" << k;
  }
  return out.str();
}

}  // namespace

// ---------------------------------------------------------------- IntPoly

IntPoly::IntPoly(std::vector<mpz_class> coefficients) : c_(std::move(coefficients)) {
  normalize();
}

IntPoly::IntPoly(std::initializer_list<long> coefficients) {
  c_.reserve(coefficients.size());
  for (long v : coefficients) c_.emplace_back(v);
  normalize();
}

IntPoly IntPoly::constant(const mpz_class& c) { return IntPoly(std::vector<mpz_class>{c}); }

IntPoly IntPoly::monomial(const mpz_class& c, std::size_t degree) {
  std::vector<mpz_class> v(degree + 1, 0);
  v[degree] = c;
  return IntPoly(std::move(v));
}

void IntPoly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

bool IntPoly::is_monic() const { return !c_.empty() && c_.back() == 1; }

const mpz_class& IntPoly::operator[](std::size_t i) const {
  return i < c_.size() ? c_[i] : zero_coefficient();
}

const mpz_class& IntPoly::leading() const {
  return c_.empty() ? zero_coefficient() : c_.back();
}

IntPoly IntPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<mpz_class> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<unsigned long>(i);
  return IntPoly(std::move(d));
}

mpz_class IntPoly::evaluate(const mpz_class& at) const {
  mpz_class acc = 0;
  for (std::size_t k = c_.size(); k-- > 0;) acc = acc * at + c_[k];
  return acc;
}

IntPoly IntPoly::taylor_shift(const mpz_class& shift) const {
  // Horner with polynomial accumulator: acc = acc * (x + shift) + c_k.
  std::vector<mpz_class> acc;
  for (std::size_t k = c_.size(); k-- > 0;) {
    acc.push_back(0);
    for (std::size_t i = acc.size() - 1; i > 0; --i) acc[i] = acc[i - 1] + acc[i] * shift;
    acc[0] = acc[0] * shift + c_[k];
  }
  return IntPoly(std::move(acc));
}

mpz_class IntPoly::content() const {
  mpz_class g = 0;
  for (const auto& a : c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
  return g;
}

IntPoly& IntPoly::operator+=(const IntPoly& other) {
  if (other.c_.size() > c_.size()) c_.resize(other.c_.size(), 0);
  for (std::size_t i = 0; i < other.c_.size(); ++i) c_[i] += other.c_[i];
  normalize();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& other) {
  if (other.c_.size() > c_.size()) c_.resize(other.c_.size(), 0);
  for (std::size_t i = 0; i < other.c_.size(); ++i) c_[i] -= other.c_[i];
  normalize();
  return *this;
}

IntPoly& IntPoly::operator*=(const IntPoly& other) {
  if (c_.empty() || other.c_.empty()) {
    c_.clear();
    return *this;
  }
  std::vector<mpz_class> r(c_.size() + other.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < other.c_.size(); ++j) r[i + j] += c_[i] * other.c_[j];
  }
  c_ = std::move(r);
  normalize();
  return *this;
}

IntPoly& IntPoly::operator*=(const mpz_class& scalar) {
  for (auto& a : c_) a *= scalar;
  normalize();
  return *this;
}

IntPoly operator-(IntPoly a) {
  for (auto& v : a.c_) v = -v;
  return a;
}

std::string IntPoly::to_string() const { return render(c_); }

std::pair<IntPoly, IntPoly> divmod(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw DivisionError("division by the zero polynomial");
  if (!b.is_monic()) throw DivisionError("integer polynomial division requires a monic divisor");
  std::vector<mpz_class> r(a.coefficients().begin(), a.coefficients().end());
  const int db = b.degree();
  if (a.degree() < db) return {IntPoly{}, a};
  std::vector<mpz_class> q(a.degree() - db + 1, 0);
  for (int k = a.degree(); k >= db; --k) {
    mpz_class lead = r[k];
    if (lead == 0) continue;
    q[k - db] = lead;
    for (int i = 0; i <= db; ++i) r[k - db + i] -= lead * b[i];
  }
  return {IntPoly(std::move(q)), IntPoly(std::move(r))};
}

// ---------------------------------------------------------------- ModPoly

ModPoly::ModPoly(mpz_class modulus, std::vector<mpz_class> coefficients)
    : m_(std::move(modulus)), c_(std::move(coefficients)) {
  if (m_ < 1) throw ModulusError("modulus must be positive");
  normalize();
}

ModPoly::ModPoly(const IntPoly& lift, mpz_class modulus)
    : ModPoly(std::move(modulus),
              std::vector<mpz_class>(lift.coefficients().begin(), lift.coefficients().end())) {}

ModPoly ModPoly::constant(const mpz_class& c, const mpz_class& modulus) {
  return ModPoly(modulus, {c});
}

ModPoly ModPoly::monomial(const mpz_class& c, std::size_t degree, const mpz_class& modulus) {
  std::vector<mpz_class> v(degree + 1, 0);
  v[degree] = c;
  return ModPoly(modulus, std::move(v));
}

void ModPoly::normalize() {
  for (auto& a : c_) {
    if (a < 0 || a >= m_) a = detail::mod(a, m_);
  }
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

void ModPoly::check_same_modulus(const ModPoly& other) const {
  if (m_ != other.m_) {
    throw ModulusError("modulus mismatch: " + m_.get_str() + " vs " + other.m_.get_str());
  }
}

bool ModPoly::is_one() const { return c_.size() == 1 && c_[0] == 1; }

bool ModPoly::is_monic() const { return !c_.empty() && c_.back() == 1; }

const mpz_class& ModPoly::operator[](std::size_t i) const {
  return i < c_.size() ? c_[i] : zero_coefficient();
}

const mpz_class& ModPoly::leading() const {
  return c_.empty() ? zero_coefficient() : c_.back();
}

IntPoly ModPoly::lift() const { return IntPoly(c_); }

ModPoly ModPoly::derivative() const {
  if (c_.size() <= 1) return ModPoly(m_, {});
  std::vector<mpz_class> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<unsigned long>(i);
  return ModPoly(m_, std::move(d));
}

mpz_class ModPoly::evaluate(const mpz_class& at) const {
  mpz_class acc = 0;
  for (std::size_t k = c_.size(); k-- > 0;) acc = detail::mod(acc * at + c_[k], m_);
  return acc;
}

ModPoly ModPoly::reduce(const mpz_class& divisor_modulus) const {
  if (divisor_modulus < 1 || m_ % divisor_modulus != 0) {
    throw ModulusError(divisor_modulus.get_str() + " does not divide " + m_.get_str());
  }
  return ModPoly(divisor_modulus, c_);
}

ModPoly& ModPoly::operator+=(const ModPoly& other) {
  check_same_modulus(other);
  if (other.c_.size() > c_.size()) c_.resize(other.c_.size(), 0);
  for (std::size_t i = 0; i < other.c_.size(); ++i) {
    c_[i] += other.c_[i];
    if (c_[i] >= m_) c_[i] -= m_;
  }
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
  return *this;
}

ModPoly& ModPoly::operator-=(const ModPoly& other) {
  check_same_modulus(other);
  if (other.c_.size() > c_.size()) c_.resize(other.c_.size(), 0);
  for (std::size_t i = 0; i < other.c_.size(); ++i) {
    c_[i] -= other.c_[i];
    if (c_[i] < 0) c_[i] += m_;
  }
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
  return *this;
}

ModPoly& ModPoly::operator*=(const ModPoly& other) {
  check_same_modulus(other);
  if (c_.empty() || other.c_.empty()) {
    c_.clear();
    return *this;
  }
  std::vector<mpz_class> r(c_.size() + other.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < other.c_.size(); ++j) r[i + j] += c_[i] * other.c_[j];
  }
  c_ = std::move(r);
  normalize();
  return *this;
}

ModPoly& ModPoly::operator*=(const mpz_class& scalar) {
  for (auto& a : c_) a *= scalar;
  normalize();
  return *this;
}

ModPoly operator-(ModPoly a) {
  for (auto& v : a.c_) {
    if (v != 0) v = a.m_ - v;
  }
  return a;
}

std::string ModPoly::to_string() const { return render(c_) + " (mod " + m_.get_str() + ")"; }

std::pair<ModPoly, ModPoly> divmod(const ModPoly& a, const ModPoly& b) {
  if (a.modulus() != b.modulus()) {
    throw ModulusError("modulus mismatch: " + a.modulus().get_str() + " vs " +
                       b.modulus().get_str());
  }
  if (b.is_zero()) throw DivisionError("division by the zero polynomial");
  const mpz_class& m = a.modulus();
  mpz_class inv_lead = 1;
  if (b.leading() != 1) {
    if (!detail::is_prime_modulus(m)) {
      throw DivisionError("division by a non-monic polynomial modulo composite " + m.get_str());
    }
    mpz_invert(inv_lead.get_mpz_t(), b.leading().get_mpz_t(), m.get_mpz_t());
  }
  const int db = b.degree();
  if (a.degree() < db) return {ModPoly(m, {}), a};
  std::vector<mpz_class> r(a.coefficients().begin(), a.coefficients().end());
  std::vector<mpz_class> q(a.degree() - db + 1, 0);
  for (int k = a.degree(); k >= db; --k) {
    r[k] %= m;
    if (r[k] == 0) continue;
    mpz_class lead = detail::mod(r[k] * inv_lead, m);
    q[k - db] = lead;
    for (int i = 0; i <= db; ++i) r[k - db + i] -= lead * b[i];
  }
  r.resize(db);
  return {ModPoly(m, std::move(q)), ModPoly(m, std::move(r))};
}

ModPoly operator%(const ModPoly& a, const ModPoly& b) { return divmod(a, b).second; }
ModPoly operator/(const ModPoly& a, const ModPoly& b) { return divmod(a, b).first; }

bool canonical_less(const ModPoly& a, const ModPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int k = a.degree(); k >= 0; --k) {
    if (a[k] != b[k]) return a[k] < b[k];
  }
  return false;
}

}  // namespace adelic
