#include "adelic/real_roots.hpp"

#include "adelic/errors.hpp"

#include <vector>

namespace adelic {

namespace {

using QPoly = std::vector<mpq_class>;

void trim(QPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

QPoly to_q(const IntPoly& f) {
  QPoly r;
  for (const auto& c : f.coefficients()) r.emplace_back(c);
  return r;
}

int deg(const QPoly& a) { return static_cast<int>(a.size()) - 1; }

QPoly rem(QPoly a, const QPoly& b) {
  const int db = deg(b);
  for (int k = deg(a); k >= db; --k) {
    if (a[k] == 0) continue;
    mpq_class factor = a[k] / b[db];
    for (int i = 0; i <= db; ++i) a[k - db + i] -= factor * b[i];
  }
  a.resize(std::min<std::size_t>(a.size(), static_cast<std::size_t>(db)));
  trim(a);
  return a;
}

mpq_class resultant_q(QPoly a, QPoly b) {
  mpq_class sign = 1;
  if (deg(a) < deg(b)) {
    if ((deg(a) % 2 == 1) && (deg(b) % 2 == 1)) sign = -sign;
    std::swap(a, b);
  }
  mpq_class acc = 1;
  for (;;) {
    const int m = deg(a), n = deg(b);
    if (n == 0) {
      mpq_class p = 1;
      for (int i = 0; i < m; ++i) p *= b[0];
      return sign * acc * p;
    }
    QPoly r = rem(a, b);
    if (r.empty()) return 0;
    if ((m % 2 == 1) && (n % 2 == 1)) sign = -sign;
    for (int i = 0; i < m - deg(r); ++i) acc *= b[n];
    a = std::move(b);
    b = std::move(r);
  }
}

int sign(const mpq_class& v) { return sgn(v); }

}  // namespace

mpz_class resultant(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) throw PreconditionError("resultant of the zero polynomial");
  mpq_class r = resultant_q(to_q(a), to_q(b));
  r.canonicalize();
  return r.get_num();
}

mpz_class discriminant(const IntPoly& f) {
  if (f.degree() < 1) throw PreconditionError("discriminant requires degree >= 1");
  const long n = f.degree();
  mpz_class r = resultant(f, f.derivative());
  mpz_class d = r / f.leading();
  if ((n * (n - 1) / 2) % 2 == 1) d = -d;
  return d;
}

bool has_repeated_factor(const IntPoly& f) {
  if (f.degree() < 1) return false;
  QPoly a = to_q(f), b = to_q(f.derivative());
  while (!b.empty()) {
    QPoly r = rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return deg(a) > 0;
}

int sturm_real_roots(const IntPoly& f) {
  if (f.is_zero()) throw PreconditionError("sturm_real_roots: zero polynomial");
  if (f.degree() == 0) return 0;
  std::vector<QPoly> chain{to_q(f), to_q(f.derivative())};
  for (;;) {
    QPoly r = rem(chain[chain.size() - 2], chain.back());
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    chain.push_back(std::move(r));
  }
  if (deg(chain.back()) > 0) throw PreconditionError("sturm_real_roots: input is not squarefree");
  auto variations = [&chain](bool at_minus_infinity) {
    int count = 0, last = 0;
    for (const auto& p : chain) {
      int s = sign(p.back());
      if (at_minus_infinity && deg(p) % 2 == 1) s = -s;
      if (s == 0) continue;
      if (last != 0 && s != last) ++count;
      last = s;
    }
    return count;
  };
  return variations(true) - variations(false);
}

}  // namespace adelic
