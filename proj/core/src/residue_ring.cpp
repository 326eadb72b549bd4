#include "adelic/residue_ring.hpp"

#include "adelic/errors.hpp"
#include "adelic/factor_modp.hpp"
#include "adelic/primes.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace adelic {

namespace {

using i64 = std::int64_t;
__extension__ typedef __int128 i128;

constexpr i64 kMaxModulus = i64{1} << 62;

i64 mulmod(i64 a, i64 b, i64 m) { return static_cast<i64>(static_cast<i128>(a) * b % m); }

i64 addmod(i64 a, i64 b, i64 m) {
  i64 r = a + b;  // a, b < 2^62
  return r >= m ? r - m : r;
}

i64 normalize(i64 a, i64 m) {
  a %= m;
  return a < 0 ? a + m : a;
}

i64 to_residue(const mpz_class& c, i64 m) {
  mpz_class r = c % m;
  if (r < 0) r += m;
  return r.get_si();
}

int ceil_div(int a, int b) { return a <= 0 ? 0 : (a + b - 1) / b; }

// checked p^k, nullopt beyond kMaxModulus
std::optional<i64> small_power(i64 p, int k) {
  i64 r = 1;
  for (int i = 0; i < k; ++i) {
    if (r > kMaxModulus / p) return std::nullopt;
    r *= p;
  }
  return r;
}

}  // namespace

const char* to_string(ResidueShape shape) {
  switch (shape) {
    case ResidueShape::Unramified:
      return "unramified";
    case ResidueShape::TotallyRamified:
      return "totally-ramified";
    case ResidueShape::Mixed:
      return "mixed";
  }
  return "?";
}

ResidueRing::ResidueRing(const mpz_class& p, int e, int f, int s, IntPoly unramified_modulus,
                         IntPoly eisenstein)
    : p_(p), e_(e), f_(f), s_(s), phi_(std::move(unramified_modulus)),
      eis_(std::move(eisenstein)) {
  if (e < 1 || f < 1 || s < 1) throw PreconditionError("ResidueRing: e, f, s must be positive");
  if (!p.fits_slong_p() || p >= kMaxModulus || !is_prime(p)) {
    throw PreconditionError("ResidueRing: p must be a prime below 2^62");
  }
  if (phi_.degree() != f || !phi_.is_monic() || !is_irreducible_modp(ModPoly(phi_, p))) {
    throw PreconditionError("ResidueRing: unramified modulus must be monic irreducible of degree f");
  }
  if (eis_.degree() != e || !eis_.is_monic()) {
    throw PreconditionError("ResidueRing: Eisenstein polynomial must be monic of degree e");
  }
  for (int i = 0; i < e; ++i) {
    if (eis_[i] % p != 0) throw PreconditionError("ResidueRing: polynomial is not Eisenstein");
  }
  if (eis_[0] % (p * p) == 0) throw PreconditionError("ResidueRing: polynomial is not Eisenstein");

  const i64 ps = p.get_si();
  auto wm = small_power(ps, ceil_div(s, e));
  if (!wm) throw PreconditionError("ResidueRing: characteristic exceeds 2^62");
  work_mod_ = *wm;
  for (int i = 0; i < e; ++i) coord_mod_.push_back(*small_power(ps, ceil_div(s - i, e)));
  for (int j = 0; j < f; ++j) phi_low_.push_back(to_residue(phi_[j], work_mod_));
  for (int i = 0; i < e; ++i) eis_low_.push_back(to_residue(eis_[i], work_mod_));
  mpz_pow_ui(order_.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(f) * s);
  characteristic_ = work_mod_;
}

ResidueShape ResidueRing::shape() const noexcept {
  if (e_ == 1) return ResidueShape::Unramified;
  if (f_ == 1) return ResidueShape::TotallyRamified;
  return ResidueShape::Mixed;
}

ResidueRing::Element ResidueRing::zero() const { return Element(rank(), 0); }

ResidueRing::Element ResidueRing::one() const { return from_integer(1); }

ResidueRing::Element ResidueRing::from_integer(i64 n) const {
  Element r = zero();
  r[0] = normalize(n, coord_mod_[0]);
  return r;
}

ResidueRing::Element ResidueRing::y() const {
  if (f_ == 1) return from_integer(work_mod_ - phi_low_[0]);
  Element r = zero();
  r[1] = 1 % coord_mod_[0];
  return r;
}

ResidueRing::Element ResidueRing::pi() const {
  if (e_ == 1) return from_integer(work_mod_ - eis_low_[0]);
  Element r = zero();
  r[f_] = 1 % coord_mod_[1];
  return r;
}

ResidueRing::Element ResidueRing::add(const Element& a, const Element& b) const {
  Element r(rank());
  for (int k = 0; k < rank(); ++k) r[k] = addmod(a[k], b[k], coord_mod_[k / f_]);
  return r;
}

ResidueRing::Element ResidueRing::neg(const Element& a) const {
  Element r(rank());
  for (int k = 0; k < rank(); ++k) r[k] = a[k] == 0 ? 0 : coord_mod_[k / f_] - a[k];
  return r;
}

ResidueRing::Element ResidueRing::sub(const Element& a, const Element& b) const {
  return add(a, neg(b));
}

ResidueRing::Element ResidueRing::scale(const Element& a, i64 n) const {
  Element r(rank());
  for (int k = 0; k < rank(); ++k) {
    const i64 m = coord_mod_[k / f_];
    r[k] = mulmod(a[k], normalize(n, m), m);
  }
  return r;
}

ResidueRing::Element ResidueRing::mul(const Element& a, const Element& b) const {
  const i64 m = work_mod_;
  const int f = f_;
  const int e = e_;
  // product over W = (Z/m)[y]/(phi), block by block
  std::vector<i64> acc(static_cast<std::size_t>(2 * e - 1) * f, 0);
  std::vector<i64> w(2 * f - 1);
  for (int i1 = 0; i1 < e; ++i1) {
    const i64* u = a.data() + i1 * f;
    if (std::all_of(u, u + f, [](i64 v) { return v == 0; })) continue;
    for (int i2 = 0; i2 < e; ++i2) {
      const i64* v = b.data() + i2 * f;
      if (std::all_of(v, v + f, [](i64 x) { return x == 0; })) continue;
      std::fill(w.begin(), w.end(), 0);
      for (int j1 = 0; j1 < f; ++j1) {
        if (u[j1] == 0) continue;
        for (int j2 = 0; j2 < f; ++j2) w[j1 + j2] = addmod(w[j1 + j2], mulmod(u[j1], v[j2], m), m);
      }
      for (int d = 2 * f - 2; d >= f; --d) {
        const i64 c = w[d];
        if (c == 0) continue;
        for (int j = 0; j < f; ++j) {
          w[d - f + j] = addmod(w[d - f + j], mulmod(m - phi_low_[j], c, m), m);
        }
      }
      i64* out = acc.data() + (i1 + i2) * f;
      for (int j = 0; j < f; ++j) out[j] = addmod(out[j], w[j], m);
    }
  }
  // pi^e = -(E - pi^e)
  for (int d = 2 * e - 2; d >= e; --d) {
    for (int j = 0; j < f; ++j) {
      const i64 c = acc[d * f + j];
      if (c == 0) continue;
      acc[d * f + j] = 0;
      for (int i = 0; i < e; ++i) {
        i64& t = acc[(d - e + i) * f + j];
        t = addmod(t, mulmod(m - eis_low_[i], c, m), m);
      }
    }
  }
  Element r(rank());
  for (int k = 0; k < rank(); ++k) r[k] = acc[k] % coord_mod_[k / f];
  return r;
}

ResidueRing::Element ResidueRing::pow(Element a, unsigned k) const {
  Element r = one();
  while (k) {
    if (k & 1) r = mul(r, a);
    k >>= 1;
    if (k) a = mul(a, a);
  }
  return r;
}

bool ResidueRing::is_zero(const Element& a) const {
  return std::all_of(a.begin(), a.end(), [](i64 v) { return v == 0; });
}

ResidueRing::Element ResidueRing::element_at(std::uint64_t index) const {
  if (!order_.fits_ulong_p()) throw CapExceeded("ResidueRing: order does not fit 64 bits");
  Element r(rank());
  for (int k = 0; k < rank(); ++k) {
    const auto m = static_cast<std::uint64_t>(coord_mod_[k / f_]);
    r[k] = static_cast<i64>(index % m);
    index /= m;
  }
  return r;
}

std::uint64_t ResidueRing::index_of(const Element& a) const {
  if (!order_.fits_ulong_p()) throw CapExceeded("ResidueRing: order does not fit 64 bits");
  std::uint64_t index = 0;
  for (int k = rank(); k-- > 0;) {
    index = index * static_cast<std::uint64_t>(coord_mod_[k / f_]) + static_cast<std::uint64_t>(a[k]);
  }
  return index;
}

std::string ResidueRing::describe() const {
  std::ostringstream out;
  out << "O/pi^" << s_ << " at p=" << p_.get_str() << " (e=" << e_ << ", f=" << f_ << ")";
  if (f_ > 1) out << " y: " << phi_.to_string();
  if (e_ > 1) out << " pi: " << eis_.to_string();
  return out.str();
}

std::variant<ResidueRing, Undetermined> residue_ring_construct(
    const mpz_class& p, int e, int f, const std::optional<ModPoly>& local_factor, int s) {
  if (e < 1 || f < 1 || s < 1) {
    throw PreconditionError("residue_ring_construct: e, f, s must be positive");
  }
  if (!is_prime(p)) throw PreconditionError("residue_ring_construct: p must be prime");
  if (!p.fits_slong_p() || p >= kMaxModulus || !small_power(p.get_si(), ceil_div(s, e))) {
    return Undetermined{"modulus-overflow", "p^ceil(s/e) exceeds 2^62"};
  }
  if (e == 1) {
    IntPoly phi = irreducible_modp(p, f).lift();
    return ResidueRing(p, 1, f, s, std::move(phi), IntPoly{0, 1} - IntPoly::constant(p));
  }
  if (f > 1) {
    return Undetermined{"unsupported-shape",
                        "ramified with residue degree > 1 (e=" + std::to_string(e) +
                            ", f=" + std::to_string(f) + ")"};
  }
  if (!local_factor) {
    return Undetermined{"no-local-factor", "no Eisenstein presentation available"};
  }
  const ModPoly& E = *local_factor;
  const mpz_class need = *small_power(p.get_si(), ceil_div(s, e)) * p;
  if (E.modulus() % need != 0) {
    return Undetermined{"insufficient-precision",
                        "local factor known modulo " + E.modulus().get_str()};
  }
  if (E.degree() != e || !E.is_monic()) {
    return Undetermined{"not-eisenstein", "local factor has wrong degree"};
  }
  const auto c = E.coefficients();
  for (int i = 0; i < e; ++i) {
    if (c[i] % p != 0) return Undetermined{"not-eisenstein", E.to_string()};
  }
  if (c[0] % (p * p) == 0) return Undetermined{"not-eisenstein", E.to_string()};
  return ResidueRing(p, e, 1, s, IntPoly{0, 1}, E.lift());
}

mpz_class nilradical_size(const ResidueRing& ring) {
  mpz_class q;
  mpz_pow_ui(q.get_mpz_t(), ring.p().get_mpz_t(), static_cast<unsigned long>(ring.f()));
  return ring.order() / q;
}

int valuation(const ResidueRing& ring, const ResidueRing::Element& a) {
  const i64 p = ring.p().get_si();
  int best = ring.s();
  for (int i = 0; i < ring.e(); ++i) {
    for (int j = 0; j < ring.f(); ++j) {
      i64 c = a[i * ring.f() + j];
      if (c == 0) continue;
      int v = 0;
      while (c % p == 0) {
        c /= p;
        ++v;
      }
      best = std::min(best, ring.e() * v + i);
    }
  }
  return best;
}

namespace {

std::vector<i64> additive_type(const ResidueRing& r) {
  std::vector<i64> t;
  for (int i = 0; i < r.e(); ++i) {
    if (r.coordinate_modulus(i) > 1) t.insert(t.end(), r.f(), r.coordinate_modulus(i));
  }
  std::sort(t.begin(), t.end());
  return t;
}

// X^deg + sum low[i] X^i in ring b
ResidueRing::Element evaluate_monic(const ResidueRing& b, const std::vector<i64>& low,
                                    const ResidueRing::Element& x) {
  ResidueRing::Element r = b.one();
  for (std::size_t i = low.size(); i-- > 0;) r = b.add(b.mul(r, x), b.from_integer(low[i]));
  return r;
}

class Homomorphism {
 public:
  Homomorphism(const ResidueRing& a, const ResidueRing& b, const ResidueRing::Element& y,
               const ResidueRing::Element& pi)
      : a_(a), b_(b) {
    ResidueRing::Element pi_power = b.one();
    for (int i = 0; i < a.e(); ++i) {
      ResidueRing::Element term = pi_power;
      for (int j = 0; j < a.f(); ++j) {
        basis_.push_back(term);
        term = b.mul(term, y);
      }
      pi_power = b.mul(pi_power, pi);
    }
  }

  ResidueRing::Element operator()(const ResidueRing::Element& x) const {
    ResidueRing::Element r = b_.zero();
    for (int k = 0; k < a_.rank(); ++k) {
      if (x[k]) r = b_.add(r, b_.scale(basis_[k], x[k]));
    }
    return r;
  }

  bool well_defined() const {
    for (int k = 0; k < a_.rank(); ++k) {
      if (!b_.is_zero(b_.scale(basis_[k], a_.coordinate_modulus(k / a_.f())))) return false;
    }
    return true;
  }

  bool multiplicative() const {
    for (int k = 0; k < a_.rank(); ++k) {
      for (int l = k; l < a_.rank(); ++l) {
        ResidueRing::Element ek = a_.zero(), el = a_.zero();
        ek[k] = 1 % a_.coordinate_modulus(k / a_.f());
        el[l] = 1 % a_.coordinate_modulus(l / a_.f());
        if ((*this)(a_.mul(ek, el)) != b_.mul(basis_[k], basis_[l])) return false;
      }
    }
    return (*this)(a_.one()) == b_.one();
  }

  // odometer over a, images accumulated incrementally
  bool bijective() const {
    const std::uint64_t n = a_.order().get_ui();
    std::vector<bool> seen(n, false);
    ResidueRing::Element x = a_.zero();
    ResidueRing::Element image = b_.zero();
    for (std::uint64_t count = 0; count < n; ++count) {
      const std::uint64_t idx = b_.index_of(image);
      if (seen[idx]) return false;
      seen[idx] = true;
      for (int k = 0; k < a_.rank(); ++k) {
        const i64 m = a_.coordinate_modulus(k / a_.f());
        if (m == 1) continue;
        image = b_.add(image, basis_[k]);
        if (++x[k] < m) break;
        x[k] = 0;
      }
    }
    return true;
  }

 private:
  const ResidueRing& a_;
  const ResidueRing& b_;
  std::vector<ResidueRing::Element> basis_;
};

}  // namespace

bool finite_ring_isomorphic(const ResidueRing& a, const ResidueRing& b, std::uint64_t cap) {
  if (a.p() != b.p() || a.order() != b.order() || a.characteristic() != b.characteristic()) {
    return false;
  }
  if (additive_type(a) != additive_type(b)) return false;
  if (nilradical_size(a) != nilradical_size(b)) return false;
  if (!a.order().fits_ulong_p() || a.order().get_ui() > cap) {
    throw CapExceeded("finite_ring_isomorphic: order " + a.order().get_str() + " exceeds cap " +
                      std::to_string(cap));
  }
  const std::uint64_t n = b.order().get_ui();

  // images of y: roots of phi_a; images of pi: roots of E_a generating the maximal ideal
  std::vector<ResidueRing::Element> ys;
  if (a.f() == 1) {
    ys.push_back(b.from_integer(a.y()[0]));
  } else {
    for (std::uint64_t i = 0; i < n; ++i) {
      auto c = b.element_at(i);
      if (b.is_zero(evaluate_monic(b, a.phi_low(), c))) {
        ys.push_back(std::move(c));
        break;
      }
    }
  }
  if (ys.empty()) return false;

  auto try_pi = [&](const ResidueRing::Element& pi) {
    Homomorphism h(a, b, ys.front(), pi);
    return h.well_defined() && h.multiplicative() && h.bijective();
  };

  if (a.e() == 1) return try_pi(b.from_integer(a.pi()[0]));
  for (std::uint64_t i = 0; i < n; ++i) {
    const auto c = b.element_at(i);
    if (valuation(b, c) != 1) continue;
    if (!b.is_zero(evaluate_monic(b, a.eisenstein_low(), c))) continue;
    if (!b.is_zero(b.pow(c, static_cast<unsigned>(a.s())))) continue;
    // any such pair generates b, so the first candidate decides
    return try_pi(c);
  }
  return false;
}

}  // namespace adelic
