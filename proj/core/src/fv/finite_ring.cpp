#include "adelic/fv/finite_ring.hpp"

#include "adelic/errors.hpp"
#include "adelic/factor_modp.hpp"
#include "adelic/residue_ring.hpp"

#include <algorithm>
#include <numeric>

namespace adelic::fv {

namespace {

using Element = FiniteRing::Element;

void check_order(std::uint64_t n, const char* what) {
  if (n < 1) throw PreconditionError(std::string(what) + ": ring must be nonempty");
  if (n > FiniteRing::kMaxOrder) {
    throw CapExceeded(std::string(what) + ": order " + std::to_string(n) + " exceeds " +
                      std::to_string(FiniteRing::kMaxOrder));
  }
}

}  // namespace

FiniteRing::FiniteRing(std::string name, std::uint32_t n, std::vector<Element> add,
                       std::vector<Element> mul, Element zero, Element one)
    : name_(std::move(name)), n_(n), add_(std::move(add)), mul_(std::move(mul)), neg_(n),
      zero_(zero), one_(one) {
  for (Element a = 0; a < n_; ++a) {
    for (Element b = 0; b < n_; ++b) {
      if (add_[a * n_ + b] == zero_) {
        neg_[a] = b;
        break;
      }
    }
  }
}

FiniteRing FiniteRing::integers_mod(std::uint32_t m) {
  check_order(m, "integers_mod");
  std::vector<Element> add(std::size_t{m} * m), mul(std::size_t{m} * m);
  for (Element a = 0; a < m; ++a) {
    for (Element b = 0; b < m; ++b) {
      add[a * m + b] = (a + b) % m;
      mul[a * m + b] = static_cast<Element>(std::uint64_t{a} * b % m);
    }
  }
  return FiniteRing("Z/" + std::to_string(m), m, std::move(add), std::move(mul), 0, m == 1 ? 0 : 1);
}

FiniteRing FiniteRing::galois_field(std::uint32_t p, int f) {
  if (f < 1) throw PreconditionError("galois_field: degree must be positive");
  std::uint64_t q = 1;
  for (int i = 0; i < f; ++i) {
    q *= p;
    check_order(q, "galois_field");
  }
  const ModPoly phi = irreducible_modp(mpz_class(static_cast<unsigned long>(p)), f);
  std::vector<std::uint32_t> low(f);
  for (int j = 0; j < f; ++j) low[j] = static_cast<std::uint32_t>(phi.coefficients()[j].get_ui());

  // element k <-> coefficient digits of k in base p
  auto digits = [&](Element k) {
    std::vector<std::uint32_t> d(f);
    for (int j = 0; j < f; ++j, k /= p) d[j] = k % p;
    return d;
  };
  auto encode = [&](const std::vector<std::uint32_t>& d) {
    Element k = 0;
    for (int j = f; j-- > 0;) k = k * p + d[j];
    return k;
  };
  auto times_y = [&](std::vector<std::uint32_t> d) {
    const std::uint32_t top = d[f - 1];
    for (int j = f - 1; j > 0; --j) d[j] = d[j - 1];
    d[0] = 0;
    for (int j = 0; j < f; ++j) d[j] = static_cast<std::uint32_t>((d[j] + std::uint64_t{p - low[j]} * top) % p);
    return d;
  };

  const auto n = static_cast<std::uint32_t>(q);
  std::vector<Element> add(std::size_t{n} * n), mul(std::size_t{n} * n, 0);
  for (Element a = 0; a < n; ++a) {
    const auto da = digits(a);
    for (Element b = 0; b < n; ++b) {
      const auto db = digits(b);
      std::vector<std::uint32_t> s(f);
      for (int j = 0; j < f; ++j) s[j] = (da[j] + db[j]) % p;
      add[a * n + b] = encode(s);
    }
  }
  // multiplication through discrete logarithms of a primitive element
  std::vector<Element> power_of(n - 1);
  std::vector<std::uint32_t> log_of(n, 0);
  for (Element g = 1; g < n; ++g) {
    std::vector<std::uint32_t> cur = digits(1 % n);
    std::vector<std::uint32_t> dg = digits(g);
    bool primitive = true;
    std::vector<bool> seen(n, false);
    for (std::uint32_t e = 0; e + 1 < n; ++e) {
      const Element k = encode(cur);
      if (seen[k]) {
        primitive = false;
        break;
      }
      seen[k] = true;
      power_of[e] = k;
      log_of[k] = e;
      // cur *= g
      std::vector<std::uint32_t> acc(f, 0), shifted = cur;
      for (int j = 0; j < f; ++j) {
        for (int t = 0; t < f; ++t) acc[t] = static_cast<std::uint32_t>((acc[t] + std::uint64_t{dg[j]} * shifted[t]) % p);
        shifted = times_y(shifted);
      }
      cur = acc;
    }
    if (primitive) break;
  }
  for (Element a = 1; a < n; ++a) {
    for (Element b = 1; b < n; ++b) {
      mul[a * n + b] = power_of[(log_of[a] + log_of[b]) % (n - 1)];
    }
  }
  const std::string name = f == 1 ? "GF(" + std::to_string(p) + ")"
                                  : "GF(" + std::to_string(p) + "^" + std::to_string(f) + ")";
  return FiniteRing(name, n, std::move(add), std::move(mul), 0, 1);
}

FiniteRing FiniteRing::from_residue_ring(const ResidueRing& ring) {
  if (!ring.order().fits_ulong_p()) throw CapExceeded("from_residue_ring: order too large");
  check_order(ring.order().get_ui(), "from_residue_ring");
  const auto n = static_cast<std::uint32_t>(ring.order().get_ui());
  std::vector<ResidueRing::Element> elems;
  elems.reserve(n);
  for (Element k = 0; k < n; ++k) elems.push_back(ring.element_at(k));
  std::vector<Element> add(std::size_t{n} * n), mul(std::size_t{n} * n);
  for (Element a = 0; a < n; ++a) {
    for (Element b = a; b < n; ++b) {
      const auto s = static_cast<Element>(ring.index_of(ring.add(elems[a], elems[b])));
      const auto m = static_cast<Element>(ring.index_of(ring.mul(elems[a], elems[b])));
      add[a * n + b] = add[b * n + a] = s;
      mul[a * n + b] = mul[b * n + a] = m;
    }
  }
  return FiniteRing(ring.describe(), n, std::move(add), std::move(mul),
                    static_cast<Element>(ring.index_of(ring.zero())),
                    static_cast<Element>(ring.index_of(ring.one())));
}

FiniteRing FiniteRing::from_tables(std::string name, std::uint32_t size, std::vector<Element> add,
                                   std::vector<Element> mul, Element zero, Element one) {
  check_order(size, "from_tables");
  const std::size_t n = size;
  if (add.size() != n * n || mul.size() != n * n) {
    throw PreconditionError("from_tables: tables must have size^2 entries");
  }
  if (zero >= size || one >= size) throw PreconditionError("from_tables: identity out of range");
  for (std::size_t i = 0; i < n * n; ++i) {
    if (add[i] >= size || mul[i] >= size) throw PreconditionError("from_tables: table entry out of range");
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (add[a * n + zero] != a) throw PreconditionError("from_tables: zero is not an additive identity");
    if (mul[a * n + one] != a) throw PreconditionError("from_tables: one is not a multiplicative identity");
    bool has_neg = false;
    for (std::size_t b = 0; b < n; ++b) {
      if (add[a * n + b] != add[b * n + a] || mul[a * n + b] != mul[b * n + a]) {
        throw PreconditionError("from_tables: operations must be commutative");
      }
      has_neg = has_neg || add[a * n + b] == zero;
    }
    if (!has_neg) throw PreconditionError("from_tables: missing additive inverse");
  }
  // associativity and distributivity are cubic; checked for small tables
  if (n <= 64) {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        for (std::size_t c = 0; c < n; ++c) {
          if (add[add[a * n + b] * n + c] != add[a * n + add[b * n + c]] ||
              mul[mul[a * n + b] * n + c] != mul[a * n + mul[b * n + c]] ||
              mul[a * n + add[b * n + c]] != add[mul[a * n + b] * n + mul[a * n + c]]) {
            throw PreconditionError("from_tables: ring axioms fail");
          }
        }
      }
    }
  }
  return FiniteRing(std::move(name), size, std::move(add), std::move(mul), zero, one);
}

FiniteRing FiniteRing::relabeled(std::span<const Element> permutation) const {
  if (permutation.size() != n_) throw PreconditionError("relabeled: permutation has wrong length");
  std::vector<bool> hit(n_, false);
  for (Element x : permutation) {
    if (x >= n_ || hit[x]) throw PreconditionError("relabeled: not a permutation");
    hit[x] = true;
  }
  std::vector<Element> add(add_.size()), mul(mul_.size());
  for (Element a = 0; a < n_; ++a) {
    for (Element b = 0; b < n_; ++b) {
      add[permutation[a] * n_ + permutation[b]] = permutation[this->add(a, b)];
      mul[permutation[a] * n_ + permutation[b]] = permutation[this->mul(a, b)];
    }
  }
  return FiniteRing(name_ + " (relabeled)", n_, std::move(add), std::move(mul),
                    permutation[zero_], permutation[one_]);
}

namespace {

std::uint32_t additive_order(const FiniteRing& r, Element x) {
  std::uint32_t k = 1;
  for (Element acc = x; acc != r.zero(); acc = r.add(acc, x)) ++k;
  return k;
}

bool is_nilpotent(const FiniteRing& r, Element x) {
  Element acc = x;
  for (std::uint32_t i = 0; i <= r.size(); ++i) {
    if (acc == r.zero()) return true;
    acc = r.mul(acc, x);
  }
  return false;
}

struct Profile {
  std::vector<std::uint32_t> additive_orders;
  std::size_t nilpotents = 0;
  std::size_t units = 0;
  bool operator==(const Profile&) const = default;
};

Profile profile(const FiniteRing& r) {
  Profile p;
  for (Element x = 0; x < r.size(); ++x) {
    p.additive_orders.push_back(additive_order(r, x));
    if (is_nilpotent(r, x)) ++p.nilpotents;
    for (Element y = 0; y < r.size(); ++y) {
      if (r.mul(x, y) == r.one()) {
        ++p.units;
        break;
      }
    }
  }
  std::sort(p.additive_orders.begin(), p.additive_orders.end());
  return p;
}

constexpr Element kUnset = ~Element{0};

// Extends the partial map by closing under + and *; false on conflict.
bool close(const FiniteRing& a, const FiniteRing& b, std::vector<Element>& map,
           std::vector<Element>& inverse, std::vector<Element>& mapped, std::size_t from) {
  auto assign = [&](Element x, Element y) {
    if (map[x] != kUnset) return map[x] == y;
    if (inverse[y] != kUnset) return false;
    map[x] = y;
    inverse[y] = x;
    mapped.push_back(x);
    return true;
  };
  for (std::size_t i = from; i < mapped.size(); ++i) {
    const Element x = mapped[i];
    for (std::size_t j = 0; j <= i; ++j) {
      const Element z = mapped[j];
      if (!assign(a.add(x, z), b.add(map[x], map[z]))) return false;
      if (!assign(a.mul(x, z), b.mul(map[x], map[z]))) return false;
    }
  }
  return true;
}

bool search(const FiniteRing& a, const FiniteRing& b, const std::vector<Element>& gens,
            std::size_t g, std::vector<Element>& map, std::vector<Element>& inverse,
            std::vector<Element>& mapped, const std::vector<std::uint32_t>& order_a,
            const std::vector<std::uint32_t>& order_b) {
  if (g == gens.size()) return mapped.size() == a.size();
  const Element x = gens[g];
  if (map[x] != kUnset) return search(a, b, gens, g + 1, map, inverse, mapped, order_a, order_b);
  for (Element y = 0; y < b.size(); ++y) {
    if (inverse[y] != kUnset || order_a[x] != order_b[y]) continue;
    auto map2 = map, inverse2 = inverse, mapped2 = mapped;
    const std::size_t from = mapped2.size();
    map2[x] = y;
    inverse2[y] = x;
    mapped2.push_back(x);
    if (!close(a, b, map2, inverse2, mapped2, from)) continue;
    if (search(a, b, gens, g + 1, map2, inverse2, mapped2, order_a, order_b)) {
      map = std::move(map2);
      inverse = std::move(inverse2);
      mapped = std::move(mapped2);
      return true;
    }
  }
  return false;
}

// elements reached from {0, 1} plus gens under + and *
std::vector<bool> generated(const FiniteRing& r, const std::vector<Element>& gens) {
  std::vector<bool> in(r.size(), false);
  std::vector<Element> list;
  auto add = [&](Element x) {
    if (!in[x]) {
      in[x] = true;
      list.push_back(x);
    }
  };
  add(r.zero());
  add(r.one());
  for (Element g : gens) add(g);
  for (std::size_t i = 0; i < list.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      add(r.add(list[i], list[j]));
      add(r.mul(list[i], list[j]));
    }
  }
  return in;
}

}  // namespace

std::optional<std::vector<Element>> find_isomorphism(const FiniteRing& a, const FiniteRing& b,
                                                     std::uint32_t cap) {
  if (a.size() > cap || b.size() > cap) {
    throw CapExceeded("find_isomorphism: order exceeds " + std::to_string(cap));
  }
  if (a.size() != b.size()) return std::nullopt;
  if (!(profile(a) == profile(b))) return std::nullopt;

  std::vector<Element> gens;
  for (auto in = generated(a, gens);;) {
    auto it = std::find(in.begin(), in.end(), false);
    if (it == in.end()) break;
    gens.push_back(static_cast<Element>(it - in.begin()));
    in = generated(a, gens);
  }

  std::vector<std::uint32_t> order_a(a.size()), order_b(b.size());
  for (Element x = 0; x < a.size(); ++x) order_a[x] = additive_order(a, x);
  for (Element y = 0; y < b.size(); ++y) order_b[y] = additive_order(b, y);

  std::vector<Element> map(a.size(), kUnset), inverse(b.size(), kUnset), mapped;
  map[a.zero()] = b.zero();
  inverse[b.zero()] = a.zero();
  mapped.push_back(a.zero());
  if (a.one() != a.zero()) {
    if (inverse[b.one()] != kUnset) return std::nullopt;
    map[a.one()] = b.one();
    inverse[b.one()] = a.one();
    mapped.push_back(a.one());
  } else if (b.one() != b.zero()) {
    return std::nullopt;
  }
  if (!close(a, b, map, inverse, mapped, 0)) return std::nullopt;
  if (!search(a, b, gens, 0, map, inverse, mapped, order_a, order_b)) return std::nullopt;
  return map;
}

}  // namespace adelic::fv
