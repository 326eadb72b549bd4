#include "adelic/adele_iso.hpp"

#include "adelic/errors.hpp"
#include "adelic/local_fields.hpp"
#include "adelic/primes.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace adelic {

const char* to_string(AdeleIsoVerdict::Kind kind) {
  switch (kind) {
    case AdeleIsoVerdict::Kind::NotIsomorphic:
      return "NotIsomorphic";
    case AdeleIsoVerdict::Kind::IsomorphicCertified:
      return "IsomorphicCertified";
    case AdeleIsoVerdict::Kind::IsomorphicModuloAssumption:
      return "IsomorphicModuloAssumption";
    case AdeleIsoVerdict::Kind::Undetermined:
      return "Undetermined";
  }
  return "?";
}

namespace {

enum class Edge { Isomorphic, Different, Unknown };

std::string signature_string(const Signature& s) {
  return "(" + std::to_string(s.real_count) + "," + std::to_string(s.complex_count) + ")";
}

// Kuhn's augmenting paths over the allowed edges; returns match_of_right.
std::vector<int> bipartite_match(const std::vector<std::vector<Edge>>& edges,
                                 const std::function<bool(Edge)>& allowed,
                                 std::vector<int> match_right) {
  const std::size_t n = edges.size();
  std::vector<int> match_left(n, -1);
  for (std::size_t r = 0; r < n; ++r) {
    if (match_right[r] >= 0) match_left[match_right[r]] = static_cast<int>(r);
  }
  std::vector<bool> visited;
  std::function<bool(std::size_t)> augment = [&](std::size_t left) {
    for (std::size_t r = 0; r < n; ++r) {
      if (!allowed(edges[left][r]) || visited[r]) continue;
      visited[r] = true;
      if (match_right[r] < 0 || augment(static_cast<std::size_t>(match_right[r]))) {
        match_right[r] = static_cast<int>(left);
        match_left[left] = static_cast<int>(r);
        return true;
      }
    }
    return false;
  };
  for (std::size_t left = 0; left < n; ++left) {
    if (match_left[left] >= 0) continue;
    visited.assign(n, false);
    augment(left);
  }
  return match_right;
}

Edge compare_completions(const mpz_class& p, const LocalPrime& a, const LocalPrime& b, int s,
                         std::uint64_t cap) {
  auto ra = residue_ring_construct(p, a.e, a.f, a.eisenstein, s);
  auto rb = residue_ring_construct(p, b.e, b.f, b.eisenstein, s);
  if (!std::holds_alternative<ResidueRing>(ra) || !std::holds_alternative<ResidueRing>(rb)) {
    return Edge::Unknown;
  }
  try {
    return finite_ring_isomorphic(std::get<ResidueRing>(ra), std::get<ResidueRing>(rb), cap)
               ? Edge::Isomorphic
               : Edge::Different;
  } catch (const CapExceeded&) {
    return Edge::Unknown;
  }
}

}  // namespace

AdeleIsoVerdict adele_iso_verdict(const NumberField& k, const NumberField& l, std::int64_t bound,
                                  long precision, std::uint64_t ring_order_cap) {
  AdeleIsoVerdict v;
  v.bound = bound;

  const ArithEquivVerdict equiv = arithmetic_equiv(k, l, bound);
  v.excluded_primes = equiv.excluded_primes;
  if (equiv.kind == ArithEquivVerdict::Kind::NotEquivalent) {
    v.kind = AdeleIsoVerdict::Kind::NotIsomorphic;
    v.witness = equiv.witness;
    v.reason = "splitting types differ at " + std::to_string(*equiv.witness) + ": " +
               equiv.type_k.to_string() + " vs " + equiv.type_l.to_string();
    return v;
  }

  const Signature sk = signature(k);
  const Signature sl = signature(l);
  if (sk != sl) {
    v.kind = AdeleIsoVerdict::Kind::NotIsomorphic;
    v.reason = "signature " + signature_string(sk) + " vs " + signature_string(sl);
    return v;
  }

  std::set<mpz_class> bad;
  for (const auto& q : prime_divisors(k.poly_disc())) bad.insert(q);
  for (const auto& q : prime_divisors(l.poly_disc())) bad.insert(q);

  bool all_certified = true;
  for (const mpz_class& p : bad) {
    const int max_degree = std::max(k.degree(), l.degree());
    const unsigned lift = static_cast<unsigned>(keating_bound(p, max_degree)) + 2;
    const auto lk = local_primes(k, p, precision, lift);
    const auto ll = local_primes(l, p, precision, lift);
    if (!lk || !ll) {
      v.kind = AdeleIsoVerdict::Kind::Undetermined;
      v.reason = "decomposition at " + p.get_str() + " is Undetermined for " +
                 (!lk ? k.display_name() : l.display_name());
      v.matching.clear();
      v.unmatched.clear();
      return v;
    }

    std::map<std::pair<int, int>, std::pair<std::vector<LocalPrime>, std::vector<LocalPrime>>> groups;
    for (const auto& lp : *lk) groups[{lp.e, lp.f}].first.push_back(lp);
    for (const auto& lp : *ll) groups[{lp.e, lp.f}].second.push_back(lp);

    for (const auto& [ef, sides] : groups) {
      const auto& [left, right] = sides;
      if (left.size() != right.size()) {
        v.kind = AdeleIsoVerdict::Kind::NotIsomorphic;
        v.reason = "local degrees (e,f) differ at " + p.get_str();
        v.matching.clear();
        v.unmatched.clear();
        return v;
      }
      const int s = keating_bound(p, ef.first);
      const std::size_t n = left.size();
      std::vector<std::vector<Edge>> edges(n, std::vector<Edge>(n));
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          edges[i][j] = compare_completions(p, left[i], right[j], s, ring_order_cap);
        }
      }
      std::vector<int> match = bipartite_match(
          edges, [](Edge e) { return e == Edge::Isomorphic; }, std::vector<int>(n, -1));
      match = bipartite_match(
          edges, [](Edge e) { return e != Edge::Different; }, std::move(match));
      if (std::count(match.begin(), match.end(), -1) > 0) {
        v.kind = AdeleIsoVerdict::Kind::NotIsomorphic;
        v.reason = "no bijection of completions with (e,f) = (" + std::to_string(ef.first) + "," +
                   std::to_string(ef.second) + ") at " + p.get_str() +
                   ": residue rings O/pi^" + std::to_string(s) + " differ";
        v.matching.clear();
        v.unmatched.clear();
        return v;
      }
      for (std::size_t r = 0; r < n; ++r) {
        const std::size_t i = static_cast<std::size_t>(match[r]);
        LocalMatch m{{p, left[i].e, left[i].f}, {p, right[r].e, right[r].f},
                     edges[i][r] == Edge::Isomorphic, s};
        if (m.certified) {
          v.matching.push_back(m);
        } else {
          all_certified = false;
          v.unmatched.push_back(m);
        }
      }
    }
  }

  if (all_certified) {
    v.kind = AdeleIsoVerdict::Kind::IsomorphicCertified;
    v.reason = "completions matched and certified at every bad prime";
  } else {
    v.kind = AdeleIsoVerdict::Kind::IsomorphicModuloAssumption;
    v.reason = "some completions matched on (e,f) only";
    v.assumption_note = kLocalFieldAssumption;
  }
  return v;
}

}  // namespace adelic
