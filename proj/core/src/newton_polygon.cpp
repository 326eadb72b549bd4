#include "adelic/newton_polygon.hpp"

#include "adelic/errors.hpp"
#include "adelic/primes.hpp"

#include <numeric>

namespace adelic {

std::vector<NewtonSegment> lower_hull(const std::vector<std::optional<long>>& valuations,
                                      long precision) {
  if (valuations.empty()) throw PreconditionError("lower_hull: no points");
  if (!valuations.front() || !valuations.back()) {
    throw InsufficientPrecision("endpoint valuation not certified at precision " +
                                std::to_string(precision));
  }
  struct Point {
    long x, y;
  };
  std::vector<Point> hull;
  for (long i = 0; i < static_cast<long>(valuations.size()); ++i) {
    if (!valuations[i]) continue;
    Point pt{i, *valuations[i]};
    while (hull.size() >= 2) {
      const Point& o = hull[hull.size() - 2];
      const Point& a = hull.back();
      long cross = (a.x - o.x) * (pt.y - o.y) - (a.y - o.y) * (pt.x - o.x);
      if (cross > 0) break;
      hull.pop_back();
    }
    hull.push_back(pt);
  }

  // An unknown coefficient is >= precision; it cannot dent the hull when the
  // hull already lies at or below precision there.
  std::size_t seg = 0;
  for (long i = 0; i < static_cast<long>(valuations.size()); ++i) {
    while (seg + 1 < hull.size() && hull[seg + 1].x < i) ++seg;
    if (valuations[i]) continue;
    const Point& a = hull[seg];
    const Point& b = hull[seg + 1];
    // height(i) = a.y + (i - a.x)(b.y - a.y)/(b.x - a.x) <= precision
    if (a.y * (b.x - a.x) + (i - a.x) * (b.y - a.y) > precision * (b.x - a.x)) {
      throw InsufficientPrecision("coefficient " + std::to_string(i) +
                                  " may lie below the Newton polygon at precision " +
                                  std::to_string(precision));
    }
  }

  std::vector<NewtonSegment> segments;
  for (std::size_t k = 0; k + 1 < hull.size(); ++k) {
    long run = hull[k + 1].x - hull[k].x;
    long drop = hull[k].y - hull[k + 1].y;
    long g = std::gcd(run, drop < 0 ? -drop : drop);
    segments.push_back({hull[k].x, hull[k].y, run, drop / g, run / g});
  }
  return segments;
}

std::vector<NewtonSegment> newton_polygon(const ModPoly& f_local, const mpz_class& p) {
  if (f_local.is_zero()) throw PreconditionError("newton_polygon: zero polynomial");
  unsigned m = p_valuation(f_local.modulus(), p);
  mpz_class pm;
  mpz_pow_ui(pm.get_mpz_t(), p.get_mpz_t(), m);
  if (m == 0 || pm != f_local.modulus()) {
    throw ModulusError("newton_polygon: modulus " + f_local.modulus().get_str() +
                       " is not a power of " + p.get_str());
  }
  std::vector<std::optional<long>> vals;
  for (const auto& c : f_local.coefficients()) {
    if (c == 0) {
      vals.emplace_back(std::nullopt);
    } else {
      vals.emplace_back(static_cast<long>(p_valuation(c, p)));
    }
  }
  return lower_hull(vals, static_cast<long>(m));
}

}  // namespace adelic
