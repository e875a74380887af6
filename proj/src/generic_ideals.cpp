#include "hilbcup/generic_ideals.hpp"

#include <algorithm>
#include <map>

namespace hilbcup {

namespace {

std::string point_text(Point2 p) {
  return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

std::string weight_text(Weight2 w) {
  return "(" + std::to_string(w.x) + "," + std::to_string(w.y) + ")";
}

void require_count(Int n) {
  if (n < 0) throw InputError("staircase size must be non-negative, got " + std::to_string(n));
}

// Assembles a staircase from a point set; throws InvariantError if the set is
// not downward closed.
StandardSet staircase_from_points(const std::vector<Point2>& points) {
  std::map<Int, std::vector<Int>> rows;
  for (const Point2& p : points) rows[p.y].push_back(p.x);
  std::vector<Int> parts;
  for (auto& [y, xs] : rows) {
    std::sort(xs.begin(), xs.end());
    const bool contiguous_row = y == static_cast<Int>(parts.size()) && xs.back() + 1 == static_cast<Int>(xs.size());
    if (!contiguous_row || (!parts.empty() && parts.back() < static_cast<Int>(xs.size()))) {
      throw InvariantError("selected points are not downward closed");
    }
    parts.push_back(static_cast<Int>(xs.size()));
  }
  return StandardSet::from_parts(std::move(parts));
}

}  // namespace

StandardSet generic_staircase(Weight2 u, Int n) {
  if (!(u.x < 0 && u.y < 0)) {
    throw InputError("weight " + weight_text(u) + " must have both entries negative");
  }
  require_count(n);
  if (n == 0) return {};

  // The region holds gamma and every outer corner of it, so the (n+1)-th
  // best point of the region is the best point outside gamma.
  std::vector<Point2> region = staircase_union(std::max<Int>(2 * n, 2));
  std::stable_sort(region.begin(), region.end(),
                   [&](Point2 a, Point2 b) { return pairing(u, a) > pairing(u, b); });
  if (pairing(u, region[n - 1]) == pairing(u, region[n])) {
    throw NonGenericWeight("weight " + weight_text(u) + " is not generic for n = " +
                               std::to_string(n) + ": " + point_text(region[n - 1]) + " and " +
                               point_text(region[n]) + " tie",
                           region[n - 1], region[n]);
  }
  const std::vector<Point2> chosen(region.begin(), region.begin() + n);
  StandardSet gamma = staircase_from_points(chosen);

  // Every boundary point of gamma lies in the region, so comparing the
  // weakest chosen point with the strongest rejected one settles the
  // defining inequality.
  const Int weakest_inside = pairing(u, chosen.back());
  for (auto it = region.begin() + n; it != region.end(); ++it) {
    if (gamma.contains(*it) || pairing(u, *it) >= weakest_inside) {
      throw InvariantError("top-n selection violates the generic staircase inequality at " +
                           point_text(*it));
    }
  }
  return gamma;
}

StandardSet generic_staircase_explicit(Weight2 u, Int n) {
  if (!(u.x < 0 && u.y < 0)) {
    throw InputError("weight " + weight_text(u) + " must have both entries negative");
  }
  require_count(n);
  if (u.x == u.y) {
    throw NonGenericWeight("weight " + weight_text(u) + " is not generic: (1,0) and (0,1) tie",
                           {1, 0}, {0, 1});
  }
  if (u.x > u.y) return generic_staircase_explicit({u.y, u.x}, n).transpose();

  // Here |u.x| > |u.y|, so the ratio u.x / u.y exceeds 1.
  if (u.x % u.y == 0) {
    throw NonGenericWeight("weight " + weight_text(u) + " has integral ratio " +
                               std::to_string(u.x / u.y),
                           {1, 0}, {0, u.x / u.y});
  }
  const Int m = u.x / u.y + 1;

  std::vector<Point2> points;
  for (Int row = 0; static_cast<Int>(points.size()) < n; ++row) {
    const Int k = row / m;
    const Int s = row % m;
    for (Int a = k; a >= 0 && static_cast<Int>(points.size()) < n; --a) {
      points.push_back({a, (k - a) * m + s});
    }
  }
  return staircase_from_points(points);
}

StandardSet generic_punctual(Weight2 v, Int n) {
  if (!(v.x > 0 && v.y > 0)) {
    throw InputError("weight " + weight_text(v) + " must have both entries positive");
  }
  if (v.x == v.y) {
    throw NonGenericWeight("weight " + weight_text(v) + " is not generic: (1,0) and (0,1) tie",
                           {1, 0}, {0, 1});
  }
  require_count(n);
  if (n == 0) return {};
  if (v.x < v.y) return StandardSet::from_parts(std::vector<Int>(static_cast<std::size_t>(n), 1));
  return StandardSet::from_parts({n});
}

}  // namespace hilbcup
