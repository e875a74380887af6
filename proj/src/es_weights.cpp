#include "hilbcup/es_weights.hpp"

#include <charconv>
#include <vector>

namespace hilbcup {

Weight3 Weight3::make(Int w0, Int w1, Int w2) {
  const Int sum = w0 + w1 + w2;
  if (sum != 0) {
    throw InputError("weight entries must sum to zero, got sum " + std::to_string(sum));
  }
  if (!(w0 < w1 && w1 < w2)) {
    throw InputError("weight entries must be strictly increasing, got (" + std::to_string(w0) +
                     "," + std::to_string(w1) + "," + std::to_string(w2) + ")");
  }
  return Weight3({w0, w1, w2});
}

Weight3 parse_weight3(std::string_view text) {
  std::vector<Int> values;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string_view token = text.substr(pos, comma - pos);
    Int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
      throw InputError("cannot parse weight '" + std::string(text) + "'");
    }
    values.push_back(value);
    pos = comma + 1;
  }
  if (values.size() != 3) {
    throw InputError("weight '" + std::string(text) + "' must have three entries");
  }
  return Weight3::make(values[0], values[1], values[2]);
}

bool validate_w(const Weight3& w, Int n) {
  return w.w0() - w.w2() < n * (w.w1() - w.w2()) && w.w0() - w.w1() < 0 && 0 < w.w2() - w.w1();
}

bool validate_wprime(const Weight3& w, Int n) {
  const Int rise = w.w1() - w.w0();
  return w.w0() - w.w1() < 0 && 0 < w.w2() - w.w1() && 0 < rise && rise < n * (w.w2() - w.w0());
}

Point3 embed(Chart chart, Int d, Point2 p) {
  const Int rest = d - p.x - p.y;
  if (p.x < 0 || p.y < 0 || rest < 0) {
    throw InputError("point (" + std::to_string(p.x) + "," + std::to_string(p.y) +
                     ") does not fit in degree " + std::to_string(d));
  }
  switch (chart) {
    case Chart::Plane: return {p.x, p.y, rest};
    case Chart::Line: return {p.x, rest, p.y};
    case Chart::Point: return {rest, p.x, p.y};
  }
  throw InvariantError("unknown chart");
}

Int simplex_pairing(const Weight3& w, Int d) {
  // Sum over (a, b) with the c-column 0 <= c < len added in closed form.
  Int total = 0;
  for (Int a = 0; a < d; ++a) {
    for (Int b = 0; a + b < d; ++b) {
      const Int len = d - a - b;
      total += len * (w.w0() * a + w.w1() * b) + w.w2() * (len * (len - 1) / 2);
    }
  }
  return total;
}

Int phi(const Weight3& w, Int d, const Triple& t) {
  if (d < t.total()) {
    throw InputError("degree " + std::to_string(d) + " is below the number of points " +
                     std::to_string(t.total()));
  }
  const Int simplex = simplex_pairing(w, d);
  // The simplex is symmetric under permuting coordinates and w sums to zero.
  if (simplex != 0) throw InvariantError("simplex pairing " + std::to_string(simplex) + " is not zero");
  Int value = -simplex;
  const auto subtract = [&](Chart chart, const StandardSet& s) {
    for (const Point2& p : s.cells()) value -= pairing(w, embed(chart, d, p));
  };
  subtract(Chart::Plane, t.plane);
  subtract(Chart::Line, t.line);
  subtract(Chart::Point, t.point);
  return value;
}

int asymptotic_sign(const Weight3& w, const Triple& a, const Triple& b) {
  if (a.total() != b.total()) {
    throw InputError("cannot compare triples of totals " + std::to_string(a.total()) + " and " +
                     std::to_string(b.total()));
  }
  const Int lead = w.w0() * (a.point.size() - b.plane.size()) +
                   w.w1() * (a.line.size() - b.line.size()) +
                   w.w2() * (a.plane.size() - b.point.size());
  return (lead > 0) - (lead < 0);
}

}  // namespace hilbcup
