#pragma once

#include <array>
#include <string>
#include <string_view>

#include "hilbcup/triples.hpp"

namespace hilbcup {

/// Torus weight (w0, w1, w2) with w0 + w1 + w2 = 0 and w0 < w1 < w2.
class Weight3 {
public:
  /// Throws InputError when the sum is non-zero (the message carries the
  /// sum) or the entries are not strictly increasing.
  static Weight3 make(Int w0, Int w1, Int w2);

  Int w0() const noexcept { return w_[0]; }
  Int w1() const noexcept { return w_[1]; }
  Int w2() const noexcept { return w_[2]; }
  Int operator[](std::size_t i) const { return w_.at(i); }

  friend auto operator<=>(const Weight3&, const Weight3&) = default;

private:
  explicit Weight3(std::array<Int, 3> w) : w_(w) {}
  std::array<Int, 3> w_{};
};

Weight3 parse_weight3(std::string_view text);

/// Admissibility of the weight whose sinks are the plane/line cells.
bool validate_w(const Weight3& w, Int n);
/// Admissibility of the weight whose sinks are the line/point cells.
bool validate_wprime(const Weight3& w, Int n);

struct Point3 {
  Int c0 = 0;
  Int c1 = 0;
  Int c2 = 0;
  friend auto operator<=>(const Point3&, const Point3&) = default;
};

inline Int pairing(const Weight3& w, const Point3& p) noexcept {
  return w.w0() * p.c0 + w.w1() * p.c1 + w.w2() * p.c2;
}

/// Which chart a staircase lives in: the point, the line or the plane.
enum class Chart { Point = 0, Line = 1, Plane = 2 };

/// Degree-d lift of a point of N^2 into the chart's face of the simplex
/// {|a| = d}:
///   Plane: (x, y, d - x - y), Line: (x, d - x - y, y), Point: (d - x - y, x, y).
Point3 embed(Chart chart, Int d, Point2 p);

/// Sum of <w, a> over the simplex {a in N^3 : |a| < d}, summed directly
/// rather than deduced from the symmetry that makes it vanish.
Int simplex_pairing(const Weight3& w, Int d);

/// Weight of the Pluecker line bundle at the fixed point labelled by t,
/// using the degree-d Grassmannian embedding (d >= total(t)).
Int phi(const Weight3& w, Int d, const Triple& t);

/// Sign of <w, (|point(a)| - |plane(b)|, |line(a)| - |line(b)|,
/// |plane(a)| - |point(b)|)>, the coefficient of d in
/// phi(w, d, iota(b)) - phi(w, d, a).
int asymptotic_sign(const Weight3& w, const Triple& a, const Triple& b);

}  // namespace hilbcup
