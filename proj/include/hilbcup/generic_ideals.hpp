#pragma once

#include "hilbcup/orders.hpp"
#include "hilbcup/partition.hpp"

namespace hilbcup {

/// Thrown when a weight does not single out a unique generic staircase.
class NonGenericWeight : public InputError {
public:
  NonGenericWeight(const std::string& what, Point2 a, Point2 b)
      : InputError(what), tie_{a, b} {}
  const std::pair<Point2, Point2>& tie() const noexcept { return tie_; }

private:
  std::pair<Point2, Point2> tie_;
};

/// Generic staircase of size n for a weight with both entries negative:
/// the unique Gamma with <u, a - b> < 0 whenever a lies outside Gamma and b
/// inside. Computed as the n points with the largest pairing and then
/// re-verified against the defining inequality. Throws NonGenericWeight when
/// the n-th and (n+1)-th best points tie, since Gamma is then not unique.
StandardSet generic_staircase(Weight2 u, Int n);

/// Same staircase read off the interleaved column sequence governed by the
/// integer m with m - 1 < r < m, where r is the ratio of the larger to the
/// smaller absolute weight entry. Rows of the sequence collect the points
/// with m * x + y (or x + m * y) constant.
///
/// The sequence approximates the slope r by m. When r is far below m the
/// rounding can misplace points, and the result then differs from
/// `generic_staircase`; see the tests for a concrete instance.
StandardSet generic_staircase_explicit(Weight2 u, Int n);

/// Generic punctual staircase for a weight with both entries positive and
/// distinct: the vertical strip [1, ..., 1] when v.x < v.y, else [n].
StandardSet generic_punctual(Weight2 v, Int n);

}  // namespace hilbcup
