#pragma once

#include <string>
#include <vector>

#include "hilbcup/mask.hpp"
#include "hilbcup/orders.hpp"

namespace hilbcup {

/// A torus-fixed point together with the weight of the ample line bundle
/// at that point.
struct FixedPoint {
  std::string id;
  Int phi = 0;
  friend bool operator==(const FixedPoint&, const FixedPoint&) = default;
};

class FixedPointTable {
public:
  FixedPointTable() = default;
  /// Throws InputError on duplicate ids.
  explicit FixedPointTable(std::vector<FixedPoint> entries);

  const std::vector<FixedPoint>& entries() const noexcept { return entries_; }
  /// Throws InputError for an unknown id.
  const FixedPoint& find(const std::string& id) const;

private:
  std::vector<FixedPoint> entries_;
};

/// Closures of the cells flowing into v and out of w can meet only if
/// v == w or phi(v) < phi(w).
bool intersection_allowed(const FixedPoint& v, const FixedPoint& w);
bool intersection_allowed(const FixedPointTable& table, const std::string& v,
                          const std::string& w);

/// Entries sorted by increasing phi and the matrix of `intersection_allowed`
/// in that order.
struct IntersectionMask {
  std::vector<FixedPoint> order;
  BoolMatrix allowed;
};
IntersectionMask intersection_mask(const FixedPointTable& table);

/// Convex lattice polygon with counter-clockwise, pairwise distinct vertices
/// and no three consecutive vertices collinear.
class LatticePolygon {
public:
  static LatticePolygon make(std::vector<Point2> vertices);

  const std::vector<Point2>& vertices() const noexcept { return vertices_; }
  std::size_t index_of(Point2 v) const;

  /// Every vertex cone is spanned by a lattice basis.
  bool is_smooth() const;

private:
  explicit LatticePolygon(std::vector<Point2> v) : vertices_(std::move(v)) {}
  std::vector<Point2> vertices_;
};

/// "x,y" label of a vertex, as used for fixed point ids.
std::string vertex_id(Point2 v);

/// phi(v) = -<lambda, v> for every vertex. Throws InputError if lambda does
/// not separate the vertices.
FixedPointTable toric_phi(const LatticePolygon& polygon, Weight2 lambda);

/// First lattice points along the two edges at a vertex, split by the sign
/// of <lambda, a - v>: `up` holds the positive ones (free coordinates of the
/// cell flowing into v), `down` the negative ones.
struct CellSigns {
  std::vector<Point2> up;
  std::vector<Point2> down;
};
CellSigns toric_cell_signs(const LatticePolygon& polygon, Point2 vertex, Weight2 lambda);

/// First lattice point on the segment from `from` towards `to`.
Point2 first_lattice_step(Point2 from, Point2 to);

}  // namespace hilbcup
