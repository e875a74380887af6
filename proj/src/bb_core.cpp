#include "hilbcup/bb_core.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace hilbcup {

FixedPointTable::FixedPointTable(std::vector<FixedPoint> entries) : entries_(std::move(entries)) {
  std::set<std::string> ids;
  for (const auto& e : entries_) {
    if (!ids.insert(e.id).second) throw InputError("duplicate fixed point id '" + e.id + "'");
  }
}

const FixedPoint& FixedPointTable::find(const std::string& id) const {
  const auto it = std::find_if(entries_.begin(), entries_.end(),
                               [&](const FixedPoint& e) { return e.id == id; });
  if (it == entries_.end()) throw InputError("unknown fixed point id '" + id + "'");
  return *it;
}

bool intersection_allowed(const FixedPoint& v, const FixedPoint& w) {
  return v.id == w.id || v.phi < w.phi;
}

bool intersection_allowed(const FixedPointTable& table, const std::string& v,
                          const std::string& w) {
  return intersection_allowed(table.find(v), table.find(w));
}

IntersectionMask intersection_mask(const FixedPointTable& table) {
  IntersectionMask mask{table.entries(), BoolMatrix(table.entries().size())};
  std::stable_sort(mask.order.begin(), mask.order.end(),
                   [](const FixedPoint& a, const FixedPoint& b) { return a.phi < b.phi; });
  for (std::size_t i = 0; i < mask.order.size(); ++i) {
    for (std::size_t j = 0; j < mask.order.size(); ++j) {
      mask.allowed.set(i, j, intersection_allowed(mask.order[i], mask.order[j]));
    }
  }
  return mask;
}

namespace {

Int cross(Point2 o, Point2 a, Point2 b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

}  // namespace

LatticePolygon LatticePolygon::make(std::vector<Point2> vertices) {
  const std::size_t count = vertices.size();
  if (count < 3) throw InputError("a polygon needs at least 3 vertices");
  if (std::set<Point2>(vertices.begin(), vertices.end()).size() != count) {
    throw InputError("polygon vertices must be distinct");
  }
  for (std::size_t i = 0; i < count; ++i) {
    const Point2 prev = vertices[(i + count - 1) % count];
    const Point2 next = vertices[(i + 1) % count];
    if (cross(prev, vertices[i], next) <= 0) {
      throw InputError("vertex " + vertex_id(vertices[i]) +
                       " breaks strict convexity or counter-clockwise orientation");
    }
  }
  // All left turns plus a single switch from upward to downward edges means
  // the boundary winds exactly once.
  std::size_t descents = 0;
  for (std::size_t i = 0; i < count; ++i) {
    const Point2 a = vertices[i], b = vertices[(i + 1) % count], c = vertices[(i + 2) % count];
    const bool up_ab = (b.y > a.y) || (b.y == a.y && b.x > a.x);
    const bool up_bc = (c.y > b.y) || (c.y == b.y && c.x > b.x);
    if (up_ab && !up_bc) ++descents;
  }
  if (descents != 1) {
    throw InputError("polygon vertices do not bound a convex region");
  }
  return LatticePolygon(std::move(vertices));
}

std::size_t LatticePolygon::index_of(Point2 v) const {
  const auto it = std::find(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end()) throw InputError(vertex_id(v) + " is not a vertex of the polygon");
  return static_cast<std::size_t>(it - vertices_.begin());
}

Point2 first_lattice_step(Point2 from, Point2 to) {
  const Int dx = to.x - from.x;
  const Int dy = to.y - from.y;
  const Int g = std::gcd(dx, dy);
  if (g == 0) throw InputError("edge endpoints coincide");
  return {from.x + dx / g, from.y + dy / g};
}

bool LatticePolygon::is_smooth() const {
  const std::size_t count = vertices_.size();
  for (std::size_t i = 0; i < count; ++i) {
    const Point2 v = vertices_[i];
    const Point2 a = first_lattice_step(v, vertices_[(i + 1) % count]);
    const Point2 b = first_lattice_step(v, vertices_[(i + count - 1) % count]);
    const Int det = cross(v, a, b);
    if (det != 1 && det != -1) return false;
  }
  return true;
}

std::string vertex_id(Point2 v) { return std::to_string(v.x) + "," + std::to_string(v.y); }

FixedPointTable toric_phi(const LatticePolygon& polygon, Weight2 lambda) {
  std::vector<FixedPoint> entries;
  for (const Point2& v : polygon.vertices()) {
    for (const FixedPoint& e : entries) {
      if (e.phi == -pairing(lambda, v)) {
        throw InputError("weight does not separate vertices " + e.id + " and " + vertex_id(v));
      }
    }
    entries.push_back({vertex_id(v), -pairing(lambda, v)});
  }
  return FixedPointTable(std::move(entries));
}

CellSigns toric_cell_signs(const LatticePolygon& polygon, Point2 vertex, Weight2 lambda) {
  toric_phi(polygon, lambda);
  const auto& vs = polygon.vertices();
  const std::size_t count = vs.size();
  const std::size_t i = polygon.index_of(vertex);
  CellSigns signs;
  for (const Point2 neighbour : {vs[(i + 1) % count], vs[(i + count - 1) % count]}) {
    const Point2 step = first_lattice_step(vertex, neighbour);
    const Int s = pairing(lambda, Point2{step.x - vertex.x, step.y - vertex.y});
    // Separation of the vertices forces s != 0.
    (s > 0 ? signs.up : signs.down).push_back(step);
  }
  return signs;
}

}  // namespace hilbcup
