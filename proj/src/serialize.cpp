#include "hilbcup/serialize.hpp"

#include <algorithm>
#include <sstream>

namespace hilbcup {

using nlohmann::json;

json to_json(const StandardSet& s) { return s.parts(); }

json to_json(const Triple& t) {
  return json{{"d2", to_json(t.plane)}, {"d1", to_json(t.line)}, {"d0", to_json(t.point)}};
}

Triple triple_from_json(const json& j) {
  try {
    return {StandardSet::from_parts(j.at("d2").get<std::vector<Int>>()),
            StandardSet::from_parts(j.at("d1").get<std::vector<Int>>()),
            StandardSet::from_parts(j.at("d0").get<std::vector<Int>>())};
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed triple JSON: ") + e.what());
  }
}

namespace {

std::string quoted(std::string_view s) { return "\"" + std::string(s) + "\""; }

}  // namespace

std::string to_dot(std::span<const std::string> labels, const CoverSet& edges,
                   const CoverSet& extra, std::string_view extra_order) {
  std::ostringstream out;
  out << "digraph {\n";
  for (const auto& label : labels) out << "  " << quoted(label) << ";\n";
  for (const auto& e : edges) {
    out << "  " << quoted(labels[e.from]) << " -> " << quoted(labels[e.to]) << ";\n";
  }
  for (const auto& e : extra) {
    out << "  " << quoted(labels[e.from]) << " -> " << quoted(labels[e.to]) << " [order="
        << quoted(extra_order) << "];\n";
  }
  out << "}\n";
  return out.str();
}

json to_json(std::span<const std::string> labels, const CoverSet& edges) {
  json out = json::array();
  for (const auto& e : edges) out.push_back({labels[e.from], labels[e.to]});
  return out;
}

json to_json(const PairingMask& mask) {
  json rows = json::array(), cols = json::array(), grid = json::array();
  for (const auto& t : mask.rows) rows.push_back(to_json(t));
  for (const auto& t : mask.cols) cols.push_back(to_json(t));
  for (std::size_t i = 0; i < mask.allowed.dim(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < mask.allowed.dim(); ++j) row.push_back(mask.allowed.at(i, j) ? 1 : 0);
    grid.push_back(std::move(row));
  }
  return json{{"n", mask.n},       {"k", mask.k},       {"lambda", {mask.lambda.x, mask.lambda.y}},
              {"rows", rows},      {"cols", cols},      {"allowed", grid}};
}

std::string to_csv(const PairingMask& mask) {
  std::ostringstream out;
  out << "\"\"";
  for (const auto& t : mask.cols) out << ',' << quoted(to_text(t));
  out << '\n';
  for (std::size_t i = 0; i < mask.rows.size(); ++i) {
    out << quoted(to_text(mask.rows[i]));
    for (std::size_t j = 0; j < mask.cols.size(); ++j) out << ',' << (mask.allowed.at(i, j) ? 1 : 0);
    out << '\n';
  }
  return out.str();
}

std::string to_ascii(const PairingMask& mask) {
  const auto shape = check_upper_triangular(mask.allowed);
  std::vector<bool> boundary_after(mask.rows.size(), false);
  std::size_t pos = 0;
  for (std::size_t size : shape.block_sizes) {
    pos += size;
    if (pos < boundary_after.size()) boundary_after[pos - 1] = true;
  }

  std::size_t width = 0;
  for (const auto& t : mask.rows) width = std::max(width, to_text(t).size());

  std::ostringstream out;
  for (std::size_t i = 0; i < mask.rows.size(); ++i) {
    const std::string label = to_text(mask.rows[i]);
    out << label << std::string(width - label.size(), ' ') << "  ";
    std::string line;
    for (std::size_t j = 0; j < mask.cols.size(); ++j) {
      line += mask.allowed.at(i, j) ? '1' : '.';
      if (boundary_after[j]) line += '|';
    }
    out << line << '\n';
    if (boundary_after[i]) {
      std::string rule;
      for (char c : line) rule += c == '|' ? '+' : '-';
      out << std::string(width + 2, ' ') << rule << '\n';
    }
  }
  return out.str();
}

json to_json(const FixedPointTable& table) {
  json out = json::array();
  for (const auto& e : table.entries()) out.push_back({{"id", e.id}, {"phi", e.phi}});
  return out;
}

json to_json(const IntersectionMask& mask) {
  json order = json::array(), grid = json::array();
  for (const auto& e : mask.order) order.push_back(e.id);
  for (std::size_t i = 0; i < mask.allowed.dim(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < mask.allowed.dim(); ++j) row.push_back(mask.allowed.at(i, j) ? 1 : 0);
    grid.push_back(std::move(row));
  }
  return json{{"order", order}, {"allowed", grid}};
}

LatticePolygon polygon_from_json(const json& j) {
  if (!j.is_array()) throw InputError("polygon JSON must be an array of [x, y] pairs");
  std::vector<Point2> vertices;
  for (const auto& v : j) {
    if (!v.is_array() || v.size() != 2 || !v[0].is_number_integer() || !v[1].is_number_integer()) {
      throw InputError("polygon vertex " + v.dump() + " is not an integer [x, y] pair");
    }
    vertices.push_back({v[0].get<Int>(), v[1].get<Int>()});
  }
  return LatticePolygon::make(std::move(vertices));
}

}  // namespace hilbcup
