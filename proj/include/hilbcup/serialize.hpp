#pragma once

#include <span>
#include <string>
#include <string_view>

#include <json.hpp>

#include "hilbcup/bb_core.hpp"
#include "hilbcup/cup.hpp"
#include "hilbcup/orders.hpp"
#include "hilbcup/triples.hpp"

namespace hilbcup {

nlohmann::json to_json(const StandardSet& s);
nlohmann::json to_json(const Triple& t);
Triple triple_from_json(const nlohmann::json& j);

/// DOT digraph with one node per label and edges smaller -> larger.
/// `extra` edges are appended with an `order="<extra_order>"` attribute.
std::string to_dot(std::span<const std::string> labels, const CoverSet& edges,
                   const CoverSet& extra = {}, std::string_view extra_order = {});

/// List of [from, to] label pairs.
nlohmann::json to_json(std::span<const std::string> labels, const CoverSet& edges);

nlohmann::json to_json(const PairingMask& mask);
/// Grid of 0/1 with a header of column labels and a leading row label.
std::string to_csv(const PairingMask& mask);
/// Human-readable grid; '|' and '-' separate the diagonal blocks when the
/// mask is upper triangular.
std::string to_ascii(const PairingMask& mask);

nlohmann::json to_json(const FixedPointTable& table);
nlohmann::json to_json(const IntersectionMask& mask);

/// Polygon from a JSON array of [x, y] pairs.
LatticePolygon polygon_from_json(const nlohmann::json& j);

}  // namespace hilbcup
