#include "hilbcup/cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <ostream>

#include <CLI11.hpp>

#include "hilbcup/bb_core.hpp"
#include "hilbcup/cup.hpp"
#include "hilbcup/es_weights.hpp"
#include "hilbcup/generic_ideals.hpp"
#include "hilbcup/serialize.hpp"

namespace hilbcup {

Weight2 parse_weight2(std::string_view text) {
  const std::size_t comma = text.find(',');
  if (comma == std::string_view::npos || text.find(',', comma + 1) != std::string_view::npos) {
    throw InputError("weight '" + std::string(text) + "' must have the form a,b");
  }
  const auto parse = [&](std::string_view token) {
    Int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
      throw InputError("cannot parse weight '" + std::string(text) + "'");
    }
    return value;
  };
  return {parse(text.substr(0, comma)), parse(text.substr(comma + 1))};
}

namespace {

using nlohmann::json;

std::string join(const std::vector<Int>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

std::vector<std::string> partition_labels(Int m) {
  std::vector<std::string> labels;
  for (const auto& s : enumerate_partitions(m)) labels.push_back(to_text(s));
  return labels;
}

WeightOrder order_from_name(const std::string& name, const std::string& lambda) {
  if (name == "mu") return WeightOrder::mu();
  if (name == "nu") return WeightOrder::nu();
  if (name == "lambda") {
    if (lambda.empty()) throw InputError("--order lambda requires --lambda");
    return WeightOrder::with_lambda(parse_weight2(lambda));
  }
  throw InputError("unknown order '" + name + "'");
}

struct Options {
  Int n = 0;
  Int m = 0;
  Int k = -1;
  Int d = 0;
  std::string format;
  std::string order = "dominance";
  std::string lambda;
  std::string diff_against;
  std::string triple;
  std::string triple2;
  std::string u;
  std::string v;
  std::string w;
  std::string polytope;
  bool check = false;
  bool explicit_sequence = false;
  bool punctual = false;
};

int cmd_cells(const Options& o, std::ostream& out) {
  const std::vector<Triple> triples = o.k >= 0 ? basis(o.n, o.k) : enumerate_triples(o.n);
  const std::string format = o.format.empty() ? "text" : o.format;
  if (format == "json") {
    json arr = json::array();
    for (const auto& t : triples) {
      json j = to_json(t);
      j["degree"] = degree(t);
      arr.push_back(std::move(j));
    }
    out << arr.dump() << '\n';
  } else if (format == "csv") {
    out << "triple,degree\n";
    for (const auto& t : triples) out << '"' << to_text(t) << "\"," << degree(t) << '\n';
  } else if (format == "text") {
    for (const auto& t : triples) out << to_text(t) << ' ' << degree(t) << '\n';
  } else {
    throw InputError("unknown format '" + format + "'");
  }
  return kExitOk;
}

int cmd_hasse(const Options& o, std::ostream& out) {
  const auto labels = partition_labels(o.m);
  const std::string format = o.format.empty() ? "dot" : o.format;
  if (format != "dot" && format != "json") throw InputError("unknown format '" + format + "'");
  if (!o.diff_against.empty() && o.diff_against != "dominance") {
    throw InputError("--diff-against only supports 'dominance'");
  }

  if (o.order == "dominance") {
    if (!o.diff_against.empty()) throw InputError("cannot diff dominance against itself");
    const CoverSet edges = dominance_hasse(o.m);
    out << (format == "dot" ? to_dot(labels, edges) : to_json(labels, edges).dump() + "\n");
    return kExitOk;
  }

  const WeightOrder order = order_from_name(o.order, o.lambda);
  if (o.diff_against.empty()) {
    const CoverSet edges = weight_hasse(o.m, order);
    out << (format == "dot" ? to_dot(labels, edges) : to_json(labels, edges).dump() + "\n");
    return kExitOk;
  }
  const CoverSet extra = refinement_extra_edges(o.m, order);
  if (format == "dot") {
    out << to_dot(labels, dominance_hasse(o.m), extra, to_string(order));
  } else {
    out << to_json(labels, extra).dump() << '\n';
  }
  return kExitOk;
}

int cmd_triple_hasse(const Options& o, std::ostream& out) {
  const Weight2 lambda = parse_weight2(o.lambda);
  require_lambda_signs(lambda);
  const auto items = basis(o.n, o.k);
  std::vector<std::string> labels;
  for (const auto& t : items) labels.push_back(to_text(t));
  const CoverSet edges = cover_relations(items.size(), [&](std::size_t a, std::size_t b) {
    return triple_compare(lambda, items[a], items[b]) == OrderResult::Less;
  });
  const std::string format = o.format.empty() ? "dot" : o.format;
  if (format == "dot") {
    out << to_dot(labels, edges);
  } else if (format == "json") {
    out << to_json(labels, edges).dump() << '\n';
  } else {
    throw InputError("unknown format '" + format + "'");
  }
  return kExitOk;
}

int cmd_pairing(const Options& o, std::ostream& out) {
  const PairingMask mask = pairing_mask(o.n, o.k, parse_weight2(o.lambda));
  if (o.check) {
    const PairingVerdict verdict = check_upper_triangular(mask);
    if (!verdict.ok()) {
      const auto [i, j] = *verdict.shape.violation;
      out << "upper-triangular: no\n"
          << "violation: row " << i + 1 << " col " << j + 1 << ": "
          << to_text(verdict.witness->first) << " x " << to_text(verdict.witness->second) << '\n';
      return kExitCheckFailed;
    }
    std::vector<Int> sizes(verdict.shape.block_sizes.begin(), verdict.shape.block_sizes.end());
    out << "upper-triangular: yes\n"
        << "size: " << mask.rows.size() << '\n'
        << "blocks: " << join(sizes) << '\n';
    return kExitOk;
  }
  const std::string format = o.format.empty() ? "ascii" : o.format;
  if (format == "ascii") {
    out << to_ascii(mask);
  } else if (format == "csv") {
    out << to_csv(mask);
  } else if (format == "json") {
    out << to_json(mask).dump() << '\n';
  } else {
    throw InputError("unknown format '" + format + "'");
  }
  return kExitOk;
}

int cmd_cup(const Options& o, std::ostream& out) {
  const Triple a = parse_triple(o.triple);
  const Triple b = parse_triple(o.triple2);
  if (a.total() != o.n || b.total() != o.n) {
    throw InputError("triples must both have " + std::to_string(o.n) + " points");
  }
  out << (may_be_nonzero(a, b) ? "MAY_BE_NONZERO" : "MUST_VANISH") << '\n';
  return kExitOk;
}

int cmd_generic_staircase(const Options& o, std::ostream& out) {
  StandardSet result;
  if (o.punctual) {
    if (o.v.empty()) throw InputError("--punctual requires --v");
    result = generic_punctual(parse_weight2(o.v), o.n);
  } else {
    if (o.u.empty()) throw InputError("generic-staircase requires --u (or --punctual --v)");
    const Weight2 u = parse_weight2(o.u);
    result = o.explicit_sequence ? generic_staircase_explicit(u, o.n) : generic_staircase(u, o.n);
  }
  out << to_text(result) << '\n';
  return kExitOk;
}

int cmd_phi(const Options& o, std::ostream& out) {
  out << phi(parse_weight3(o.w), o.d, parse_triple(o.triple)) << '\n';
  return kExitOk;
}

int cmd_toric_bb(const Options& o, std::ostream& out) {
  std::ifstream file(o.polytope);
  if (!file) throw InputError("cannot open polytope file '" + o.polytope + "'");
  json doc;
  try {
    doc = json::parse(file);
  } catch (const json::exception& e) {
    throw InputError(std::string("polytope file is not valid JSON: ") + e.what());
  }
  const LatticePolygon polygon = polygon_from_json(doc);
  const Weight2 lambda = parse_weight2(o.lambda);
  const FixedPointTable table = toric_phi(polygon, lambda);
  const IntersectionMask mask = intersection_mask(table);

  json cells = json::array();
  for (const Point2& v : polygon.vertices()) {
    const CellSigns signs = toric_cell_signs(polygon, v, lambda);
    json up = json::array(), down = json::array();
    for (const Point2& p : signs.up) up.push_back({p.x, p.y});
    for (const Point2& p : signs.down) down.push_back({p.x, p.y});
    cells.push_back({{"vertex", vertex_id(v)}, {"up", up}, {"down", down}});
  }
  json result = {{"table", to_json(table)},
                 {"mask", to_json(mask)},
                 {"upper_triangular", check_upper_triangular(mask.allowed).upper_triangular},
                 {"smooth", polygon.is_smooth()},
                 {"cells", cells}};
  out << result.dump(2) << '\n';
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cell basis and cup-product vanishing criteria for Hilbert schemes of points in P^2",
               "hilbcup"};
  app.require_subcommand(1, 1);
  Options o;

  auto* cells = app.add_subcommand("cells", "List basis triples, optionally of one degree");
  cells->add_option("--n", o.n, "number of points")->required();
  cells->add_option("--k", o.k, "degree");
  cells->add_option("--format", o.format, "text|json|csv");

  auto* betti_cmd = app.add_subcommand("betti", "Cell counts per degree");
  betti_cmd->add_option("--n", o.n, "number of points")->required();

  auto* hasse = app.add_subcommand("hasse", "Hasse diagram of staircases of size m");
  hasse->add_option("--m", o.m, "staircase size")->required();
  hasse->add_option("--order", o.order, "dominance|mu|nu|lambda");
  hasse->add_option("--lambda", o.lambda, "weight l1,l2 with l1 < 0 < l2");
  hasse->add_option("--diff-against", o.diff_against, "emit only edges missing from dominance");
  hasse->add_option("--format", o.format, "dot|json");

  auto* triple_hasse = app.add_subcommand("triple-hasse", "Hasse diagram of a degree-k basis");
  triple_hasse->add_option("--n", o.n, "number of points")->required();
  triple_hasse->add_option("--k", o.k, "degree")->required();
  triple_hasse->add_option("--lambda", o.lambda, "weight l1,l2")->required();
  triple_hasse->add_option("--format", o.format, "dot|json");

  auto* pairing_cmd = app.add_subcommand("pairing", "Pairing mask of T^k against its dual basis");
  pairing_cmd->add_option("--n", o.n, "number of points")->required();
  pairing_cmd->add_option("--k", o.k, "degree")->required();
  pairing_cmd->add_option("--lambda", o.lambda, "weight l1,l2")->required();
  pairing_cmd->add_option("--format", o.format, "ascii|csv|json");
  pairing_cmd->add_flag("--check", o.check, "verify upper triangularity; exit 1 on violation");

  auto* cup_cmd = app.add_subcommand("cup", "Vanishing criterion for a product of two classes");
  cup_cmd->add_option("--n", o.n, "number of points")->required();
  cup_cmd->add_option("--t", o.triple, "first triple, e.g. 2,1|1|-")->required();
  cup_cmd->add_option("--t2", o.triple2, "second triple")->required();

  auto* generic = app.add_subcommand("generic-staircase", "Generic staircase for a weight");
  generic->add_option("--u", o.u, "weight u1,u2 with both entries negative");
  generic->add_option("--v", o.v, "weight v1,v2 with both entries positive");
  generic->add_option("--n", o.n, "number of cells")->required();
  generic->add_flag("--explicit", o.explicit_sequence, "use the interleaved column sequence");
  generic->add_flag("--punctual", o.punctual, "punctual generic staircase for --v");

  auto* phi_cmd = app.add_subcommand("phi", "Line-bundle weight at a fixed point");
  phi_cmd->add_option("--w", o.w, "weight w0,w1,w2 summing to zero")->required();
  phi_cmd->add_option("--d", o.d, "embedding degree")->required();
  phi_cmd->add_option("--triple", o.triple, "triple, e.g. 1|-|-")->required();

  auto* toric = app.add_subcommand("toric-bb", "Fixed point weights and mask of a lattice polygon");
  toric->add_option("--polytope", o.polytope, "JSON file with [[x, y], ...] vertices")->required();
  toric->add_option("--lambda", o.lambda, "weight l1,l2 separating the vertices")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    std::string msg = e.what();
    std::replace(msg.begin(), msg.end(), '\n', ' ');
    err << "error: " << msg << '\n';
    return kExitUsage;
  }

  try {
    if (cells->parsed()) return cmd_cells(o, out);
    if (betti_cmd->parsed()) {
      out << join(betti(o.n)) << '\n';
      return kExitOk;
    }
    if (hasse->parsed()) return cmd_hasse(o, out);
    if (triple_hasse->parsed()) return cmd_triple_hasse(o, out);
    if (pairing_cmd->parsed()) return cmd_pairing(o, out);
    if (cup_cmd->parsed()) return cmd_cup(o, out);
    if (generic->parsed()) return cmd_generic_staircase(o, out);
    if (phi_cmd->parsed()) return cmd_phi(o, out);
    if (toric->parsed()) return cmd_toric_bb(o, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  err << "error: no subcommand given\n";
  return kExitUsage;
}

}  // namespace hilbcup
