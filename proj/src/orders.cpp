#include "hilbcup/orders.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace hilbcup {

OrderResult flip(OrderResult r) noexcept {
  switch (r) {
    case OrderResult::Less: return OrderResult::Greater;
    case OrderResult::Greater: return OrderResult::Less;
    default: return r;
  }
}

const char* to_string(OrderResult r) noexcept {
  switch (r) {
    case OrderResult::Less: return "Less";
    case OrderResult::Greater: return "Greater";
    case OrderResult::Equal: return "Equal";
    case OrderResult::Tied: return "Tied";
    case OrderResult::Incomparable: return "Incomparable";
  }
  return "?";
}

void require_lambda_signs(Weight2 w) {
  if (!(w.x < 0 && 0 < w.y)) {
    throw InputError("weight (" + std::to_string(w.x) + "," + std::to_string(w.y) +
                     ") must satisfy first < 0 < second");
  }
}

WeightOrder WeightOrder::with_lambda(Weight2 w) {
  require_lambda_signs(w);
  return {Kind::Lambda, w};
}

std::string to_string(const WeightOrder& order) {
  switch (order.kind) {
    case WeightOrder::Kind::Mu: return "mu";
    case WeightOrder::Kind::Nu: return "nu";
    case WeightOrder::Kind::Lambda: return "lambda";
  }
  return "?";
}

namespace {

void require_same_size(const StandardSet& a, const StandardSet& b) {
  if (a.size() != b.size()) {
    throw InputError("cannot compare staircases of sizes " + std::to_string(a.size()) + " and " +
                     std::to_string(b.size()));
  }
}

// Prefix sums of `lengths`, padded to `len` entries.
std::vector<Int> prefix_sums(const std::vector<Int>& lengths, std::size_t len) {
  std::vector<Int> out(len, 0);
  Int acc = 0;
  for (std::size_t i = 0; i < len; ++i) {
    if (i < lengths.size()) acc += lengths[i];
    out[i] = acc;
  }
  return out;
}

// {all a[i] <= b[i], all a[i] >= b[i]}
std::pair<bool, bool> prefix_relation(const std::vector<Int>& a, const std::vector<Int>& b) {
  const std::size_t len = std::max(a.size(), b.size());
  const auto pa = prefix_sums(a, len);
  const auto pb = prefix_sums(b, len);
  bool le = true;
  bool ge = true;
  for (std::size_t i = 0; i < len; ++i) {
    le = le && pa[i] <= pb[i];
    ge = ge && pa[i] >= pb[i];
  }
  return {le, ge};
}

template <class Key>
OrderResult compare_keys(const StandardSet& a, const StandardSet& b, const Key& ka, const Key& kb,
                         bool smaller_key_is_less) {
  if (a == b) return OrderResult::Equal;
  if (ka == kb) return OrderResult::Tied;
  const bool a_smaller = ka < kb;
  return a_smaller == smaller_key_is_less ? OrderResult::Less : OrderResult::Greater;
}

}  // namespace

OrderResult dominance_compare(const StandardSet& a, const StandardSet& b) {
  require_same_size(a, b);
  if (a == b) return OrderResult::Equal;

  // a <= b iff rows of a accumulate no faster than rows of b ...
  const auto [rows_le, rows_ge] = prefix_relation(a.parts(), b.parts());
  // ... iff columns of a accumulate at least as fast as columns of b.
  const auto [cols_le, cols_ge] =
      prefix_relation(a.transpose().parts(), b.transpose().parts());
  if (rows_le != cols_ge || rows_ge != cols_le) {
    throw InvariantError("row and column dominance disagree on " + to_text(a) + " vs " +
                         to_text(b));
  }
  if (rows_le) return OrderResult::Less;
  if (rows_ge) return OrderResult::Greater;
  return OrderResult::Incomparable;
}

OrderResult xi_compare(const WeightOrder& order, const StandardSet& a, const StandardSet& b) {
  require_same_size(a, b);
  const Moments ma = a.moments();
  const Moments mb = b.moments();
  switch (order.kind) {
    case WeightOrder::Kind::Mu:
      return compare_keys(a, b, std::pair{ma.col_sum, ma.row_sum},
                          std::pair{mb.col_sum, mb.row_sum}, true);
    case WeightOrder::Kind::Nu:
      return compare_keys(a, b, std::pair{ma.row_sum, ma.col_sum},
                          std::pair{mb.row_sum, mb.col_sum}, false);
    case WeightOrder::Kind::Lambda:
      require_lambda_signs(order.lambda);
      return compare_keys(a, b, pairing(order.lambda, ma), pairing(order.lambda, mb), false);
  }
  throw InvariantError("unknown weight order kind");
}

std::vector<Point2> staircase_union(Int cardinality) {
  std::vector<Point2> out;
  for (Int j = 0; j + 1 <= cardinality; ++j) {
    for (Int i = 0; (i + 1) * (j + 1) <= cardinality; ++i) out.push_back({i, j});
  }
  return out;
}

std::optional<std::pair<Point2, Point2>> find_weight_tie(Weight2 w, Int cardinality) {
  std::map<Int, Point2> seen;
  for (const Point2& p : staircase_union(cardinality)) {
    const auto [it, inserted] = seen.emplace(pairing(w, p), p);
    if (!inserted) return std::pair{it->second, p};
  }
  return std::nullopt;
}

bool is_generic_lambda(Weight2 lambda, Int n) {
  require_lambda_signs(lambda);
  if (n < 1) throw InputError("n must be positive, got " + std::to_string(n));
  return !find_weight_tie(lambda, 2 * n + 1).has_value();
}

CoverSet cover_relations(std::size_t count,
                         const std::function<bool(std::size_t, std::size_t)>& less) {
  std::vector<std::vector<char>> lt(count, std::vector<char>(count, 0));
  for (std::size_t a = 0; a < count; ++a) {
    for (std::size_t b = 0; b < count; ++b) lt[a][b] = less(a, b) ? 1 : 0;
  }

  if (count <= kStrictOrderCheckLimit) {
    for (std::size_t a = 0; a < count; ++a) {
      if (lt[a][a]) throw OrderViolation("relation is not irreflexive", {a});
      for (std::size_t b = 0; b < count; ++b) {
        if (!lt[a][b]) continue;
        for (std::size_t c = 0; c < count; ++c) {
          if (lt[b][c] && !lt[a][c]) {
            std::ostringstream msg;
            msg << "relation is not transitive: " << a << " < " << b << " < " << c;
            throw OrderViolation(msg.str(), {a, b, c});
          }
        }
      }
    }
  }

  CoverSet edges;
  for (std::size_t a = 0; a < count; ++a) {
    for (std::size_t b = 0; b < count; ++b) {
      if (!lt[a][b]) continue;
      bool covered = true;
      for (std::size_t c = 0; c < count && covered; ++c) {
        if (lt[a][c] && lt[c][b]) covered = false;
      }
      if (covered) edges.push_back({a, b});
    }
  }
  return edges;
}

namespace {

void require_hasse_size(Int m) {
  if (m < 0 || m > kMaxHasseSize) {
    throw InputError("Hasse diagrams are limited to 0 <= m <= " + std::to_string(kMaxHasseSize) +
                     ", got " + std::to_string(m));
  }
}

}  // namespace

CoverSet dominance_hasse(Int m) {
  require_hasse_size(m);
  const auto carrier = enumerate_partitions(m);
  return cover_relations(carrier.size(), [&](std::size_t a, std::size_t b) {
    return dominance_compare(carrier[a], carrier[b]) == OrderResult::Less;
  });
}

CoverSet weight_hasse(Int m, const WeightOrder& order) {
  require_hasse_size(m);
  const auto carrier = enumerate_partitions(m);
  return cover_relations(carrier.size(), [&](std::size_t a, std::size_t b) {
    return xi_compare(order, carrier[a], carrier[b]) == OrderResult::Less;
  });
}

CoverSet refinement_extra_edges(Int m, const WeightOrder& order) {
  const CoverSet refined = weight_hasse(m, order);
  const CoverSet base = dominance_hasse(m);
  const std::set<CoverEdge> base_set(base.begin(), base.end());
  CoverSet extra;
  std::copy_if(refined.begin(), refined.end(), std::back_inserter(extra),
               [&](const CoverEdge& e) { return !base_set.contains(e); });
  return extra;
}

}  // namespace hilbcup
