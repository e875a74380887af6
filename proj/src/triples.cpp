#include "hilbcup/triples.hpp"

#include <array>

namespace hilbcup {

namespace {

void require_total(Int n) {
  if (n < 0 || n > kMaxTripleTotal) {
    throw InputError("number of points must lie in [0, " + std::to_string(kMaxTripleTotal) +
                     "], got " + std::to_string(n));
  }
}

void require_same_total(const Triple& a, const Triple& b) {
  if (a.total() != b.total()) {
    throw InputError("cannot compare triples of totals " + std::to_string(a.total()) + " and " +
                     std::to_string(b.total()));
  }
}

// Size bullet: strictly more plane cells or strictly fewer point cells,
// never moving the other way.
bool size_less(const Triple& a, const Triple& b) {
  const Int ap = a.plane.size(), bp = b.plane.size();
  const Int aq = a.point.size(), bq = b.point.size();
  return ap >= bp && aq <= bq && (ap != bp || aq != bq);
}

bool same_sizes(const Triple& a, const Triple& b) {
  return a.plane.size() == b.plane.size() && a.point.size() == b.point.size();
}

OrderResult combine_slots(const std::array<OrderResult, 3>& slots) {
  bool any_less = false, any_greater = false, any_tied = false, any_incomparable = false;
  for (OrderResult r : slots) {
    any_less |= r == OrderResult::Less;
    any_greater |= r == OrderResult::Greater;
    any_tied |= r == OrderResult::Tied;
    any_incomparable |= r == OrderResult::Incomparable;
  }
  if (any_incomparable) return OrderResult::Incomparable;
  if (any_less && !any_greater && !any_tied) return OrderResult::Less;
  if (any_greater && !any_less && !any_tied) return OrderResult::Greater;
  if (!any_less && !any_greater) return any_tied ? OrderResult::Tied : OrderResult::Equal;
  return OrderResult::Incomparable;
}

}  // namespace

std::vector<Triple> enumerate_triples(Int n) {
  require_total(n);
  std::vector<std::vector<StandardSet>> by_size;
  for (Int m = 0; m <= n; ++m) by_size.push_back(enumerate_partitions(m));

  std::vector<Triple> out;
  for (Int p = n; p >= 0; --p) {
    for (Int l = n - p; l >= 0; --l) {
      const Int q = n - p - l;
      for (const auto& plane : by_size[static_cast<std::size_t>(p)]) {
        for (const auto& line : by_size[static_cast<std::size_t>(l)]) {
          for (const auto& point : by_size[static_cast<std::size_t>(q)]) {
            out.push_back({plane, line, point});
          }
        }
      }
    }
  }
  return out;
}

Triple iota(const Triple& t) {
  return {t.point.transpose(), t.line.transpose(), t.plane.transpose()};
}

Int degree(const Triple& t) { return t.total() + t.plane.height() - t.point.width(); }

std::vector<Triple> basis(Int n, Int k) {
  require_total(n);
  if (k < 0 || k > 2 * n) {
    throw InputError("degree " + std::to_string(k) + " outside [0, " + std::to_string(2 * n) + "]");
  }
  std::vector<Triple> out;
  for (auto& t : enumerate_triples(n)) {
    if (degree(t) == k) out.push_back(std::move(t));
  }
  return out;
}

std::vector<Int> betti(Int n) {
  require_total(n);
  std::vector<Int> counts(static_cast<std::size_t>(2 * n + 1), 0);
  for (const auto& t : enumerate_triples(n)) ++counts[static_cast<std::size_t>(degree(t))];
  return counts;
}

OrderResult triple_compare(Weight2 lambda, const Triple& a, const Triple& b) {
  require_lambda_signs(lambda);
  require_same_total(a, b);
  if (size_less(a, b)) return OrderResult::Less;
  if (size_less(b, a)) return OrderResult::Greater;
  if (!same_sizes(a, b)) return OrderResult::Incomparable;
  return combine_slots({xi_compare(WeightOrder::mu(), a.plane, b.plane),
                        xi_compare(WeightOrder::with_lambda(lambda), a.line, b.line),
                        xi_compare(WeightOrder::nu(), a.point, b.point)});
}

const char* to_string(UniversalOrder u) noexcept {
  switch (u) {
    case UniversalOrder::Less: return "Less";
    case UniversalOrder::Equal: return "Equal";
    case UniversalOrder::NotLeqForSomeLambda: return "NotLeqForSomeLambda";
  }
  return "?";
}

UniversalOrder triple_leq_universal(const Triple& a, const Triple& b) {
  require_same_total(a, b);
  if (a == b) return UniversalOrder::Equal;
  if (size_less(a, b)) return UniversalOrder::Less;
  if (!same_sizes(a, b)) return UniversalOrder::NotLeqForSomeLambda;

  // lambda.x * dc + lambda.y * dr > 0 for every lambda.x < 0 < lambda.y
  // exactly when dc <= 0 <= dr and (dc, dr) != 0.
  const auto line_less = [&] {
    const Moments ma = a.line.moments(), mb = b.line.moments();
    const Int dc = ma.col_sum - mb.col_sum;
    const Int dr = ma.row_sum - mb.row_sum;
    return dc <= 0 && dr >= 0 && (dc != 0 || dr != 0);
  };

  const OrderResult plane = xi_compare(WeightOrder::mu(), a.plane, b.plane);
  const OrderResult point = xi_compare(WeightOrder::nu(), a.point, b.point);
  const bool plane_ok = plane == OrderResult::Less || plane == OrderResult::Equal;
  const bool point_ok = point == OrderResult::Less || point == OrderResult::Equal;
  const bool line_ok = a.line == b.line || line_less();
  // a != b, so at least one slot is strictly smaller when all three are ok.
  return plane_ok && point_ok && line_ok ? UniversalOrder::Less
                                         : UniversalOrder::NotLeqForSomeLambda;
}

std::string to_text(const Triple& t) {
  return to_text(t.plane) + "|" + to_text(t.line) + "|" + to_text(t.point);
}

Triple parse_triple(std::string_view text) {
  const std::size_t first = text.find('|');
  const std::size_t second = first == std::string_view::npos ? first : text.find('|', first + 1);
  if (second == std::string_view::npos || text.find('|', second + 1) != std::string_view::npos) {
    throw InputError("triple '" + std::string(text) + "' must have the form plane|line|point");
  }
  return {parse_standard_set(text.substr(0, first)),
          parse_standard_set(text.substr(first + 1, second - first - 1)),
          parse_standard_set(text.substr(second + 1))};
}

}  // namespace hilbcup
