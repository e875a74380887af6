#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hilbcup/partition.hpp"

namespace hilbcup {

/// Integer weight vector on N^2, paired with points as w.x * p.x + w.y * p.y.
struct Weight2 {
  Int x = 0;
  Int y = 0;
  friend auto operator<=>(const Weight2&, const Weight2&) = default;
};

inline Int pairing(Weight2 w, Point2 p) noexcept { return w.x * p.x + w.y * p.y; }
inline Int pairing(Weight2 w, Moments m) noexcept { return w.x * m.col_sum + w.y * m.row_sum; }

/// Outcome of comparing two elements. `Tied` marks distinct elements whose
/// comparison key coincides; they are never ordered.
enum class OrderResult { Less, Greater, Equal, Tied, Incomparable };

OrderResult flip(OrderResult r) noexcept;
const char* to_string(OrderResult r) noexcept;

/// Which weight-induced order to use on st_m. `Mu` and `Nu` are the limit
/// orders (lexicographic in the moments); `Lambda` carries an explicit
/// weight with x < 0 < y.
struct WeightOrder {
  enum class Kind { Mu, Nu, Lambda };
  Kind kind = Kind::Mu;
  Weight2 lambda{};

  static WeightOrder mu() { return {Kind::Mu, {}}; }
  static WeightOrder nu() { return {Kind::Nu, {}}; }
  static WeightOrder with_lambda(Weight2 w);
};

std::string to_string(const WeightOrder& order);

/// Throws InputError unless w.x < 0 < w.y.
void require_lambda_signs(Weight2 w);

/// Dominance ("natural") order. Both the row-prefix and the column-prefix
/// characterisations are evaluated; a disagreement throws InvariantError.
OrderResult dominance_compare(const StandardSet& a, const StandardSet& b);

/// Weight order on staircases of equal size. Smaller element = larger
/// pairing with the weight, so for Mu the key (col_sum, row_sum) is compared
/// lexicographically ascending, for Nu the key (row_sum, col_sum)
/// descending, and for Lambda the pairing descending.
OrderResult xi_compare(const WeightOrder& order, const StandardSet& a, const StandardSet& b);

/// Union of all staircases with the given number of cells:
/// {(i, j) : (i + 1)(j + 1) <= cardinality}.
std::vector<Point2> staircase_union(Int cardinality);

/// First pair of distinct points of `staircase_union(cardinality)` with equal
/// pairing against w, if any.
std::optional<std::pair<Point2, Point2>> find_weight_tie(Weight2 w, Int cardinality);

/// Genericity of a mixed-sign weight for st_{3,n}: no two distinct points in
/// any staircase of 2n + 1 cells pair to the same value.
bool is_generic_lambda(Weight2 lambda, Int n);

struct CoverEdge {
  std::size_t from = 0;
  std::size_t to = 0;
  friend auto operator<=>(const CoverEdge&, const CoverEdge&) = default;
};

/// Hasse diagram edges (smaller -> larger) over indices into some carrier.
using CoverSet = std::vector<CoverEdge>;

/// Thrown when the relation given to `cover_relations` is not a strict order.
class OrderViolation : public InputError {
public:
  OrderViolation(const std::string& what, std::vector<std::size_t> witness)
      : InputError(what), witness_(std::move(witness)) {}
  const std::vector<std::size_t>& witness() const noexcept { return witness_; }

private:
  std::vector<std::size_t> witness_;
};

/// Limit for the exhaustive irreflexivity/transitivity check.
inline constexpr std::size_t kStrictOrderCheckLimit = 200;

/// Cover relations of the strict order `less` on {0, ..., count - 1}, sorted.
CoverSet cover_relations(std::size_t count,
                         const std::function<bool(std::size_t, std::size_t)>& less);

/// Hasse diagram of (st_m, <) for dominance or a weight order; indices refer
/// to `enumerate_partitions(m)`.
CoverSet dominance_hasse(Int m);
CoverSet weight_hasse(Int m, const WeightOrder& order);

/// Cover relations of the weight order on st_m that are not dominance covers.
CoverSet refinement_extra_edges(Int m, const WeightOrder& order);

inline constexpr Int kMaxHasseSize = 12;

}  // namespace hilbcup
