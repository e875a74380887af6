#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hilbcup/errors.hpp"

namespace hilbcup {

using Int = std::int64_t;

/// A lattice point of N^2. `x` is the column (first exponent), `y` the row.
struct Point2 {
  Int x = 0;
  Int y = 0;
  friend auto operator<=>(const Point2&, const Point2&) = default;
};

struct ShapeStats {
  Int size = 0;
  Int height = 0;
  Int width = 0;
  friend bool operator==(const ShapeStats&, const ShapeStats&) = default;
};

/// Column and row moments of a staircase: `col_sum` adds the x coordinates
/// of all cells, `row_sum` the y coordinates. Any weight pairing is
/// w.x * col_sum + w.y * row_sum.
struct Moments {
  Int col_sum = 0;
  Int row_sum = 0;
  friend auto operator<=>(const Moments&, const Moments&) = default;
};

/// Largest staircase size accepted by `enumerate_partitions`.
inline constexpr Int kMaxPartitionSize = 40;

/// A finite downward-closed subset of N^2, stored as weakly decreasing row
/// lengths. Row j holds the cells (0, j), ..., (parts[j] - 1, j).
class StandardSet {
public:
  StandardSet() = default;

  /// Validates `parts` and wraps it. Throws InputError naming the first
  /// offending index when an entry is non-positive or the list increases.
  static StandardSet from_parts(std::vector<Int> parts);

  const std::vector<Int>& parts() const noexcept { return parts_; }
  bool empty() const noexcept { return parts_.empty(); }

  Int size() const noexcept;
  Int height() const noexcept { return static_cast<Int>(parts_.size()); }
  Int width() const noexcept { return parts_.empty() ? 0 : parts_.front(); }
  ShapeStats stats() const noexcept { return {size(), height(), width()}; }

  Moments moments() const noexcept;
  StandardSet transpose() const;

  bool contains(Point2 p) const noexcept;
  /// Cells in row-major order (row 0 first, left to right).
  std::vector<Point2> cells() const;

  friend auto operator<=>(const StandardSet&, const StandardSet&) = default;

private:
  explicit StandardSet(std::vector<Int> parts) : parts_(std::move(parts)) {}
  std::vector<Int> parts_;
};

/// All staircases of size m in reverse-lexicographic order of their parts,
/// e.g. m = 3 gives [3], [2,1], [1,1,1].
std::vector<StandardSet> enumerate_partitions(Int m);

/// Text form used on the command line and in serialized output:
/// "3,1,1" for parts, "-" for the empty staircase.
std::string to_text(const StandardSet& s);
StandardSet parse_standard_set(std::string_view text);

}  // namespace hilbcup
