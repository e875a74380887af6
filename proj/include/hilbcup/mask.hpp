#pragma once

#include <cstddef>
#include <optional>
#include <vector>

namespace hilbcup {

/// Dense square boolean matrix, row-major.
class BoolMatrix {
public:
  BoolMatrix() = default;
  explicit BoolMatrix(std::size_t dim) : dim_(dim), cells_(dim * dim, 0) {}

  std::size_t dim() const noexcept { return dim_; }
  bool at(std::size_t row, std::size_t col) const { return cells_.at(row * dim_ + col) != 0; }
  void set(std::size_t row, std::size_t col, bool value) {
    cells_.at(row * dim_ + col) = value ? 1 : 0;
  }

  friend bool operator==(const BoolMatrix&, const BoolMatrix&) = default;

private:
  std::size_t dim_ = 0;
  std::vector<unsigned char> cells_;
};

struct TriangularityVerdict {
  bool upper_triangular = false;
  /// First offending entry in row-major order: a false diagonal entry or a
  /// true entry strictly below the diagonal.
  std::optional<std::pair<std::size_t, std::size_t>> violation;
  /// Sizes of the finest partition into contiguous diagonal blocks such that
  /// every true entry lies inside a block. Filled only for triangular masks.
  std::vector<std::size_t> block_sizes;
};

TriangularityVerdict check_upper_triangular(const BoolMatrix& m);

}  // namespace hilbcup
