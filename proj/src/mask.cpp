#include "hilbcup/mask.hpp"

#include <algorithm>

namespace hilbcup {

TriangularityVerdict check_upper_triangular(const BoolMatrix& m) {
  TriangularityVerdict verdict;
  const std::size_t d = m.dim();
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      const bool bad = (i == j) ? !m.at(i, j) : m.at(i, j);
      if (bad) {
        verdict.violation = std::pair{i, j};
        return verdict;
      }
    }
  }
  verdict.upper_triangular = true;

  // A block may close after index p once no true entry starts at or before p
  // and ends after it.
  std::size_t start = 0;
  std::size_t reach = 0;
  for (std::size_t p = 0; p < d; ++p) {
    for (std::size_t j = p; j < d; ++j) {
      if (m.at(p, j)) reach = std::max(reach, j);
    }
    if (reach <= p) {
      verdict.block_sizes.push_back(p + 1 - start);
      start = p + 1;
      reach = p + 1;
    }
  }
  return verdict;
}

}  // namespace hilbcup
