#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hilbcup/mask.hpp"
#include "hilbcup/triples.hpp"

namespace hilbcup {

/// Necessary condition for [a] . [b] != 0: a <=_lambda iota(b) for every
/// admissible lambda. `false` proves the product vanishes; `true` only means
/// the criterion does not rule it out.
bool may_be_nonzero(const Triple& a, const Triple& b);

/// Pairing of degree-k classes against their iota images. Row i is t_i,
/// column j is iota(t_j), and `allowed(i, j)` is `may_be_nonzero(t_i, iota(t_j))`.
struct PairingMask {
  Int n = 0;
  Int k = 0;
  Weight2 lambda{};
  std::vector<Triple> rows;
  std::vector<Triple> cols;
  BoolMatrix allowed;
};

/// Orders `items` by a linear extension of the strict order <_lambda.
/// Among the currently minimal elements the one with the smallest text
/// encoding comes first.
std::vector<Triple> linear_extension(Weight2 lambda, std::vector<Triple> items);

/// Weight genericity needed by `pairing_mask`: lambda separates the cells of
/// every staircase with at most n cells.
bool separates_staircases(Weight2 lambda, Int n);

PairingMask pairing_mask(Int n, Int k, Weight2 lambda);

struct PairingVerdict {
  TriangularityVerdict shape;
  /// Row and column triples of the offending entry, when there is one.
  std::optional<std::pair<Triple, Triple>> witness;
  bool ok() const noexcept { return shape.upper_triangular; }
};

PairingVerdict check_upper_triangular(const PairingMask& mask);

/// Pairs (a, b) of equal total n where the criterion is not symmetric,
/// i.e. may_be_nonzero(a, b) != may_be_nonzero(b, a).
std::vector<std::pair<Triple, Triple>> asymmetric_pairs(Int n);

}  // namespace hilbcup
