#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hilbcup/orders.hpp"
#include "hilbcup/partition.hpp"

namespace hilbcup {

/// Label of one cell of the Hilbert scheme of points in P^2: staircases
/// supported on the affine plane, on the line at infinity and at the point.
struct Triple {
  StandardSet plane;  // Delta_2
  StandardSet line;   // Delta_1
  StandardSet point;  // Delta_0

  Int total() const noexcept { return plane.size() + line.size() + point.size(); }
  friend auto operator<=>(const Triple&, const Triple&) = default;
};

inline constexpr Int kMaxTripleTotal = 12;

/// All triples with `total() == n`. Ordered by plane size (descending), then
/// line size (descending), then componentwise partition order.
std::vector<Triple> enumerate_triples(Int n);

/// (plane, line, point) -> (point^t, line^t, plane^t).
Triple iota(const Triple& t);

/// Cohomological degree n + h(plane) - w(point), in [0, 2n].
Int degree(const Triple& t);

/// Basis triples of degree k, in `enumerate_triples` order.
std::vector<Triple> basis(Int n, Int k);

/// Cell counts b_0, ..., b_{2n}.
std::vector<Int> betti(Int n);

/// The order <=_lambda on triples of equal total. Sizes decide first (more
/// cells on the plane and fewer at the point means smaller); with all sizes
/// equal the three slots are compared by mu, lambda and nu respectively and
/// must all agree.
OrderResult triple_compare(Weight2 lambda, const Triple& a, const Triple& b);

/// Closed form of "a <=_lambda b for every admissible lambda".
enum class UniversalOrder { Less, Equal, NotLeqForSomeLambda };
const char* to_string(UniversalOrder u) noexcept;
UniversalOrder triple_leq_universal(const Triple& a, const Triple& b);

/// "2,1|1|-" style encoding; components in plane|line|point order.
std::string to_text(const Triple& t);
Triple parse_triple(std::string_view text);

}  // namespace hilbcup
