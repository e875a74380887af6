#include "hilbcup/cup.hpp"

#include <algorithm>
#include <set>

namespace hilbcup {

bool may_be_nonzero(const Triple& a, const Triple& b) {
  return triple_leq_universal(a, iota(b)) != UniversalOrder::NotLeqForSomeLambda;
}

std::vector<Triple> linear_extension(Weight2 lambda, std::vector<Triple> items) {
  const std::size_t d = items.size();
  std::vector<std::string> labels;
  labels.reserve(d);
  for (const auto& t : items) labels.push_back(to_text(t));

  std::vector<std::vector<std::size_t>> successors(d);
  std::vector<std::size_t> indegree(d, 0);
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = 0; b < d; ++b) {
      if (a != b && triple_compare(lambda, items[a], items[b]) == OrderResult::Less) {
        successors[a].push_back(b);
        ++indegree[b];
      }
    }
  }

  const auto by_label = [&](std::size_t a, std::size_t b) {
    return std::pair{labels[a], a} < std::pair{labels[b], b};
  };
  std::set<std::size_t, decltype(by_label)> ready(by_label);
  for (std::size_t a = 0; a < d; ++a) {
    if (indegree[a] == 0) ready.insert(a);
  }

  std::vector<Triple> out;
  out.reserve(d);
  while (!ready.empty()) {
    const std::size_t a = *ready.begin();
    ready.erase(ready.begin());
    out.push_back(items[a]);
    for (std::size_t b : successors[a]) {
      if (--indegree[b] == 0) ready.insert(b);
    }
  }
  if (out.size() != d) throw InvariantError("<_lambda has a cycle on the basis");
  return out;
}

bool separates_staircases(Weight2 lambda, Int n) {
  require_lambda_signs(lambda);
  return !find_weight_tie(lambda, n).has_value();
}

PairingMask pairing_mask(Int n, Int k, Weight2 lambda) {
  require_lambda_signs(lambda);
  if (const auto tie = find_weight_tie(lambda, n)) {
    throw InputError("weight (" + std::to_string(lambda.x) + "," + std::to_string(lambda.y) +
                     ") is not generic for n = " + std::to_string(n) + ": cells (" +
                     std::to_string(tie->first.x) + "," + std::to_string(tie->first.y) + ") and (" +
                     std::to_string(tie->second.x) + "," + std::to_string(tie->second.y) +
                     ") tie");
  }

  PairingMask mask;
  mask.n = n;
  mask.k = k;
  mask.lambda = lambda;
  mask.rows = linear_extension(lambda, basis(n, k));
  for (const auto& t : mask.rows) mask.cols.push_back(iota(t));

  const std::size_t d = mask.rows.size();
  mask.allowed = BoolMatrix(d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      mask.allowed.set(i, j, may_be_nonzero(mask.rows[i], mask.cols[j]));
    }
  }
  return mask;
}

PairingVerdict check_upper_triangular(const PairingMask& mask) {
  PairingVerdict verdict{check_upper_triangular(mask.allowed), std::nullopt};
  if (const auto& v = verdict.shape.violation) {
    verdict.witness = std::pair{mask.rows.at(v->first), mask.cols.at(v->second)};
  }
  return verdict;
}

std::vector<std::pair<Triple, Triple>> asymmetric_pairs(Int n) {
  const auto all = enumerate_triples(n);
  std::vector<std::pair<Triple, Triple>> out;
  for (std::size_t a = 0; a < all.size(); ++a) {
    for (std::size_t b = a + 1; b < all.size(); ++b) {
      if (may_be_nonzero(all[a], all[b]) != may_be_nonzero(all[b], all[a])) {
        out.emplace_back(all[a], all[b]);
      }
    }
  }
  return out;
}

}  // namespace hilbcup
