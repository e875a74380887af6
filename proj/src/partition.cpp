#include "hilbcup/partition.hpp"

#include <charconv>
#include <numeric>

namespace hilbcup {

StandardSet StandardSet::from_parts(std::vector<Int> parts) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0) {
      throw InputError("part " + std::to_string(parts[i]) + " is not positive at index " +
                       std::to_string(i));
    }
    if (i > 0 && parts[i] > parts[i - 1]) {
      throw InputError("not weakly decreasing at index " + std::to_string(i));
    }
  }
  return StandardSet(std::move(parts));
}

Int StandardSet::size() const noexcept {
  return std::accumulate(parts_.begin(), parts_.end(), Int{0});
}

Moments StandardSet::moments() const noexcept {
  Moments m;
  for (std::size_t j = 0; j < parts_.size(); ++j) {
    const Int len = parts_[j];
    m.col_sum += len * (len - 1) / 2;
    m.row_sum += static_cast<Int>(j) * len;
  }
  return m;
}

StandardSet StandardSet::transpose() const {
  std::vector<Int> conj(static_cast<std::size_t>(width()), 0);
  for (Int len : parts_) {
    for (Int i = 0; i < len; ++i) ++conj[static_cast<std::size_t>(i)];
  }
  return StandardSet(std::move(conj));
}

bool StandardSet::contains(Point2 p) const noexcept {
  if (p.x < 0 || p.y < 0 || p.y >= height()) return false;
  return p.x < parts_[static_cast<std::size_t>(p.y)];
}

std::vector<Point2> StandardSet::cells() const {
  std::vector<Point2> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (std::size_t j = 0; j < parts_.size(); ++j) {
    for (Int i = 0; i < parts_[j]; ++i) out.push_back({i, static_cast<Int>(j)});
  }
  return out;
}

namespace {

void enumerate_into(Int remaining, Int max_part, std::vector<Int>& prefix,
                    std::vector<StandardSet>& out) {
  if (remaining == 0) {
    out.push_back(StandardSet::from_parts(prefix));
    return;
  }
  for (Int p = std::min(remaining, max_part); p >= 1; --p) {
    prefix.push_back(p);
    enumerate_into(remaining - p, p, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<StandardSet> enumerate_partitions(Int m) {
  if (m < 0) throw InputError("partition size must be non-negative, got " + std::to_string(m));
  if (m > kMaxPartitionSize) {
    throw InputError("partition size " + std::to_string(m) + " exceeds bound " +
                     std::to_string(kMaxPartitionSize));
  }
  std::vector<StandardSet> out;
  std::vector<Int> prefix;
  enumerate_into(m, m, prefix, out);
  return out;
}

std::string to_text(const StandardSet& s) {
  if (s.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < s.parts().size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(s.parts()[i]);
  }
  return out;
}

StandardSet parse_standard_set(std::string_view text) {
  if (text == "-") return {};
  std::vector<Int> parts;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string_view token = text.substr(pos, comma - pos);
    Int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
      throw InputError("cannot parse staircase '" + std::string(text) + "'");
    }
    parts.push_back(value);
    pos = comma + 1;
  }
  return StandardSet::from_parts(std::move(parts));
}

}  // namespace hilbcup
