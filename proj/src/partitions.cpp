#include "thickening/partitions.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>

namespace thickening {
namespace {

std::string join(std::span<const std::int64_t> values) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) os << ',';
    os << values[i];
  }
  os << ')';
  return os.str();
}

bool weakly_decreasing(std::span<const std::int64_t> v) {
  return std::is_sorted(v.begin(), v.end(), std::greater<>{});
}

void box_partitions(std::vector<std::int64_t>& prefix, std::size_t rows_left, std::int64_t cap,
                    std::vector<Partition>& out) {
  if (rows_left == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (std::int64_t v = 0; v <= cap; ++v) {
    prefix.push_back(v);
    box_partitions(prefix, rows_left - 1, v, out);
    prefix.pop_back();
  }
}

void sum_partitions(std::vector<std::int64_t>& prefix, std::int64_t remaining, std::size_t rows_left,
                    std::int64_t cap, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  if (rows_left == 0) return;
  for (std::int64_t v = std::min(cap, remaining); v >= 1; --v) {
    prefix.push_back(v);
    sum_partitions(prefix, remaining - v, rows_left - 1, v, out);
    prefix.pop_back();
  }
}

}  // namespace

Partition::Partition(std::vector<std::int64_t> parts) : parts_(std::move(parts)) {
  if (std::any_of(parts_.begin(), parts_.end(), [](std::int64_t v) { return v < 0; })) {
    throw std::invalid_argument("partition has a negative part: " + join(parts_));
  }
  if (!weakly_decreasing(parts_)) {
    throw std::invalid_argument("partition is not weakly decreasing: " + join(parts_));
  }
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

Partition::Partition(std::initializer_list<std::int64_t> parts)
    : Partition(std::vector<std::int64_t>(parts)) {}

std::int64_t Partition::size() const noexcept {
  return std::accumulate(parts_.begin(), parts_.end(), std::int64_t{0});
}

std::vector<std::int64_t> Partition::padded(std::size_t n) const {
  if (parts_.size() > n) {
    throw std::invalid_argument("partition " + to_string() + " has more than " +
                                std::to_string(n) + " rows");
  }
  std::vector<std::int64_t> out(parts_);
  out.resize(n, 0);
  return out;
}

std::string Partition::to_string() const { return join(parts_); }

std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << p.to_string(); }

DominantWeight::DominantWeight(std::vector<std::int64_t> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw std::invalid_argument("dominant weight must have positive length");
  if (!weakly_decreasing(entries_)) {
    throw std::invalid_argument("weight is not dominant: " + join(entries_));
  }
}

DominantWeight::DominantWeight(std::initializer_list<std::int64_t> entries)
    : DominantWeight(std::vector<std::int64_t>(entries)) {}

DominantWeight DominantWeight::shifted(std::int64_t c) const {
  std::vector<std::int64_t> out(entries_);
  for (auto& v : out) v += c;
  return DominantWeight(std::move(out));
}

std::string DominantWeight::to_string() const { return join(entries_); }

std::ostream& operator<<(std::ostream& os, const DominantWeight& w) { return os << w.to_string(); }

Partition conjugate(const Partition& x) {
  std::vector<std::int64_t> out(x.empty() ? 0 : static_cast<std::size_t>(x.part(1)), 0);
  for (std::int64_t row : x.parts()) {
    for (std::int64_t col = 0; col < row; ++col) ++out[static_cast<std::size_t>(col)];
  }
  return Partition(std::move(out));
}

bool contains(const Partition& x, const Partition& y) {
  const std::size_t n = std::max(x.length(), y.length());
  for (std::size_t i = 1; i <= n; ++i) {
    if (x.part(i) > y.part(i)) return false;
  }
  return true;
}

std::vector<std::int64_t> det_support(const Partition& x) {
  if (x.empty()) throw std::invalid_argument("empty support");
  return conjugate(x).parts();
}

std::vector<Partition> partitions_in_box(std::size_t max_rows, std::int64_t max_part) {
  std::vector<Partition> out;
  if (max_part < 0) return out;
  std::vector<std::int64_t> prefix;
  box_partitions(prefix, max_rows, max_part, out);
  return out;
}

std::vector<Partition> partitions_of(std::int64_t total, std::size_t max_rows) {
  std::vector<Partition> out;
  if (total < 0) return out;
  std::vector<std::int64_t> prefix;
  sum_partitions(prefix, total, max_rows, total, out);
  return out;
}

}  // namespace thickening

std::size_t std::hash<thickening::Partition>::operator()(
    const thickening::Partition& p) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (std::int64_t v : p.parts()) {
    h ^= std::hash<std::int64_t>{}(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}
