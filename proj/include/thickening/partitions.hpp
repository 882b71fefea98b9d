#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

namespace thickening {

/// Weakly decreasing sequence of nonnegative integers (a Young diagram).
///
/// Stored in canonical form: trailing zeros are stripped, so (3,2,1) and
/// (3,2,1,0,0,0) are the same value. The empty sequence is the zero partition.
class Partition {
 public:
  Partition() = default;
  /// Throws std::invalid_argument on negative or increasing entries.
  explicit Partition(std::vector<std::int64_t> parts);
  Partition(std::initializer_list<std::int64_t> parts);

  const std::vector<std::int64_t>& parts() const noexcept { return parts_; }
  /// Number of nonzero rows.
  std::size_t length() const noexcept { return parts_.size(); }
  bool empty() const noexcept { return parts_.empty(); }
  /// Total number of boxes.
  std::int64_t size() const noexcept;

  /// 1-based row access with implicit zero padding past length().
  std::int64_t part(std::size_t i) const noexcept {
    return (i >= 1 && i <= parts_.size()) ? parts_[i - 1] : 0;
  }

  /// Parts padded with zeros to exactly n entries; throws if length() > n.
  std::vector<std::int64_t> padded(std::size_t n) const;

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<std::int64_t> parts_;
};

std::ostream& operator<<(std::ostream& os, const Partition& p);

/// Weakly decreasing integer sequence of fixed length N (entries may be negative).
/// Nothing is stripped: the length is the dimension of the space the
/// corresponding Schur functor acts on.
class DominantWeight {
 public:
  /// Throws std::invalid_argument on empty or non-dominant input.
  explicit DominantWeight(std::vector<std::int64_t> entries);
  DominantWeight(std::initializer_list<std::int64_t> entries);

  const std::vector<std::int64_t>& entries() const noexcept { return entries_; }
  std::size_t length() const noexcept { return entries_.size(); }
  /// 1-based access.
  std::int64_t operator[](std::size_t i) const { return entries_.at(i - 1); }

  /// Adds c to every entry.
  DominantWeight shifted(std::int64_t c) const;

  std::string to_string() const;

  friend bool operator==(const DominantWeight&, const DominantWeight&) = default;

 private:
  std::vector<std::int64_t> entries_;
};

std::ostream& operator<<(std::ostream& os, const DominantWeight& w);

/// Transposed diagram: result_i = #{ j : x_j >= i }.
Partition conjugate(const Partition& x);

/// x_i <= y_i for every i after zero padding (the diagram of x sits inside y).
bool contains(const Partition& x, const Partition& y);

/// Sizes of the leading minors whose product is det_x, one per column of x:
/// the parts of conjugate(x). Throws std::invalid_argument("empty support")
/// for the zero partition.
std::vector<std::int64_t> det_support(const Partition& x);

/// All partitions with at most `max_rows` rows, parts at most `max_part`,
/// in lexicographic order of their padded part vectors.
std::vector<Partition> partitions_in_box(std::size_t max_rows, std::int64_t max_part);

/// All partitions of `total` with at most `max_rows` rows.
std::vector<Partition> partitions_of(std::int64_t total, std::size_t max_rows);

}  // namespace thickening

template <>
struct std::hash<thickening::Partition> {
  std::size_t operator()(const thickening::Partition& p) const noexcept;
};
