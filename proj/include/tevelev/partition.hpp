#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tevelev {

struct Rectangle {
  int rows = 0;
  int cols = 0;
};

/// Integer partition: weakly decreasing nonnegative parts, stored without
/// trailing zeros so each partition has a single canonical form.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  explicit Partition(std::vector<int> parts);

  int part(int i) const {
    return (i >= 0 && i < static_cast<int>(parts_.size())) ? parts_[i] : 0;
  }
  int rows() const { return static_cast<int>(parts_.size()); }
  long size() const;
  bool empty() const { return parts_.empty(); }
  const std::vector<int>& parts() const { return parts_; }

  bool fits_in(const Rectangle& box) const;
  bool contains(const Partition& mu) const;
  Partition conjugate() const;

  /// 180-degree rotated complement inside `box`; requires fits_in(box).
  Partition complement_in(const Rectangle& box) const;

  /// Comma-separated parts, e.g. "10,9,4,2"; the empty partition is "".
  std::string str() const;
  /// Accepts "" or "0" for the empty partition.
  static Partition parse(std::string_view text);

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

/// Validating constructor: trailing zeros are stripped, anything else that is
/// not weakly decreasing and nonnegative is rejected.
Partition make_partition(std::span<const int> raw);

std::vector<Partition> partitions_in_box(int rows, int cols);
std::vector<Partition> partitions_in_box_of_size(int rows, int cols, long size);

}  // namespace tevelev
