#include "tevelev/partition.hpp"

#include <algorithm>
#include <charconv>

#include "tevelev/error.hpp"

namespace tevelev {

namespace {

std::vector<int> validate(std::vector<int> parts) {
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  for (size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 0) fail(Errc::negative_part, "part " + std::to_string(parts[i]));
    if (i > 0 && parts[i] > parts[i - 1])
      fail(Errc::non_monotone, "parts increase at index " + std::to_string(i));
  }
  return parts;
}

}  // namespace

Partition::Partition(std::initializer_list<int> parts)
    : parts_(validate(std::vector<int>(parts))) {}

Partition::Partition(std::vector<int> parts) : parts_(validate(std::move(parts))) {}

Partition make_partition(std::span<const int> raw) {
  return Partition(std::vector<int>(raw.begin(), raw.end()));
}

long Partition::size() const {
  long total = 0;
  for (int p : parts_) total += p;
  return total;
}

bool Partition::fits_in(const Rectangle& box) const {
  return rows() <= box.rows && part(0) <= box.cols;
}

bool Partition::contains(const Partition& mu) const {
  for (int i = 0; i < mu.rows(); ++i)
    if (mu.part(i) > part(i)) return false;
  return true;
}

Partition Partition::conjugate() const {
  std::vector<int> cols(part(0), 0);
  for (int j = 0; j < part(0); ++j)
    for (int i = 0; i < rows(); ++i)
      if (parts_[i] > j) ++cols[j];
  return Partition(std::move(cols));
}

Partition Partition::complement_in(const Rectangle& box) const {
  if (!fits_in(box))
    fail(Errc::does_not_fit,
         str() + " does not fit in " + std::to_string(box.rows) + "x" +
             std::to_string(box.cols));
  std::vector<int> parts(box.rows);
  for (int i = 0; i < box.rows; ++i) parts[i] = box.cols - part(box.rows - 1 - i);
  return Partition(std::move(parts));
}

std::string Partition::str() const {
  std::string out;
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

Partition Partition::parse(std::string_view text) {
  if (text.empty() || text == "0") return {};
  std::vector<int> parts;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t comma = text.find(',', pos);
    std::string_view piece =
        text.substr(pos, comma == std::string_view::npos ? comma : comma - pos);
    int value = 0;
    auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
    if (ec != std::errc() || ptr != piece.data() + piece.size())
      fail(Errc::bad_input, "cannot parse partition part '" + std::string(piece) + "'");
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return Partition(std::move(parts));
}

namespace {

void gen_box(int rows, int cols, int row, int bound, std::vector<int>& acc,
             std::vector<Partition>& out) {
  out.push_back(Partition(acc));
  if (row >= rows) return;
  for (int p = bound; p >= 1; --p) {
    acc.push_back(p);
    gen_box(rows, cols, row + 1, p, acc, out);
    acc.pop_back();
  }
}

void gen_box_sized(int rows, int cols, int row, int bound, long remaining,
                   std::vector<int>& acc, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(Partition(acc));
    return;
  }
  if (row >= rows) return;
  // remaining boxes must fit in the rows still available
  if (remaining > static_cast<long>(rows - row) * bound) return;
  int hi = static_cast<int>(std::min<long>(bound, remaining));
  for (int p = hi; p >= 1; --p) {
    acc.push_back(p);
    gen_box_sized(rows, cols, row + 1, p, remaining - p, acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_in_box(int rows, int cols) {
  std::vector<Partition> out;
  if (rows < 0 || cols < 0) return out;
  std::vector<int> acc;
  gen_box(rows, cols, 0, cols, acc, out);
  return out;
}

std::vector<Partition> partitions_in_box_of_size(int rows, int cols, long size) {
  std::vector<Partition> out;
  if (rows < 0 || cols < 0 || size < 0) return out;
  std::vector<int> acc;
  gen_box_sized(rows, cols, 0, cols, size, acc, out);
  return out;
}

}  // namespace tevelev
