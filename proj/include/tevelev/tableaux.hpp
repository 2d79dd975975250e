#pragma once

#include <functional>
#include <string>
#include <vector>

#include "tevelev/numeric.hpp"
#include "tevelev/partition.hpp"

namespace tevelev {

/// Semistandard Young tableau: rows weakly increase, columns strictly
/// increase, entries in 1..max_entry. Filling is row-major.
struct Tableau {
  Partition shape;
  int max_entry = 0;
  std::vector<int> filling;

  int at(int row, int col) const;
  /// Rows of space-separated entries, one row per line.
  std::string str() const;
};

using TableauVisitor = std::function<void(const Tableau&)>;

/// Visits every SSYT of the given shape exactly once, in lexicographic order
/// on the row-major filling. Infeasible inputs yield an empty stream.
void for_each_ssyt(const Partition& shape, int max_entry,
                   const TableauVisitor& visit);
std::vector<Tableau> enumerate_ssyt(const Partition& shape, int max_entry);

/// |SSYT_{max_entry}(shape)| by the hook-content product, exactly.
Int count_ssyt(const Partition& shape, int max_entry);

/// (c_1, ..., c_m): the number of appearances of each entry.
std::vector<int> content_counts(const Tableau& tableau);

/// Whether the tableau contains an (entry, entry+1)-strip of the given
/// length: one box in each of the first `length` columns, boxes never
/// strictly north-east of one another, filled with `entry` then `entry`+1
/// left to right. A length of zero is vacuously present.
bool has_strip(const Tableau& tableau, int entry, int length);

/// SSYTs of the shape with r+1 entries and no (i,i+1)-strip of the given
/// length for any i = 1..r.
Int count_stripless(const Partition& shape, int r, int length);

/// Coefficient counting the SSYT_3 subset cut out by the first-part cases
/// lambda_0 <= n-5 / = n-4 / = n-3 / > n-3 for mixed point-line conditions
/// in the plane. Requires |shape| = n + n0 - 8 and n0 >= 3.
Int gamma_p2_coefficient(const Partition& shape, int n, int n0);

/// Filling of an (r+1) x (d-r) grid by blue entries (an SSYT, top- and
/// left-justified, strip-constrained) and red entries (each of 1..g exactly
/// r times, strictly decreasing along rows, weakly decreasing down columns).
struct GridFilling {
  int rows = 0;
  int cols = 0;
  struct Cell {
    bool red = false;
    int value = 0;
  };
  std::vector<Cell> cells;  // row-major

  const Cell& at(int row, int col) const;
  /// One line per row, cells rendered as "b:2" / "r:5".
  std::string str() const;
};

void for_each_grid_filling(int r, int g, int n, int d,
                           const std::function<void(const GridFilling&)>& visit);
Int count_grid_fillings(int r, int g, int n, int d);

}  // namespace tevelev
