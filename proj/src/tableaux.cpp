#include "tevelev/tableaux.hpp"

#include <algorithm>
#include <numeric>

#include "tevelev/error.hpp"

namespace tevelev {

int Tableau::at(int row, int col) const {
  int idx = 0;
  for (int r = 0; r < row; ++r) idx += shape.part(r);
  return filling[idx + col];
}

std::string Tableau::str() const {
  std::string out;
  int idx = 0;
  for (int r = 0; r < shape.rows(); ++r) {
    for (int c = 0; c < shape.part(r); ++c) {
      if (c) out += ' ';
      out += std::to_string(filling[idx++]);
    }
    out += '\n';
  }
  return out;
}

void for_each_ssyt(const Partition& shape, int max_entry,
                   const TableauVisitor& visit) {
  if (max_entry < 0) fail(Errc::bad_input, "max_entry must be nonnegative");
  const long boxes = shape.size();
  if (boxes == 0) {
    visit(Tableau{shape, max_entry, {}});
    return;
  }
  if (shape.rows() > max_entry) return;  // a column cannot be filled strictly

  const Partition conj = shape.conjugate();
  struct CellRef {
    int row, col;
    int left;   // index of (row, col-1) or -1
    int up;     // index of (row-1, col) or -1
    int below;  // cells strictly below in the same column
  };
  std::vector<CellRef> cells;
  cells.reserve(boxes);
  {
    std::vector<int> row_start(shape.rows() + 1, 0);
    for (int r = 0; r < shape.rows(); ++r)
      row_start[r + 1] = row_start[r] + shape.part(r);
    for (int r = 0; r < shape.rows(); ++r)
      for (int c = 0; c < shape.part(r); ++c)
        cells.push_back({r, c, c > 0 ? row_start[r] + c - 1 : -1,
                         r > 0 ? row_start[r - 1] + c : -1,
                         conj.part(c) - 1 - r});
  }

  Tableau scratch{shape, max_entry, std::vector<int>(boxes, 0)};
  auto& fill = scratch.filling;
  std::function<void(size_t)> rec = [&](size_t idx) {
    if (idx == cells.size()) {
      visit(scratch);
      return;
    }
    const CellRef& cell = cells[idx];
    int lo = 1;
    if (cell.left >= 0) lo = std::max(lo, fill[cell.left]);
    if (cell.up >= 0) lo = std::max(lo, fill[cell.up] + 1);
    int hi = max_entry - cell.below;  // room for the strict column below
    for (int e = lo; e <= hi; ++e) {
      fill[idx] = e;
      rec(idx + 1);
    }
  };
  rec(0);
}

std::vector<Tableau> enumerate_ssyt(const Partition& shape, int max_entry) {
  std::vector<Tableau> out;
  for_each_ssyt(shape, max_entry, [&](const Tableau& t) { out.push_back(t); });
  return out;
}

Int count_ssyt(const Partition& shape, int max_entry) {
  if (max_entry < 0) fail(Errc::bad_input, "max_entry must be nonnegative");
  if (shape.empty()) return 1;
  if (shape.rows() > max_entry) return 0;
  const Partition conj = shape.conjugate();
  Int numerator = 1;
  Int denominator = 1;
  for (int i = 0; i < shape.rows(); ++i) {
    for (int j = 0; j < shape.part(i); ++j) {
      numerator *= max_entry + j - i;
      denominator *= shape.part(i) + conj.part(j) - i - j - 1;
    }
  }
  return exact_div(numerator, denominator);
}

std::vector<int> content_counts(const Tableau& tableau) {
  std::vector<int> counts(tableau.max_entry, 0);
  for (int e : tableau.filling) {
    if (e < 1 || e > tableau.max_entry)
      fail(Errc::bad_input, "entry out of range: " + std::to_string(e));
    ++counts[e - 1];
  }
  return counts;
}

bool has_strip(const Tableau& tableau, int entry, int length) {
  if (entry < 1 || entry >= tableau.max_entry)
    fail(Errc::bad_input, "strip entry out of range");
  if (length <= 0) return true;  // the empty strip
  if (length > tableau.shape.part(0)) return false;

  const Partition conj = tableau.shape.conjugate();
  // Walking the columns left to right, rows weakly decrease and the fill
  // switches once from `entry` to `entry`+1. Only the deepest reachable row
  // per phase matters.
  int best_lo = -1;   // deepest reachable box still filled with `entry`
  int best_any = -1;  // deepest reachable box of either value
  for (int col = 0; col < length; ++col) {
    int next_lo = -1, next_hi = -1;
    for (int row = 0; row < conj.part(col); ++row) {
      int value = tableau.at(row, col);
      if (value == entry && (col == 0 || row <= best_lo)) next_lo = row;
      if (value == entry + 1 && (col == 0 || row <= best_any)) next_hi = row;
    }
    best_lo = next_lo;
    best_any = std::max(next_lo, next_hi);
    if (best_any < 0) return false;
  }
  return true;
}

Int count_stripless(const Partition& shape, int r, int length) {
  if (r < 1) fail(Errc::bad_input, "r must be positive");
  Int count = 0;
  for_each_ssyt(shape, r + 1, [&](const Tableau& t) {
    for (int i = 1; i <= r; ++i)
      if (has_strip(t, i, length)) return;
    count += 1;
  });
  return count;
}

Int gamma_p2_coefficient(const Partition& shape, int n, int n0) {
  if (n0 > n) fail(Errc::bad_input, "n0 exceeds n");
  if (shape.size() != static_cast<long>(n) + n0 - 8)
    fail(Errc::bad_grading, "|shape| = " + std::to_string(shape.size()) +
                                ", expected n + n0 - 8 = " +
                                std::to_string(n + n0 - 8));
  if (n0 < 3)
    fail(Errc::unsupported_regime,
         "fewer than 3 point conditions (n0 = " + std::to_string(n0) + ")");
  if (shape.rows() > 3 || shape.part(0) > n - 3) return 0;
  if (shape.part(0) <= n - 5) return count_ssyt(shape, 3);

  Int count = 0;
  if (shape.part(0) == n - 4) {
    for_each_ssyt(shape, 3, [&](const Tableau& t) {
      if (content_counts(t)[1] <= n0 - 3) count += 1;
    });
  } else {  // shape.part(0) == n - 3
    for_each_ssyt(shape, 3, [&](const Tableau& t) {
      if (!has_strip(t, 1, n0 - 3) && !has_strip(t, 2, n - 3)) count += 1;
    });
  }
  return count;
}

const GridFilling::Cell& GridFilling::at(int row, int col) const {
  return cells[static_cast<size_t>(row) * cols + col];
}

std::string GridFilling::str() const {
  std::string out;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      if (c) out += ' ';
      const Cell& cell = at(r, c);
      out += cell.red ? "r:" : "b:";
      out += std::to_string(cell.value);
    }
    out += '\n';
  }
  return out;
}

namespace {

// Red entries fill the complement of the blue shape: each of 1..g exactly r
// times, strictly decreasing along rows, weakly decreasing down columns.
struct RedFiller {
  const Partition& blue_shape;
  int cols;
  int g;
  const std::vector<std::pair<int, int>>& red_cells;
  const std::vector<int>& red_index;  // grid cell -> index in red_cells, or -1
  std::vector<int>& red_values;
  std::vector<int>& remaining;
  const std::function<void(const std::vector<int>&)>& done;

  void run(size_t idx) {
    if (idx == red_cells.size()) {
      done(red_values);
      return;
    }
    auto [row, col] = red_cells[idx];
    int hi = g;
    if (col > blue_shape.part(row)) hi = std::min(hi, red_values[idx - 1] - 1);
    if (row > 0 && col >= blue_shape.part(row - 1)) {
      int above = red_index[static_cast<size_t>(row - 1) * cols + col];
      hi = std::min(hi, red_values[above]);
    }
    for (int v = 1; v <= hi; ++v) {
      if (remaining[v] == 0) continue;
      --remaining[v];
      red_values[idx] = v;
      run(idx + 1);
      ++remaining[v];
    }
  }
};

}  // namespace

void for_each_grid_filling(int r, int g, int n, int d,
                           const std::function<void(const GridFilling&)>& visit) {
  if (r < 1 || g < 0 || d < 0) fail(Errc::bad_input, "need r >= 1, g >= 0, d >= 0");
  if (static_cast<long>(r) * n != static_cast<long>(r + 1) * d - static_cast<long>(r) * g + r)
    fail(Errc::bad_numerology,
         "r*n = " + std::to_string(static_cast<long>(r) * n) +
             " but (r+1)d - rg + r = " +
             std::to_string(static_cast<long>(r + 1) * d - static_cast<long>(r) * g + r));
  if (n < r + 1) fail(Errc::n_too_small, "n = " + std::to_string(n));

  const int rows = r + 1;
  const int cols = d - r;
  const long blue_total = static_cast<long>(r) * (n - r - 2);
  if (blue_total < 0) return;
  const int strip_len = n - r - 1;

  for (const Partition& blue :
       partitions_in_box_of_size(rows, std::min(cols, strip_len), blue_total)) {
    // red complement, row-major
    std::vector<std::pair<int, int>> red_cells;
    std::vector<int> red_index(static_cast<size_t>(rows) * cols, -1);
    for (int row = 0; row < rows; ++row)
      for (int col = blue.part(row); col < cols; ++col) {
        red_index[static_cast<size_t>(row) * cols + col] =
            static_cast<int>(red_cells.size());
        red_cells.emplace_back(row, col);
      }

    std::vector<Tableau> blues;
    for_each_ssyt(blue, rows, [&](const Tableau& t) {
      for (int i = 1; i <= r; ++i)
        if (has_strip(t, i, strip_len)) return;
      blues.push_back(t);
    });
    if (blues.empty()) continue;

    std::vector<int> red_values(red_cells.size(), 0);
    std::vector<int> remaining(g + 1, r);
    std::function<void(const std::vector<int>&)> emit =
        [&](const std::vector<int>& reds) {
          for (const Tableau& bt : blues) {
            GridFilling filling;
            filling.rows = rows;
            filling.cols = cols;
            filling.cells.assign(static_cast<size_t>(rows) * cols, {});
            int bidx = 0;
            for (int row = 0; row < rows; ++row)
              for (int col = 0; col < blue.part(row); ++col)
                filling.cells[static_cast<size_t>(row) * cols + col] = {
                    false, bt.filling[bidx++]};
            for (size_t i = 0; i < red_cells.size(); ++i) {
              auto [row, col] = red_cells[i];
              filling.cells[static_cast<size_t>(row) * cols + col] = {true,
                                                                      reds[i]};
            }
            visit(filling);
          }
        };
    RedFiller filler{blue, cols, g, red_cells, red_index, red_values,
                     remaining, emit};
    filler.run(0);
  }
}

Int count_grid_fillings(int r, int g, int n, int d) {
  Int count = 0;
  for_each_grid_filling(r, g, n, d, [&](const GridFilling&) { count += 1; });
  return count;
}

}  // namespace tevelev
