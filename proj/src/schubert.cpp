#include "tevelev/schubert.hpp"

#include <array>
#include <filesystem>
#include <fstream>
#include <functional>
#include <mutex>
#include <sstream>
#include <tuple>

#include "json.hpp"
#include "tevelev/error.hpp"

namespace tevelev {

GrassContext::GrassContext(int k_, int N_) : k(k_), N(N_) {
  if (k < 1 || k > N)
    fail(Errc::bad_input, "Gr(" + std::to_string(k) + "," + std::to_string(N) +
                              ") requires 1 <= k <= N");
}

Partition GrassContext::top() const {
  return Partition(std::vector<int>(k, N - k));
}

SchubertClassVector SchubertClassVector::zero(GrassContext ctx) {
  return SchubertClassVector(ctx);
}

SchubertClassVector SchubertClassVector::unit(GrassContext ctx) {
  SchubertClassVector v(ctx);
  v.add_term(Partition{}, 1);
  return v;
}

SchubertClassVector SchubertClassVector::basis(GrassContext ctx,
                                               const Partition& lambda) {
  SchubertClassVector v(ctx);
  v.add_term(lambda, 1);
  return v;
}

Int SchubertClassVector::coefficient(const Partition& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? Int(0) : it->second;
}

void SchubertClassVector::add_term(const Partition& lambda, const Int& coeff) {
  if (coeff == 0) return;
  if (!lambda.fits_in(ctx_.box())) return;
  Int& slot = terms_[lambda];
  slot += coeff;
  if (slot == 0) terms_.erase(lambda);
}

SchubertClassVector& SchubertClassVector::operator+=(
    const SchubertClassVector& other) {
  if (!(ctx_ == other.ctx_)) fail(Errc::ctx_mismatch, "adding across contexts");
  for (const auto& [lambda, coeff] : other.terms_) add_term(lambda, coeff);
  return *this;
}

bool SchubertClassVector::is_homogeneous(long* degree) const {
  long deg = -1;
  for (const auto& [lambda, coeff] : terms_) {
    if (deg < 0)
      deg = lambda.size();
    else if (deg != lambda.size())
      return false;
  }
  if (degree) *degree = deg < 0 ? 0 : deg;
  return true;
}

std::string SchubertClassVector::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!out.empty()) out += " + ";
    if (it->second != 1) out += it->second.str() + "*";
    out += "s[" + it->first.str() + "]";
  }
  return out;
}

namespace {

// One box per column at most: lambda_{i-1} >= mu_i >= lambda_i.
void horizontal_strips(const Partition& lambda, int amount, const Rectangle& box,
                       const std::function<void(Partition)>& emit) {
  const int max_rows = std::min(box.rows, lambda.rows() + 1);
  std::vector<int> mu(max_rows, 0);
  std::function<void(int, int)> rec = [&](int row, int remaining) {
    if (row == max_rows) {
      if (remaining == 0) emit(Partition(std::vector<int>(mu)));
      return;
    }
    const int lo = lambda.part(row);
    const int hi = std::min(row == 0 ? box.cols : lambda.part(row - 1),
                            lo + remaining);
    for (int p = lo; p <= hi; ++p) {
      mu[row] = p;
      rec(row + 1, remaining - (p - lo));
    }
    mu[row] = 0;
  };
  rec(0, amount);
}

// One box per row at most: mu_i in {lambda_i, lambda_i + 1}.
void vertical_strips(const Partition& lambda, int amount, const Rectangle& box,
                     const std::function<void(Partition)>& emit) {
  const int max_rows = box.rows;
  std::vector<int> mu(max_rows, 0);
  std::function<void(int, int)> rec = [&](int row, int remaining) {
    if (remaining > max_rows - row) return;
    if (row == max_rows) {
      emit(Partition(std::vector<int>(mu)));
      return;
    }
    mu[row] = lambda.part(row);
    rec(row + 1, remaining);
    if (remaining > 0) {
      int grown = lambda.part(row) + 1;
      if (grown <= (row == 0 ? box.cols : mu[row - 1])) {
        mu[row] = grown;
        rec(row + 1, remaining - 1);
      }
    }
    mu[row] = 0;
  };
  rec(0, amount);
}

// Count of LR skew tableaux of shape nu/lambda with content mu: column
// strict, row weak, reverse reading word a lattice word.
Int lr_count(const Partition& nu, const Partition& lambda, const Partition& mu) {
  if (!nu.contains(lambda) || !nu.contains(mu)) return 0;
  struct Cell {
    int row, col;
    bool right_inside;  // (row, col+1) in the skew shape
    bool up_inside;     // (row-1, col) in the skew shape
  };
  std::vector<Cell> cells;
  for (int r = 0; r < nu.rows(); ++r)
    for (int c = nu.part(r) - 1; c >= lambda.part(r); --c)
      cells.push_back({r, c, c + 1 < nu.part(r),
                       r > 0 && c >= lambda.part(r - 1) && c < nu.part(r - 1)});
  const int k = mu.rows();
  std::vector<int> counts(k + 2, 0);
  std::vector<std::vector<int>> entry(nu.rows());
  for (int r = 0; r < nu.rows(); ++r) entry[r].assign(nu.part(r), 0);

  Int total = 0;
  std::function<void(size_t)> rec = [&](size_t idx) {
    if (idx == cells.size()) {
      total += 1;
      return;
    }
    const Cell& cell = cells[idx];
    int lo = 1;
    int hi = k;
    if (cell.right_inside) hi = std::min(hi, entry[cell.row][cell.col + 1]);
    if (cell.up_inside) lo = std::max(lo, entry[cell.row - 1][cell.col] + 1);
    for (int e = lo; e <= hi; ++e) {
      if (counts[e] >= mu.part(e - 1)) continue;
      if (e > 1 && counts[e] >= counts[e - 1]) continue;  // lattice prefix
      ++counts[e];
      entry[cell.row][cell.col] = e;
      rec(idx + 1);
      --counts[e];
    }
  };
  rec(0);
  return total;
}

std::mutex lr_mutex;
std::map<std::array<Partition, 3>, Int> lr_memo;
bool lr_memo_dirty = false;

bool is_single_column(const Partition& p) { return p.part(0) <= 1; }

using Expansion = std::map<Partition, Int>;

// sigma_lambda * sigma_mu in the given box, memoized.
const Expansion& basis_product(const GrassContext& ctx, const Partition& a,
                               const Partition& b) {
  static std::mutex mutex;
  static std::map<std::tuple<int, int, Partition, Partition>, Expansion> memo;

  const Partition& lambda = a < b ? b : a;  // canonical order
  const Partition& mu = a < b ? a : b;
  std::tuple<int, int, Partition, Partition> key{ctx.k, ctx.box_cols(), lambda,
                                                 mu};
  {
    std::scoped_lock lock(mutex);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }

  Expansion result;
  auto emit = [&](Partition nu) {
    if (nu.fits_in(ctx.box())) result[std::move(nu)] += 1;
  };
  if (mu.rows() <= 1) {
    horizontal_strips(lambda, mu.part(0), ctx.box(), emit);
  } else if (is_single_column(mu)) {
    vertical_strips(lambda, mu.rows(), ctx.box(), emit);
  } else {
    const long target = lambda.size() + mu.size();
    for (const Partition& nu :
         partitions_in_box_of_size(ctx.k, ctx.box_cols(), target)) {
      Int c = lr_coefficient(lambda, mu, nu);
      if (c != 0) result[nu] = c;
    }
  }

  std::scoped_lock lock(mutex);
  return memo.emplace(std::move(key), std::move(result)).first->second;
}

}  // namespace

SchubertClassVector pieri_row(const SchubertClassVector& x, int a) {
  if (a < 0) fail(Errc::bad_input, "pieri_row needs a >= 0");
  SchubertClassVector out(x.ctx());
  for (const auto& [lambda, coeff] : x.terms()) {
    const Int& c = coeff;
    horizontal_strips(lambda, a, x.ctx().box(),
                      [&](Partition nu) { out.add_term(nu, c); });
  }
  return out;
}

SchubertClassVector pieri_column(const SchubertClassVector& x, int j) {
  if (j < 0 || j > x.ctx().k) fail(Errc::bad_input, "pieri_column needs 0 <= j <= k");
  SchubertClassVector out(x.ctx());
  for (const auto& [lambda, coeff] : x.terms()) {
    const Int& c = coeff;
    vertical_strips(lambda, j, x.ctx().box(),
                    [&](Partition nu) { out.add_term(nu, c); });
  }
  return out;
}

Int lr_coefficient(const Partition& lambda, const Partition& mu,
                   const Partition& nu) {
  if (lambda.size() + mu.size() != nu.size())
    fail(Errc::bad_grading, "|lambda| + |mu| != |nu|");
  const Partition& first = lambda < mu ? mu : lambda;
  const Partition& second = lambda < mu ? lambda : mu;
  std::array<Partition, 3> key{first, second, nu};
  {
    std::scoped_lock lock(lr_mutex);
    auto it = lr_memo.find(key);
    if (it != lr_memo.end()) return it->second;
  }
  // enumerate with the smaller partition as content
  Int value = lr_count(nu, first, second);
  std::scoped_lock lock(lr_mutex);
  lr_memo_dirty = true;
  return lr_memo.emplace(std::move(key), std::move(value)).first->second;
}

SchubertClassVector multiply(const SchubertClassVector& x,
                             const SchubertClassVector& y) {
  if (!(x.ctx() == y.ctx())) fail(Errc::ctx_mismatch, "multiplying across contexts");
  SchubertClassVector out(x.ctx());
  for (const auto& [lambda, a] : x.terms()) {
    for (const auto& [mu, b] : y.terms()) {
      Int scale = a * b;
      for (const auto& [nu, c] : basis_product(x.ctx(), lambda, mu))
        out.add_term(nu, scale * c);
    }
  }
  return out;
}

SchubertClassVector power_sigma_one_r(int g, const GrassContext& ctx) {
  if (g < 0) fail(Errc::bad_input, "negative power");
  static std::mutex mutex;
  static std::map<std::tuple<int, int, int>, SchubertClassVector> memo;
  std::tuple<int, int, int> key{ctx.k, ctx.N, g};
  {
    std::scoped_lock lock(mutex);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }
  SchubertClassVector result = g == 0
                                   ? SchubertClassVector::unit(ctx)
                                   : pieri_column(power_sigma_one_r(g - 1, ctx),
                                                  ctx.k - 1);
  std::scoped_lock lock(mutex);
  return memo.emplace(key, std::move(result)).first->second;
}

SchubertClassVector truncate(const SchubertClassVector& x, TruncationKind kind,
                             int m) {
  SchubertClassVector out(x.ctx());
  for (const auto& [lambda, coeff] : x.terms()) {
    bool keep = false;
    switch (kind) {
      case TruncationKind::first_part_at_most: keep = lambda.part(0) <= m; break;
      case TruncationKind::second_part_at_least: keep = lambda.part(1) >= m; break;
      case TruncationKind::first_part_at_least: keep = lambda.part(0) >= m; break;
    }
    if (keep) out.add_term(lambda, coeff);
  }
  return out;
}

Int integrate(const SchubertClassVector& x) {
  return x.coefficient(x.ctx().top());
}

std::string class_to_json(const SchubertClassVector& x) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  const auto& terms = x.terms();
  for (auto it = terms.rbegin(); it != terms.rend(); ++it)
    arr.push_back({{"partition", it->first.str()}, {"coeff", it->second.str()}});
  return arr.dump();
}

namespace {

constexpr const char* kCacheHeader = "tevelev-lr-cache 1";

std::filesystem::path cache_file(const std::string& dir) {
  return std::filesystem::path(dir) / "lr-cache.kv";
}

}  // namespace

void lr_cache_load(const std::string& dir) {
  std::ifstream in(cache_file(dir));
  if (!in) return;
  std::string header;
  if (!std::getline(in, header) || header != kCacheHeader) return;
  std::string line;
  std::scoped_lock lock(lr_mutex);
  while (std::getline(in, line)) {
    std::istringstream fields(line);
    std::string lam, mu, nu, coeff;
    if (!(fields >> lam >> mu >> nu >> coeff)) continue;
    auto strip = [](std::string& s) {
      if (s == "-") s.clear();
    };
    strip(lam);
    strip(mu);
    strip(nu);
    try {
      std::array<Partition, 3> key{Partition::parse(lam), Partition::parse(mu),
                                   Partition::parse(nu)};
      lr_memo.emplace(std::move(key), Int(coeff));
    } catch (const std::exception&) {
      // malformed entries are skipped; the cache is always safe to delete
    }
  }
}

bool lr_cache_save(const std::string& dir) {
  std::scoped_lock lock(lr_mutex);
  if (!lr_memo_dirty) return true;
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  std::ofstream out(cache_file(dir), std::ios::trunc);
  if (!out) return false;
  out << kCacheHeader << '\n';
  auto or_dash = [](const std::string& s) { return s.empty() ? std::string("-") : s; };
  for (const auto& [key, value] : lr_memo)
    out << or_dash(key[0].str()) << ' ' << or_dash(key[1].str()) << ' '
        << or_dash(key[2].str()) << ' ' << value.str() << '\n';
  return static_cast<bool>(out);
}

}  // namespace tevelev
