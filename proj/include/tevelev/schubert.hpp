#pragma once

#include <map>
#include <string>

#include "tevelev/numeric.hpp"
#include "tevelev/partition.hpp"

namespace tevelev {

/// Gr(k, N): k-dimensional subspaces of an N-dimensional space. Schubert
/// classes are indexed by partitions in the k x (N-k) box.
struct GrassContext {
  int k = 1;
  int N = 1;

  GrassContext(int k_, int N_);
  int box_cols() const { return N - k; }
  Rectangle box() const { return {k, N - k}; }
  /// The full-box partition (N-k)^k dual to the point class.
  Partition top() const;

  friend bool operator==(const GrassContext&, const GrassContext&) = default;
};

/// Finitely supported integer combination of Schubert classes. Keys always
/// fit the context box; zero coefficients are never stored.
class SchubertClassVector {
 public:
  explicit SchubertClassVector(GrassContext ctx) : ctx_(ctx) {}
  static SchubertClassVector zero(GrassContext ctx);
  static SchubertClassVector unit(GrassContext ctx);
  /// sigma_lambda, or zero when lambda does not fit the box.
  static SchubertClassVector basis(GrassContext ctx, const Partition& lambda);

  const GrassContext& ctx() const { return ctx_; }
  const std::map<Partition, Int>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Int coefficient(const Partition& lambda) const;

  /// Adds coeff * sigma_lambda, silently discarding classes outside the box.
  void add_term(const Partition& lambda, const Int& coeff);
  SchubertClassVector& operator+=(const SchubertClassVector& other);

  /// True when every stored term has the same size; degree receives it.
  bool is_homogeneous(long* degree = nullptr) const;

  std::string str() const;

  friend bool operator==(const SchubertClassVector&,
                         const SchubertClassVector&) = default;

 private:
  GrassContext ctx_;
  std::map<Partition, Int> terms_;
};

enum class TruncationKind {
  first_part_at_most,
  second_part_at_least,
  first_part_at_least,
};

/// x * sigma_a: horizontal strips of size a, box-truncated.
SchubertClassVector pieri_row(const SchubertClassVector& x, int a);

/// x * sigma_{1^j}: vertical strips of size j, box-truncated.
SchubertClassVector pieri_column(const SchubertClassVector& x, int j);

/// c^{nu}_{lambda,mu}: Littlewood-Richardson skew tableaux of shape nu/lambda
/// and content mu, counted by direct enumeration (memoized).
Int lr_coefficient(const Partition& lambda, const Partition& mu,
                   const Partition& nu);

SchubertClassVector multiply(const SchubertClassVector& x,
                             const SchubertClassVector& y);

/// (sigma_{1^{k-1}})^g, memoized per (g, ctx).
SchubertClassVector power_sigma_one_r(int g, const GrassContext& ctx);

SchubertClassVector truncate(const SchubertClassVector& x, TruncationKind kind,
                             int m);

/// Coefficient of the full-box class.
Int integrate(const SchubertClassVector& x);

/// JSON list of {"partition": "a,b,c", "coeff": "<decimal>"} with the
/// largest first part serialized first. Coefficients are strings so that
/// consumers never overflow.
std::string class_to_json(const SchubertClassVector& x);

/// Optional persisted LR memo table (one key-value file with a versioned
/// header; stale or malformed files are ignored).
void lr_cache_load(const std::string& dir);
bool lr_cache_save(const std::string& dir);

}  // namespace tevelev
