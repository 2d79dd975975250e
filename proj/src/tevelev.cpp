#include "tevelev/tevelev.hpp"

#include <algorithm>

#include "tevelev/error.hpp"

namespace tevelev {

long ConditionVector::total() const {
  long n = 0;
  for (long c : counts) n += c;
  return n;
}

long ConditionVector::weight(int r) const {
  long w = 0;
  for (size_t j = 0; j < counts.size(); ++j)
    w += (r - static_cast<long>(j)) * counts[j];
  return w;
}

bool ConditionVector::points_only() const {
  for (size_t j = 1; j < counts.size(); ++j)
    if (counts[j] != 0) return false;
  return true;
}

ConditionVector ConditionVector::points(int r, long n) {
  ConditionVector v;
  v.counts.assign(r, 0);
  v.counts[0] = n;
  return v;
}

std::string ConditionVector::str() const {
  std::string out = "(";
  for (size_t j = 0; j < counts.size(); ++j) {
    if (j) out += ',';
    out += std::to_string(counts[j]);
  }
  return out + ")";
}

TevelevProblem validate_numerology(int r, int g, int d,
                                   const ConditionVector& conditions) {
  if (r < 1) fail(Errc::bad_input, "r must be positive");
  if (g < 0 || d < 0) fail(Errc::bad_input, "g and d must be nonnegative");
  if (conditions.counts.size() != static_cast<size_t>(r))
    fail(Errc::bad_input, "condition vector needs exactly r entries");
  for (long c : conditions.counts)
    if (c < 0) fail(Errc::bad_input, "negative condition count");
  const long lhs = static_cast<long>(r + 1) * (d + 1) - 1 - static_cast<long>(r) * g;
  const long rhs = conditions.weight(r);
  if (lhs != rhs)
    fail(Errc::bad_numerology, "(r+1)(d+1)-1-rg = " + std::to_string(lhs) +
                                   " but |n| = " + std::to_string(rhs));
  return TevelevProblem{r, g, d, conditions};
}

namespace {

void check_points_numerology(int r, int g, long n, int d) {
  if (r < 1) fail(Errc::bad_input, "r must be positive");
  if (g < 0 || d < 0) fail(Errc::bad_input, "g and d must be nonnegative");
  const long lhs = static_cast<long>(r) * n;
  const long rhs = static_cast<long>(r + 1) * d - static_cast<long>(r) * g + r;
  if (lhs != rhs)
    fail(Errc::bad_numerology, "r*n = " + std::to_string(lhs) +
                                   " but (r+1)d - rg + r = " + std::to_string(rhs));
}

}  // namespace

Int tev_pr(int r, int g, long n, int d) {
  check_points_numerology(r, g, n, d);
  if (n < r + 1) fail(Errc::n_too_small, "n = " + std::to_string(n) +
                                             " < r + 1 = " + std::to_string(r + 1));
  if (n == r + 1) return 0;  // the pushforward vanishes at the minimal n

  const GrassContext ctx(r + 1, d + 1);
  const Rectangle rect{r, static_cast<int>(n) - r - 2};
  SchubertClassVector sum = SchubertClassVector::zero(ctx);
  for (const Partition& lambda : partitions_in_box(rect.rows, rect.cols)) {
    const Partition bar = lambda.complement_in(rect);
    if (!lambda.fits_in(ctx.box()) || !bar.fits_in(ctx.box())) continue;
    sum += multiply(SchubertClassVector::basis(ctx, lambda),
                    SchubertClassVector::basis(ctx, bar));
  }
  sum = truncate(sum, TruncationKind::first_part_at_most, static_cast<int>(n) - r - 1);
  return integrate(multiply(power_sigma_one_r(g, ctx), sum));
}

Int tev_p1_closed(int g, int d) {
  if (g < 0 || d < 0) fail(Errc::bad_input, "g and d must be nonnegative");
  const long n = 2L * d - g + 1;
  if (n < 2) fail(Errc::bad_numerology, "n = 2d - g + 1 = " + std::to_string(n) + " < 2");
  Int result = int_pow(2, g);
  for (long j = 0; j <= static_cast<long>(g) - d - 1; ++j)
    result -= 2 * binomial(g, j);
  result += Int(static_cast<long>(g) - d - 1) * binomial(g, static_cast<long>(g) - d);
  result += Int(static_cast<long>(d) - g - 1) * binomial(g, static_cast<long>(g) - d + 1);
  return result;
}

Int castelnuovo(int r, int g) {
  if (r < 1 || g < 0) fail(Errc::bad_input, "need r >= 1 and g >= 0");
  if (g % (r + 1) != 0)
    fail(Errc::bad_divisibility, std::to_string(r + 1) + " does not divide g = " +
                                     std::to_string(g));
  const int s = g / (r + 1);
  const int d = r * (s + 1);

  Int numerator = factorial(g);
  for (int i = 1; i <= r; ++i) numerator *= factorial(i);
  Int denominator = 1;
  for (int i = 0; i <= r; ++i) denominator *= factorial(s + i);
  const Int closed = exact_div(numerator, denominator);

  const Int integral = integrate(power_sigma_one_r(g, GrassContext(r + 1, d + 1)));
  if (closed != integral)
    fail(Errc::internal_mismatch, "closed form " + closed.str() +
                                      " != integral " + integral.str());
  return closed;
}

Int virtual_tev(int r, int g) {
  if (r < 1 || g < 0) fail(Errc::bad_input, "need r >= 1 and g >= 0");
  return int_pow(r + 1, g);
}

Int klyachko_coefficient(int r, int n, const Partition& lambda) {
  if (r < 1 || n < r + 2) fail(Errc::bad_input, "need r >= 1 and n >= r + 2");
  const int width = n - r - 1;
  if (!lambda.fits_in({r + 1, width}))
    fail(Errc::does_not_fit, lambda.str() + " exceeds the (n-r-1)^{r+1} box");
  if (lambda.size() != static_cast<long>(r) * (n - r - 2))
    fail(Errc::bad_grading, "|lambda| = " + std::to_string(lambda.size()) +
                                ", expected r(n-r-2) = " +
                                std::to_string(static_cast<long>(r) * (n - r - 2)));
  int m = 0;
  while (m < lambda.rows() && lambda.part(m) == width) ++m;

  Int result = 0;
  for (int j = 0; j <= m; ++j) {
    std::vector<int> rest(lambda.parts().begin() + j, lambda.parts().end());
    Int term = binomial(n, j) * count_ssyt(Partition(std::move(rest)), r + 1 - j);
    if (j % 2 == 0)
      result += term;
    else
      result -= term;
  }
  return result;
}

SchubertClassVector gamma_class_points(int r, int n, int d) {
  if (r < 1) fail(Errc::bad_input, "r must be positive");
  if (n < r + 2) fail(Errc::n_too_small, "n = " + std::to_string(n) +
                                             " < r + 2 = " + std::to_string(r + 2));
  if (d < r) fail(Errc::bad_input, "d < r");
  const GrassContext ctx(r + 1, d + 1);
  const long grading = static_cast<long>(r) * (n - r - 2);
  SchubertClassVector out = SchubertClassVector::zero(ctx);
  for (const Partition& lambda :
       partitions_in_box_of_size(r + 1, d - r, grading)) {
    if (lambda.part(0) > n - r - 1) continue;  // vanishing above the cutoff
    const Int stripless = count_stripless(lambda, r, n - r - 1);
    const Int klyachko = klyachko_coefficient(r, n, lambda);
    if (stripless != klyachko)
      fail(Errc::internal_mismatch,
           "coefficient at " + lambda.str() + ": stripless " + stripless.str() +
               " vs klyachko " + klyachko.str());
    out.add_term(lambda, stripless);
  }
  return out;
}

SchubertClassVector orbit_closure_class(int r, int n) {
  if (r < 1) fail(Errc::bad_input, "r must be positive");
  if (n < r + 2) fail(Errc::n_too_small, "n = " + std::to_string(n));
  const GrassContext ctx(r + 1, n);
  const Rectangle rect{r, n - r - 2};
  SchubertClassVector out = SchubertClassVector::zero(ctx);
  for (const Partition& lambda : partitions_in_box(rect.rows, rect.cols))
    out += multiply(SchubertClassVector::basis(ctx, lambda),
                    SchubertClassVector::basis(ctx, lambda.complement_in(rect)));
  return out;
}

SchubertClassVector gamma_class_p2(int n0, int n1, int d) {
  if (n0 < 3)
    fail(Errc::unsupported_regime,
         "fewer than 3 point conditions (n0 = " + std::to_string(n0) + ")");
  if (n1 < 0) fail(Errc::bad_input, "negative line count");
  if (d < 2) fail(Errc::bad_input, "d < 2");
  const int n = n0 + n1;
  const GrassContext ctx(3, d + 1);
  const long grading = static_cast<long>(n) + n0 - 8;
  SchubertClassVector out = SchubertClassVector::zero(ctx);
  if (grading < 0) return out;
  for (const Partition& lambda : partitions_in_box_of_size(3, d - 2, grading))
    out.add_term(lambda, gamma_p2_coefficient(lambda, n, n0));
  return out;
}

Int count_p2(int g, int n0, int n1, int d) {
  if (g < 0 || n1 < 0) fail(Errc::bad_input, "need g >= 0 and n1 >= 0");
  const long n = static_cast<long>(n0) + n1;
  const long lhs = n + n0;
  const long rhs = 3L * d - 2L * g + 2;
  if (lhs != rhs)
    fail(Errc::bad_numerology, "n + n0 = " + std::to_string(lhs) +
                                   " but 3d - 2g + 2 = " + std::to_string(rhs));
  const GrassContext ctx(3, d + 1);
  return integrate(multiply(power_sigma_one_r(g, ctx), gamma_class_p2(n0, n1, d)));
}

SchubertClassVector asymptotic_gamma(int r, const ConditionVector& conditions,
                                     int d) {
  if (r < 1) fail(Errc::bad_input, "r must be positive");
  if (conditions.counts.size() != static_cast<size_t>(r))
    fail(Errc::bad_input, "condition vector needs exactly r entries");
  const long n0 = conditions.counts[0];
  const long n = conditions.total();
  const bool hyp_a = n0 >= static_cast<long>(d) + 2;
  bool hyp_b = true;
  for (int j = 0; j <= r - 2; ++j)
    if (conditions.counts[j] != 0) hyp_b = false;
  const bool hyp_c = (r == 2) && n >= static_cast<long>(d) + 3;
  if (!hyp_a && !hyp_b && !hyp_c)
    fail(Errc::hypothesis_not_met,
         "none of (a) n0 >= d+2, (b) lines only, (c) r = 2 and n >= d+3 holds");

  const GrassContext ctx(r + 1, d + 1);
  const long degree = conditions.weight(r) - static_cast<long>(r) * (r + 2);
  SchubertClassVector acc = SchubertClassVector::unit(ctx);
  if (degree < 0) return SchubertClassVector::zero(ctx);
  for (int factor = 0; factor <= r; ++factor) {
    SchubertClassVector next = SchubertClassVector::zero(ctx);
    const int cap = static_cast<int>(std::min<long>(degree, ctx.box_cols()));
    for (int a = 0; a <= cap; ++a) next += pieri_row(acc, a);
    acc = std::move(next);
  }
  SchubertClassVector out = SchubertClassVector::zero(ctx);
  for (const auto& [lambda, coeff] : acc.terms())
    if (lambda.size() == degree) out.add_term(lambda, coeff);
  return out;
}

std::optional<long> infer_n_points(int r, int g, int d) {
  const long numerator = static_cast<long>(r + 1) * d - static_cast<long>(r) * g + r;
  if (numerator % r != 0) return std::nullopt;
  return numerator / r;
}

std::optional<long> infer_d_points(int r, int g, long n) {
  const long numerator = static_cast<long>(r) * (n + g - 1);
  if (numerator % (r + 1) != 0) return std::nullopt;
  return numerator / (r + 1);
}

std::optional<long> infer_g_points(int r, long n, int d) {
  const long numerator = static_cast<long>(r + 1) * d + r - static_cast<long>(r) * n;
  if (numerator % r != 0) return std::nullopt;
  return numerator / r;
}

std::optional<long> infer_d_p2(int g, long n0, long n1) {
  const long numerator = n0 + n1 + n0 + 2L * g - 2;
  if (numerator % 3 != 0) return std::nullopt;
  return numerator / 3;
}

}  // namespace tevelev
