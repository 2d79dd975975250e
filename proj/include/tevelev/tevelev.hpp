#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tevelev/schubert.hpp"
#include "tevelev/tableaux.hpp"

namespace tevelev {

/// counts[j] = number of incidence conditions with a dimension-j linear
/// space, j = 0..r-1; each such condition has codimension r-j.
struct ConditionVector {
  std::vector<long> counts;

  long total() const;          // n
  long weight(int r) const;    // sum over j of (r-j) * counts[j]
  bool points_only() const;    // counts[1..] all zero
  static ConditionVector points(int r, long n);
  std::string str() const;
};

struct TevelevProblem {
  int r = 1;
  int g = 0;
  int d = 0;
  ConditionVector conditions;
};

/// Checks (r+1)(d+1) - 1 - rg against the condition weight and returns the
/// validated problem; the error message reports both sides.
TevelevProblem validate_numerology(int r, int g, int d,
                                   const ConditionVector& conditions);

/// Number of degree-d maps from a general genus-g curve sending n marked
/// points to n general points of P^r.
Int tev_pr(int r, int g, long n, int d);

/// Closed binomial formula for the P^1 counts; binomials with negative lower
/// index vanish.
Int tev_p1_closed(int g, int d);

/// Minimal-degree count g! (1! ... r!) / (s! ... (s+r)!) with s = g/(r+1),
/// cross-checked against the Schubert integral of sigma_{1^r}^g.
Int castelnuovo(int r, int g);

/// (r+1)^g.
Int virtual_tev(int r, int g);

/// Alternating binomial/SSYT formula for the coefficient of sigma_lambda in
/// the generic torus orbit closure class on Gr(r+1, n).
Int klyachko_coefficient(int r, int n, const Partition& lambda);

/// Class of the point-conditions pushforward on Gr(r+1, d+1): coefficients
/// are stripless SSYT counts, redundantly checked against the Klyachko
/// formula (any disagreement is an internal error, never resolved silently).
SchubertClassVector gamma_class_points(int r, int n, int d);

/// Sum over lambda in the r x (n-r-2) rectangle of sigma_lambda times its
/// complement, expanded on Gr(r+1, n).
SchubertClassVector orbit_closure_class(int r, int n);

/// Mixed point/line class on Gr(3, d+1) with n0 points and n1 lines.
SchubertClassVector gamma_class_p2(int n0, int n1, int d);

/// Mixed point/line count in the plane.
Int count_p2(int g, int n0, int n1, int d);

/// Complete product class sum over compositions a_0 + ... + a_r of
/// |conditions| - r(r+2); valid under one of: (a) n_0 >= d+2, (b) all
/// conditions of codimension 1, (c) r = 2 and n >= d+3.
SchubertClassVector asymptotic_gamma(int r, const ConditionVector& conditions,
                                     int d);

// Point-condition numerology r*n = (r+1)*d - r*g + r, solved for the missing
// parameter; nullopt when no integral solution exists.
std::optional<long> infer_n_points(int r, int g, int d);
std::optional<long> infer_d_points(int r, int g, long n);
std::optional<long> infer_g_points(int r, long n, int d);
// Plane numerology n + n0 = 3d - 2g + 2 solved for d.
std::optional<long> infer_d_p2(int g, long n0, long n1);

}  // namespace tevelev
