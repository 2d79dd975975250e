#pragma once

#include <string>
#include <vector>

#include "tevelev/tevelev.hpp"

namespace tevelev {

/// Outcome of one cross-validation suite. A suite passes iff `mismatches`
/// is empty; every suite reports the exhaustive number of cases it ran.
struct VerificationReport {
  struct Mismatch {
    std::string input;
    std::string lhs;
    std::string rhs;
  };

  std::string suite;
  long cases_run = 0;
  std::vector<Mismatch> mismatches;

  bool passed() const { return mismatches.empty(); }
  void record(const std::string& input, const std::string& lhs,
              const std::string& rhs);
  void merge(const VerificationReport& other);
  std::string to_json() const;
  std::string str() const;
};

/// Integral of sigma_{1^r}^g against the complete product class equals
/// (r+1)^g in the large-degree regime d >= rg + r.
VerificationReport verify_virtual_identity(int r, int g, int d);

/// Klyachko's alternating formula against the stripless SSYT count, for
/// every partition in the grading.
VerificationReport verify_klyachko_vs_stripless(int r, int n);

/// Orbit closure class expansion against gamma_class_points at d = n-1.
VerificationReport verify_orbit_class(int r, int n);

/// Independent class built from the four families of degenerate-component
/// contributions on Gr(3, n) (d = n-1). Two-row symbols with out-of-order or
/// negative indices contribute zero; single-row symbols with negative index
/// contribute zero.
SchubertClassVector p2_component_classes(int n0, int n);

/// p2_component_classes against gamma_class_p2(n0, n-n0, n-1), coefficient
/// by coefficient. This is the designated arbiter for the strip-length
/// boundary cases: disagreements are reported verbatim, never adjusted.
VerificationReport verify_p2_components(int n0, int n);

/// Grid-filling count against tev_pr.
VerificationReport verify_grid_oracle(int r, int g, int n, int d);

/// Hook-content count against brute-force enumeration over every shape with
/// at most max_boxes boxes.
VerificationReport verify_ssyt_count(int max_boxes, int max_entry);

/// Gamma coefficients are bounded by SSYT counts and monotone under
/// (lambda, n, d) -> (lambda + r, n + (r+1), d + r).
VerificationReport verify_bounds_and_monotonicity(
    int r, const ConditionVector& conditions, int d);

}  // namespace tevelev
