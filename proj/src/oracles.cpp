#include "tevelev/oracles.hpp"

#include <algorithm>
#include <set>

#include "json.hpp"
#include "tevelev/error.hpp"

namespace tevelev {

void VerificationReport::record(const std::string& input, const std::string& lhs,
                                const std::string& rhs) {
  mismatches.push_back({input, lhs, rhs});
}

void VerificationReport::merge(const VerificationReport& other) {
  cases_run += other.cases_run;
  mismatches.insert(mismatches.end(), other.mismatches.begin(),
                    other.mismatches.end());
}

std::string VerificationReport::to_json() const {
  nlohmann::ordered_json j;
  j["suite"] = suite;
  j["cases_run"] = cases_run;
  j["mismatches"] = nlohmann::ordered_json::array();
  for (const auto& m : mismatches)
    j["mismatches"].push_back(
        {{"input", m.input}, {"lhs", m.lhs}, {"rhs", m.rhs}});
  return j.dump();
}

std::string VerificationReport::str() const {
  std::string out = "suite=" + suite + " cases=" + std::to_string(cases_run) +
                    " mismatches=" + std::to_string(mismatches.size());
  for (const auto& m : mismatches)
    out += "\n  " + m.input + ": " + m.lhs + " != " + m.rhs;
  return out;
}

VerificationReport verify_virtual_identity(int r, int g, int d) {
  VerificationReport report;
  report.suite = "virtual";
  if (d < static_cast<long>(r) * g + r)
    fail(Errc::bad_input, "requires d >= rg + r");
  auto n = infer_n_points(r, g, d);
  if (!n) fail(Errc::bad_numerology, "no integral n for (r,g,d)");

  const GrassContext ctx(r + 1, d + 1);
  const SchubertClassVector complete =
      asymptotic_gamma(r, ConditionVector::points(r, *n), d);
  const Int lhs = integrate(multiply(power_sigma_one_r(g, ctx), complete));
  const Int rhs = virtual_tev(r, g);
  report.cases_run = 1;
  if (lhs != rhs)
    report.record("r=" + std::to_string(r) + " g=" + std::to_string(g) +
                      " d=" + std::to_string(d),
                  lhs.str(), rhs.str());
  return report;
}

VerificationReport verify_klyachko_vs_stripless(int r, int n) {
  VerificationReport report;
  report.suite = "klyachko";
  if (n < r + 2) fail(Errc::bad_input, "requires n >= r + 2");
  const long grading = static_cast<long>(r) * (n - r - 2);
  for (const Partition& lambda :
       partitions_in_box_of_size(r + 1, n - r - 1, grading)) {
    const Int a = klyachko_coefficient(r, n, lambda);
    const Int b = count_stripless(lambda, r, n - r - 1);
    ++report.cases_run;
    if (a != b)
      report.record("r=" + std::to_string(r) + " n=" + std::to_string(n) +
                        " lambda=" + lambda.str(),
                    a.str(), b.str());
  }
  return report;
}

namespace {

void compare_classes(const SchubertClassVector& lhs,
                     const SchubertClassVector& rhs, const std::string& label,
                     VerificationReport& report) {
  std::set<Partition> keys;
  for (const auto& [lambda, c] : lhs.terms()) keys.insert(lambda);
  for (const auto& [lambda, c] : rhs.terms()) keys.insert(lambda);
  for (const Partition& lambda : keys) {
    ++report.cases_run;
    const Int a = lhs.coefficient(lambda);
    const Int b = rhs.coefficient(lambda);
    if (a != b) report.record(label + " lambda=" + lambda.str(), a.str(), b.str());
  }
  if (keys.empty()) ++report.cases_run;  // two zero classes still count
}

}  // namespace

VerificationReport verify_orbit_class(int r, int n) {
  VerificationReport report;
  report.suite = "orbit";
  compare_classes(orbit_closure_class(r, n), gamma_class_points(r, n, n - 1),
                  "r=" + std::to_string(r) + " n=" + std::to_string(n), report);
  return report;
}

SchubertClassVector p2_component_classes(int n0, int n) {
  if (n0 < 3 || n0 > n) fail(Errc::bad_input, "need 3 <= n0 <= n");
  if (n < 3) fail(Errc::n_too_small, "n < 3");
  const GrassContext ctx(3, n);  // d = n - 1

  auto row_class = [&](int a) {
    if (a < 0) return SchubertClassVector::zero(ctx);
    return SchubertClassVector::basis(ctx, Partition{a});
  };
  // Out-of-order or negative index pairs are skipped, never reordered.
  auto two_row_class = [&](int a, int b) {
    if (b < 0 || a < b) return SchubertClassVector::zero(ctx);
    return SchubertClassVector::basis(ctx, Partition{a, b});
  };

  SchubertClassVector out = SchubertClassVector::zero(ctx);

  // Totally degenerate components indexed by 2 <= a1 < a0 <= n0.
  for (int a0 = 3; a0 <= n0; ++a0)
    for (int a1 = 2; a1 < a0; ++a1)
      out += multiply(two_row_class(n - a1 - 2, n0 - a0 - 1),
                      two_row_class(a0 - 3, a1 - 2));

  // Secant components with a line index a2 beyond the point block.
  for (int a0 = 3; a0 <= n0; ++a0)
    for (int a1 = 2; a1 < a0; ++a1)
      for (int a2 = n0 + 1; a2 <= n; ++a2)
        out += truncate(
            multiply(two_row_class(a2 - 4, a1 - 2),
                     row_class((n - a2) + (n0 - a1) - 2)),
            TruncationKind::first_part_at_most, n - 4);

  // Components from the projection-from-a-point families; the stated index
  // rectangle includes degenerate summands that push forward to zero, which
  // are skipped outright.
  for (int a0 = n0 + 3; a0 <= n; ++a0)
    for (int a1 = n0 + 2; a1 <= a0 - 2; ++a1) {
      if (!(a0 >= a1 + 3 && a0 < n)) continue;
      out += multiply(
          truncate(multiply(row_class(n - a0 + n0 - 2), row_class(a1 - 3)),
                   TruncationKind::second_part_at_least, n0 - 1),
          row_class(a0 - a1 - 3));
    }

  for (int a0 = n0 + 3; a0 <= n; ++a0)
    for (int a1 = 2; a1 <= n0; ++a1)
      for (int a2 = n0 + 1; a2 <= a0 - 2; ++a2)
        out += truncate(
            multiply(two_row_class(n - a0 + a2 - 3, a1 - 2),
                     row_class(a0 - a2 + n0 - a1 - 3)),
            TruncationKind::first_part_at_most, n - 5);

  return out;
}

VerificationReport verify_p2_components(int n0, int n) {
  VerificationReport report;
  report.suite = "p2-components";
  compare_classes(p2_component_classes(n0, n), gamma_class_p2(n0, n - n0, n - 1),
                  "n0=" + std::to_string(n0) + " n=" + std::to_string(n),
                  report);
  return report;
}

VerificationReport verify_grid_oracle(int r, int g, int n, int d) {
  VerificationReport report;
  report.suite = "grid";
  const Int grid = count_grid_fillings(r, g, n, d);
  const Int schubert = tev_pr(r, g, n, d);
  report.cases_run = 1;
  if (grid != schubert)
    report.record("r=" + std::to_string(r) + " g=" + std::to_string(g) +
                      " n=" + std::to_string(n) + " d=" + std::to_string(d),
                  grid.str(), schubert.str());
  return report;
}

VerificationReport verify_ssyt_count(int max_boxes, int max_entry) {
  VerificationReport report;
  report.suite = "ssyt";
  for (long boxes = 0; boxes <= max_boxes; ++boxes) {
    for (const Partition& shape :
         partitions_in_box_of_size(max_boxes, max_boxes, boxes)) {
      Int brute = 0;
      for_each_ssyt(shape, max_entry, [&](const Tableau&) { brute += 1; });
      const Int closed = count_ssyt(shape, max_entry);
      ++report.cases_run;
      if (brute != closed)
        report.record("shape=" + shape.str() + " m=" + std::to_string(max_entry),
                      closed.str(), brute.str());
    }
  }
  return report;
}

namespace {

// Gamma coefficient by the combinatorial formulas; total in lambda and d.
Int gamma_coefficient(int r, const ConditionVector& conditions, int d,
                      const Partition& lambda) {
  if (!lambda.fits_in({r + 1, d - r})) return 0;
  const long n = conditions.total();
  if (conditions.points_only()) {
    if (lambda.part(0) > n - r - 1) return 0;
    return count_stripless(lambda, r, static_cast<int>(n) - r - 1);
  }
  if (r != 2)
    fail(Errc::bad_input, "mixed conditions are only computable for r = 2");
  return gamma_p2_coefficient(lambda, static_cast<int>(n),
                              static_cast<int>(conditions.counts[0]));
}

}  // namespace

VerificationReport verify_bounds_and_monotonicity(
    int r, const ConditionVector& conditions, int d) {
  VerificationReport report;
  report.suite = "bounds";
  const long grading = conditions.weight(r) - static_cast<long>(r) * (r + 2);
  if (grading < 0) return report;

  ConditionVector shifted = conditions;
  shifted.counts[0] += r + 1;

  const std::string label = "r=" + std::to_string(r) + " n=" + conditions.str() +
                            " d=" + std::to_string(d);
  for (const Partition& lambda :
       partitions_in_box_of_size(r + 1, d - r, grading)) {
    const Int gamma = gamma_coefficient(r, conditions, d, lambda);
    const Int ssyt = count_ssyt(lambda, r + 1);
    ++report.cases_run;
    if (gamma > ssyt)
      report.record(label + " lambda=" + lambda.str() + " (SSYT bound)",
                    gamma.str(), ssyt.str());

    std::vector<int> grown(r + 1, r);
    for (int i = 0; i <= r; ++i) grown[i] += lambda.part(i);
    const Int gamma_up =
        gamma_coefficient(r, shifted, d + r, Partition(std::move(grown)));
    ++report.cases_run;
    if (gamma > gamma_up)
      report.record(label + " lambda=" + lambda.str() + " (monotonicity)",
                    gamma.str(), gamma_up.str());
  }
  return report;
}

}  // namespace tevelev
