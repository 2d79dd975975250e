// Command-line front end: exact Tevelev-degree and Schubert-class
// computations, SSYT utilities, and the cross-verification suites.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "tevelev/error.hpp"
#include "tevelev/oracles.hpp"

using json = nlohmann::ordered_json;
using namespace tevelev;

namespace {

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::bad_numerology:
    case Errc::bad_divisibility:
      return 2;
    case Errc::n_too_small:
    case Errc::does_not_fit:
    case Errc::bad_grading:
    case Errc::bad_input:
      return 3;
    case Errc::unsupported_regime:
    case Errc::hypothesis_not_met:
      return 4;
    default:
      return 1;
  }
}

struct Envelope {
  std::string command;
  json inputs = json::object();
  json result;        // decimal string, class array, report object, or rows
  std::string plain;  // already-rendered plain text
  std::string csv;    // rendered csv when the command supports it
};

struct Clock {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start)
        .count();
  }
};

void emit(const Envelope& env, const std::string& format, const Clock& clock) {
  if (format == "json") {
    json out;
    out["command"] = env.command;
    out["inputs"] = env.inputs;
    out["result"] = env.result;
    out["elapsed_ms"] = clock.ms();
    std::cout << out.dump() << "\n";
  } else if (format == "csv" && !env.csv.empty()) {
    std::cout << env.csv;
  } else {
    std::cout << env.plain << "\n";
  }
}

json class_result(const SchubertClassVector& v) {
  return json::parse(class_to_json(v));
}

std::string class_plain(const SchubertClassVector& v) {
  if (v.terms().empty()) return "0";
  std::string out;
  const auto& terms = v.terms();
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    if (!out.empty()) out += "\n";
    out += (it->first.empty() ? "0" : it->first.str()) + ": " + it->second.str();
  }
  return out;
}

std::string class_csv(const SchubertClassVector& v) {
  std::string out = "partition,coeff\n";
  const auto& terms = v.terms();
  for (auto it = terms.rbegin(); it != terms.rend(); ++it)
    out += "\"" + it->first.str() + "\"," + it->second.str() + "\n";
  return out;
}

long require_inferred(const std::optional<long>& value, const std::string& what) {
  if (!value) fail(Errc::bad_numerology, "no integral " + what + " exists");
  return *value;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact geometric Tevelev degrees of projective space"};
  app.require_subcommand(1);

  std::string format = "plain";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"plain", "json", "csv"}));

  // ---- tev ----
  auto* tev_cmd = app.add_subcommand("tev", "Point-conditions Tevelev degree");
  int tev_r = 1;
  std::optional<int> tev_g, tev_n, tev_d;
  tev_cmd->add_option("--r", tev_r, "Target dimension r")->required();
  tev_cmd->add_option("--g", tev_g, "Genus");
  tev_cmd->add_option("--n", tev_n, "Number of point conditions");
  tev_cmd->add_option("--d", tev_d, "Degree");

  // ---- count-p2 ----
  auto* p2_cmd = app.add_subcommand("count-p2", "Mixed point/line count in the plane");
  int p2_g = 0, p2_points = 0, p2_lines = 0;
  std::optional<int> p2_d;
  p2_cmd->add_option("--g", p2_g, "Genus")->required();
  p2_cmd->add_option("--points", p2_points, "Number of point conditions")->required();
  p2_cmd->add_option("--lines", p2_lines, "Number of line conditions")->required();
  p2_cmd->add_option("--d", p2_d, "Degree (inferred when omitted)");

  // ---- gamma ----
  auto* gamma_cmd = app.add_subcommand("gamma", "Pushforward class in the Schubert basis");
  int gamma_r = 1, gamma_d = 0;
  std::optional<int> gamma_n, gamma_points, gamma_lines;
  gamma_cmd->add_option("--r", gamma_r, "Target dimension r")->required();
  gamma_cmd->add_option("--n", gamma_n, "Point conditions (points-only class)");
  gamma_cmd->add_option("--points", gamma_points, "Point conditions (r = 2 mixed class)");
  gamma_cmd->add_option("--lines", gamma_lines, "Line conditions (r = 2 mixed class)");
  gamma_cmd->add_option("--d", gamma_d, "Degree")->required();

  // ---- ssyt ----
  auto* ssyt_cmd = app.add_subcommand("ssyt", "Semistandard Young tableaux");
  std::string ssyt_shape;
  int ssyt_max_entry = 1;
  bool ssyt_list = false, ssyt_count = false;
  std::optional<int> ssyt_no_strip;
  ssyt_cmd->add_option("--shape", ssyt_shape, "Partition, e.g. 2,1")->required();
  ssyt_cmd->add_option("--max-entry", ssyt_max_entry, "Largest allowed entry")->required();
  ssyt_cmd->add_flag("--count", ssyt_count, "Print the count (default)");
  ssyt_cmd->add_flag("--list", ssyt_list, "List the tableaux");
  ssyt_cmd->add_option("--no-strip", ssyt_no_strip,
                       "Keep only tableaux without an (i,i+1)-strip of this length");

  // ---- grid ----
  auto* grid_cmd = app.add_subcommand("grid", "Grid-filling model for the point counts");
  int grid_r = 1, grid_g = 0, grid_d = 0;
  std::optional<int> grid_n;
  bool grid_list = false;
  grid_cmd->add_option("--r", grid_r, "Target dimension r")->required();
  grid_cmd->add_option("--g", grid_g, "Genus")->required();
  grid_cmd->add_option("--n", grid_n, "Number of point conditions (inferred when omitted)");
  grid_cmd->add_option("--d", grid_d, "Degree")->required();
  grid_cmd->add_flag("--list", grid_list, "List the fillings");

  // ---- castelnuovo ----
  auto* cast_cmd = app.add_subcommand("castelnuovo", "Minimal-degree count");
  int cast_r = 1, cast_g = 0;
  cast_cmd->add_option("--r", cast_r, "Target dimension r")->required();
  cast_cmd->add_option("--g", cast_g, "Genus")->required();

  // ---- virtual ----
  auto* virt_cmd = app.add_subcommand("virtual", "Virtual count (r+1)^g");
  int virt_r = 1, virt_g = 0;
  virt_cmd->add_option("--r", virt_r, "Target dimension r")->required();
  virt_cmd->add_option("--g", virt_g, "Genus")->required();

  // ---- verify ----
  auto* verify_cmd = app.add_subcommand("verify", "Cross-validation suites");
  std::string suite;
  int v_r = 1, v_max_n = 8, v_max_g = 4, v_max_d = 6, v_max_boxes = 8,
      v_max_entry = 4, v_max_cells = 12;
  verify_cmd->add_option("--suite", suite, "Suite name")
      ->required()
      ->check(CLI::IsMember(
          {"virtual", "klyachko", "orbit", "grid", "ssyt", "bounds", "p2"}));
  verify_cmd->add_option("--r", v_r, "Target dimension r");
  verify_cmd->add_option("--max-n", v_max_n, "Largest n (klyachko, orbit, p2)");
  verify_cmd->add_option("--max-g", v_max_g, "Largest genus (virtual)");
  verify_cmd->add_option("--max-d", v_max_d, "Largest degree (bounds)");
  verify_cmd->add_option("--max-boxes", v_max_boxes, "Largest shape size (ssyt)");
  verify_cmd->add_option("--max-entry", v_max_entry, "Largest entry (ssyt)");
  verify_cmd->add_option("--max-cells", v_max_cells, "Largest grid size (grid)");

  // ---- table ----
  auto* table_cmd = app.add_subcommand("table", "Degrees across a genus range");
  int table_r = 1, table_g_min = 0, table_g_max = 4;
  table_cmd->add_option("--r", table_r, "Target dimension r")->required();
  table_cmd->add_option("--g-min", table_g_min, "Smallest genus");
  table_cmd->add_option("--g-max", table_g_max, "Largest genus");

  for (CLI::App* sub : app.get_subcommands(nullptr)) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  const char* cache_dir = std::getenv("TEVELEV_CACHE_DIR");
  if (cache_dir && *cache_dir) lr_cache_load(cache_dir);

  Clock clock;
  Envelope env;
  int status = 0;
  try {
    if (*tev_cmd) {
      env.command = "tev";
      int given = (tev_g ? 1 : 0) + (tev_n ? 1 : 0) + (tev_d ? 1 : 0);
      if (given < 2) fail(Errc::bad_input, "give at least two of --g/--n/--d");
      long g = tev_g.value_or(0), n = tev_n.value_or(0), d = tev_d.value_or(0);
      if (!tev_n) n = require_inferred(infer_n_points(tev_r, (int)g, (int)d), "n");
      else if (!tev_d) d = require_inferred(infer_d_points(tev_r, (int)g, n), "d");
      else if (!tev_g) g = require_inferred(infer_g_points(tev_r, n, (int)d), "g");
      env.inputs = {{"r", tev_r}, {"g", g}, {"n", n}, {"d", d}};
      Int value = tev_pr(tev_r, (int)g, n, (int)d);
      env.result = value.str();
      env.plain = value.str();
    } else if (*p2_cmd) {
      env.command = "count-p2";
      long d = p2_d ? *p2_d
                    : require_inferred(infer_d_p2(p2_g, p2_points, p2_lines), "d");
      env.inputs = {{"g", p2_g}, {"points", p2_points}, {"lines", p2_lines}, {"d", d}};
      Int value = count_p2(p2_g, p2_points, p2_lines, (int)d);
      env.result = value.str();
      env.plain = value.str();
    } else if (*gamma_cmd) {
      env.command = "gamma";
      SchubertClassVector cls = [&] {
        if (gamma_n) {
          env.inputs = {{"r", gamma_r}, {"n", *gamma_n}, {"d", gamma_d}};
          return gamma_class_points(gamma_r, *gamma_n, gamma_d);
        }
        if (!gamma_points || !gamma_lines)
          fail(Errc::bad_input, "give --n, or --points with --lines");
        if (gamma_r != 2 && *gamma_lines > 0)
          fail(Errc::unsupported_regime, "mixed conditions need --r 2");
        env.inputs = {{"r", gamma_r}, {"points", *gamma_points},
                      {"lines", *gamma_lines}, {"d", gamma_d}};
        return gamma_class_p2(*gamma_points, *gamma_lines, gamma_d);
      }();
      env.result = class_result(cls);
      env.plain = class_plain(cls);
      env.csv = class_csv(cls);
    } else if (*ssyt_cmd) {
      env.command = "ssyt";
      Partition shape = Partition::parse(ssyt_shape);
      env.inputs = {{"shape", shape.str()}, {"max_entry", ssyt_max_entry}};
      if (ssyt_no_strip) env.inputs["no_strip"] = *ssyt_no_strip;
      auto keep = [&](const Tableau& t) {
        if (!ssyt_no_strip) return true;
        for (int i = 1; i < ssyt_max_entry; ++i)
          if (has_strip(t, i, *ssyt_no_strip)) return false;
        return true;
      };
      if (ssyt_list) {
        json rows = json::array();
        std::string plain;
        for_each_ssyt(shape, ssyt_max_entry, [&](const Tableau& t) {
          if (!keep(t)) return;
          json tj = json::array();
          int idx = 0;
          for (int r = 0; r < shape.rows(); ++r) {
            json row = json::array();
            for (int c = 0; c < shape.part(r); ++c) row.push_back(t.filling[idx++]);
            tj.push_back(row);
          }
          rows.push_back(tj);
          if (!plain.empty()) plain += "\n";
          plain += t.str();
        });
        env.result = rows;
        env.plain = plain.empty() ? "(none)" : plain;
      } else {
        Int count = 0;
        if (ssyt_no_strip) {
          for_each_ssyt(shape, ssyt_max_entry, [&](const Tableau& t) {
            if (keep(t)) count += 1;
          });
        } else {
          count = count_ssyt(shape, ssyt_max_entry);
        }
        env.result = count.str();
        env.plain = count.str();
      }
    } else if (*grid_cmd) {
      env.command = "grid";
      long n = grid_n ? *grid_n
                      : require_inferred(infer_n_points(grid_r, grid_g, grid_d), "n");
      env.inputs = {{"r", grid_r}, {"g", grid_g}, {"n", n}, {"d", grid_d}};
      if (grid_list) {
        json rows = json::array();
        std::string plain;
        for_each_grid_filling(grid_r, grid_g, (int)n, grid_d,
                              [&](const GridFilling& f) {
                                rows.push_back(f.str());
                                if (!plain.empty()) plain += "\n";
                                plain += f.str();
                              });
        env.result = rows;
        env.plain = plain.empty() ? "(none)" : plain;
      } else {
        Int count = count_grid_fillings(grid_r, grid_g, (int)n, grid_d);
        env.result = count.str();
        env.plain = count.str();
      }
    } else if (*cast_cmd) {
      env.command = "castelnuovo";
      env.inputs = {{"r", cast_r}, {"g", cast_g}};
      Int value = castelnuovo(cast_r, cast_g);
      env.result = value.str();
      env.plain = value.str();
    } else if (*virt_cmd) {
      env.command = "virtual";
      env.inputs = {{"r", virt_r}, {"g", virt_g}};
      Int value = virtual_tev(virt_r, virt_g);
      env.result = value.str();
      env.plain = value.str();
    } else if (*verify_cmd) {
      env.command = "verify";
      env.inputs = {{"suite", suite}};
      VerificationReport report;
      report.suite = suite;
      if (suite == "virtual") {
        env.inputs["r"] = v_r;
        env.inputs["max_g"] = v_max_g;
        for (int g = 0; g <= v_max_g; ++g)
          report.merge(verify_virtual_identity(v_r, g, v_r * g + v_r));
      } else if (suite == "klyachko") {
        env.inputs["r"] = v_r;
        env.inputs["max_n"] = v_max_n;
        for (int n = v_r + 2; n <= v_max_n; ++n)
          report.merge(verify_klyachko_vs_stripless(v_r, n));
      } else if (suite == "orbit") {
        env.inputs["r"] = v_r;
        env.inputs["max_n"] = v_max_n;
        for (int n = v_r + 2; n <= v_max_n; ++n)
          report.merge(verify_orbit_class(v_r, n));
      } else if (suite == "p2") {
        env.inputs["max_n"] = v_max_n;
        for (int n = 3; n <= v_max_n; ++n)
          for (int n0 = 3; n0 <= n; ++n0)
            report.merge(verify_p2_components(n0, n));
      } else if (suite == "grid") {
        env.inputs["max_cells"] = v_max_cells;
        for (int r = 1; r <= 6; ++r)
          for (int d = r; (r + 1) * (d - r) <= v_max_cells; d += r)
            for (int g = 0;; ++g) {
              auto n = infer_n_points(r, g, d);
              if (!n) break;
              if (*n < r + 1) break;
              report.merge(verify_grid_oracle(r, g, (int)*n, d));
            }
      } else if (suite == "ssyt") {
        env.inputs["max_boxes"] = v_max_boxes;
        env.inputs["max_entry"] = v_max_entry;
        report.merge(verify_ssyt_count(v_max_boxes, v_max_entry));
      } else if (suite == "bounds") {
        env.inputs["r"] = v_r;
        env.inputs["max_d"] = v_max_d;
        for (int d = v_r; d <= v_max_d; ++d) {
          if (d % v_r != 0) continue;
          for (int g = 0;; ++g) {
            auto n = infer_n_points(v_r, g, d);
            if (!n || *n < v_r + 2) break;
            report.merge(verify_bounds_and_monotonicity(
                v_r, ConditionVector::points(v_r, *n), d));
          }
        }
        if (v_r == 2) {
          // mixed gradings realizable in the 3 x (d-2) box
          for (int d = 2; d <= v_max_d; ++d)
            for (int n0 = 3; 2 * n0 - 8 <= 3 * (d - 2); ++n0)
              for (int n1 = 1; 2 * n0 + n1 - 8 <= 3 * (d - 2); ++n1)
                report.merge(verify_bounds_and_monotonicity(
                    2, ConditionVector{{n0, n1}}, d));
        }
      }
      report.suite = suite;
      env.result = json::parse(report.to_json());
      env.plain = report.str();
      if (!report.passed()) status = 5;
    } else if (*table_cmd) {
      env.command = "table";
      env.inputs = {{"r", table_r}, {"g_min", table_g_min}, {"g_max", table_g_max}};
      json rows = json::array();
      std::string csv = "g,d,n,tev\n";
      std::string plain = "g\td\tn\ttev";
      for (int g = table_g_min; g <= table_g_max; ++g) {
        for (int d = table_r; d <= table_r * g + table_r; d += table_r) {
          auto n = infer_n_points(table_r, g, d);
          if (!n || *n < table_r + 1) continue;
          Int value = tev_pr(table_r, g, *n, d);
          rows.push_back({{"g", g}, {"d", d}, {"n", *n}, {"tev", value.str()}});
          csv += std::to_string(g) + "," + std::to_string(d) + "," +
                 std::to_string(*n) + "," + value.str() + "\n";
          plain += "\n" + std::to_string(g) + "\t" + std::to_string(d) + "\t" +
                   std::to_string(*n) + "\t" + value.str();
        }
      }
      env.result = rows;
      env.plain = plain;
      env.csv = csv;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  emit(env, format, clock);
  if (cache_dir && *cache_dir) lr_cache_save(cache_dir);
  return status;
}
