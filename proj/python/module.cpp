// Python bindings for the exact Tevelev-degree calculator.

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tevelev/error.hpp"
#include "tevelev/oracles.hpp"

namespace py = pybind11;
using namespace tevelev;

namespace {

py::int_ to_py(const Int& value) {
  const std::string digits = value.str();
  PyObject* obj = PyLong_FromString(digits.c_str(), nullptr, 10);
  if (!obj) throw py::error_already_set();
  return py::reinterpret_steal<py::int_>(obj);
}

Partition as_partition(const std::vector<int>& parts) {
  return make_partition(parts);
}

py::tuple to_py(const Partition& p) {
  py::tuple out(p.rows());
  for (int i = 0; i < p.rows(); ++i) out[i] = p.part(i);
  return out;
}

py::list to_py(const SchubertClassVector& v) {
  py::list out;
  const auto& terms = v.terms();
  for (auto it = terms.rbegin(); it != terms.rend(); ++it)
    out.append(py::make_tuple(to_py(it->first), to_py(it->second)));
  return out;
}

py::dict to_py(const VerificationReport& report) {
  py::dict out;
  out["suite"] = report.suite;
  out["cases_run"] = report.cases_run;
  py::list mismatches;
  for (const auto& m : report.mismatches)
    mismatches.append(py::make_tuple(m.input, m.lhs, m.rhs));
  out["mismatches"] = mismatches;
  out["passed"] = report.passed();
  return out;
}

Tableau as_tableau(const std::vector<std::vector<int>>& rows, int max_entry) {
  std::vector<int> shape_parts, filling;
  for (const auto& row : rows) {
    shape_parts.push_back(static_cast<int>(row.size()));
    filling.insert(filling.end(), row.begin(), row.end());
  }
  return Tableau{make_partition(shape_parts), max_entry, std::move(filling)};
}

}  // namespace

PYBIND11_MODULE(_tevelev, m) {
  m.doc() = "Exact Tevelev degrees, Schubert calculus, and Young tableaux";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const tevelev::Error& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  // partitions
  m.def("make_partition",
        [](const std::vector<int>& raw) { return to_py(as_partition(raw)); },
        py::arg("parts"));
  m.def("conjugate",
        [](const std::vector<int>& p) { return to_py(as_partition(p).conjugate()); },
        py::arg("partition"));
  m.def("complement",
        [](const std::vector<int>& p, int rows, int cols) {
          return to_py(as_partition(p).complement_in({rows, cols}));
        },
        py::arg("partition"), py::arg("rows"), py::arg("cols"));

  // tableaux
  m.def("count_ssyt",
        [](const std::vector<int>& shape, int max_entry) {
          return to_py(count_ssyt(as_partition(shape), max_entry));
        },
        py::arg("shape"), py::arg("max_entry"));
  m.def("enumerate_ssyt",
        [](const std::vector<int>& shape, int max_entry) {
          py::list out;
          const Partition p = as_partition(shape);
          for_each_ssyt(p, max_entry, [&](const Tableau& t) {
            py::list rows;
            int idx = 0;
            for (int r = 0; r < p.rows(); ++r) {
              py::list row;
              for (int c = 0; c < p.part(r); ++c) row.append(t.filling[idx++]);
              rows.append(row);
            }
            out.append(rows);
          });
          return out;
        },
        py::arg("shape"), py::arg("max_entry"));
  m.def("content_counts",
        [](const std::vector<std::vector<int>>& rows, int max_entry) {
          return content_counts(as_tableau(rows, max_entry));
        },
        py::arg("rows"), py::arg("max_entry"));
  m.def("has_strip",
        [](const std::vector<std::vector<int>>& rows, int max_entry, int entry,
           int length) {
          return has_strip(as_tableau(rows, max_entry), entry, length);
        },
        py::arg("rows"), py::arg("max_entry"), py::arg("entry"), py::arg("length"));
  m.def("count_stripless",
        [](const std::vector<int>& shape, int r, int length) {
          return to_py(count_stripless(as_partition(shape), r, length));
        },
        py::arg("shape"), py::arg("r"), py::arg("length"));
  m.def("gamma_p2_coefficient",
        [](const std::vector<int>& shape, int n, int n0) {
          return to_py(gamma_p2_coefficient(as_partition(shape), n, n0));
        },
        py::arg("shape"), py::arg("n"), py::arg("n0"));
  m.def("count_grid_fillings",
        [](int r, int g, int n, int d) { return to_py(count_grid_fillings(r, g, n, d)); },
        py::arg("r"), py::arg("g"), py::arg("n"), py::arg("d"));

  // schubert calculus
  m.def("lr_coefficient",
        [](const std::vector<int>& lam, const std::vector<int>& mu,
           const std::vector<int>& nu) {
          return to_py(lr_coefficient(as_partition(lam), as_partition(mu),
                                      as_partition(nu)));
        },
        py::arg("lam"), py::arg("mu"), py::arg("nu"));
  m.def("schubert_product",
        [](int k, int N, const std::vector<int>& lam, const std::vector<int>& mu) {
          GrassContext ctx(k, N);
          return to_py(multiply(SchubertClassVector::basis(ctx, as_partition(lam)),
                                SchubertClassVector::basis(ctx, as_partition(mu))));
        },
        py::arg("k"), py::arg("N"), py::arg("lam"), py::arg("mu"));

  // degree formulas
  m.def("tev_pr", [](int r, int g, long n, int d) { return to_py(tev_pr(r, g, n, d)); },
        py::arg("r"), py::arg("g"), py::arg("n"), py::arg("d"));
  m.def("tev_p1_closed", [](int g, int d) { return to_py(tev_p1_closed(g, d)); },
        py::arg("g"), py::arg("d"));
  m.def("castelnuovo", [](int r, int g) { return to_py(castelnuovo(r, g)); },
        py::arg("r"), py::arg("g"));
  m.def("virtual_tev", [](int r, int g) { return to_py(virtual_tev(r, g)); },
        py::arg("r"), py::arg("g"));
  m.def("count_p2",
        [](int g, int n0, int n1, int d) { return to_py(count_p2(g, n0, n1, d)); },
        py::arg("g"), py::arg("n0"), py::arg("n1"), py::arg("d"));
  m.def("klyachko_coefficient",
        [](int r, int n, const std::vector<int>& lam) {
          return to_py(klyachko_coefficient(r, n, as_partition(lam)));
        },
        py::arg("r"), py::arg("n"), py::arg("lam"));
  m.def("gamma_class_points",
        [](int r, int n, int d) { return to_py(gamma_class_points(r, n, d)); },
        py::arg("r"), py::arg("n"), py::arg("d"));
  m.def("orbit_closure_class",
        [](int r, int n) { return to_py(orbit_closure_class(r, n)); },
        py::arg("r"), py::arg("n"));
  m.def("gamma_class_p2",
        [](int n0, int n1, int d) { return to_py(gamma_class_p2(n0, n1, d)); },
        py::arg("n0"), py::arg("n1"), py::arg("d"));
  m.def("p2_component_classes",
        [](int n0, int n) { return to_py(p2_component_classes(n0, n)); },
        py::arg("n0"), py::arg("n"));

  // verification suites
  m.def("verify_virtual_identity",
        [](int r, int g, int d) { return to_py(verify_virtual_identity(r, g, d)); },
        py::arg("r"), py::arg("g"), py::arg("d"));
  m.def("verify_klyachko_vs_stripless",
        [](int r, int n) { return to_py(verify_klyachko_vs_stripless(r, n)); },
        py::arg("r"), py::arg("n"));
  m.def("verify_orbit_class",
        [](int r, int n) { return to_py(verify_orbit_class(r, n)); },
        py::arg("r"), py::arg("n"));
  m.def("verify_p2_components",
        [](int n0, int n) { return to_py(verify_p2_components(n0, n)); },
        py::arg("n0"), py::arg("n"));
  m.def("verify_grid_oracle",
        [](int r, int g, int n, int d) { return to_py(verify_grid_oracle(r, g, n, d)); },
        py::arg("r"), py::arg("g"), py::arg("n"), py::arg("d"));
  m.def("verify_ssyt_count",
        [](int max_boxes, int max_entry) {
          return to_py(verify_ssyt_count(max_boxes, max_entry));
        },
        py::arg("max_boxes"), py::arg("max_entry"));
}
