#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "oaparity/classes.hpp"
#include "oaparity/cli.hpp"
#include "oaparity/constructions.hpp"
#include "oaparity/ensemble.hpp"
#include "oaparity/io.hpp"
#include "oaparity/search.hpp"

namespace py = pybind11;
using namespace oaparity;

namespace {

using Matrix = std::vector<std::vector<int>>;

Matrix to_rows(const OrthogonalArray& a) {
  Matrix rows(static_cast<std::size_t>(a.row_count()));
  for (int r = 0; r < a.row_count(); ++r) rows[static_cast<std::size_t>(r)].assign(a.row(r).begin(), a.row(r).end());
  return rows;
}

OrthogonalArray from_rows(int k, int n, const Matrix& rows) {
  std::vector<int> flat;
  for (const auto& r : rows) {
    if (r.size() != static_cast<std::size_t>(k)) throw DomainError("every row needs k entries");
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return OrthogonalArray(k, n, std::move(flat));
}

LatinSquare square_from(const Matrix& cells) {
  std::vector<int> flat;
  for (const auto& r : cells) {
    if (r.size() != cells.size()) throw DomainError("a Latin square must be n x n");
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return LatinSquare(static_cast<int>(cells.size()), std::move(flat));
}

Matrix sigma_rows(const SigmaMatrix& m) {
  Matrix out(static_cast<std::size_t>(m.columns()), std::vector<int>(static_cast<std::size_t>(m.columns())));
  for (int i = 0; i < m.columns(); ++i)
    for (int j = 0; j < m.columns(); ++j) out[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = m.at(i, j);
  return out;
}

SigmaMatrix sigma_from(const Matrix& rows, int n) {
  SigmaMatrix m(static_cast<int>(rows.size()), n);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) throw DomainError("sigma matrix must be k x k");
    for (std::size_t j = 0; j < rows.size(); ++j)
      if (i != j) m.set(static_cast<int>(i), static_cast<int>(j), static_cast<Bit>(rows[i][j] & 1));
  }
  if (!m.satisfies_pair_law()) throw DomainError("sigma matrix violates the transpose law");
  return m;
}

py::dict census_dict(const EnsembleCensus& c) {
  py::dict types;
  for (int code = 0; code < 8; ++code) types[py::str(ParityTriple::from_code(code).label())] = c.type_counts[static_cast<std::size_t>(code)];
  py::list checks;
  for (const auto& ch : check_section6(c).checks) {
    py::dict d;
    d["name"] = ch.name;
    d["passed"] = ch.passed;
    d["detail"] = ch.detail;
    checks.append(d);
  }
  py::dict d;
  d["k"] = c.k;
  d["n"] = c.n;
  d["type_counts"] = types;
  d["x"] = c.x;
  d["T"] = c.T;
  d["mu"] = c.mu;
  d["checks"] = checks;
  return d;
}

py::dict orbit_dict(const OrbitSummary& o) {
  py::dict d;
  d["size"] = o.size;
  d["canonical"] = o.canonical.bits;
  d["k"] = o.canonical.k;
  d["nmod4"] = o.canonical.nmod4;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Parity of orthogonal arrays and MOLS";

  auto domain = py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<ResourceError>(m, "ResourceError", PyExc_MemoryError);
  (void)domain;

  py::class_<OrthogonalArray>(m, "OrthogonalArray")
      .def(py::init(&from_rows), py::arg("k"), py::arg("n"), py::arg("rows"))
      .def_static("from_text", [](const std::string& text) { return parse_array(text).array; })
      .def_property_readonly("k", &OrthogonalArray::columns)
      .def_property_readonly("n", &OrthogonalArray::order)
      .def("rows", &to_rows)
      .def("to_text", &format_oa_text, py::arg("base") = 0)
      .def("__eq__", [](const OrthogonalArray& a, const OrthogonalArray& b) { return a == b; })
      .def("__repr__", [](const OrthogonalArray& a) {
        return "OrthogonalArray(k=" + std::to_string(a.columns()) + ", n=" + std::to_string(a.order()) + ")";
      });

  py::class_<TauVector>(m, "TauVector")
      .def_property_readonly("k", &TauVector::columns)
      .def_property_readonly("n", &TauVector::order)
      .def("get", &TauVector::get, py::arg("c"), py::arg("i"), py::arg("j"), "0-based tau^c_ij")
      .def("to_json", [](const TauVector& t) { return tau_to_json(t).dump(); })
      .def("__eq__", [](const TauVector& a, const TauVector& b) { return a == b; });

  m.def("permutation_parity", [](const std::vector<int>& images) { return permutation_parity(Permutation(images)); });
  m.def("mols_to_oa", [](const std::vector<Matrix>& squares) {
    std::vector<LatinSquare> ls;
    for (const auto& s : squares) ls.push_back(square_from(s));
    return mols_to_oa(ls);
  });
  m.def("tau_parity", &tau_parity);
  m.def("sigma_parity", [](const OrthogonalArray& a) { return sigma_rows(sigma_parity(a)); });
  m.def("tau_from_sigma", [](const Matrix& sigma, int n) { return tau_from_sigma(sigma_from(sigma, n)); }, py::arg("sigma"), py::arg("n"));
  m.def("check_plausible", [](const TauVector& t) {
    const auto r = check_plausible(t);
    py::dict d;
    d["plausible"] = r.plausible;
    d["pp_plausible"] = to_string(r.pp_plausible);
    d["violations"] = r.total_violations;
    return d;
  });

  m.def("linear_mols", &linear_mols, py::arg("q"));
  m.def(
      "thm45_oa",
      [](int n, const std::string& pattern, std::optional<int> a) {
        const auto p = residue_pattern_from_string(pattern);
        return a ? thm45_oa(n, p, *a) : thm45_oa(n, p);
      },
      py::arg("n"), py::arg("pattern"), py::arg("a") = py::none());
  m.def("determining_components", [](const TauVector& t) {
    const auto c = determining_components(t);
    return std::vector<int>(c.begin(), c.end());
  });
  m.def("pp_plausible_sigma", [](int n, const std::vector<int>& bits) {
    std::vector<Bit> b(bits.begin(), bits.end());
    return sigma_rows(pp_plausible_sigma(n, b).to_matrix());
  });
  m.def("block_sigma", [](int n) { return sigma_rows(block_sigma(n)); });
  m.def("circulant_sigma", [](int n) { return sigma_rows(circulant_sigma(n).to_matrix()); });
  m.def("lower_triangular_sigma", [](int k, int n) { return sigma_rows(lower_triangular_sigma(k, n)); });
  m.def("feasible_type_counts", [](int n, int z, int y1, int y2, int y3) {
    const auto r = feasible_type_counts(n, z, y1, y2, y3);
    py::dict d;
    d["feasible"] = r.feasible;
    d["reason"] = r.reason;
    d["witness"] = r.witness ? py::cast(sigma_rows(r.witness->to_matrix())) : py::none();
    return d;
  });

  m.def("orbit", [](int k, int nmod4, std::uint64_t bits) { return orbit_dict(orbit(ParityState{k, nmod4, bits})); });
  m.def("class_of_oa", [](const OrthogonalArray& a) { return orbit_dict(class_of_oa(a)); });
  m.def("enumerate_classes", [](int k, int nmod4) {
    const ClassTable t = enumerate_classes(k, nmod4);
    py::dict d;
    d["classes"] = t.total_classes;
    d["entries"] = t.entries;
    return d;
  });

  m.def("ensemble_census", [](const OrthogonalArray& a) { return census_dict(ensemble_census(a)); });
  m.def("ensemble_census", [](const TauVector& t) { return census_dict(ensemble_census(t)); });
  m.def("max_equiparity", &max_equiparity);
  m.def("optimal_mu", [](int n) { return optimal_mu(n).terms; });
  m.def("is_good", [](int n, const std::vector<int>& terms) { return is_good(GoodSequence{n, terms}); });

  m.def("count_latin_squares", [](int n) { return enumerate_latin_squares(n, [](const LatinSquare&) { return true; }); });
  m.def("achieved_parity_types", [](int n) {
    std::vector<std::string> out;
    for (const auto& t : achieved_parity_types(n)) out.push_back(t.label());
    return out;
  });

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
