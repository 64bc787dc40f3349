#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "minkq/catalog.hpp"
#include "minkq/elements.hpp"
#include "minkq/invariant_forms.hpp"
#include "minkq/polynomial.hpp"
#include "minkq/report_io.hpp"
#include "minkq/rng.hpp"
#include "minkq/structure.hpp"
#include "minkq/verification.hpp"

namespace py = pybind11;

namespace {

using minkq::Mat;
using minkq::Rat;

Mat mat_from_py(const std::vector<std::vector<py::object>>& rows) {
  int r = static_cast<int>(rows.size());
  int c = r ? static_cast<int>(rows[0].size()) : 0;
  Mat m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c) throw std::invalid_argument("ragged matrix");
    for (int j = 0; j < c; ++j) {
      const py::object& v = rows[i][j];
      if (py::isinstance<py::int_>(v))
        m.at(i, j) = Rat(minkq::Int(py::cast<std::string>(py::str(v))));
      else
        m.at(i, j) = minkq::rat_from_string(py::cast<std::string>(py::str(v)));
    }
  }
  return m;
}

std::vector<std::vector<std::string>> mat_to_py(const Mat& m) {
  std::vector<std::vector<std::string>> out(m.rows(), std::vector<std::string>(m.cols()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out[i][j] = minkq::rat_to_string(m.at(i, j));
  return out;
}

py::dict report_to_dict(const minkq::CheckReport& r) {
  py::dict d;
  d["name"] = r.name;
  py::dict params;
  for (const auto& [k, v] : r.params) params[py::str(k)] = v;
  d["params"] = params;
  d["status"] = std::string(minkq::to_string(r.status));
  d["anchor"] = r.anchor;
  d["details"] = r.details;
  if (!r.certificate.empty()) d["certificate"] = r.certificate;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact toolkit for invariant Minkowski forms on so(p,q) quotients";

  m.def(
      "signature",
      [](const std::vector<std::vector<py::object>>& rows) {
        minkq::SignatureTriple s = minkq::signature(mat_from_py(rows));
        return py::make_tuple(s.n_pos, s.n_neg, s.n_zero);
      },
      py::arg("matrix"), "exact signature (n_pos, n_neg, n_zero) of a symmetric rational matrix");

  m.def(
      "kernel",
      [](const std::vector<std::vector<py::object>>& rows) {
        std::vector<std::vector<std::vector<std::string>>> out;
        for (const Mat& v : minkq::kernel(mat_from_py(rows))) out.push_back(mat_to_py(v));
        return out;
      },
      py::arg("matrix"), "basis of the exact null space, as column vectors");

  m.def(
      "solve",
      [](const std::vector<std::vector<py::object>>& a,
         const std::vector<std::vector<py::object>>& b) -> py::object {
        auto x = minkq::solve_linear(mat_from_py(a), mat_from_py(b));
        if (!x) return py::none();
        return py::cast(mat_to_py(*x));
      },
      py::arg("a"), py::arg("b"), "exact solution of a x = b, or None");

  m.def(
      "so_dimension", [](int p, int q) { return minkq::make_so(p, q).dim(); }, py::arg("p"),
      py::arg("q"));

  m.def(
      "killing_signature",
      [](int p, int q) {
        auto data = minkq::so_data(p, q);
        minkq::SignatureTriple s = minkq::signature(data->killing);
        return py::make_tuple(s.n_pos, s.n_neg, s.n_zero);
      },
      py::arg("p"), py::arg("q"));

  m.def(
      "roots",
      [](int p, int q) {
        auto data = minkq::so_data(p, q);
        std::vector<py::tuple> out;
        for (const auto& r : data->roots.roots())
          out.push_back(py::make_tuple(r, data->roots.multiplicity(r)));
        return out;
      },
      py::arg("p"), py::arg("q"), "restricted roots and multiplicities on the standard Cartan");

  m.def(
      "iwasawa_dims",
      [](int p, int q) {
        auto data = minkq::so_data(p, q);
        py::dict d;
        d["k"] = data->iw.k_basis.size();
        d["a"] = data->iw.a_basis.size();
        d["n"] = data->iw.n_basis.size();
        d["m"] = data->iw.m_basis.size();
        return d;
      },
      py::arg("p"), py::arg("q"));

  m.def(
      "catalog",
      [](int p, int q) {
        auto data = minkq::so_data(p, q);
        std::vector<py::dict> out;
        for (const auto& e : minkq::list_catalog(*data->g)) {
          py::dict d;
          d["name"] = e.name;
          d["family"] = e.family;
          d["dim"] = e.expected_dim;
          out.push_back(std::move(d));
        }
        return out;
      },
      py::arg("p"), py::arg("q"));

  m.def(
      "verify_quotient",
      [](int p, int q, const std::string& h_name) {
        auto g = minkq::so_data(p, q)->g;
        minkq::Subalg h = minkq::resolve_subalgebra(g, h_name);
        return report_to_dict(minkq::check_quotient(g, h));
      },
      py::arg("p"), py::arg("q"), py::arg("h"),
      "decide existence of an invariant Minkowski form on so(p,q)/h");

  m.def(
      "check_lemma",
      [](int k, std::uint64_t seed) { return report_to_dict(minkq::check_std_rep_lemma(k, seed)); },
      py::arg("k"), py::arg("seed") = minkq::kDefaultSeed);

  m.def(
      "run_all_json",
      [](int max_n, std::uint64_t seed) {
        auto reports = minkq::run_all({max_n, seed});
        return minkq::render_json(reports, seed);
      },
      py::arg("max_n"), py::arg("seed") = minkq::kDefaultSeed,
      "run every suite and return the machine-readable report as a JSON string");

  m.attr("DEFAULT_SEED") = py::int_(minkq::kDefaultSeed);
  m.attr("__version__") = "0.1.0";
}
