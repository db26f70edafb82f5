// Copyright 2026 The ppzeta Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <sstream>

#include "ppzeta/cli.hpp"
#include "ppzeta/lie.hpp"
#include "ppzeta/matrices.hpp"
#include "ppzeta/numeric_zeta.hpp"
#include "ppzeta/period_poly.hpp"
#include "ppzeta/regularization.hpp"
#include "ppzeta/relations.hpp"
#include "ppzeta/serialize.hpp"

namespace py = pybind11;

namespace {

using StrMatrix = std::vector<std::vector<std::string>>;

std::vector<std::string> strs(const ppz::RatVector& v) {
  std::vector<std::string> out;
  for (const auto& e : v) out.push_back(e.str());
  return out;
}

StrMatrix strs(const ppz::RatMatrix& m) {
  StrMatrix out;
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(strs(m.row(r)));
  return out;
}

std::map<std::string, std::string> poly_terms(const ppz::NcPoly& f) {
  std::map<std::string, std::string> out;
  for (const auto& [w, c] : f.terms()) out[w.str()] = c.str();
  return out;
}

ppz::RatMatrix matrix(const std::string& which, int k) {
  if (which == "A") return ppz::build_A(k);
  if (which == "Asym") return ppz::build_A_symbolic(k);
  if (which == "M") return ppz::conjugate_M(k);
  if (which == "S") return ppz::build_S(k);
  if (which == "T") return ppz::build_T(k);
  if (which == "D") return ppz::build_D(k);
  if (which == "B") return ppz::build_B(k);
  if (which == "tADB") return ppz::symmetry_product(k);
  throw std::invalid_argument("unknown matrix: " + which);
}

}  // namespace

PYBIND11_MODULE(_ppzeta, m) {
  m.doc() = "Exact period-polynomial and double zeta computations";

  m.def("shuffle", [](const std::string& u, const std::string& v) {
    return poly_terms(ppz::shuffle(ppz::Word::parse(u), ppz::Word::parse(v)));
  });
  m.def("stuffle", [](const std::string& u, const std::string& v) {
    return poly_terms(ppz::stuffle(ppz::Word::parse(u), ppz::Word::parse(v)));
  });
  m.def("shuffle_regularize",
        [](const std::string& w) { return ppz::shuffle_regularize(ppz::Word::parse(w)).str(); });
  m.def("star_regularize",
        [](const std::string& w) { return ppz::star_regularize(ppz::Word::parse(w)).str(); });
  m.def("fz_quotient_dim", &ppz::fz_quotient_dim);
  m.def("sh_basis_dim", &ppz::sh_basis_dim);
  m.def("ds_solve", [](int n) {
    std::vector<std::string> out;
    for (const auto& f : ppz::ds_solve(n)) out.push_back(f.str());
    return out;
  });
  m.def("ek_dim_formula", &ppz::ek_dim_formula);
  m.def("ek_basis", [](int k) {
    StrMatrix out;
    for (const auto& p : ppz::ek_basis(k)) out.push_back(strs(p.coeffs()));
    return out;
  });
  m.def("matrix", [](const std::string& which, int k) { return strs(matrix(which, k)); });
  m.def("kernel", [](const std::string& which, int k, bool transpose) {
    const ppz::RatMatrix a = matrix(which, k);
    StrMatrix out;
    for (const auto& v : ppz::kernel(transpose ? a.transpose() : a)) out.push_back(strs(v));
    return out;
  }, py::arg("which"), py::arg("k"), py::arg("transpose") = false);
  m.def("relations_json", [](int k, const std::string& kind) {
    return ppz::relations_to_json(kind == "bracket" ? ppz::ihara_relations(k) : ppz::gkz_relations(k));
  });
  m.def("report_json", [](int k) { return ppz::reports_to_json({ppz::correspondence_report(k)}); });
  m.def("zeta_single", [](int k, int digits) { return ppz::zeta_single(k, digits).to_fixed(digits); });
  m.def("zeta_double",
        [](int r, int s, int digits) { return ppz::zeta_double(r, s, digits).to_fixed(digits); });
  m.def("verify_relation_json", [](const std::string& text, int digits) {
    const ppz::RelationCheck c = ppz::verify_relation(ppz::relation_from_json(text), digits);
    return py::make_tuple(c.scalar.str(), c.residual.to_sci(6), c.value.to_fixed(digits));
  });
  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = ppz::cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
