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

#include "ppzeta/cli.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "ppzeta/lie.hpp"
#include "ppzeta/matrices.hpp"
#include "ppzeta/numeric_zeta.hpp"
#include "ppzeta/period_poly.hpp"
#include "ppzeta/regularization.hpp"
#include "ppzeta/relations.hpp"
#include "ppzeta/serialize.hpp"

namespace ppz::cli {

namespace {

std::string matrix_text(const RatMatrix& m) {
  std::vector<std::size_t> width(m.cols(), 0);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) width[c] = std::max(width[c], m(r, c).str().size());
  }
  std::ostringstream os;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const std::string s = m(r, c).str();
      if (c) os << "  ";
      os << std::string(width[c] - s.size(), ' ') << s;
    }
    os << '\n';
  }
  return os.str();
}

RatMatrix which_matrix(const std::string& which, int k) {
  if (which == "A") return build_A(k);
  if (which == "Asym") return build_A_symbolic(k);
  if (which == "M") return conjugate_M(k);
  if (which == "S") return build_S(k);
  if (which == "T") return build_T(k);
  if (which == "D") return build_D(k);
  if (which == "B") return build_B(k);
  return symmetry_product(k);  // tADB
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::string report_line(const CorrespondenceReport& r) {
  std::ostringstream os;
  os << "k=" << r.weight << " dims formula=" << r.dim_formula << " E=" << r.dim_ek
     << " kerA=" << r.dim_ker_a << " kerAt=" << r.dim_ker_at << " symbolic="
     << (r.symbolic_match ? yes_no(*r.symbolic_match) : "skipped")
     << " symmetric=" << yes_no(r.symmetric) << " block=" << yes_no(r.block)
     << " duality=" << yes_no(r.kernel_duality) << " q=" << yes_no(r.q_matches)
     << " span=" << yes_no(r.ker_a_from_a_vectors) << " bijective=" << yes_no(r.bijective)
     << ' ' << (r.all_passed() ? "PASS" : "FAIL");
  return os.str();
}

struct CheckOutcome {
  Relation relation;
  RelationCheck primary;
  Rational second_scalar;
  int second_digits;
  bool passed;
};

CheckOutcome check_relation(const Relation& rel, int digits) {
  const int second = digits + 5 <= 50 ? digits + 5 : digits - 5;
  RelationCheck a = verify_relation(rel, digits);
  const RelationCheck b = verify_relation(rel, second);
  const BigFloat tol = BigFloat::ten_to_minus(a.residual.precision(), std::max(1, digits - 5));
  const bool passed = a.scalar == b.scalar && a.residual < tol;
  Relation filled = rel;
  filled.scalar_estimate = a.scalar;
  return CheckOutcome{filled, std::move(a), b.scalar, second, passed};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Period polynomials, double shuffle relations and double zeta values", "ppzeta"};
  app.require_subcommand(1, 1);
  app.set_help_all_flag("--help-all", "Show help for all subcommands");

  int weight = 0;
  std::string kind = "bracket";
  std::string format = "text";
  std::string which;
  int digits = 30;
  int from = 12;
  int to = 12;
  std::string word;
  bool star = false;

  auto* relations = app.add_subcommand("relations", "Bracket or double zeta relations");
  relations->add_option("--weight", weight, "Even weight k >= 12")->required();
  relations->add_option("--kind", kind, "bracket | zeta")
      ->check(CLI::IsMember({"bracket", "zeta"}));
  relations->add_option("--format", format, "text | json | csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));

  auto* basis = app.add_subcommand("period-basis", "Basis of restricted even period polynomials");
  basis->add_option("--weight", weight, "Even weight k")->required();
  basis->add_option("--format", format, "text | json")->check(CLI::IsMember({"text", "json"}));

  auto* matrix = app.add_subcommand("matrix", "Matrices of the weight-k correspondence");
  matrix->add_option("--which", which, "A | Asym | M | S | T | D | B | tADB")
      ->required()
      ->check(CLI::IsMember({"A", "Asym", "M", "S", "T", "D", "B", "tADB"}));
  matrix->add_option("--weight", weight, "Even weight k >= 12")->required();
  matrix->add_option("--format", format, "text | json | csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));

  auto* check = app.add_subcommand("check", "Numerical verification of double zeta relations");
  check->add_option("--weight", weight, "Even weight k >= 12")->required();
  check->add_option("--digits", digits, "Decimal digits")->check(CLI::Range(1, 50));
  check->add_option("--format", format, "text | json")->check(CLI::IsMember({"text", "json"}));

  auto* report = app.add_subcommand("report", "Correspondence checks over a weight range");
  report->add_option("--from", from, "First weight")->required()->check(CLI::Range(12, 40));
  report->add_option("--to", to, "Last weight")->required()->check(CLI::Range(12, 40));
  report->add_option("--format", format, "text | json")->check(CLI::IsMember({"text", "json"}));

  auto* ds = app.add_subcommand("ds-solve", "Double shuffle Lie elements of weight n");
  ds->add_option("--weight", weight, "Weight 3..10")->required()->check(CLI::Range(3, 10));

  auto* reg = app.add_subcommand("regularize", "Regularized Z symbol of a word");
  reg->add_option("--word", word, "Word over {x, y}, e.g. yxy")->required();
  reg->add_flag("--star", star, "Stuffle-style regularization");

  auto* fz = app.add_subcommand("fz-dim", "Dimension of the formal stuffle quotient");
  fz->add_option("--weight", weight, "Weight 2..8")->required()->check(CLI::Range(2, 8));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (relations->parsed()) {
      const std::vector<Relation> rels =
          kind == "bracket" ? ihara_relations(weight) : gkz_relations(weight);
      if (format == "json") {
        out << relations_to_json(rels);
      } else if (format == "csv") {
        out << relations_to_csv(rels);
      } else {
        for (const auto& r : rels) out << format_relation(r) << '\n';
      }
      return kExitOk;
    }
    if (basis->parsed()) {
      const std::vector<PeriodPoly> polys = ek_basis(weight);
      if (format == "json") {
        std::vector<RatVector> coeffs;
        for (const auto& p : polys) coeffs.push_back(p.coeffs());
        out << matrix_to_json(RatMatrix::from_rows(coeffs, static_cast<std::size_t>((weight - 4) / 2)));
      } else {
        for (const auto& p : polys) out << format_period_poly(p) << '\n';
      }
      return kExitOk;
    }
    if (matrix->parsed()) {
      const RatMatrix m = which_matrix(which, weight);
      if (format == "csv") {
        out << to_csv(m);
      } else if (format == "json") {
        out << matrix_to_json(m);
      } else {
        out << matrix_text(m);
      }
      return kExitOk;
    }
    if (check->parsed()) {
      bool all = true;
      std::vector<Relation> filled;
      std::ostringstream text;
      for (const Relation& rel : gkz_relations(weight)) {
        const CheckOutcome c = check_relation(rel, digits);
        all = all && c.passed;
        filled.push_back(c.relation);
        text << format_relation(rel) << '\n'
             << "  value    = " << c.primary.value.to_fixed(digits) << '\n'
             << "  scalar   = " << c.primary.scalar << '\n'
             << "  residual = " << c.primary.residual.to_sci(3) << '\n'
             << "  stable   = " << yes_no(c.primary.scalar == c.second_scalar) << " ("
             << c.second_digits << " digits gives " << c.second_scalar << ")\n"
             << "  " << (c.passed ? "PASS" : "FAIL") << '\n';
      }
      out << (format == "json" ? relations_to_json(filled) : text.str());
      return all ? kExitOk : kExitCheckFailed;
    }
    if (report->parsed()) {
      if (from > to) throw std::invalid_argument("report: --from exceeds --to");
      std::vector<std::future<CorrespondenceReport>> jobs;
      for (int k = from + (from % 2); k <= to; k += 2) {
        jobs.push_back(std::async(std::launch::async, correspondence_report, k));
      }
      std::vector<CorrespondenceReport> reports;
      for (auto& j : jobs) reports.push_back(j.get());
      bool all = true;
      for (const auto& r : reports) all = all && r.all_passed();
      if (format == "json") {
        out << reports_to_json(reports);
      } else {
        for (const auto& r : reports) out << report_line(r) << '\n';
      }
      return all ? kExitOk : kExitCheckFailed;
    }
    if (ds->parsed()) {
      const std::vector<NcPoly> sols = ds_solve(weight);
      out << "dim " << sols.size() << '\n';
      for (const auto& f : sols) out << f << '\n';
      return kExitOk;
    }
    if (reg->parsed()) {
      const Word w = Word::parse(word);
      out << (star ? star_regularize(w) : shuffle_regularize(w)).str() << '\n';
      return kExitOk;
    }
    if (fz->parsed()) {
      out << fz_quotient_dim(weight) << '\n';
      return kExitOk;
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace ppz::cli
