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

// Acceptance suite: one PASS/FAIL line per criterion. Exit status is 0 only
// when every criterion passes.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <string>

#include "ppzeta/lie.hpp"
#include "ppzeta/matrices.hpp"
#include "ppzeta/numeric_zeta.hpp"
#include "ppzeta/period_poly.hpp"
#include "ppzeta/regularization.hpp"
#include "ppzeta/relations.hpp"
#include "test_util.hpp"

using namespace ppz;
using ppz::testing::V;

namespace {

struct Outcome {
  bool ok;
  std::string detail;
};

// Dimension of ds_n by elimination over all word coefficients.
std::size_t ds_dim_oracle(int n) {
  const std::vector<Word> words = all_words(n);
  std::map<Word, std::size_t> index;
  for (std::size_t i = 0; i < words.size(); ++i) index[words[i]] = i;
  std::vector<std::vector<mpq_class>> rows(words.size(), std::vector<mpq_class>(words.size()));
  for (std::size_t j = 0; j < words.size(); ++j) {
    const NcPoly img = dynkin_bracketing(NcPoly(words[j]));
    for (const auto& [w, c] : img.terms()) {
      rows[index[w]][j] += c.raw();
    }
    rows[j][j] -= n;
  }
  for (const auto& [u, v] : admissible_stuffle_pairs(n)) {
    std::vector<mpq_class> row(words.size());
    const NcPoly product = stuffle(u, v);
    for (const auto& [w, c] : product.terms()) row[index[w]] += c.raw();
    rows.push_back(row);
  }
  return words.size() - ppz::testing::dense_rank(rows);
}

Outcome golden_matrices() {
  const bool a = build_A(12) ==
                 RatMatrix{{1, 6, 15, 28}, {0, 1, 15, 42}, {0, 0, -14, -42}, {0, -6, -15, -27}};
  const bool m = conjugate_M(12) ==
                 RatMatrix{{1, 0, 0, 0}, {0, 1, 0, 0}, {-28, -21, -27, -9}, {-42, -15, -42, -14}};
  return {a && m, std::string("A(12) ") + (a ? "ok" : "differs") + ", T^-1 A T " + (m ? "ok" : "differs")};
}

Outcome golden_kernels() {
  const RatMatrix a = build_A(12);
  const auto ka = kernel(a);
  const auto kat = kernel(a.transpose());
  const RatVector expected_at = canonicalize(V({0, 168, 150, 28}));
  const bool ok = ka == std::vector<RatVector>{V({1, -3, 3, -1})} &&
                  kat == std::vector<RatVector>{expected_at};
  std::string detail = "Ker A = " + (ka.empty() ? "{}" : to_string(ka[0])) + ", Ker tA = " +
                       (kat.empty() ? "{}" : to_string(kat[0])) +
                       " (content-1 form of (0, 168, 150, 28))";
  return {ok, detail};
}

Outcome symmetry() {
  const RatMatrix reference{{14, 84, 210, 392},
                          {84, 507, 1305, 2478},
                          {210, 1305, 3783, 7644},
                          {392, 2478, 7644, 15890}};
  bool ok = symmetry_product(12) == Rational(1, 630) * reference;
  const bool golden = ok;
  for (int k = 12; k <= 40; k += 2) ok = ok && symmetry_product(k).is_symmetric();
  return {ok, std::string("k=12 golden ") + (golden ? "ok" : "differs") + ", symmetric 12..40"};
}

Outcome oracle_equivalence() {
  for (int k = 12; k <= 30; k += 2) {
    if (build_A_symbolic(k) != build_A(k)) return {false, "mismatch at k=" + std::to_string(k)};
  }
  return {true, "odot/ad_x closed form agree for k=12..30"};
}

Outcome dimension_sweep() {
  for (int k = 12; k <= 40; k += 2) {
    const int f = ek_dim_formula(k);
    if (static_cast<int>(kernel(build_A(k)).size()) != f ||
        static_cast<int>(ek_basis(k).size()) != f) {
      return {false, "mismatch at k=" + std::to_string(k)};
    }
  }
  return {true, "dim Ker A = dim E_k = formula for k=12..40"};
}

Outcome block_structure() {
  for (int k = 12; k <= 40; k += 2) {
    if (!block_check(conjugate_M(k), k)) return {false, "fails at k=" + std::to_string(k)};
  }
  return {true, "k=12..40, both classes mod 4"};
}

Outcome duality() {
  for (int k = 12; k <= 40; k += 2) {
    const RatMatrix a = build_A(k);
    const RatMatrix db = build_D(k) * build_B(k);
    std::vector<RatVector> image;
    for (const auto& v : kernel(a)) image.push_back(db * v);
    if (!same_span(kernel(a.transpose()), image, a.rows())) {
      return {false, "Ker tA != DB Ker A at k=" + std::to_string(k)};
    }
    for (const auto& p : ek_basis(k)) {
      if (q_vector(p) != db * a_vector(p)) return {false, "q != DB a at k=" + std::to_string(k)};
    }
  }
  return {true, "k=12..40"};
}

Outcome golden_relations() {
  const auto i12 = ihara_relations(12);
  const auto i16 = ihara_relations(16);
  const auto g12 = gkz_relations(12);
  const bool ih = i12.size() == 1 && i12[0].coefficients() == V({1, -3}) && i16.size() == 1 &&
                  i16[0].coefficients() == V({2, -7, 11});
  const RatVector reference = canonicalize(V({28, 150, 168, 0}));
  const bool gk = g12.size() == 1 && g12[0].coefficients() == reference;
  return {ih && gk, std::string("Ihara k=12,16 ") + (ih ? "ok" : "differs") + "; GKZ k=12 " +
                        (g12.empty() ? "{}" : to_string(g12[0].coefficients())) +
                        " (content-1 form of (28, 150, 168, 0))"};
}

Outcome numeric_relation() {
  const int digits = 30;
  const mpfr_prec_t bits = BigFloat::bits_for_digits(digits) + 16;
  const BigFloat lhs = BigFloat(bits, 28) * zeta_double(9, 3, digits) +
                       BigFloat(bits, 150) * zeta_double(7, 5, digits) +
                       BigFloat(bits, 168) * zeta_double(5, 7, digits);
  const BigFloat rhs = BigFloat(bits, Rational(5197, 691)) * zeta_single(12, digits);
  const BigFloat diff = (lhs - rhs).abs();
  Relation rel;
  rel.weight = 12;
  rel.kind = RelationKind::kDoubleZeta;
  rel.terms = {{9, 3, Rational(28)}, {7, 5, Rational(150)}, {5, 7, Rational(168)}, {3, 9, Rational(0)}};
  const RelationCheck check = verify_relation(rel, digits);
  const bool ok = diff < BigFloat::ten_to_minus(bits, 20) && check.scalar == Rational(5197, 691);
  return {ok, "|difference| = " + diff.to_sci(3) + ", scalar " + check.scalar.str()};
}

Outcome regularization() {
  const bool zero = shuffle_regularize(Word::x()).is_zero() && shuffle_regularize(Word::y()).is_zero();
  const FzQuotient q = fz_quotient(3);
  std::vector<RatVector> rows;
  for (const auto& rel : q.relations) {
    RatVector r;
    for (const auto& w : q.symbols) r.push_back(rel.coeff(w));
    rows.push_back(r);
  }
  const FormalZetaCombo euler = FormalZetaCombo::symbol(Word::parse("xyy")) -
                                FormalZetaCombo::symbol(Word::parse("xxy"));
  RatVector e;
  for (const auto& w : q.symbols) e.push_back(euler.coeff(w));
  std::vector<RatVector> with = rows;
  with.push_back(e);
  const bool in_span = !rows.empty() && rank(RatMatrix::from_rows(with, q.symbols.size())) ==
                                            rank(RatMatrix::from_rows(rows, q.symbols.size()));
  bool sh = true;
  for (int n = 2; n <= 8; ++n) sh = sh && sh_basis_dim(n) == (1 << (n - 2));
  return {zero && in_span && sh, std::string("Z(x)=Z(y)=0 ") + (zero ? "ok" : "no") +
                                     ", Euler in span " + (in_span ? "ok" : "no") +
                                     ", sh dims " + (sh ? "ok" : "no")};
}

Outcome ds_closure() {
  const std::map<int, std::size_t> expected{{3, 1}, {4, 0}, {5, 1}, {6, 0}, {7, 1}};
  std::string detail = "dims";
  bool ok = true;
  for (const auto& [n, d] : expected) {
    const std::size_t got = ds_solve(n).size();
    const std::size_t oracle = ds_dim_oracle(n);
    ok = ok && got == d && oracle == d;
    detail += " " + std::to_string(n) + ":" + std::to_string(got) + "/" + std::to_string(oracle);
  }
  const NcPoly g = poisson(ds_solve(3).at(0), ds_solve(5).at(0));
  const bool closed = !g.is_zero() && ds_check(g).ok();
  return {ok && closed, detail + ", {f3, f5} in ds " + (closed ? "ok" : "no")};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_s;  // 0 means no limit
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "golden matrices", 1.0, golden_matrices},
      {2, "golden kernels", 0.0, golden_kernels},
      {3, "symmetry product", 10.0, symmetry},
      {4, "oracle equivalence", 60.0, oracle_equivalence},
      {5, "dimension sweep", 0.0, dimension_sweep},
      {6, "block structure", 0.0, block_structure},
      {7, "duality", 0.0, duality},
      {8, "golden relations", 0.0, golden_relations},
      {9, "numeric relation", 10.0, numeric_relation},
      {10, "regularization", 0.0, regularization},
      {11, "ds closure instance", 30.0, ds_closure},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o{false, ""};
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = c.limit_s == 0.0 || secs < c.limit_s;
    const bool pass = o.ok && in_time;
    if (!pass) ++failures;
    std::printf("criterion %2d %-20s %s  %.3fs%s  %s\n", c.id, c.name, pass ? "PASS" : "FAIL", secs,
                in_time ? "" : " (over time limit)", o.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
