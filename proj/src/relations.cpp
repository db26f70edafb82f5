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

#include "ppzeta/relations.hpp"

#include <stdexcept>
#include <string>

#include "ppzeta/matrices.hpp"
#include "ppzeta/period_poly.hpp"

namespace ppz {

namespace {

void check_weight(int k) {
  if (k < 12 || k % 2 != 0) {
    throw std::invalid_argument("weight must be even and >= 12, got " + std::to_string(k));
  }
}

std::vector<RatVector> apply_each(const RatMatrix& m, const std::vector<RatVector>& vs) {
  std::vector<RatVector> out;
  out.reserve(vs.size());
  for (const auto& v : vs) out.push_back(m * v);
  return out;
}

}  // namespace

std::vector<Relation> ihara_relations(int k) {
  check_weight(k);
  const std::size_t h = static_cast<std::size_t>((k - 4) / 4);
  std::vector<Relation> out;
  for (const PeriodPoly& p : ek_basis(k)) {
    const RatVector a = a_vector(p);
    const RatVector half = canonicalize(RatVector(a.begin(), a.begin() + h));
    Relation rel;
    rel.weight = k;
    rel.kind = RelationKind::kBracket;
    for (std::size_t i = 0; i < h; ++i) {
      const int r = 2 * static_cast<int>(i + 1) + 1;
      rel.terms.push_back({r, k - r, half[i]});
    }
    out.push_back(std::move(rel));
  }
  return out;
}

std::vector<Relation> gkz_relations(int k) {
  check_weight(k);
  const RatMatrix at = build_A(k).transpose();
  const std::vector<PeriodPoly> basis = ek_basis(k);
  std::vector<RatVector> qs;
  std::vector<Relation> out;
  for (const PeriodPoly& p : basis) {
    const RatVector q = q_vector(p);
    if (!is_zero(at * q)) {
      throw std::logic_error("q-vector outside Ker tA at weight " + std::to_string(k));
    }
    qs.push_back(q);
    // Terms run Z(k-3,3), Z(k-5,5), ..., Z(3,k-3).
    const RatVector ordered = canonicalize(RatVector(q.rbegin(), q.rend()));
    Relation rel;
    rel.weight = k;
    rel.kind = RelationKind::kDoubleZeta;
    for (std::size_t i = 0; i < ordered.size(); ++i) {
      const int r = k - 3 - 2 * static_cast<int>(i);
      rel.terms.push_back({r, k - r, ordered[i]});
    }
    out.push_back(std::move(rel));
  }
  if (!same_span(qs, kernel(at), at.cols())) {
    throw std::logic_error("q-vectors do not span Ker tA at weight " + std::to_string(k));
  }
  return out;
}

bool CorrespondenceReport::dims_agree() const {
  return dim_ek == dim_formula && dim_ker_a == dim_formula && dim_ker_at == dim_formula;
}

bool CorrespondenceReport::all_passed() const {
  return dims_agree() && symbolic_match.value_or(true) && symmetric && block &&
         kernel_duality && q_matches && ker_a_from_a_vectors && bijective;
}

CorrespondenceReport correspondence_report(int k) {
  check_weight(k);
  if (k > 40) throw std::invalid_argument("correspondence_report: weight above 40");
  CorrespondenceReport rep;
  rep.weight = k;
  rep.a = build_A(k);
  const std::size_t n = rep.a.rows();
  rep.m = conjugate_M(k);
  rep.tadb = symmetry_product(k);
  rep.ker_a = kernel(rep.a);
  rep.ker_at = kernel(rep.a.transpose());

  const std::vector<PeriodPoly> basis = ek_basis(k);
  for (const PeriodPoly& p : basis) {
    rep.a_vectors.push_back(a_vector(p));
    rep.q_vectors.push_back(q_vector(p));
  }

  rep.dim_formula = ek_dim_formula(k);
  rep.dim_ek = static_cast<int>(basis.size());
  rep.dim_ker_a = static_cast<int>(rep.ker_a.size());
  rep.dim_ker_at = static_cast<int>(rep.ker_at.size());
  if (k <= 30) rep.symbolic_match = build_A_symbolic(k) == rep.a;
  rep.symmetric = rep.tadb.is_symmetric();
  rep.block = block_check(rep.m, k);

  const RatMatrix db = build_D(k) * build_B(k);
  rep.kernel_duality = same_span(rep.ker_at, apply_each(db, rep.ker_a), n);
  rep.q_matches = true;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (db * rep.a_vectors[i] != rep.q_vectors[i]) rep.q_matches = false;
  }
  rep.ker_a_from_a_vectors = same_span(rep.ker_a, rep.a_vectors, n);
  const std::vector<RatVector> images = apply_each(db, rep.a_vectors);
  rep.bijective = rank(RatMatrix::from_rows(images, n)) == rep.ker_at.size() &&
                  images.size() == rep.ker_at.size() &&
                  same_span(images, rep.ker_at, n);
  return rep;
}

}  // namespace ppz
