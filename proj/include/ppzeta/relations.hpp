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

// Weight-k correspondence between restricted even period polynomials,
// bracket relations modulo depth 3 and double zeta relations modulo Z(k).

#ifndef PPZETA_RELATIONS_HPP_
#define PPZETA_RELATIONS_HPP_

#include <optional>
#include <vector>

#include "ppzeta/linalg.hpp"
#include "ppzeta/relation.hpp"

namespace ppz {

// One bracket relation per E_k basis element, with terms
// (2i+1, k-2i-1), 1 <= i <= floor((k-4)/4), coefficients a_i scaled to
// integer content 1 with the first nonzero coefficient positive.
// Throws std::invalid_argument unless k is even and >= 12.
std::vector<Relation> ihara_relations(int k);

// One double zeta relation per E_k basis element with terms
// Z(k-3,3), Z(k-5,5), ..., Z(3,k-3) from the q-vector, scaled to integer
// content 1 with the first nonzero coefficient (Z(k-3,3) when nonzero)
// positive. Throws std::logic_error if a vector fails tA q = 0 or the
// vectors do not span Ker tA.
std::vector<Relation> gkz_relations(int k);

struct CorrespondenceReport {
  int weight = 0;
  int dim_formula = 0;
  int dim_ek = 0;
  int dim_ker_a = 0;
  int dim_ker_at = 0;
  std::optional<bool> symbolic_match;  // computed for k <= 30
  bool symmetric = false;              // tA D B symmetric
  bool block = false;                  // block_check on T^{-1} A T
  bool kernel_duality = false;         // Ker tA = DB Ker A
  bool q_matches = false;              // q_vector(P) = DB a_vector(P)
  bool ker_a_from_a_vectors = false;   // Ker A = span of a-vectors
  bool bijective = false;              // rank of DB a-vectors = dim Ker tA

  RatMatrix a;
  RatMatrix m;
  RatMatrix tadb;
  std::vector<RatVector> ker_a;
  std::vector<RatVector> ker_at;
  std::vector<RatVector> a_vectors;
  std::vector<RatVector> q_vectors;

  bool dims_agree() const;
  bool all_passed() const;
};

// Throws std::invalid_argument unless k is even with 12 <= k <= 40.
CorrespondenceReport correspondence_report(int k);

}  // namespace ppz

#endif  // PPZETA_RELATIONS_HPP_
