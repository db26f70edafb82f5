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

// Relations among Poisson brackets {f_r, f_s} and double zeta values
// Z(r, s), both indexed by pairs (r, s) of odd integers with r + s = k.

#ifndef PPZETA_RELATION_HPP_
#define PPZETA_RELATION_HPP_

#include <optional>
#include <string>
#include <vector>

#include "ppzeta/rational.hpp"

namespace ppz {

enum class RelationKind { kBracket, kDoubleZeta };

std::string kind_name(RelationKind kind);  // "bracket" | "double_zeta"

struct RelationTerm {
  int r = 0;
  int s = 0;
  Rational coeff;
  friend bool operator==(const RelationTerm&, const RelationTerm&) = default;
};

struct Relation {
  int weight = 0;
  RelationKind kind = RelationKind::kBracket;
  std::vector<RelationTerm> terms;
  std::optional<Rational> scalar_estimate;  // double_zeta kind only

  std::vector<Rational> coefficients() const;
  friend bool operator==(const Relation&, const Relation&) = default;
};

// "{f3, f9} - 3 {f5, f7} ≡ 0 (mod depth 3)" or
// "14 Z(9,3) + 75 Z(7,5) + 84 Z(5,7) ≡ 0 (mod Z(12))". Zero terms are
// omitted; the zero relation prints as "0 ≡ 0 ...".
std::string format_relation(const Relation& rel);

}  // namespace ppz

#endif  // PPZETA_RELATION_HPP_
