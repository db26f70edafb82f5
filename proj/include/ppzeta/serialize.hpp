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

// JSON and CSV encodings of relations, reports and matrices.
//
// Relation schema:
//   { "weight": int, "kind": "bracket" | "double_zeta",
//     "terms": [ { "r": int, "s": int, "coeff": "int-string" } ],
//     "scalar_estimate": "p/q" | null }

#ifndef PPZETA_SERIALIZE_HPP_
#define PPZETA_SERIALIZE_HPP_

#include <string>
#include <vector>

#include "ppzeta/linalg.hpp"
#include "ppzeta/relation.hpp"
#include "ppzeta/relations.hpp"

namespace ppz {

std::string relation_to_json(const Relation& rel);
// Pretty-printed JSON array, newline-terminated.
std::string relations_to_json(const std::vector<Relation>& rels);
// Throws std::invalid_argument on schema violations.
Relation relation_from_json(const std::string& text);
std::vector<Relation> relations_from_json(const std::string& text);

// Header "weight,kind,index,r,s,coeff"; one row per term.
std::string relations_to_csv(const std::vector<Relation>& rels);

std::string matrix_to_json(const RatMatrix& m);
std::string reports_to_json(const std::vector<CorrespondenceReport>& reports);

}  // namespace ppz

#endif  // PPZETA_SERIALIZE_HPP_
