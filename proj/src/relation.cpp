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

#include "ppzeta/relation.hpp"

#include <sstream>

namespace ppz {

std::string kind_name(RelationKind kind) {
  return kind == RelationKind::kBracket ? "bracket" : "double_zeta";
}

std::vector<Rational> Relation::coefficients() const {
  std::vector<Rational> out;
  out.reserve(terms.size());
  for (const auto& t : terms) out.push_back(t.coeff);
  return out;
}

std::string format_relation(const Relation& rel) {
  std::ostringstream os;
  bool first = true;
  for (const auto& t : rel.terms) {
    if (t.coeff.is_zero()) continue;
    const Rational mag = t.coeff.sign() < 0 ? -t.coeff : t.coeff;
    if (first) {
      if (t.coeff.sign() < 0) os << '-';
    } else {
      os << (t.coeff.sign() < 0 ? " - " : " + ");
    }
    if (mag != Rational(1)) os << mag << ' ';
    if (rel.kind == RelationKind::kBracket) {
      os << "{f" << t.r << ", f" << t.s << '}';
    } else {
      os << "Z(" << t.r << ',' << t.s << ')';
    }
    first = false;
  }
  if (first) os << '0';
  if (rel.kind == RelationKind::kBracket) {
    os << " ≡ 0 (mod depth 3)";
  } else {
    os << " ≡ 0 (mod Z(" << rel.weight << "))";
  }
  return os.str();
}

}  // namespace ppz
