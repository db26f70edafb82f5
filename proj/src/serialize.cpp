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

#include "ppzeta/serialize.hpp"

#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace ppz {

namespace {

using nlohmann::json;

json to_j(const Relation& rel) {
  json terms = json::array();
  for (const auto& t : rel.terms) {
    terms.push_back({{"r", t.r}, {"s", t.s}, {"coeff", t.coeff.str()}});
  }
  json j;
  j["weight"] = rel.weight;
  j["kind"] = kind_name(rel.kind);
  j["terms"] = std::move(terms);
  j["scalar_estimate"] = rel.scalar_estimate ? json(rel.scalar_estimate->str()) : json(nullptr);
  return j;
}

json to_j(const RatVector& v) {
  json out = json::array();
  for (const auto& e : v) out.push_back(e.str());
  return out;
}

json to_j(const std::vector<RatVector>& vs) {
  json out = json::array();
  for (const auto& v : vs) out.push_back(to_j(v));
  return out;
}

json to_j(const RatMatrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(to_j(m.row(r)));
  return out;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument("relation JSON: " + what);
}

Relation from_j(const json& j) {
  require(j.is_object(), "expected an object");
  for (const char* key : {"weight", "kind", "terms", "scalar_estimate"}) {
    require(j.contains(key), std::string("missing key ") + key);
  }
  require(j.size() == 4, "unexpected keys");
  require(j["weight"].is_number_integer(), "weight must be an integer");
  require(j["terms"].is_array(), "terms must be an array");
  Relation rel;
  rel.weight = j["weight"].get<int>();
  const std::string kind = j["kind"].is_string() ? j["kind"].get<std::string>() : "";
  require(kind == "bracket" || kind == "double_zeta", "bad kind");
  rel.kind = kind == "bracket" ? RelationKind::kBracket : RelationKind::kDoubleZeta;
  for (const auto& t : j["terms"]) {
    require(t.is_object() && t.size() == 3 && t.contains("r") && t.contains("s") &&
                t.contains("coeff"),
            "bad term");
    require(t["r"].is_number_integer() && t["s"].is_number_integer(), "bad term index");
    require(t["coeff"].is_string(), "coeff must be a string");
    const Rational c = Rational::parse(t["coeff"].get<std::string>());
    require(c.is_integer(), "coeff must be an integer");
    rel.terms.push_back({t["r"].get<int>(), t["s"].get<int>(), c});
  }
  const json& se = j["scalar_estimate"];
  require(se.is_null() || se.is_string(), "scalar_estimate must be a string or null");
  if (se.is_string()) rel.scalar_estimate = Rational::parse(se.get<std::string>());
  return rel;
}

}  // namespace

std::string relation_to_json(const Relation& rel) { return to_j(rel).dump(); }

std::string relations_to_json(const std::vector<Relation>& rels) {
  json out = json::array();
  for (const auto& r : rels) out.push_back(to_j(r));
  return out.dump(2) + "\n";
}

Relation relation_from_json(const std::string& text) {
  try {
    return from_j(json::parse(text));
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("relation JSON: ") + e.what());
  }
}

std::vector<Relation> relations_from_json(const std::string& text) {
  try {
    const json j = json::parse(text);
    require(j.is_array(), "expected an array");
    std::vector<Relation> out;
    for (const auto& e : j) out.push_back(from_j(e));
    return out;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("relation JSON: ") + e.what());
  }
}

std::string relations_to_csv(const std::vector<Relation>& rels) {
  std::ostringstream os;
  os << "weight,kind,index,r,s,coeff\n";
  for (std::size_t i = 0; i < rels.size(); ++i) {
    for (const auto& t : rels[i].terms) {
      os << rels[i].weight << ',' << kind_name(rels[i].kind) << ',' << i << ',' << t.r << ','
         << t.s << ',' << t.coeff << '\n';
    }
  }
  return os.str();
}

std::string matrix_to_json(const RatMatrix& m) { return to_j(m).dump() + "\n"; }

std::string reports_to_json(const std::vector<CorrespondenceReport>& reports) {
  json out = json::array();
  for (const auto& r : reports) {
    json j;
    j["weight"] = r.weight;
    j["dims"] = {{"formula", r.dim_formula},
                 {"ek", r.dim_ek},
                 {"ker_a", r.dim_ker_a},
                 {"ker_at", r.dim_ker_at}};
    j["checks"] = {
        {"dims_agree", r.dims_agree()},
        {"symbolic_match", r.symbolic_match ? json(*r.symbolic_match) : json(nullptr)},
        {"symmetric", r.symmetric},
        {"block", r.block},
        {"kernel_duality", r.kernel_duality},
        {"q_matches", r.q_matches},
        {"ker_a_from_a_vectors", r.ker_a_from_a_vectors},
        {"bijective", r.bijective}};
    j["all_passed"] = r.all_passed();
    j["A"] = to_j(r.a);
    j["M"] = to_j(r.m);
    j["tADB"] = to_j(r.tadb);
    j["ker_a"] = to_j(r.ker_a);
    j["ker_at"] = to_j(r.ker_at);
    j["a_vectors"] = to_j(r.a_vectors);
    j["q_vectors"] = to_j(r.q_vectors);
    out.push_back(std::move(j));
  }
  return out.dump(2) + "\n";
}

}  // namespace ppz
