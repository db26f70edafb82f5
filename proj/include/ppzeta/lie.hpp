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

// Free Lie algebra on {x, y}: brackets, the derivations D_f, the Poisson
// bracket, the enveloping product for double shuffle elements, and the
// double shuffle membership test and solver.

#ifndef PPZETA_LIE_HPP_
#define PPZETA_LIE_HPP_

#include <utility>
#include <vector>

#include "ppzeta/words.hpp"

namespace ppz {

// [f, g] = fg - gf
NcPoly bracket(const NcPoly& f, const NcPoly& g);

// ad_x^n(y) = sum_i (-1)^i C(n, i) x^{n-i} y x^i
NcPoly ad_x_pow(int n);

// Left-normed bracketing [..[[a1, a2], a3], .., an] extended linearly.
NcPoly dynkin_bracketing(const NcPoly& f);

// Dynkin-Specht-Wever test: a homogeneous f of weight n is a Lie polynomial
// iff dynkin_bracketing(f) == n f. Throws std::invalid_argument for
// non-homogeneous input.
bool is_lie(const NcPoly& f);

// D_f(g) for the derivation with D_f(x) = 0, D_f(y) = [y, f].
NcPoly derivation_apply(const NcPoly& f, const NcPoly& g);

// {f, g} = [f, g] + D_f(g) - D_g(f)
NcPoly poisson(const NcPoly& f, const NcPoly& g);

// f (.) g = fg + D_f(g). Only meaningful when f is a double shuffle element
// (or its depth-1 truncation); the caller is responsible for that.
NcPoly odot(const NcPoly& f, const NcPoly& g);

// Lyndon words of length n over x < y, in increasing order.
std::vector<Word> lyndon_words(int n);
// Standard bracketing of a Lyndon word.
NcPoly lyndon_bracket(const Word& w);

using WordPair = std::pair<Word, Word>;

// Unordered pairs (u, v), u <= v, of nonempty words ending in y with
// |u| + |v| = n, excluding pairs where both are powers of y.
std::vector<WordPair> admissible_stuffle_pairs(int n);

struct DsViolations {
  bool lie = true;
  std::vector<WordPair> pairs;  // (f | u * v) != 0
  bool ok() const { return lie && pairs.empty(); }
};

// Throws std::invalid_argument unless f is homogeneous of weight >= 3.
DsViolations ds_check(const NcPoly& f);

// Constraint matrix of ds_n in the Lyndon basis: one row per admissible
// pair, one column per Lyndon word.
struct DsConstraintSystem {
  int weight = 0;
  std::vector<WordPair> pairs;
  std::vector<Word> lyndon;
  std::vector<NcPoly> basis;  // lyndon_bracket of each Lyndon word
};

DsConstraintSystem ds_constraints(int n);

// Basis of ds_n, 3 <= n <= 10. If some element has a nonzero coefficient of
// x^{n-1} y, the first basis element is scaled so that coefficient is 1 and
// it is the only one with that coefficient nonzero.
// Throws std::invalid_argument for n out of range.
std::vector<NcPoly> ds_solve(int n);

}  // namespace ppz

#endif  // PPZETA_LIE_HPP_
