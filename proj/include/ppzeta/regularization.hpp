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

// Formal zeta symbols Z(w) for convergent words, shuffle and star (stuffle)
// regularization of divergent words, and the linear relations they induce.

#ifndef PPZETA_REGULARIZATION_HPP_
#define PPZETA_REGULARIZATION_HPP_

#include <string>
#include <vector>

#include "ppzeta/words.hpp"

namespace ppz {

// Rational combination of Z(w), w convergent, plus a scalar (weight 0) part.
// Products are shuffle products: Z(u) Z(v) = Z(u sh v).
class FormalZetaCombo {
 public:
  FormalZetaCombo() = default;
  static FormalZetaCombo scalar(const Rational& c);
  // Throws std::invalid_argument for a non-convergent word.
  static FormalZetaCombo symbol(const Word& w, const Rational& c = Rational(1));

  Rational scalar_part() const { return poly_.coeff(Word()); }
  Rational coeff(const Word& w) const { return poly_.coeff(w); }
  // Convergent symbols only; the scalar part is excluded.
  NcPoly symbols() const;
  bool is_zero() const { return poly_.is_zero(); }
  bool is_homogeneous() const { return poly_.is_homogeneous(); }

  FormalZetaCombo& operator+=(const FormalZetaCombo& o);
  FormalZetaCombo& operator-=(const FormalZetaCombo& o);
  FormalZetaCombo& operator*=(const Rational& c);
  friend FormalZetaCombo operator+(FormalZetaCombo a, const FormalZetaCombo& b) {
    return a += b;
  }
  friend FormalZetaCombo operator-(FormalZetaCombo a, const FormalZetaCombo& b) {
    return a -= b;
  }
  friend FormalZetaCombo operator*(FormalZetaCombo a, const Rational& c) {
    return a *= c;
  }
  // Shuffle multiplication.
  friend FormalZetaCombo operator*(const FormalZetaCombo& a,
                                   const FormalZetaCombo& b);
  friend bool operator==(const FormalZetaCombo&, const FormalZetaCombo&) = default;

  // Signed combination of Z(r1,...,rk) symbols, e.g. "Z(2,1) - Z(3)".
  std::string str() const;

 private:
  explicit FormalZetaCombo(NcPoly p) : poly_(std::move(p)) {}
  NcPoly poly_;  // empty word carries the scalar part
};

// Z(w) in terms of convergent symbols: identity on convergent words, the
// double alternating sum over w = y^r v x^s otherwise.
FormalZetaCombo shuffle_regularize(const Word& w);

// Extends shuffle_regularize linearly.
FormalZetaCombo shuffle_regularize(const NcPoly& f);

// values[r] = Z*(1,...,1) with r ones, for 0 <= r <= bound.
struct StarSymbolTable {
  int bound = 0;
  std::vector<FormalZetaCombo> values;
};

// Throws std::invalid_argument unless 0 <= n <= 12.
StarSymbolTable star_units(int n);

// Z*(w) for w ending in y (the empty word gives 1). Throws
// std::invalid_argument for words ending in x.
FormalZetaCombo star_regularize(const Word& w);

// Z*(u) Z*(v) - Z*(u * v), which vanishes in the double shuffle quotient.
// Throws std::invalid_argument unless both words are nonempty and end in y.
FormalZetaCombo stuffle_relation(const Word& u, const Word& v);

struct FzQuotient {
  int weight = 0;
  int dimension = 0;
  std::vector<Word> symbols;                 // convergent words of the weight
  std::vector<FormalZetaCombo> relations;    // reduced relation basis
};

// Quotient of the weight-n convergent symbols by every stuffle_relation of
// total weight n. Throws std::invalid_argument unless 2 <= n <= 8.
FzQuotient fz_quotient(int n);
int fz_quotient_dim(int n);

// Every stuffle_relation(u, v) with |u| + |v| = n, u <= v.
std::vector<FormalZetaCombo> stuffle_relations(int n);

// Dimension of the weight-n polynomials f whose coefficient on each
// non-convergent word agrees with the regularization formula. Throws
// std::invalid_argument unless 2 <= n <= 8.
int sh_basis_dim(int n);

}  // namespace ppz

#endif  // PPZETA_REGULARIZATION_HPP_
