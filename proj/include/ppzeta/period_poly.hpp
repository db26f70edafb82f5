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

// Restricted even period polynomials of weight k: even polynomials of
// degree <= k - 4 without constant term satisfying
//   P(X) + X^{k-2} P(1/X) = 0,
//   P(X) + X^{k-2} P(1 - 1/X) + (X - 1)^{k-2} P(1/(1 - X)) = 0.

#ifndef PPZETA_PERIOD_POLY_HPP_
#define PPZETA_PERIOD_POLY_HPP_

#include <string>
#include <vector>

#include "ppzeta/linalg.hpp"

namespace ppz {

class PeriodPoly {
 public:
  // coeffs[i - 1] is the coefficient of X^{2i}, 1 <= i <= (k - 4) / 2.
  // Throws std::invalid_argument for odd k, k < 4, or a length mismatch.
  PeriodPoly(int weight, RatVector coeffs);
  static PeriodPoly zero(int weight);
  // sum_i a_i (X^{2i} - X^{k-2-2i}) over 1 <= i <= floor((k - 4) / 4).
  static PeriodPoly from_a_coefficients(int weight, const RatVector& half);

  int weight() const { return weight_; }
  const RatVector& coeffs() const { return coeffs_; }
  // Coefficient of X^d for any 0 <= d <= k - 2.
  Rational coeff(int degree) const;

  bool is_antisymmetric() const;
  friend bool operator==(const PeriodPoly&, const PeriodPoly&) = default;

 private:
  int weight_;
  RatVector coeffs_;
};

// Coefficients (degree 0..k-2) of P(X) + X^{k-2} P(1/X).
RatVector inversion_residual(const PeriodPoly& p);
// Coefficients (degree 0..k-2) of the three-term expression.
RatVector three_term_residual(const PeriodPoly& p);

// floor((k - 4) / 4) - floor((k - 2) / 6). Throws for odd k or k < 4.
int ek_dim_formula(int k);

// Basis of E_k, each vector integral with content 1 and first nonzero
// coefficient (lowest degree) positive. Throws std::invalid_argument unless
// k is even with 4 <= k <= 60.
std::vector<PeriodPoly> ek_basis(int k);

// (a_1, ..., a_{(k-4)/2}) with a_i the coefficient of X^{2i}. Throws
// std::invalid_argument when P violates the inversion relation.
RatVector a_vector(const PeriodPoly& p);

// (q_{3,k-3}, q_{5,k-5}, ..., q_{k-3,3}) from
//   P(X + Y, Y) = sum_r C(k-2, r-1) q_{r,k-r} X^{r-1} Y^{k-r-1}.
RatVector q_vector(const PeriodPoly& p);

// Paired form with the low degree first, e.g.
// "2(X^2 - X^12) - 7(X^4 - X^10) + 11(X^6 - X^8)". Only the low-degree
// coefficients are read, so the output is faithful for antisymmetric P.
std::string format_period_poly(const PeriodPoly& p);

}  // namespace ppz

#endif  // PPZETA_PERIOD_POLY_HPP_
