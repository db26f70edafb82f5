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

#include "ppzeta/period_poly.hpp"

#include <sstream>
#include <stdexcept>

namespace ppz {

namespace {

void check_weight(int k) {
  if (k < 4 || k % 2 != 0) {
    throw std::invalid_argument("weight must be even and >= 4, got " +
                                std::to_string(k));
  }
}

int unknowns(int k) { return (k - 4) / 2; }

Rational signed_binomial(long n, long e) {
  // coefficient of X^e in (X - 1)^n
  if (e < 0 || e > n) return Rational(0);
  Rational c(binomial(n, e));
  return (n - e) % 2 == 0 ? c : -c;
}

// Row-per-degree linear forms in (p_2, ..., p_{k-4}) for both relations.
RatMatrix inversion_system(int k) {
  const int n = unknowns(k);
  RatMatrix m(static_cast<std::size_t>(k - 1), static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    const auto col = static_cast<std::size_t>(i - 1);
    m(static_cast<std::size_t>(2 * i), col) += 1;
    m(static_cast<std::size_t>(k - 2 - 2 * i), col) += 1;
  }
  return m;
}

RatMatrix three_term_system(int k) {
  const int n = unknowns(k);
  RatMatrix m(static_cast<std::size_t>(k - 1), static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    const auto col = static_cast<std::size_t>(i - 1);
    const int e = 2 * i;
    for (int d = 0; d <= k - 2; ++d) {
      const auto row = static_cast<std::size_t>(d);
      if (d == e) m(row, col) += 1;
      // X^{k-2} P(1 - 1/X) contributes (X - 1)^e X^{k-2-e}.
      m(row, col) += signed_binomial(e, d - (k - 2 - e));
      // (X - 1)^{k-2} P(1/(1 - X)) contributes (X - 1)^{k-2-e}.
      m(row, col) += signed_binomial(k - 2 - e, d);
    }
  }
  return m;
}

}  // namespace

PeriodPoly::PeriodPoly(int weight, RatVector coeffs)
    : weight_(weight), coeffs_(std::move(coeffs)) {
  check_weight(weight);
  if (static_cast<int>(coeffs_.size()) != unknowns(weight)) {
    throw std::invalid_argument("period polynomial needs (k-4)/2 coefficients");
  }
}

PeriodPoly PeriodPoly::zero(int weight) {
  check_weight(weight);
  return PeriodPoly(weight, RatVector(static_cast<std::size_t>(unknowns(weight))));
}

PeriodPoly PeriodPoly::from_a_coefficients(int weight, const RatVector& half) {
  check_weight(weight);
  const int n = unknowns(weight);
  if (static_cast<int>(half.size()) != (weight - 4) / 4) {
    throw std::invalid_argument("expected floor((k-4)/4) coefficients");
  }
  RatVector c(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < half.size(); ++i) {
    c[i] += half[i];
    c[static_cast<std::size_t>(n) - 1 - i] -= half[i];
  }
  return PeriodPoly(weight, std::move(c));
}

Rational PeriodPoly::coeff(int degree) const {
  if (degree % 2 != 0 || degree < 2 || degree > weight_ - 4) return Rational(0);
  return coeffs_[static_cast<std::size_t>(degree / 2 - 1)];
}

bool PeriodPoly::is_antisymmetric() const {
  return is_zero(inversion_residual(*this));
}

RatVector inversion_residual(const PeriodPoly& p) {
  return inversion_system(p.weight()) * p.coeffs();
}

RatVector three_term_residual(const PeriodPoly& p) {
  return three_term_system(p.weight()) * p.coeffs();
}

int ek_dim_formula(int k) {
  check_weight(k);
  return (k - 4) / 4 - (k - 2) / 6;
}

std::vector<PeriodPoly> ek_basis(int k) {
  check_weight(k);
  if (k > 60) throw std::invalid_argument("ek_basis: weight above 60");
  const int n = unknowns(k);
  if (n == 0) return {};
  const RatMatrix inv = inversion_system(k);
  const RatMatrix three = three_term_system(k);
  RatMatrix stacked(inv.rows() + three.rows(), static_cast<std::size_t>(n));
  for (std::size_t r = 0; r < inv.rows(); ++r) {
    for (std::size_t c = 0; c < inv.cols(); ++c) {
      stacked(r, c) = inv(r, c);
      stacked(inv.rows() + r, c) = three(r, c);
    }
  }
  std::vector<PeriodPoly> out;
  for (RatVector& v : kernel(stacked)) out.emplace_back(k, std::move(v));
  return out;
}

RatVector a_vector(const PeriodPoly& p) {
  if (!p.is_antisymmetric()) {
    throw std::invalid_argument("a_vector: polynomial violates P(X) = -X^{k-2} P(1/X)");
  }
  return p.coeffs();
}

RatVector q_vector(const PeriodPoly& p) {
  const int k = p.weight();
  const int n = unknowns(k);
  RatVector q(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) {
    // coefficient of X^{2j} Y^{k-2-2j} in sum_d p_d (X + Y)^d Y^{k-2-d}
    Rational c;
    for (int d = 2; d <= k - 4; d += 2) {
      c += p.coeff(d) * Rational(binomial(d, 2 * j));
    }
    q[static_cast<std::size_t>(j - 1)] = c / Rational(binomial(k - 2, 2 * j));
  }
  return q;
}

std::string format_period_poly(const PeriodPoly& p) {
  const int k = p.weight();
  std::ostringstream os;
  bool first = true;
  for (int i = 1; 4 * i <= k - 4; ++i) {
    const int lo = 2 * i;
    const int hi = k - 2 - lo;
    const Rational c = p.coeff(lo);
    if (c.is_zero()) continue;
    const Rational mag = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) os << '-';
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    if (mag != Rational(1)) os << mag;
    os << "(X^" << lo << " - X^" << hi << ')';
    first = false;
  }
  return first ? "0" : os.str();
}

}  // namespace ppz
