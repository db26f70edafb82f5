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

// Numerical single and double zeta values with explicit error control.
//
// The default route splits the iterated integral of a convergent word w at
// t = 1/2:
//
//   zeta(w) = sum_{k=0}^{|w|} Li_{tau(w[0:k])}(1/2) * Li_{w[k:]}(1/2),
//
// where tau reverses a word and swaps x <-> y, and Li_u(1/2) is the nested
// sum over n_1 > ... > n_d >= 1 of 2^{-n_1} / (n_1^{s_1} ... n_d^{s_d}).
// Every factor converges geometrically. The direct series are kept as
// independent routes with the integral tail bounds.

#ifndef PPZETA_NUMERIC_ZETA_HPP_
#define PPZETA_NUMERIC_ZETA_HPP_

#include <mpfr.h>

#include <string>
#include <vector>

#include "ppzeta/rational.hpp"
#include "ppzeta/relation.hpp"
#include "ppzeta/words.hpp"

namespace ppz {

// MPFR value with a fixed binary precision. Arithmetic rounds to nearest at
// the precision of the left operand.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t bits);
  BigFloat(mpfr_prec_t bits, long value);
  BigFloat(mpfr_prec_t bits, const Rational& value);
  BigFloat(const BigFloat& o);
  BigFloat(BigFloat&& o) noexcept;
  BigFloat& operator=(const BigFloat& o);
  BigFloat& operator=(BigFloat&& o) noexcept;
  ~BigFloat();

  // Working precision for a target of `digits` decimals plus guard digits.
  static mpfr_prec_t bits_for_digits(int digits);

  mpfr_prec_t precision() const { return mpfr_get_prec(value_); }
  mpfr_ptr get() { return value_; }
  mpfr_srcptr get() const { return value_; }

  BigFloat& operator+=(const BigFloat& o);
  BigFloat& operator-=(const BigFloat& o);
  BigFloat& operator*=(const BigFloat& o);
  BigFloat& operator/=(const BigFloat& o);
  friend BigFloat operator+(BigFloat a, const BigFloat& b) { return a += b; }
  friend BigFloat operator-(BigFloat a, const BigFloat& b) { return a -= b; }
  friend BigFloat operator*(BigFloat a, const BigFloat& b) { return a *= b; }
  friend BigFloat operator/(BigFloat a, const BigFloat& b) { return a /= b; }

  BigFloat abs() const;
  int sign() const { return mpfr_sgn(value_); }
  bool operator<(const BigFloat& o) const { return mpfr_less_p(value_, o.value_); }
  bool operator>(const BigFloat& o) const { return mpfr_greater_p(value_, o.value_); }

  // 10^{-digits}
  static BigFloat ten_to_minus(mpfr_prec_t bits, int digits);

  // Fixed-point decimal with the given number of fractional digits.
  std::string to_fixed(int digits) const;
  // Scientific notation with `significant` digits.
  std::string to_sci(int significant) const;
  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }

 private:
  mpfr_t value_;
};

// zeta(k) with absolute error < 10^{-digits}. Throws std::invalid_argument
// unless k >= 2 and 1 <= digits <= 100.
BigFloat zeta_single(int k, int digits);

// zeta(r, s) = sum_{m > n > 0} m^{-r} n^{-s} with absolute error
// < 10^{-digits}. Throws std::invalid_argument unless r >= 2, s >= 1 and
// 1 <= digits <= 50.
BigFloat zeta_double(int r, int s, int digits);

// zeta(w) for a convergent word of weight <= 64 by the split at 1/2.
BigFloat zeta_word(const Word& w, int digits);

// Direct series with cutoff N chosen so that N^{1-k}/(k-1) < 10^{-digits-5}.
// Practical only for moderate digits / k.
BigFloat zeta_single_direct(int k, int digits);
// Direct double series: outer sum over m up to M with the inner prefix sum
// maintained incrementally, M chosen from the tail bound
// zeta(s) M^{1-r}/(r-1) (s >= 2) or (1 + ln M) M^{1-r}/(r-1) (s = 1).
BigFloat zeta_double_direct(int r, int s, int digits);
// Number of outer terms zeta_double_direct would use.
long direct_cutoff(int r, int s, int digits);

struct RationalApproximation {
  Rational value;
  BigFloat residual;  // |x - value|
};

// Continued-fraction convergents of x, stopping at the first convergent
// within 10^{-(digits - 5)} of x or before the denominator exceeds
// max_denominator.
RationalApproximation reconstruct_rational(const BigFloat& x, int digits,
                                           long max_denominator = 1000000);

struct RelationCheck {
  BigFloat value;     // (sum q_{r,s} zeta(r,s)) / zeta(k)
  Rational scalar;    // continued-fraction reconstruction of value
  BigFloat residual;  // |value - scalar|
};

// Evaluates a double_zeta relation at the given precision (digits <= 50)
// and reconstructs the multiple of zeta(k) with denominator <= 10^6.
// Throws std::invalid_argument for bracket relations.
RelationCheck verify_relation(const Relation& rel, int digits);

}  // namespace ppz

#endif  // PPZETA_NUMERIC_ZETA_HPP_
