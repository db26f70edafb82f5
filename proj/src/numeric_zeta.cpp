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

#include "ppzeta/numeric_zeta.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <stdexcept>
#include <string>

namespace ppz {

// ------------------------------------------------------------ BigFloat

BigFloat::BigFloat(mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(mpfr_prec_t bits, long value) {
  mpfr_init2(value_, bits);
  mpfr_set_si(value_, value, MPFR_RNDN);
}

BigFloat::BigFloat(mpfr_prec_t bits, const Rational& value) {
  mpfr_init2(value_, bits);
  mpfr_set_q(value_, value.raw().get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& o) {
  mpfr_init2(value_, o.precision());
  mpfr_set(value_, o.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& o) noexcept {
  mpfr_init2(value_, o.precision());
  mpfr_swap(value_, o.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& o) {
  if (this != &o) {
    mpfr_set_prec(value_, o.precision());
    mpfr_set(value_, o.value_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
  mpfr_swap(value_, o.value_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

mpfr_prec_t BigFloat::bits_for_digits(int digits) {
  return static_cast<mpfr_prec_t>(std::ceil((digits + 10) * 3.3219280948873626)) + 32;
}

BigFloat& BigFloat::operator+=(const BigFloat& o) {
  mpfr_add(value_, value_, o.value_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator-=(const BigFloat& o) {
  mpfr_sub(value_, value_, o.value_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator*=(const BigFloat& o) {
  mpfr_mul(value_, value_, o.value_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator/=(const BigFloat& o) {
  mpfr_div(value_, value_, o.value_, MPFR_RNDN);
  return *this;
}

BigFloat BigFloat::abs() const {
  BigFloat out(*this);
  mpfr_abs(out.value_, out.value_, MPFR_RNDN);
  return out;
}

BigFloat BigFloat::ten_to_minus(mpfr_prec_t bits, int digits) {
  BigFloat out(bits, 10);
  mpfr_pow_si(out.value_, out.value_, -digits, MPFR_RNDN);
  return out;
}

std::string BigFloat::to_fixed(int digits) const {
  const std::string fmt = "%." + std::to_string(digits) + "Rf";
  const int len = mpfr_snprintf(nullptr, 0, fmt.c_str(), value_);
  std::string s(static_cast<std::size_t>(len) + 1, '\0');
  mpfr_snprintf(s.data(), s.size(), fmt.c_str(), value_);
  s.resize(static_cast<std::size_t>(len));
  return s;
}

std::string BigFloat::to_sci(int significant) const {
  const std::string fmt = "%." + std::to_string(std::max(0, significant - 1)) + "Re";
  const int len = mpfr_snprintf(nullptr, 0, fmt.c_str(), value_);
  std::string s(static_cast<std::size_t>(len) + 1, '\0');
  mpfr_snprintf(s.data(), s.size(), fmt.c_str(), value_);
  s.resize(static_cast<std::size_t>(len));
  return s;
}

// ------------------------------------------------- split-at-1/2 route

namespace {

// tau: reverse and swap x <-> y.
Word dual_word(const Word& w) {
  std::string s = w.empty() ? std::string() : w.str();
  std::reverse(s.begin(), s.end());
  for (char& c : s) c = c == 'x' ? 'y' : 'x';
  return Word::parse(s);
}

// Smallest N with 2^{-N} (1 + ln N)^{d-1} * 4 <= 2^{log2_eps} and N >= 20 d,
// so that consecutive tail terms shrink by at least a factor 0.53.
long half_cutoff(int depth, double log2_eps) {
  long n = std::max<long>(20L * depth, 8);
  while (-static_cast<double>(n) +
             (depth - 1) * std::log2(1.0 + std::log(static_cast<double>(n))) + 2.0 >
         log2_eps) {
    ++n;
  }
  return n;
}

// Li_u(1/2) for u ending in y, truncated after `terms` outer terms.
BigFloat polylog_half(const Word& u, long terms, mpfr_prec_t bits) {
  if (u.empty()) return BigFloat(bits, 1);
  const std::vector<int> s = y_blocks(u);
  const std::size_t d = s.size();
  // inner[j] = S_j(n) for j = 1 .. d-1; S_j(n) = sum_{m<=n} m^{-s_j} S_{j+1}(m-1)
  std::vector<BigFloat> inner(d + 1, BigFloat(bits));
  inner[d] = BigFloat(bits, 1);
  BigFloat sum(bits);
  BigFloat half_pow(bits, 1);
  BigFloat inv(bits);
  BigFloat pw(bits);
  BigFloat term(bits);
  for (long n = 1; n <= terms; ++n) {
    mpfr_div_ui(half_pow.get(), half_pow.get(), 2, MPFR_RNDN);
    mpfr_set_ui(inv.get(), static_cast<unsigned long>(n), MPFR_RNDN);
    mpfr_ui_div(inv.get(), 1, inv.get(), MPFR_RNDN);
    mpfr_pow_ui(pw.get(), inv.get(), static_cast<unsigned long>(s[0]), MPFR_RNDN);
    term = half_pow;
    term *= pw;
    term *= inner[1 < d ? 1 : d];
    sum += term;
    for (std::size_t j = 1; j < d; ++j) {
      mpfr_pow_ui(pw.get(), inv.get(), static_cast<unsigned long>(s[j]), MPFR_RNDN);
      pw *= inner[j + 1];
      inner[j] += pw;
    }
  }
  return sum;
}

void check_digits(int digits, int max_digits) {
  if (digits < 1 || digits > max_digits) {
    throw std::invalid_argument("digits must be in [1, " + std::to_string(max_digits) +
                                "], got " + std::to_string(digits));
  }
}

}  // namespace

BigFloat zeta_word(const Word& w, int digits) {
  if (!w.is_convergent()) {
    throw std::invalid_argument("zeta_word: word is not convergent: " + w.str());
  }
  check_digits(digits, 100);
  const int n = w.size();
  const mpfr_prec_t bits = BigFloat::bits_for_digits(digits) +
                           static_cast<mpfr_prec_t>(std::log2(n + 1.0)) + 8;
  // Each factor is truncated below 10^{-(digits+10)} / (2 (n+1)).
  const double log2_eps = -(digits + 10) * 3.3219280948873626 - std::log2(2.0 * (n + 1));
  BigFloat total(bits);
  for (int k = 0; k <= n; ++k) {
    const Word left = dual_word(w.prefix(k));
    const Word right = w.suffix_from(k);
    const BigFloat a = polylog_half(left, half_cutoff(left.depth(), log2_eps), bits);
    const BigFloat b = polylog_half(right, half_cutoff(right.depth(), log2_eps), bits);
    total += a * b;
  }
  return total;
}

BigFloat zeta_single(int k, int digits) {
  if (k < 2) throw std::invalid_argument("zeta_single: need k >= 2");
  check_digits(digits, 100);
  return zeta_word(Word::x_power(k - 1) + Word::y(), digits);
}

BigFloat zeta_double(int r, int s, int digits) {
  if (r < 2 || s < 1) throw std::invalid_argument("zeta_double: need r >= 2, s >= 1");
  check_digits(digits, 50);
  return zeta_word(Word::x_power(r - 1) + Word::y() + Word::x_power(s - 1) + Word::y(),
                   digits);
}

// ------------------------------------------------------ direct series

namespace {

constexpr long kMaxDirectTerms = 200000000;

}  // namespace

BigFloat zeta_single_direct(int k, int digits) {
  if (k < 2) throw std::invalid_argument("zeta_single_direct: need k >= 2");
  check_digits(digits, 100);
  // N^{1-k}/(k-1) < 10^{-digits-5}
  const double log10_n = (digits + 5 - std::log10(k - 1.0)) / (k - 1.0);
  if (log10_n > std::log10(static_cast<double>(kMaxDirectTerms))) {
    throw std::out_of_range("zeta_single_direct: cutoff too large");
  }
  const long cutoff = static_cast<long>(std::ceil(std::pow(10.0, log10_n))) + 1;
  const mpfr_prec_t bits = BigFloat::bits_for_digits(digits) +
                           static_cast<mpfr_prec_t>(std::log2(cutoff + 1.0));
  BigFloat sum(bits);
  BigFloat t(bits);
  // Smallest terms first.
  for (long n = cutoff; n >= 1; --n) {
    mpfr_set_ui(t.get(), static_cast<unsigned long>(n), MPFR_RNDN);
    mpfr_ui_div(t.get(), 1, t.get(), MPFR_RNDN);
    mpfr_pow_ui(t.get(), t.get(), static_cast<unsigned long>(k), MPFR_RNDN);
    sum += t;
  }
  return sum;
}

long direct_cutoff(int r, int s, int digits) {
  if (r < 2 || s < 1) throw std::invalid_argument("direct_cutoff: need r >= 2, s >= 1");
  const double target = -(digits + 5) * std::log(10.0);
  // log of the tail bound at M
  auto log_bound = [&](double m) {
    const double lead = s >= 2 ? std::log(1.0 + 1.0 / (s - 1.0))  // zeta(s) <= 1 + 1/(s-1)
                               : std::log(1.0 + std::log(m));
    return lead + (1.0 - r) * std::log(m) - std::log(r - 1.0);
  };
  double lo = 2.0;
  double hi = 2.0;
  while (log_bound(hi) > target) {
    hi *= 2.0;
    if (hi > 4.0 * kMaxDirectTerms) return -1;
  }
  while (hi - lo > 1.0) {
    const double mid = std::floor((lo + hi) / 2.0);
    (log_bound(mid) > target ? lo : hi) = mid;
  }
  return static_cast<long>(hi);
}

BigFloat zeta_double_direct(int r, int s, int digits) {
  check_digits(digits, 50);
  const long cutoff = direct_cutoff(r, s, digits);
  if (cutoff < 0 || cutoff > kMaxDirectTerms) {
    throw std::out_of_range("zeta_double_direct: cutoff too large");
  }
  const mpfr_prec_t bits = BigFloat::bits_for_digits(digits) +
                           static_cast<mpfr_prec_t>(std::log2(cutoff + 1.0));
  BigFloat sum(bits);
  BigFloat prefix(bits);  // sum_{n < m} n^{-s}
  BigFloat inv(bits);
  BigFloat t(bits);
  for (long m = 2; m <= cutoff; ++m) {
    mpfr_set_ui(inv.get(), static_cast<unsigned long>(m - 1), MPFR_RNDN);
    mpfr_ui_div(inv.get(), 1, inv.get(), MPFR_RNDN);
    mpfr_pow_ui(t.get(), inv.get(), static_cast<unsigned long>(s), MPFR_RNDN);
    prefix += t;
    mpfr_set_ui(inv.get(), static_cast<unsigned long>(m), MPFR_RNDN);
    mpfr_ui_div(inv.get(), 1, inv.get(), MPFR_RNDN);
    mpfr_pow_ui(t.get(), inv.get(), static_cast<unsigned long>(r), MPFR_RNDN);
    t *= prefix;
    sum += t;
  }
  return sum;
}

// ------------------------------------------------ rational reconstruction

RationalApproximation reconstruct_rational(const BigFloat& x, int digits,
                                           long max_denominator) {
  const mpfr_prec_t bits = x.precision();
  const BigFloat tol = BigFloat::ten_to_minus(bits, std::max(1, digits - 5));
  mpz_class h_prev = 1, h_prev2 = 0;
  mpz_class k_prev = 0, k_prev2 = 1;
  BigFloat y(x);
  BigFloat frac(bits);
  mpz_class a;
  RationalApproximation best{Rational(0), x.abs()};
  bool have = false;
  for (int iter = 0; iter < 256; ++iter) {
    mpfr_get_z(a.get_mpz_t(), y.get(), MPFR_RNDD);
    const mpz_class h = a * h_prev + h_prev2;
    const mpz_class k = a * k_prev + k_prev2;
    if (k > max_denominator) break;
    const Rational candidate(h, k);
    BigFloat residual = (x - BigFloat(bits, candidate)).abs();
    best = RationalApproximation{candidate, residual};
    have = true;
    if (residual < tol) break;
    mpfr_sub_z(frac.get(), y.get(), a.get_mpz_t(), MPFR_RNDN);
    if (frac.sign() == 0) break;
    mpfr_ui_div(y.get(), 1, frac.get(), MPFR_RNDN);
    h_prev2 = h_prev;
    h_prev = h;
    k_prev2 = k_prev;
    k_prev = k;
  }
  if (!have) throw std::logic_error("reconstruct_rational: no convergent");
  return best;
}

// ------------------------------------------------ relation verification

RelationCheck verify_relation(const Relation& rel, int digits) {
  if (rel.kind != RelationKind::kDoubleZeta) {
    throw std::invalid_argument("verify_relation: expected a double_zeta relation");
  }
  check_digits(digits, 50);
  const int k = rel.weight;
  BigFloat sum(BigFloat::bits_for_digits(digits) + 16);
  const mpfr_prec_t bits = sum.precision();
  for (const auto& t : rel.terms) {
    if (t.r + t.s != k) throw std::invalid_argument("verify_relation: term weight mismatch");
    if (t.coeff.is_zero()) continue;
    // Guard the precision by the coefficient size.
    const int extra = static_cast<int>(mpz_sizeinbase(t.coeff.numerator().get_mpz_t(), 10));
    sum += BigFloat(bits, t.coeff) * zeta_double(t.r, t.s, std::min(50, digits + extra));
  }
  BigFloat value = sum / zeta_single(k, digits);
  RationalApproximation approx = reconstruct_rational(value, digits);
  return RelationCheck{std::move(value), approx.value, std::move(approx.residual)};
}

}  // namespace ppz
