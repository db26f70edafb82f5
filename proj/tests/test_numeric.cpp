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

#include "doctest.h"
#include "ppzeta/numeric_zeta.hpp"
#include "ppzeta/relations.hpp"

using namespace ppz;

namespace {

constexpr mpfr_prec_t kOracleBits = 600;

BigFloat pi_power(int e) {
  BigFloat pi(kOracleBits);
  mpfr_const_pi(pi.get(), MPFR_RNDN);
  BigFloat out(kOracleBits, 1);
  for (int i = 0; i < e; ++i) out *= pi;
  return out;
}

BigFloat mpfr_zeta(unsigned long k) {
  BigFloat out(kOracleBits);
  mpfr_zeta_ui(out.get(), k, MPFR_RNDN);
  return out;
}

bool close(const BigFloat& a, const BigFloat& b, int digits) {
  return (a - b).abs() < BigFloat::ten_to_minus(kOracleBits, digits);
}

Relation double_zeta(int k, std::vector<long> coeffs) {
  Relation rel;
  rel.weight = k;
  rel.kind = RelationKind::kDoubleZeta;
  int r = k - 3;
  for (long c : coeffs) {
    rel.terms.push_back({r, k - r, Rational(c)});
    r -= 2;
  }
  return rel;
}

}  // namespace

TEST_CASE("single zeta against closed forms") {
  const BigFloat z2 = zeta_single(2, 30);
  CHECK(close(z2, pi_power(2) / BigFloat(kOracleBits, 6), 30));
  CHECK(z2.to_fixed(20) == "1.64493406684822643647");
  const BigFloat euler12 =
      pi_power(12) * BigFloat(kOracleBits, 691) / BigFloat(kOracleBits, 638512875);
  CHECK(close(zeta_single(12, 30), euler12, 30));
  CHECK(close(zeta_single(12, 100), euler12, 100));
  for (int k = 2; k <= 30; ++k) {
    const BigFloat z = zeta_single(k, 50);
    CHECK(close(z, mpfr_zeta(static_cast<unsigned long>(k)), 50));
    CHECK(z > BigFloat(64, 1));
    CHECK(z < BigFloat(64, 2));
  }
}

TEST_CASE("direct series agree with the split route") {
  CHECK(close(zeta_single_direct(12, 30), zeta_single(12, 30), 30));
  CHECK(close(zeta_single_direct(4, 12), zeta_single(4, 12), 12));
  CHECK(close(zeta_double_direct(9, 3, 30), zeta_double(9, 3, 30), 30));
  CHECK(close(zeta_double_direct(3, 2, 6), zeta_double(3, 2, 6), 6));
  CHECK(close(zeta_double_direct(4, 1, 12), zeta_double(4, 1, 12), 12));
  CHECK_THROWS_AS(zeta_single_direct(2, 30), std::out_of_range);
  CHECK(direct_cutoff(9, 3, 30) > 0);
}

TEST_CASE("double zeta identities") {
  CHECK(close(zeta_double(2, 1, 20), zeta_single(3, 20), 20));
  CHECK(zeta_double(9, 3, 30).sign() > 0);
  for (int r = 2; r <= 10; ++r) {
    for (int s = 2; r + s <= 12; ++s) {
      const BigFloat lhs = zeta_single(r, 30) * zeta_single(s, 30);
      const BigFloat rhs = zeta_double(r, s, 30) + zeta_double(s, r, 30) + zeta_single(r + s, 30);
      CHECK(close(lhs, rhs, 29));
    }
  }
  // zeta(3,1) = zeta(4) / 4
  CHECK(close(zeta_double(3, 1, 40), zeta_single(4, 40) / BigFloat(kOracleBits, 4), 40));
}

TEST_CASE("monotone refinement") {
  for (auto [r, s] : {std::pair{9, 3}, std::pair{5, 7}, std::pair{2, 1}}) {
    const BigFloat lo = zeta_double(r, s, 20);
    const BigFloat hi = zeta_double(r, s, 45);
    CHECK(close(lo, hi, 20));
  }
  CHECK(close(zeta_single(7, 15), zeta_single(7, 80), 15));
}

TEST_CASE("argument validation") {
  CHECK_THROWS_AS(zeta_single(1, 10), std::invalid_argument);
  CHECK_THROWS_AS(zeta_single(3, 101), std::invalid_argument);
  CHECK_THROWS_AS(zeta_double(1, 2, 10), std::invalid_argument);
  CHECK_THROWS_AS(zeta_double(3, 0, 10), std::invalid_argument);
  CHECK_THROWS_AS(zeta_double(3, 2, 51), std::invalid_argument);
  CHECK_THROWS_AS(zeta_word(Word::parse("yxy"), 10), std::invalid_argument);
}

TEST_CASE("rational reconstruction") {
  const BigFloat x(300, Rational(5197, 691));
  const RationalApproximation a = reconstruct_rational(x, 40);
  CHECK(a.value == Rational(5197, 691));
  CHECK(a.residual.sign() == 0);
  BigFloat pi(300);
  mpfr_const_pi(pi.get(), MPFR_RNDN);
  const RationalApproximation b = reconstruct_rational(pi, 40, 1000);
  CHECK(b.value == Rational(355, 113));
  CHECK(reconstruct_rational(BigFloat(300, Rational(-1, 3)), 30).value == Rational(-1, 3));
}

TEST_CASE("relation verification") {
  const RelationCheck reference = verify_relation(double_zeta(12, {28, 150, 168, 0}), 30);
  CHECK(reference.scalar == Rational(5197, 691));
  CHECK(reference.residual < BigFloat::ten_to_minus(200, 25));

  const RelationCheck engine = verify_relation(gkz_relations(12).at(0), 30);
  CHECK(engine.scalar == Rational(5197, 1382));

  const RelationCheck zero = verify_relation(double_zeta(12, {0, 0, 0, 0}), 30);
  CHECK(zero.scalar == Rational(0));
  CHECK(zero.residual.sign() == 0);

  Relation bracket = ihara_relations(12).at(0);
  CHECK_THROWS_AS(verify_relation(bracket, 30), std::invalid_argument);
}

TEST_CASE("weight 16 scalar is stable across precisions") {
  // Reference value recorded from this reconstruction.
  const Rational golden(78967, 3617);
  const Relation rel = gkz_relations(16).at(0);
  const RelationCheck a = verify_relation(rel, 30);
  const RelationCheck b = verify_relation(rel, 40);
  CHECK(a.scalar == golden);
  CHECK(b.scalar == golden);
  CHECK(a.residual < BigFloat::ten_to_minus(200, 15));
}
