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

#include "ppzeta/matrices.hpp"

#include <stdexcept>
#include <string>

#include "ppzeta/lie.hpp"

namespace ppz {

namespace {

std::size_t order(int k) {
  if (k < 12 || k % 2 != 0) {
    throw std::invalid_argument("matrix weight must be even and >= 12, got " +
                                std::to_string(k));
  }
  return static_cast<std::size_t>((k - 4) / 2);
}

}  // namespace

RatMatrix build_A(int k) {
  const std::size_t n = order(k);
  RatMatrix a(n, n);
  for (long i = 1; i <= static_cast<long>(n); ++i) {
    for (long j = 1; j <= static_cast<long>(n); ++j) {
      mpz_class v = binomial(2 * j, 2 * i) - binomial(2 * j, k - 2 - 2 * i);
      if (2 * (i + j) == k - 2) v += 1;
      a(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) = Rational(v);
    }
  }
  return a;
}

RatMatrix build_A_symbolic(int k) {
  const std::size_t n = order(k);
  if (k > 30) throw std::invalid_argument("build_A_symbolic: weight above 30");
  RatMatrix a(n, n);
  for (int j = 1; j <= static_cast<int>(n); ++j) {
    const NcPoly g = odot(ad_x_pow(2 * j), ad_x_pow(k - 2 - 2 * j));
    for (int i = 1; i <= static_cast<int>(n); ++i) {
      const Word w = Word::x_power(2 * i) + Word::y() +
                     Word::x_power(k - 2 * i - 2) + Word::y();
      a(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) = g.coeff(w);
    }
  }
  return a;
}

RatMatrix build_S(int k) {
  const std::size_t n = order(k);
  RatMatrix s(n, n);
  for (std::size_t i = 0; i < n; ++i) s(i, n - 1 - i) = -1;
  return s;
}

RatMatrix build_T(int k) {
  const std::size_t n = order(k);
  const std::size_t h = static_cast<std::size_t>((k - 4) / 4);
  RatMatrix t(n, n);
  std::size_t col = 0;
  for (std::size_t j = 0; j < h; ++j, ++col) {
    t(j, col) = 1;
    t(n - 1 - j, col) = 1;
  }
  if (n % 2 == 1) t(n / 2, col++) = 1;
  for (std::size_t j = 0; j < h; ++j, ++col) {
    t(j, col) = -1;
    t(n - 1 - j, col) = 1;
  }
  return t;
}

RatMatrix build_D(int k) {
  const std::size_t n = order(k);
  RatMatrix d(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    d(i, i) = Rational(mpz_class(1), binomial(k - 2, 2 * static_cast<long>(i + 1)));
  }
  return d;
}

RatMatrix build_B(int k) {
  const std::size_t n = order(k);
  RatMatrix b(n, n);
  for (long i = 1; i <= static_cast<long>(n); ++i) {
    for (long j = 1; j <= static_cast<long>(n); ++j) {
      b(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) =
          Rational(binomial(2 * j, 2 * i));
    }
  }
  return b;
}

RatMatrix conjugate_M(int k) {
  const RatMatrix t = build_T(k);
  return inverse(t) * build_A(k) * t;
}

bool block_check(const RatMatrix& m, int k) {
  const std::size_t n = order(k);
  if (m.rows() != n || m.cols() != n) return false;
  const std::size_t h = static_cast<std::size_t>((k - 4) / 4);
  const std::size_t p = n - h;
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Rational expected = (j < p && i == j) ? Rational(1) : Rational(0);
      if (m(i, j) != expected) return false;
    }
  }
  return true;
}

RatMatrix symmetry_product(int k) {
  return build_A(k).transpose() * build_D(k) * build_B(k);
}

}  // namespace ppz
