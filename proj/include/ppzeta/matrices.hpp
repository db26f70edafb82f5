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

// The (k-4)/2 square matrices attached to an even weight k >= 12. Rows and
// columns are indexed by i = 1 .. (k-4)/2, i.e. by the odd-component
// double zetas Z(2i+1, k-2i-1) and the products f_{2j+1} (.) f_{k-2j-1}.
// All functions throw std::invalid_argument for odd k or k < 12.

#ifndef PPZETA_MATRICES_HPP_
#define PPZETA_MATRICES_HPP_

#include "ppzeta/linalg.hpp"

namespace ppz {

// A_ij = C(2j, 2i) - C(2j, k-2-2i) + [i + j == (k-2)/2]
RatMatrix build_A(int k);

// A_ij read off as the coefficient of x^{2i} y x^{k-2i-2} y in
// ad_x^{2j}(y) (.) ad_x^{k-2-2j}(y). Limited to k <= 30.
RatMatrix build_A_symbolic(int k);

// -1 on the antidiagonal.
RatMatrix build_S(int k);

// Columns v_1..v_h, then w_0 when k = 2 mod 4, then w_1..w_h, where
// h = floor((k-4)/4), v_j = e_j + e_{n+1-j}, w_j = -e_j + e_{n+1-j} and
// w_0 is the middle unit vector.
RatMatrix build_T(int k);

// diag(1 / C(k-2, 2i))
RatMatrix build_D(int k);

// B_ij = C(2j, 2i)
RatMatrix build_B(int k);

// T^{-1} A T
RatMatrix conjugate_M(int k);

// Checks the upper blocks of M: identity of size p x p and zero of size
// p x h, where h = floor((k-4)/4) and p = (k-4)/2 - h.
bool block_check(const RatMatrix& m, int k);

// tA D B
RatMatrix symmetry_product(int k);

}  // namespace ppz

#endif  // PPZETA_MATRICES_HPP_
