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

#ifndef PPZETA_LINALG_HPP_
#define PPZETA_LINALG_HPP_

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "ppzeta/rational.hpp"

namespace ppz {

using RatVector = std::vector<Rational>;

// Dense row-major exact rational matrix.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  // Throws std::invalid_argument on ragged input.
  RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RatMatrix identity(std::size_t n);
  static RatMatrix from_columns(std::span<const RatVector> columns,
                                std::size_t rows);
  static RatMatrix from_rows(std::span<const RatVector> rows,
                             std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  const Rational& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  RatVector row(std::size_t r) const;
  RatVector column(std::size_t c) const;

  RatMatrix transpose() const;
  bool is_symmetric() const;

  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend RatVector operator*(const RatMatrix& a, const RatVector& v);
  friend RatMatrix operator*(const Rational& c, RatMatrix m);
  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

// Reduced row echelon form. Pivots are taken in the first column that has a
// nonzero entry at or below the current row, using the topmost such row.
struct RowEchelon {
  RatMatrix reduced;
  std::vector<std::size_t> pivot_columns;
  std::size_t rank() const { return pivot_columns.size(); }
};

RowEchelon row_reduce(RatMatrix m);
std::size_t rank(const RatMatrix& m);

// Scales v to integer entries with content 1 and first nonzero entry
// positive. The zero vector is returned unchanged.
RatVector canonicalize(RatVector v);

// Basis of the right null space, one vector per free column in increasing
// column order, each canonicalized.
std::vector<RatVector> kernel(const RatMatrix& m);

// Throws std::domain_error for singular input.
RatMatrix inverse(const RatMatrix& m);

// True when span(a) == span(b); vectors have the given dimension.
bool same_span(std::span<const RatVector> a, std::span<const RatVector> b,
               std::size_t dim);

bool is_zero(const RatVector& v);

// One row per line, entries "p/q" separated by commas.
std::string to_csv(const RatMatrix& m);
std::string to_string(const RatVector& v);  // "(1, -3, 3, -1)"

}  // namespace ppz

#endif  // PPZETA_LINALG_HPP_
