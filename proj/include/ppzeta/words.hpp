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

// Words over the alphabet {x, y}, sparse rational noncommutative
// polynomials, and the shuffle / stuffle products.

#ifndef PPZETA_WORDS_HPP_
#define PPZETA_WORDS_HPP_

#include <compare>
#include <cstdint>
#include <limits>
#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "ppzeta/rational.hpp"

namespace ppz {

enum class Letter : std::uint8_t { kX = 0, kY = 1 };

// A word of length <= 64. Letters are packed most-significant first (x -> 0,
// y -> 1), so the derived ordering is by length, then lexicographic with
// x < y.
class Word {
 public:
  static constexpr int kMaxLength = 64;

  Word() = default;

  static Word x() { return Word(0, 1); }
  static Word y() { return Word(1, 1); }
  static Word letter(Letter l) { return Word(static_cast<std::uint64_t>(l), 1); }
  // x^n
  static Word x_power(int n);
  // y^n
  static Word y_power(int n);
  // Parses a string over {x, y}; "" and "1" denote the empty word.
  // Throws std::invalid_argument on any other character.
  static Word parse(std::string_view text);

  int size() const { return length_; }
  bool empty() const { return length_ == 0; }
  Letter operator[](int i) const {
    return static_cast<Letter>((bits_ >> (length_ - 1 - i)) & 1U);
  }
  Letter front() const { return (*this)[0]; }
  Letter back() const { return (*this)[length_ - 1]; }

  int weight() const { return length_; }
  int depth() const { return __builtin_popcountll(bits_); }
  // x v y for some (possibly empty) v.
  bool is_convergent() const {
    return length_ >= 2 && front() == Letter::kX && back() == Letter::kY;
  }
  bool is_y_power() const;

  // Letters [pos, pos + count).
  Word sub(int pos, int count) const;
  Word prefix(int count) const { return sub(0, count); }
  Word suffix_from(int pos) const { return sub(pos, length_ - pos); }

  std::uint64_t bits() const { return bits_; }
  std::string str() const;

  friend Word operator+(const Word& a, const Word& b);  // concatenation
  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    if (auto c = a.length_ <=> b.length_; c != 0) return c;
    return a.bits_ <=> b.bits_;
  }

 private:
  Word(std::uint64_t bits, int length) : bits_(bits), length_(length) {}

  std::uint64_t bits_ = 0;
  int length_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, const Word& w) {
  return os << w.str();
}

// Element of Q<x, y>: a finite map from words to nonzero rationals.
class NcPoly {
 public:
  using TermMap = std::map<Word, Rational>;
  // Depth reported for the zero polynomial.
  static constexpr int kInfiniteDepth = std::numeric_limits<int>::max();

  NcPoly() = default;
  NcPoly(const Word& w) { terms_.emplace(w, Rational(1)); }  // NOLINT
  NcPoly(const Word& w, const Rational& c) { add_term(w, c); }
  // Constant polynomial c * (empty word).
  static NcPoly constant(const Rational& c) { return NcPoly(Word(), c); }
  // Parses e.g. "xy - 2yx + 1/3xxy". Throws std::invalid_argument.
  static NcPoly parse(std::string_view text);

  // (f | w)
  Rational coeff(const Word& w) const;
  void add_term(const Word& w, const Rational& c);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  bool is_homogeneous() const;
  // Weight of the lowest-order term; -1 for zero.
  int min_weight() const;
  int depth() const;

  NcPoly& operator+=(const NcPoly& o);
  NcPoly& operator-=(const NcPoly& o);
  NcPoly& operator*=(const Rational& c);
  friend NcPoly operator+(NcPoly a, const NcPoly& b) { return a += b; }
  friend NcPoly operator-(NcPoly a, const NcPoly& b) { return a -= b; }
  friend NcPoly operator*(NcPoly a, const Rational& c) { return a *= c; }
  friend NcPoly operator*(const Rational& c, NcPoly a) { return a *= c; }
  NcPoly operator-() const { return *this * Rational(-1); }
  friend bool operator==(const NcPoly&, const NcPoly&) = default;

  // Homogeneous part of the given depth.
  NcPoly depth_part(int d) const;

  std::string str() const;

 private:
  TermMap terms_;
};

inline std::ostream& operator<<(std::ostream& os, const NcPoly& f) {
  return os << f.str();
}

// (f | g) = sum_w g_w (f | w)
Rational coeff_of(const NcPoly& f, const NcPoly& g);

// Bilinear extension of word concatenation.
NcPoly concat(const NcPoly& f, const NcPoly& g);

NcPoly shuffle(const Word& u, const Word& v);
NcPoly shuffle(const NcPoly& f, const NcPoly& g);

// Stuffle product of words ending in y, read as y_{i1}...y_{ir} with
// y_i = x^{i-1} y. The empty word is the unit. Throws std::invalid_argument
// when a nonempty argument does not end in y.
NcPoly stuffle(const Word& u, const Word& v);

// Keeps exactly the terms whose word is convergent.
NcPoly pi_convergent(const NcPoly& f);

// Index sequence (r_1, ..., r_k) with r_1 >= 2, in bijection with
// convergent words via r_i -> x^{r_i - 1} y.
struct Composition {
  std::vector<int> parts;

  int weight() const;
  std::string str() const;  // "(3,9)"
  friend bool operator==(const Composition&, const Composition&) = default;
};

// Throws std::invalid_argument unless parts are positive with r_1 >= 2.
Word word_of_composition(const Composition& c);
// Throws std::invalid_argument for non-convergent words.
Composition composition_of_word(const Word& w);

// The y_i block decomposition of a word ending in y (or empty).
std::vector<int> y_blocks(const Word& w);
Word word_of_blocks(const std::vector<int>& blocks);

// All words of the given length in canonical order.
std::vector<Word> all_words(int length);

}  // namespace ppz

#endif  // PPZETA_WORDS_HPP_
