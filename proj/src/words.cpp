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

#include "ppzeta/words.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace ppz {

// ---------------------------------------------------------------- Word

Word Word::x_power(int n) {
  if (n < 0 || n > kMaxLength) throw std::length_error("word too long");
  return Word(0, n);
}

Word Word::y_power(int n) {
  if (n < 0 || n > kMaxLength) throw std::length_error("word too long");
  const std::uint64_t bits = n == 64 ? ~std::uint64_t{0}
                                     : ((std::uint64_t{1} << n) - 1);
  return Word(bits, n);
}

Word Word::parse(std::string_view text) {
  if (text == "1") return Word();
  if (text.size() > kMaxLength) throw std::length_error("word too long");
  std::uint64_t bits = 0;
  for (char c : text) {
    if (c != 'x' && c != 'y') {
      throw std::invalid_argument("word letters must be x or y: " +
                                  std::string(text));
    }
    bits = (bits << 1) | (c == 'y' ? 1U : 0U);
  }
  return Word(bits, static_cast<int>(text.size()));
}

bool Word::is_y_power() const {
  return length_ > 0 && depth() == length_;
}

Word Word::sub(int pos, int count) const {
  if (pos < 0 || count < 0 || pos + count > length_) {
    throw std::out_of_range("Word::sub");
  }
  if (count == 0) return Word();
  const std::uint64_t shifted = bits_ >> (length_ - pos - count);
  const std::uint64_t mask = count == 64 ? ~std::uint64_t{0}
                                         : ((std::uint64_t{1} << count) - 1);
  return Word(shifted & mask, count);
}

std::string Word::str() const {
  if (length_ == 0) return "1";
  std::string s(static_cast<std::size_t>(length_), 'x');
  for (int i = 0; i < length_; ++i) {
    if ((*this)[i] == Letter::kY) s[static_cast<std::size_t>(i)] = 'y';
  }
  return s;
}

Word operator+(const Word& a, const Word& b) {
  if (a.length_ + b.length_ > Word::kMaxLength) {
    throw std::length_error("word too long");
  }
  if (a.length_ == 0) return b;
  if (b.length_ == 0) return a;
  return Word((a.bits_ << b.length_) | b.bits_, a.length_ + b.length_);
}

// -------------------------------------------------------------- NcPoly

namespace {

// Reads an unsigned rational literal "p" or "p/q" at pos; returns false if
// no digit is present.
bool read_coefficient(std::string_view s, std::size_t& pos, Rational& out) {
  const std::size_t start = pos;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
    ++pos;
  }
  if (pos == start) return false;
  if (pos < s.size() && s[pos] == '/') {
    ++pos;
    while (pos < s.size() &&
           std::isdigit(static_cast<unsigned char>(s[pos]))) {
      ++pos;
    }
  }
  out = Rational::parse(s.substr(start, pos - start));
  return true;
}

void skip_spaces(std::string_view s, std::size_t& pos) {
  while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) {
    ++pos;
  }
}

NcPoly prepend(const Word& head, const NcPoly& f) {
  NcPoly out;
  for (const auto& [w, c] : f.terms()) out.add_term(head + w, c);
  return out;
}

}  // namespace

NcPoly NcPoly::parse(std::string_view text) {
  NcPoly out;
  std::size_t pos = 0;
  skip_spaces(text, pos);
  if (pos == text.size()) throw std::invalid_argument("empty polynomial");
  bool first = true;
  while (true) {
    skip_spaces(text, pos);
    if (pos == text.size()) break;
    int sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
      skip_spaces(text, pos);
    } else if (!first) {
      throw std::invalid_argument("expected + or - in polynomial: " +
                                  std::string(text));
    }
    Rational c(1);
    const bool has_coeff = read_coefficient(text, pos, c);
    skip_spaces(text, pos);
    const std::size_t start = pos;
    while (pos < text.size() && (text[pos] == 'x' || text[pos] == 'y')) ++pos;
    if (!has_coeff && pos == start) {
      throw std::invalid_argument("malformed polynomial term: " +
                                  std::string(text));
    }
    const Word w = Word::parse(text.substr(start, pos - start));
    out.add_term(pos == start ? Word() : w, c * Rational(sign));
    first = false;
  }
  return out;
}

Rational NcPoly::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

void NcPoly::add_term(const Word& w, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

bool NcPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  return terms_.begin()->first.size() == terms_.rbegin()->first.size();
}

int NcPoly::min_weight() const {
  return terms_.empty() ? -1 : terms_.begin()->first.size();
}

int NcPoly::depth() const {
  int d = kInfiniteDepth;
  for (const auto& [w, c] : terms_) d = std::min(d, w.depth());
  return d;
}

NcPoly& NcPoly::operator+=(const NcPoly& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

NcPoly& NcPoly::operator-=(const NcPoly& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

NcPoly& NcPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, v] : terms_) v *= c;
  return *this;
}

NcPoly NcPoly::depth_part(int d) const {
  NcPoly out;
  for (const auto& [w, c] : terms_) {
    if (w.depth() == d) out.terms_.emplace_hint(out.terms_.end(), w, c);
  }
  return out;
}

std::string NcPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    Rational mag = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) os << '-';
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    if (w.empty()) {
      os << mag;
    } else {
      if (mag != Rational(1)) os << mag;
      os << w;
    }
    first = false;
  }
  return os.str();
}

// ---------------------------------------------------------- products

Rational coeff_of(const NcPoly& f, const NcPoly& g) {
  const NcPoly& small = f.size() < g.size() ? f : g;
  const NcPoly& large = f.size() < g.size() ? g : f;
  Rational sum;
  for (const auto& [w, c] : small.terms()) {
    auto it = large.terms().find(w);
    if (it != large.terms().end()) sum += c * it->second;
  }
  return sum;
}

NcPoly concat(const NcPoly& f, const NcPoly& g) {
  NcPoly out;
  for (const auto& [u, a] : f.terms()) {
    for (const auto& [v, b] : g.terms()) out.add_term(u + v, a * b);
  }
  return out;
}

NcPoly shuffle(const Word& u, const Word& v) {
  const int m = u.size();
  const int n = v.size();
  // table[i][j] = shuffle(u[i:], v[j:])
  std::vector<NcPoly> table(static_cast<std::size_t>((m + 1) * (n + 1)));
  auto at = [&](int i, int j) -> NcPoly& {
    return table[static_cast<std::size_t>(i * (n + 1) + j)];
  };
  for (int i = m; i >= 0; --i) {
    for (int j = n; j >= 0; --j) {
      if (i == m) {
        at(i, j) = NcPoly(v.suffix_from(j));
      } else if (j == n) {
        at(i, j) = NcPoly(u.suffix_from(i));
      } else {
        at(i, j) = prepend(Word::letter(u[i]), at(i + 1, j)) +
                   prepend(Word::letter(v[j]), at(i, j + 1));
      }
    }
  }
  return at(0, 0);
}

NcPoly shuffle(const NcPoly& f, const NcPoly& g) {
  NcPoly out;
  for (const auto& [u, a] : f.terms()) {
    for (const auto& [v, b] : g.terms()) out += shuffle(u, v) * (a * b);
  }
  return out;
}

std::vector<int> y_blocks(const Word& w) {
  std::vector<int> blocks;
  if (w.empty()) return blocks;
  if (w.back() != Letter::kY) {
    throw std::invalid_argument("word does not end in y: " + w.str());
  }
  int run = 0;
  for (int i = 0; i < w.size(); ++i) {
    ++run;
    if (w[i] == Letter::kY) {
      blocks.push_back(run);
      run = 0;
    }
  }
  return blocks;
}

Word word_of_blocks(const std::vector<int>& blocks) {
  Word w;
  for (int b : blocks) {
    if (b < 1) throw std::invalid_argument("block index must be positive");
    w = w + Word::x_power(b - 1) + Word::y();
  }
  return w;
}

NcPoly stuffle(const Word& u, const Word& v) {
  const std::vector<int> a = y_blocks(u);
  const std::vector<int> b = y_blocks(v);
  const int p = static_cast<int>(a.size());
  const int q = static_cast<int>(b.size());
  auto tail = [](const std::vector<int>& s, int from) {
    return word_of_blocks(std::vector<int>(s.begin() + from, s.end()));
  };
  std::vector<NcPoly> table(static_cast<std::size_t>((p + 1) * (q + 1)));
  auto at = [&](int i, int j) -> NcPoly& {
    return table[static_cast<std::size_t>(i * (q + 1) + j)];
  };
  for (int i = p; i >= 0; --i) {
    for (int j = q; j >= 0; --j) {
      if (i == p) {
        at(i, j) = NcPoly(tail(b, j));
      } else if (j == q) {
        at(i, j) = NcPoly(tail(a, i));
      } else {
        at(i, j) = prepend(word_of_blocks({a[i]}), at(i + 1, j)) +
                   prepend(word_of_blocks({b[j]}), at(i, j + 1)) +
                   prepend(word_of_blocks({a[i] + b[j]}), at(i + 1, j + 1));
      }
    }
  }
  return at(0, 0);
}

NcPoly pi_convergent(const NcPoly& f) {
  NcPoly out;
  for (const auto& [w, c] : f.terms()) {
    if (w.is_convergent()) out.add_term(w, c);
  }
  return out;
}

// -------------------------------------------------------- compositions

int Composition::weight() const {
  int s = 0;
  for (int r : parts) s += r;
  return s;
}

std::string Composition::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts[i]);
  }
  return s + ")";
}

Word word_of_composition(const Composition& c) {
  if (c.parts.empty() || c.parts.front() < 2) {
    throw std::invalid_argument("composition must start with a part >= 2");
  }
  for (int r : c.parts) {
    if (r < 1) throw std::invalid_argument("composition parts must be >= 1");
  }
  return word_of_blocks(c.parts);
}

Composition composition_of_word(const Word& w) {
  if (!w.is_convergent()) {
    throw std::invalid_argument("word is not convergent: " + w.str());
  }
  return Composition{y_blocks(w)};
}

std::vector<Word> all_words(int length) {
  if (length < 0 || length > 30) throw std::length_error("all_words");
  std::vector<Word> out;
  out.reserve(std::size_t{1} << length);
  std::string s(static_cast<std::size_t>(length), 'x');
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << length); ++bits) {
    for (int i = 0; i < length; ++i) {
      s[static_cast<std::size_t>(i)] =
          ((bits >> (length - 1 - i)) & 1U) ? 'y' : 'x';
    }
    out.push_back(Word::parse(s));
  }
  return out;
}

}  // namespace ppz
