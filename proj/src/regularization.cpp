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

#include "ppzeta/regularization.hpp"

#include <sstream>
#include <stdexcept>

#include "ppzeta/linalg.hpp"

namespace ppz {

// ---------------------------------------------------- FormalZetaCombo

FormalZetaCombo FormalZetaCombo::scalar(const Rational& c) {
  return FormalZetaCombo(NcPoly::constant(c));
}

FormalZetaCombo FormalZetaCombo::symbol(const Word& w, const Rational& c) {
  if (!w.is_convergent()) {
    throw std::invalid_argument("Z symbol needs a convergent word: " + w.str());
  }
  return FormalZetaCombo(NcPoly(w, c));
}

NcPoly FormalZetaCombo::symbols() const {
  NcPoly out = poly_;
  out.add_term(Word(), -poly_.coeff(Word()));
  return out;
}

FormalZetaCombo& FormalZetaCombo::operator+=(const FormalZetaCombo& o) {
  poly_ += o.poly_;
  return *this;
}

FormalZetaCombo& FormalZetaCombo::operator-=(const FormalZetaCombo& o) {
  poly_ -= o.poly_;
  return *this;
}

FormalZetaCombo& FormalZetaCombo::operator*=(const Rational& c) {
  poly_ *= c;
  return *this;
}

FormalZetaCombo operator*(const FormalZetaCombo& a, const FormalZetaCombo& b) {
  // Shuffles of convergent words (and the empty word) stay convergent.
  return FormalZetaCombo(shuffle(a.poly_, b.poly_));
}

std::string FormalZetaCombo::str() const {
  if (poly_.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : poly_.terms()) {
    const Rational mag = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) os << '-';
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    if (w.empty()) {
      os << mag;
    } else {
      if (mag != Rational(1)) os << mag << ' ';
      os << 'Z' << composition_of_word(w).str();
    }
    first = false;
  }
  return os.str();
}

// ------------------------------------------------------ regularization

FormalZetaCombo shuffle_regularize(const Word& w) {
  if (w.is_convergent()) return FormalZetaCombo::symbol(w);
  if (w.empty()) return FormalZetaCombo::scalar(Rational(1));
  // w = y^r v x^s with r, s maximal; v is then convergent or empty.
  int r = 0;
  while (r < w.size() && w[r] == Letter::kY) ++r;
  int s = 0;
  while (s < w.size() - r && w[w.size() - 1 - s] == Letter::kX) ++s;
  const Word v = w.sub(r, w.size() - r - s);

  NcPoly sum;
  for (int a = 0; a <= r; ++a) {
    for (int b = 0; b <= s; ++b) {
      const Word middle = Word::y_power(r - a) + v + Word::x_power(s - b);
      const NcPoly term = shuffle(shuffle(NcPoly(Word::y_power(a)), NcPoly(middle)),
                                  NcPoly(Word::x_power(b)));
      sum += pi_convergent(term) * Rational((a + b) % 2 == 0 ? 1 : -1);
    }
  }
  FormalZetaCombo out;
  for (const auto& [u, c] : sum.terms()) out += FormalZetaCombo::symbol(u, c);
  return out;
}

FormalZetaCombo shuffle_regularize(const NcPoly& f) {
  FormalZetaCombo out;
  for (const auto& [w, c] : f.terms()) out += shuffle_regularize(w) * c;
  return out;
}

StarSymbolTable star_units(int n) {
  if (n < 0 || n > 12) throw std::invalid_argument("star_units: need 0 <= n <= 12");
  // E = exp(L) with L = sum_r (-1)^{r-1}/r Z(x^{r-1} y) y^r, so
  // r E_r = sum_{j=1}^{r} j L_j E_{r-j}.
  std::vector<FormalZetaCombo> log_terms(static_cast<std::size_t>(n) + 1);
  for (int j = 1; j <= n; ++j) {
    const FormalZetaCombo z = shuffle_regularize(Word::x_power(j - 1) + Word::y());
    log_terms[static_cast<std::size_t>(j)] =
        z * Rational(mpz_class(j % 2 == 1 ? 1 : -1), mpz_class(j));
  }
  StarSymbolTable table;
  table.bound = n;
  table.values.push_back(FormalZetaCombo::scalar(Rational(1)));
  for (int r = 1; r <= n; ++r) {
    FormalZetaCombo acc;
    for (int j = 1; j <= r; ++j) {
      const auto& lj = log_terms[static_cast<std::size_t>(j)];
      if (lj.is_zero()) continue;
      acc += (lj * table.values[static_cast<std::size_t>(r - j)]) * Rational(j);
    }
    table.values.push_back(acc * Rational(mpz_class(1), mpz_class(r)));
  }
  return table;
}

FormalZetaCombo star_regularize(const Word& w) {
  if (w.empty()) return FormalZetaCombo::scalar(Rational(1));
  if (w.back() != Letter::kY) {
    throw std::invalid_argument("star_regularize: word must end in y: " + w.str());
  }
  if (w.is_convergent()) return FormalZetaCombo::symbol(w);
  int m = 0;
  while (m < w.size() && w[m] == Letter::kY) ++m;
  const StarSymbolTable units = star_units(m);
  if (m == w.size()) return units.values[static_cast<std::size_t>(m)];
  const Word v = w.suffix_from(m);
  FormalZetaCombo out;
  for (int r = 0; r <= m; ++r) {
    const auto& unit = units.values[static_cast<std::size_t>(r)];
    if (unit.is_zero()) continue;
    out += unit * shuffle_regularize(Word::y_power(m - r) + v);
  }
  return out;
}

FormalZetaCombo stuffle_relation(const Word& u, const Word& v) {
  if (u.empty() || v.empty() || u.back() != Letter::kY ||
      v.back() != Letter::kY) {
    throw std::invalid_argument("stuffle_relation: words must be nonempty and end in y");
  }
  FormalZetaCombo out = star_regularize(u) * star_regularize(v);
  const NcPoly product = stuffle(u, v);
  for (const auto& [w, c] : product.terms()) {
    out -= star_regularize(w) * c;
  }
  return out;
}

std::vector<FormalZetaCombo> stuffle_relations(int n) {
  std::vector<FormalZetaCombo> out;
  for (int a = 1; 2 * a <= n; ++a) {
    for (const Word& u : all_words(a)) {
      if (u.back() != Letter::kY) continue;
      for (const Word& v : all_words(n - a)) {
        if (v.back() != Letter::kY || (a == n - a && v < u)) continue;
        out.push_back(stuffle_relation(u, v));
      }
    }
  }
  return out;
}

namespace {

std::vector<Word> convergent_words(int n) {
  std::vector<Word> out;
  for (const Word& w : all_words(n)) {
    if (w.is_convergent()) out.push_back(w);
  }
  return out;
}

}  // namespace

FzQuotient fz_quotient(int n) {
  if (n < 2 || n > 8) throw std::invalid_argument("fz_quotient: need 2 <= n <= 8");
  FzQuotient q;
  q.weight = n;
  q.symbols = convergent_words(n);
  const std::vector<FormalZetaCombo> rels = stuffle_relations(n);
  RatMatrix m(rels.size(), q.symbols.size());
  for (std::size_t r = 0; r < rels.size(); ++r) {
    for (std::size_t c = 0; c < q.symbols.size(); ++c) {
      m(r, c) = rels[r].coeff(q.symbols[c]);
    }
  }
  const RowEchelon ech = row_reduce(std::move(m));
  q.dimension = static_cast<int>(q.symbols.size() - ech.rank());
  for (std::size_t r = 0; r < ech.rank(); ++r) {
    RatVector row = canonicalize(ech.reduced.row(r));
    FormalZetaCombo rel;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (!row[c].is_zero()) rel += FormalZetaCombo::symbol(q.symbols[c], row[c]);
    }
    q.relations.push_back(std::move(rel));
  }
  return q;
}

int fz_quotient_dim(int n) { return fz_quotient(n).dimension; }

int sh_basis_dim(int n) {
  if (n < 2 || n > 8) throw std::invalid_argument("sh_basis_dim: need 2 <= n <= 8");
  const std::vector<Word> words = all_words(n);
  std::vector<RatVector> rows;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (words[i].is_convergent()) continue;
    RatVector row(words.size());
    row[i] = 1;
    const NcPoly reg = shuffle_regularize(words[i]).symbols();
    for (std::size_t j = 0; j < words.size(); ++j) row[j] -= reg.coeff(words[j]);
    rows.push_back(std::move(row));
  }
  const std::size_t r = rank(RatMatrix::from_rows(rows, words.size()));
  return static_cast<int>(words.size() - r);
}

}  // namespace ppz
