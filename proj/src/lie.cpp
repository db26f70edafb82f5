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

#include "ppzeta/lie.hpp"

#include <stdexcept>
#include <string>

#include "ppzeta/linalg.hpp"

namespace ppz {

NcPoly bracket(const NcPoly& f, const NcPoly& g) {
  return concat(f, g) - concat(g, f);
}

NcPoly ad_x_pow(int n) {
  if (n < 0) throw std::invalid_argument("ad_x_pow: negative exponent");
  NcPoly out;
  for (int i = 0; i <= n; ++i) {
    const Rational c(mpz_class(binomial(n, i) * (i % 2 == 0 ? 1 : -1)));
    out.add_term(Word::x_power(n - i) + Word::y() + Word::x_power(i), c);
  }
  return out;
}

NcPoly dynkin_bracketing(const NcPoly& f) {
  NcPoly out;
  for (const auto& [w, c] : f.terms()) {
    if (w.empty()) continue;  // constants bracket to zero
    NcPoly r(w.prefix(1));
    for (int i = 1; i < w.size(); ++i) {
      const NcPoly a(Word::letter(w[i]));
      r = concat(r, a) - concat(a, r);
    }
    out += r * c;
  }
  return out;
}

bool is_lie(const NcPoly& f) {
  if (!f.is_homogeneous()) {
    throw std::invalid_argument("is_lie: polynomial is not homogeneous");
  }
  if (f.is_zero()) return true;
  const int n = f.min_weight();
  if (n == 0) return false;
  return dynkin_bracketing(f) == f * Rational(n);
}

NcPoly derivation_apply(const NcPoly& f, const NcPoly& g) {
  const NcPoly y_image = bracket(NcPoly(Word::y()), f);
  NcPoly out;
  for (const auto& [w, c] : g.terms()) {
    for (int i = 0; i < w.size(); ++i) {
      if (w[i] != Letter::kY) continue;
      const NcPoly left(w.prefix(i));
      const NcPoly right(w.suffix_from(i + 1));
      out += concat(concat(left, y_image), right) * c;
    }
  }
  return out;
}

NcPoly poisson(const NcPoly& f, const NcPoly& g) {
  return bracket(f, g) + derivation_apply(f, g) - derivation_apply(g, f);
}

NcPoly odot(const NcPoly& f, const NcPoly& g) {
  return concat(f, g) + derivation_apply(f, g);
}

std::vector<Word> lyndon_words(int n) {
  if (n < 1) return {};
  // Duval's generation over the ordered alphabet {0 = x, 1 = y}.
  std::vector<Word> out;
  std::vector<int> w{-1};
  while (!w.empty()) {
    ++w.back();
    if (static_cast<int>(w.size()) == n) {
      std::string s;
      for (int l : w) s += l == 0 ? 'x' : 'y';
      out.push_back(Word::parse(s));
    }
    const std::size_t m = w.size();
    while (static_cast<int>(w.size()) < n) w.push_back(w[w.size() - m]);
    while (!w.empty() && w.back() == 1) w.pop_back();
  }
  return out;
}

namespace {

bool is_lyndon(const Word& w) {
  for (int i = 1; i < w.size(); ++i) {
    // Every proper rotation must be strictly larger.
    const Word rot = w.suffix_from(i) + w.prefix(i);
    if (!(w.bits() < rot.bits())) return false;
  }
  return w.size() > 0;
}

}  // namespace

NcPoly lyndon_bracket(const Word& w) {
  if (w.size() == 1) return NcPoly(w);
  for (int i = 1; i < w.size(); ++i) {
    const Word v = w.suffix_from(i);
    if (is_lyndon(v)) {
      return bracket(lyndon_bracket(w.prefix(i)), lyndon_bracket(v));
    }
  }
  throw std::invalid_argument("not a Lyndon word: " + w.str());
}

std::vector<WordPair> admissible_stuffle_pairs(int n) {
  std::vector<WordPair> out;
  for (int a = 1; 2 * a <= n; ++a) {
    const int b = n - a;
    for (const Word& u : all_words(a)) {
      if (u.back() != Letter::kY) continue;
      for (const Word& v : all_words(b)) {
        if (v.back() != Letter::kY) continue;
        if (a == b && v < u) continue;
        if (u.is_y_power() && v.is_y_power()) continue;
        out.emplace_back(u, v);
      }
    }
  }
  return out;
}

DsViolations ds_check(const NcPoly& f) {
  if (!f.is_homogeneous() || f.is_zero() || f.min_weight() < 3) {
    throw std::invalid_argument(
        "ds_check: expected a nonzero homogeneous polynomial of weight >= 3");
  }
  DsViolations out;
  out.lie = is_lie(f);
  for (const auto& [u, v] : admissible_stuffle_pairs(f.min_weight())) {
    if (!coeff_of(f, stuffle(u, v)).is_zero()) out.pairs.emplace_back(u, v);
  }
  return out;
}

DsConstraintSystem ds_constraints(int n) {
  DsConstraintSystem sys;
  sys.weight = n;
  sys.pairs = admissible_stuffle_pairs(n);
  sys.lyndon = lyndon_words(n);
  for (const Word& w : sys.lyndon) sys.basis.push_back(lyndon_bracket(w));
  return sys;
}

std::vector<NcPoly> ds_solve(int n) {
  if (n < 3 || n > 10) throw std::invalid_argument("ds_solve: need 3 <= n <= 10");
  const DsConstraintSystem sys = ds_constraints(n);
  RatMatrix m(sys.pairs.size(), sys.basis.size());
  for (std::size_t r = 0; r < sys.pairs.size(); ++r) {
    const NcPoly s = stuffle(sys.pairs[r].first, sys.pairs[r].second);
    for (std::size_t c = 0; c < sys.basis.size(); ++c) {
      m(r, c) = coeff_of(sys.basis[c], s);
    }
  }
  std::vector<NcPoly> out;
  for (const RatVector& v : kernel(m)) {
    NcPoly f;
    for (std::size_t c = 0; c < v.size(); ++c) f += sys.basis[c] * v[c];
    out.push_back(std::move(f));
  }
  const Word lead = Word::x_power(n - 1) + Word::y();
  for (std::size_t i = 0; i < out.size(); ++i) {
    const Rational c = out[i].coeff(lead);
    if (c.is_zero()) continue;
    out[i] *= Rational(1) / c;
    for (std::size_t j = 0; j < out.size(); ++j) {
      if (j != i) out[j] -= out[i] * out[j].coeff(lead);
    }
    std::swap(out[0], out[i]);
    break;
  }
  return out;
}

}  // namespace ppz
