#pragma once

// Test-side oracles and generators. Nothing here calls the library's
// product, rewriting or Hopf code; the oracle works on plain strings over
// "abcd" and only borrows QScalar for coefficients.

#include <map>
#include <random>
#include <string>

#include "slq/algebra.hpp"
#include "slq/qscalar.hpp"

namespace slq::test {

using StringElement = std::map<std::string, QScalar>;

inline void add_to(StringElement& x, const std::string& w, const QScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = x.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) x.erase(it);
  }
}

// One rewriting step on w, or false when w is sorted and free of a...d.
// Sorting swaps use  ba = q ab, ca = q ac, db = q bd, dc = q cd, cb = bc,
// da = 1 + q bc. A sorted word a^k b^l c^m d^s with k, s > 0 is reduced by
// b^l c^m d = q^{-(l+m)} d b^l c^m followed by ad = 1 + q^-1 bc.
inline bool oracle_step(const std::string& w, const QScalar& c, StringElement& out) {
  const QScalar q = QScalar::q_power(1), qi = QScalar::q_power(-1);
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    const std::string pair = w.substr(i, 2);
    const std::string head = w.substr(0, i), tail = w.substr(i + 2);
    if (pair == "ba" || pair == "ca" || pair == "db" || pair == "dc") {
      add_to(out, head + pair[1] + pair[0] + tail, c * q);
      return true;
    }
    if (pair == "cb") {
      add_to(out, head + "bc" + tail, c);
      return true;
    }
    if (pair == "da") {
      add_to(out, head + tail, c);
      add_to(out, head + "bc" + tail, c * q);
      return true;
    }
  }
  const auto a_end = w.find_first_not_of('a');
  const auto d_begin = w.find('d');
  if (a_end == std::string::npos || d_begin == std::string::npos || a_end == 0) return false;
  // w = a^k X d^s, X = b^l c^m, k > 0, s > 0.
  const std::string x = w.substr(a_end, d_begin - a_end);
  const std::string a_part = w.substr(0, a_end - 1), d_rest = w.substr(d_begin + 1);
  const QScalar shift = QScalar::q_power(-static_cast<int>(x.size()));
  add_to(out, a_part + x + d_rest, c * shift);
  add_to(out, a_part + "bc" + x + d_rest, c * shift * qi);
  return true;
}

inline StringElement oracle_reduce(StringElement x) {
  StringElement done;
  while (!x.empty()) {
    StringElement next;
    for (const auto& [w, c] : x)
      if (!oracle_step(w, c, next)) add_to(done, w, c);
    x = std::move(next);
  }
  return done;
}

inline AlgebraElement to_algebra(const StringElement& x) {
  AlgebraElement out;
  for (const auto& [w, c] : x) {
    int e[4] = {0, 0, 0, 0};
    for (char ch : w) ++e[ch - 'a'];
    out.add_term(PbwMonomial::make(e[0], e[1], e[2], e[3]), c);
  }
  return out;
}

inline std::string word_of(const PbwMonomial& m) {
  return std::string(m.k, 'a') + std::string(m.l, 'b') + std::string(m.m, 'c') + std::string(m.s, 'd');
}

inline StringElement from_algebra(const AlgebraElement& x) {
  StringElement out;
  for (const auto& [m, c] : x.terms()) add_to(out, word_of(m), c);
  return out;
}

inline AlgebraElement oracle_product(const AlgebraElement& x, const AlgebraElement& y) {
  StringElement raw;
  for (const auto& [wx, cx] : from_algebra(x))
    for (const auto& [wy, cy] : from_algebra(y)) add_to(raw, wx + wy, cx * cy);
  return to_algebra(oracle_reduce(raw));
}

inline AlgebraElement oracle_word(const std::string& w) { return to_algebra(oracle_reduce({{w, QScalar(1)}})); }

/// Parses a compact word such as "da" through the oracle.
inline AlgebraElement ow(const std::string& w) { return oracle_word(w); }

inline QScalar qp(int e) { return QScalar::q_power(e); }

/// Gaussian binomial in base t = q^base via Pascal's rule, computed here.
inline LaurentQ gauss_binomial(int n, int k, int base) {
  if (k < 0 || k > n) return {};
  if (k == 0 || k == n) return LaurentQ(1);
  return gauss_binomial(n - 1, k - 1, base) + gauss_binomial(n - 1, k, base).shifted(base * k);
}

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  QScalar scalar() {
    QScalar c = QScalar(uniform(-4, 4)) * qp(uniform(-3, 3));
    if (uniform(0, 3) == 0) c += qp(uniform(-2, 2));
    if (uniform(0, 4) == 0) c /= QScalar(LaurentQ(2) + LaurentQ::q_power(uniform(1, 3)));
    return c;
  }

  LaurentQ laurent() {
    LaurentQ p;
    const int terms = uniform(0, 4);
    for (int i = 0; i < terms; ++i) p += LaurentQ::monomial(mpq_class(uniform(-5, 5)) / uniform(1, 3), uniform(-3, 4));
    return p;
  }

  QScalar fraction() {
    LaurentQ den = laurent();
    while (den.is_zero()) den = laurent();
    return QScalar::fraction(laurent(), den);
  }

  PbwMonomial monomial(int max_degree) {
    const int d = uniform(0, max_degree);
    int e[4] = {0, 0, 0, 0};
    const int outer = uniform(0, 1) ? 0 : 3;
    for (int i = 0; i < d; ++i) {
      const int g = uniform(0, 2);
      ++e[g == 0 ? outer : g];
    }
    return PbwMonomial::make(e[0], e[1], e[2], e[3]);
  }

  AlgebraElement element(int max_degree, int max_terms = 3) {
    AlgebraElement x;
    const int terms = uniform(1, max_terms);
    for (int i = 0; i < terms; ++i) x.add_term(monomial(max_degree), scalar());
    return x;
  }

  std::string word(int max_length) {
    std::string w(static_cast<std::size_t>(uniform(0, max_length)), 'a');
    for (char& ch : w) ch = static_cast<char>('a' + uniform(0, 3));
    return w;
  }

 private:
  std::mt19937_64 rng_;
};

constexpr std::uint64_t kSeed = 1729;

}  // namespace slq::test
