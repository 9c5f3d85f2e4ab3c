#pragma once

// The algebra A(SL_q(2)) in its PBW basis alpha^k beta^l gamma^m delta^s
// with k*s = 0.
//
// Products of basis monomials are computed by commuting delta-powers past
// alpha-powers with  delta alpha = 1 + q beta gamma  and moving beta/gamma
// blocks with pure q-power factors. A separate word-rewriting engine
// (rewriting.hpp) implements the same algebra from the defining relations
// and serves as the reference implementation.

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "slq/qscalar.hpp"
#include "slq/sparse.hpp"

namespace slq {

enum class Generator : std::uint8_t { A, B, C, D };  // alpha, beta, gamma, delta

using Word = std::vector<Generator>;

struct PbwMonomial {
  int k = 0;  // alpha
  int l = 0;  // beta
  int m = 0;  // gamma
  int s = 0;  // delta

  /// Throws std::invalid_argument on negative exponents or k*s != 0.
  static PbwMonomial make(int k, int l, int m, int s);

  int degree() const { return k + l + m + s; }
  bool is_unit() const { return degree() == 0; }

  friend auto operator<=>(const PbwMonomial&, const PbwMonomial&) = default;
};

using AlgebraElement = SparseVector<PbwMonomial>;

AlgebraElement unit_element(const QScalar& c = QScalar(1));
AlgebraElement generator_element(Generator g);
AlgebraElement monomial_element(int k, int l, int m, int s, const QScalar& c = QScalar(1));
inline AlgebraElement alpha() { return generator_element(Generator::A); }
inline AlgebraElement beta() { return generator_element(Generator::B); }
inline AlgebraElement gamma() { return generator_element(Generator::C); }
inline AlgebraElement delta() { return generator_element(Generator::D); }
/// zeta = -q^-1 beta gamma, the central sphere coordinate.
AlgebraElement zeta();

/// Product of two PBW monomials in normal form.
AlgebraElement multiply_monomials(const PbwMonomial& x, const PbwMonomial& y);

AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y);
inline AlgebraElement operator*(const AlgebraElement& x, const AlgebraElement& y) {
  return multiply(x, y);
}

AlgebraElement power(const AlgebraElement& x, unsigned n);
AlgebraElement linear_combine(std::span<const std::pair<QScalar, AlgebraElement>> pairs);

/// PBW expansion of a free word, by folding the structured product.
AlgebraElement normal_form(const Word& w);

/// The word alpha^k beta^l gamma^m delta^s.
Word to_word(const PbwMonomial& x);

/// Extends an assignment of generator images to an algebra map (or an
/// anti-algebra map when `anti` is set). The images must satisfy the
/// defining relations for the result to be well defined.
AlgebraElement extend_on_generators(const AlgebraElement& x,
                                    const std::array<AlgebraElement, 4>& images, bool anti);

}  // namespace slq
