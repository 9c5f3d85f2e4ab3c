#pragma once

// Exact arithmetic in the coefficient field Q(q).
//
// LaurentQ is a finite Laurent polynomial in q with arbitrary-precision
// rational coefficients. QScalar is a reduced fraction of two such
// polynomials. The denominator is kept in a canonical form (lowest
// q-exponent 0, primitive integer coefficients, positive leading
// coefficient) so that equality is a structural comparison.

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace slq {

/// Raised for division by zero, evaluation at a pole, and similar.
class MathError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class LaurentQ {
 public:
  using Term = std::pair<int, mpq_class>;

  LaurentQ() = default;
  LaurentQ(long c);  // NOLINT(google-explicit-constructor)
  LaurentQ(const mpq_class& c);  // NOLINT(google-explicit-constructor)

  /// c * q^e
  static LaurentQ monomial(const mpq_class& c, int e);
  static LaurentQ q_power(int e) { return monomial(1, e); }

  /// Sorted by exponent, no zero coefficients.
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  /// True when the polynomial is a single rational constant (q^0 term).
  bool is_constant() const;
  std::size_t size() const { return terms_.size(); }

  int min_exponent() const;
  int max_exponent() const;
  mpq_class coefficient(int e) const;
  const mpq_class& leading_coefficient() const;

  LaurentQ shifted(int e) const;
  LaurentQ scaled(const mpq_class& c) const;
  mpq_class evaluate(const mpq_class& q0) const;

  LaurentQ& operator+=(const LaurentQ& o);
  LaurentQ& operator-=(const LaurentQ& o);
  LaurentQ& operator*=(const LaurentQ& o);
  friend LaurentQ operator+(LaurentQ a, const LaurentQ& b) { return a += b; }
  friend LaurentQ operator-(LaurentQ a, const LaurentQ& b) { return a -= b; }
  friend LaurentQ operator*(const LaurentQ& a, const LaurentQ& b);
  LaurentQ operator-() const;

  friend bool operator==(const LaurentQ& a, const LaurentQ& b) { return a.terms_ == b.terms_; }

  /// Builds from unsorted terms, merging duplicates and dropping zeros.
  static LaurentQ from_terms(std::vector<Term> terms);

 private:
  std::vector<Term> terms_;
};

/// Polynomial gcd of two Laurent polynomials after removing their
/// q-valuations. Result is monic. gcd(0, 0) is 0.
LaurentQ polynomial_gcd(const LaurentQ& a, const LaurentQ& b);

/// Exact division of polynomials; throws MathError when b does not divide a.
LaurentQ polynomial_divide_exact(const LaurentQ& a, const LaurentQ& b);

class QScalar {
 public:
  QScalar() : den_(1) {}
  QScalar(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  QScalar(const mpq_class& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  QScalar(LaurentQ p) : num_(std::move(p)), den_(1) {}  // NOLINT(google-explicit-constructor)

  static QScalar q_power(int e) { return QScalar(LaurentQ::q_power(e)); }
  /// num/den, normalized. Throws MathError when den is zero.
  static QScalar fraction(LaurentQ num, LaurentQ den);

  const LaurentQ& numerator() const { return num_; }
  const LaurentQ& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_laurent() const { return den_.is_one(); }
  /// Present when the value does not depend on q.
  std::optional<mpq_class> as_constant() const;
  /// Present when the value is a q-independent integer that fits a long.
  std::optional<long> as_integer() const;

  QScalar& operator+=(const QScalar& o);
  QScalar& operator-=(const QScalar& o);
  QScalar& operator*=(const QScalar& o);
  QScalar& operator/=(const QScalar& o);
  friend QScalar operator+(QScalar a, const QScalar& b) { return a += b; }
  friend QScalar operator-(QScalar a, const QScalar& b) { return a -= b; }
  friend QScalar operator*(QScalar a, const QScalar& b) { return a *= b; }
  friend QScalar operator/(QScalar a, const QScalar& b) { return a /= b; }
  QScalar operator-() const;

  friend bool operator==(const QScalar& a, const QScalar& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  QScalar(LaurentQ num, LaurentQ den, int /*already_normal*/)
      : num_(std::move(num)), den_(std::move(den)) {}
  static QScalar normalized(LaurentQ num, LaurentQ den);

  LaurentQ num_;
  LaurentQ den_;
};

/// Multiplicative inverse; throws MathError on zero.
QScalar inverse(const QScalar& a);

/// Exact evaluation at q = q0. Throws MathError for q0 = 0 or a pole.
mpq_class specialize(const QScalar& a, const mpq_class& q0);

/// Re-normalizes an arbitrary numerator/denominator pair; exposed for tests.
QScalar normalize(const LaurentQ& num, const LaurentQ& den);

}  // namespace slq
