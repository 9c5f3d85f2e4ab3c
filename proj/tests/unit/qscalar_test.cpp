#include <gtest/gtest.h>

#include "slq/qscalar.hpp"
#include "support.hpp"

namespace slq {
namespace {

using test::qp;

TEST(LaurentQ, ArithmeticAndShape) {
  const LaurentQ p = LaurentQ(1) + LaurentQ::q_power(2);
  const LaurentQ r = p * p;
  EXPECT_EQ(r, LaurentQ(1) + LaurentQ::monomial(2, 2) + LaurentQ::q_power(4));
  EXPECT_EQ(r.min_exponent(), 0);
  EXPECT_EQ(r.max_exponent(), 4);
  EXPECT_EQ(r.coefficient(2), mpq_class(2));
  EXPECT_TRUE((p - p).is_zero());
  EXPECT_EQ(p.shifted(-2), LaurentQ::q_power(-2) + LaurentQ(1));
  EXPECT_EQ(p.evaluate(mpq_class(1, 2)), mpq_class(5, 4));
}

TEST(LaurentQ, FromTermsMergesAndDrops) {
  const LaurentQ p = LaurentQ::from_terms({{3, 1}, {1, 2}, {3, -1}, {0, 0}});
  EXPECT_EQ(p, LaurentQ::monomial(2, 1));
}

TEST(LaurentQ, GcdAndExactDivision) {
  const LaurentQ a = LaurentQ(1) - LaurentQ::q_power(4);  // (1 - q^2)(1 + q^2)
  const LaurentQ b = LaurentQ(1) - LaurentQ::q_power(2);
  const LaurentQ g = polynomial_gcd(a, b);
  EXPECT_EQ(g, LaurentQ::q_power(2) - LaurentQ(1));  // monic
  EXPECT_EQ(polynomial_divide_exact(a, b), LaurentQ(1) + LaurentQ::q_power(2));
  EXPECT_THROW(polynomial_divide_exact(b, LaurentQ(1) + LaurentQ::q_power(1) + LaurentQ::q_power(3)), MathError);
}

TEST(QScalar, NormalizationIsCanonical) {
  // (q^2 - 1)/(q^3 - q) = 1/q
  const QScalar x = QScalar::fraction(LaurentQ::q_power(2) - LaurentQ(1), LaurentQ::q_power(3) - LaurentQ::q_power(1));
  EXPECT_EQ(x, qp(-1));
  EXPECT_TRUE(x.is_laurent());
  // 2/(4 - 4q) = -1/(2q - 2); the denominator is primitive with positive leading coefficient.
  const QScalar y = QScalar::fraction(LaurentQ(2), LaurentQ(4) - LaurentQ::monomial(4, 1));
  EXPECT_EQ(y.denominator(), LaurentQ::q_power(1) - LaurentQ(1));
  EXPECT_EQ(y.numerator(), LaurentQ(mpq_class(-1, 2)));
  EXPECT_EQ(normalize(LaurentQ(6), LaurentQ(3)), QScalar(2));
  mpq_class raw(2);
  raw.get_den() = 2;  // 2/2, not yet canonical
  EXPECT_EQ(LaurentQ::monomial(raw, 0), LaurentQ(1));
  EXPECT_EQ(QScalar(raw), QScalar(1));
}

TEST(QScalar, Errors) {
  EXPECT_THROW(QScalar::fraction(LaurentQ(1), LaurentQ()), MathError);
  EXPECT_THROW(inverse(QScalar()), MathError);
  EXPECT_THROW(QScalar(1) / QScalar(0), MathError);
  const QScalar pole = inverse(QScalar(LaurentQ(1) - LaurentQ::q_power(2)));
  EXPECT_THROW(specialize(pole, 1), MathError);
  EXPECT_THROW(specialize(qp(1), 0), MathError);
  EXPECT_EQ(specialize(pole, 2), mpq_class(-1, 3));
}

TEST(QScalar, ConstantsAndIntegers) {
  EXPECT_EQ(QScalar(-7).as_integer(), -7);
  EXPECT_FALSE(qp(1).as_constant().has_value());
  EXPECT_EQ(QScalar(mpq_class(3, 2)).as_constant(), mpq_class(3, 2));
  EXPECT_FALSE(QScalar(mpq_class(3, 2)).as_integer().has_value());
  const QScalar cancels = QScalar::fraction(LaurentQ(1) - LaurentQ::q_power(2), LaurentQ::q_power(2) - LaurentQ(1));
  EXPECT_EQ(cancels.as_integer(), -1);
}

// Field axioms and specialization as a ring homomorphism, on seeded random values.
TEST(QScalarProperty, FieldAxioms) {
  test::Gen gen(test::kSeed);
  for (int i = 0; i < 200; ++i) {
    const QScalar a = gen.fraction(), b = gen.fraction(), c = gen.fraction();
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_TRUE((a - a).is_zero());
    if (!a.is_zero()) {
      EXPECT_TRUE((a * inverse(a)).is_one());
      EXPECT_EQ((b / a) * a, b);
    }
  }
}

TEST(QScalarProperty, SpecializationIsHomomorphism) {
  test::Gen gen(test::kSeed + 1);
  const mpq_class q0(3, 7);
  int checked = 0;
  for (int i = 0; i < 200; ++i) {
    const QScalar a = gen.fraction(), b = gen.fraction();
    try {
      const mpq_class sa = specialize(a, q0), sb = specialize(b, q0);
      EXPECT_EQ(specialize(a + b, q0), sa + sb);
      EXPECT_EQ(specialize(a * b, q0), sa * sb);
      ++checked;
    } catch (const MathError&) {
    }
  }
  EXPECT_GT(checked, 150);
}

// Equality is structural: equal values built along different routes compare equal.
TEST(QScalarProperty, CanonicalForm) {
  test::Gen gen(test::kSeed + 2);
  for (int i = 0; i < 100; ++i) {
    const QScalar a = gen.fraction();
    LaurentQ k = gen.laurent();
    if (k.is_zero()) continue;
    const QScalar scaled = QScalar::fraction(a.numerator() * k, a.denominator() * k);
    EXPECT_EQ(scaled, a);
  }
}

}  // namespace
}  // namespace slq
