#include <gtest/gtest.h>

#include "slq/chern.hpp"
#include "support.hpp"

namespace slq {
namespace {

using test::ow;
using test::qp;

QScalar one_minus_q2n_inverse(int n) { return inverse(QScalar(LaurentQ(1) - LaurentQ::q_power(2 * n))); }

TEST(Tau1, BasisValues) {
  EXPECT_EQ(tau1(zeta()), one_minus_q2n_inverse(1));
  EXPECT_EQ(tau1(unit_element()), QScalar());
  EXPECT_EQ(tau1(ow("ab") * zeta()), QScalar());
  EXPECT_EQ(tau1(ow("cd") * zeta() * zeta()), QScalar());
  EXPECT_EQ(tau1(zeta() * zeta() * zeta()), one_minus_q2n_inverse(3));
  EXPECT_THROW(tau1(alpha()), std::invalid_argument);
}

TEST(Tau1, TraceOfEMinusOne) {
  // Tr e_-1 = alpha delta - q beta gamma = 1 + (q^2 - 1) zeta
  EXPECT_EQ(trace(build_e(-1)), unit_element() + (qp(2) - QScalar(1)) * zeta());
  EXPECT_EQ(tau1(trace(build_e(-1))), (qp(2) - QScalar(1)) * one_minus_q2n_inverse(1));
}

TEST(Pairing, ValuesAtMinusOne) {
  EXPECT_EQ(pairing(build_e(-1)), QScalar(-1));
  EXPECT_EQ(pairing(build_f(-1)), QScalar(1));
  for (std::size_t k = 1; k <= 6; ++k) EXPECT_TRUE(pairing(identity_matrix(k)).is_zero());
  const PairingResult r = pairing(build_e(-1), -1, Side::left);
  EXPECT_EQ(r.simplified_integer, -1);
  AlgebraMatrix m(1, 1);
  m.at(0, 0) = alpha();
  EXPECT_THROW(pairing(m), std::invalid_argument);
}

TEST(Pairing, Scan) {
  const auto zero = chern_scan(0, 0);
  ASSERT_EQ(zero.size(), 2u);
  EXPECT_EQ(zero[0].simplified_integer, 0);
  EXPECT_EQ(zero[1].simplified_integer, 0);
  const auto one = chern_scan(-1, -1);
  EXPECT_EQ(one[0].side, Side::left);
  EXPECT_EQ(one[0].simplified_integer, -1);
  EXPECT_EQ(one[1].simplified_integer, 1);
  EXPECT_THROW(chern_scan(2, 1), std::invalid_argument);
}

TEST(PairingProperty, IntegralAndAntisymmetric) {
  const auto rows = chern_scan(-5, 5);
  std::map<std::pair<int, int>, long> value;
  for (const auto& r : rows) {
    ASSERT_TRUE(r.simplified_integer.has_value()) << r.winding;
    EXPECT_EQ(r.value, QScalar(*r.simplified_integer));
    value[{r.winding, r.side == Side::left ? 0 : 1}] = *r.simplified_integer;
  }
  for (int n = -5; n <= 5; ++n) {
    const long left = value[{n, 0}], right = value[{n, 1}], mirrored = value[{-n, 0}];
    EXPECT_EQ(left, -right);
    EXPECT_EQ(left, -mirrored);
  }
}

TEST(PairingProperty, Tau1IsIndependentOfProductOrder) {
  test::Gen gen(test::kSeed);
  const AlgebraElement factors[] = {ow("ab"), ow("bc"), ow("cd")};
  for (int i = 0; i < 10; ++i) {
    AlgebraElement x = unit_element(), y = unit_element(), z = unit_element();
    for (AlgebraElement* t : {&x, &y, &z})
      for (int j = gen.uniform(0, 2); j > 0; --j) *t = *t * factors[gen.uniform(0, 2)];
    EXPECT_EQ(tau1((x * y) * z), tau1(x * (y * z)));
    EXPECT_EQ(tau1(x + y), tau1(x) + tau1(y));
  }
}

}  // namespace
}  // namespace slq
