#include <gtest/gtest.h>

#include "slq/connection.hpp"
#include "slq/fibration.hpp"
#include "slq/hopf.hpp"
#include "support.hpp"

namespace slq {
namespace {

using test::ow;
using test::qp;

TensorAA pure(const AlgebraElement& x, const AlgebraElement& y) { return TensorAA::pure(x, y); }
const AlgebraElement one = unit_element();

TEST(SplittingI, Values) {
  EXPECT_EQ(splitting_i(z_power(2)), ow("aa"));
  EXPECT_EQ(splitting_i(z_power(0)), one);
  EXPECT_EQ(splitting_i(z_power(-1)), delta());
  for (int n = -4; n <= 4; ++n) {
    EXPECT_EQ(project_pi(splitting_i(z_power(n))), z_power(n));
    EXPECT_EQ(counit(splitting_i(z_power(n))), QScalar(1));
  }
}

TEST(ConnectionForm, Values) {
  EXPECT_TRUE(connection_form(z_power(0)).is_zero());
  EXPECT_EQ(connection_form(z_power(1)), pure(delta(), alpha()) - qp(1) * pure(beta(), gamma()) - TensorAA::unit());
  EXPECT_EQ(connection_form(z_power(-1)), pure(alpha(), delta()) - qp(-1) * pure(gamma(), beta()) - TensorAA::unit());
}

TEST(UniversalD, IsInKernelOfMultiplication) {
  const TensorAA d = universal_d(ow("ab"));
  EXPECT_EQ(d, pure(one, ow("ab")) - pure(ow("ab"), one));
  EXPECT_TRUE(multiply_legs(d).is_zero());
}

TEST(Splittings, Values) {
  EXPECT_EQ(splitting_s(one), TensorAA::unit());
  EXPECT_EQ(splitting_s(gamma()), pure(ow("cd"), alpha()) - qp(1) * pure(ow("bc"), gamma()));
  // s(delta) is row 0 of e_1 against the generators (delta, beta).
  EXPECT_EQ(splitting_s(delta()), pure(ow("da"), delta()) - pure(ow("cd"), beta()));
  EXPECT_EQ(splitting_s_tilde(one), TensorAA::unit());
  EXPECT_EQ(splitting_s_check(one), TensorAA::unit());
  for (const auto& p : {alpha(), beta(), gamma(), delta()}) {
    EXPECT_EQ(multiply_legs(splitting_s(p)), p);
    EXPECT_EQ(multiply_legs(splitting_s_tilde(p)), p);
    EXPECT_EQ(multiply_legs(splitting_s_check(p)), p);
  }
}

TEST(Splittings, CheckOnNegativeWindingGenerators) {
  // s^(alpha^{m-k} gamma^k) = sum_l alpha^{m-l} gamma^l (x) [m l](-q)^{-l} beta^l delta^{m-l} alpha^{m-k} gamma^k
  for (int m = 1; m <= 4; ++m) {
    for (int k = 0; k <= m; ++k) {
      const AlgebraElement xi = ow(std::string(m - k, 'a') + std::string(k, 'c'));
      TensorAA expected;
      for (int l = 0; l <= m; ++l) {
        QScalar c(test::gauss_binomial(m, l, 2));
        c *= qp(-l);
        if (l % 2) c = -c;
        const AlgebraElement right = test::oracle_product(ow(std::string(l, 'b') + std::string(m - l, 'd')), xi);
        expected += c * pure(ow(std::string(m - l, 'a') + std::string(l, 'c')), right);
      }
      EXPECT_EQ(splitting_s_check(xi), expected) << "m = " << m << ", k = " << k;
    }
  }
}

TEST(CovariantDerivative, Values) {
  const AlgebraElement b = ow("bc");
  EXPECT_EQ(covariant_derivative(b, 0), pure(one, b) - pure(b, one));
  EXPECT_EQ(covariant_derivative(gamma(), -1), pure(one, gamma()) - pure(ow("cd"), alpha()) + qp(1) * pure(b, gamma()));
  EXPECT_EQ(covariant_derivative(delta(), 1), pure(one, delta()) - pure(ow("da"), delta()) + pure(ow("cd"), beta()));
  EXPECT_THROW(covariant_derivative(gamma(), 1), std::invalid_argument);
  EXPECT_THROW(covariant_derivative(alpha() + delta(), 1), std::invalid_argument);
}

TEST(Reports, PassAtDefaultBounds) {
  for (const auto& r : {check_connection_axioms(6), check_strongness(6), check_bicovariance(6)}) {
    EXPECT_TRUE(r.passed());
    for (const auto& c : r.checks()) EXPECT_TRUE(c.passed) << c.name << ": " << c.counterexample.value_or("");
  }
}

TEST(ConnectionProperty, GrassmannianAndSectors) {
  for (int n = -6; n <= 6; ++n) {
    for (const auto& xi : winding_generators(n)) {
      const TensorAA s = splitting_s(xi);
      EXPECT_EQ(covariant_derivative(xi, n), pure(one, xi) - s);
      for (const auto& [k, c] : s.terms()) {
        EXPECT_EQ(right_degree(std::get<0>(k)), 0);
        EXPECT_EQ(right_degree(std::get<1>(k)), -n);
      }
      const TensorAA sc = splitting_s_check(xi);
      for (const auto& [k, c] : sc.terms()) {
        EXPECT_EQ(right_degree(std::get<0>(k)), -n);
        EXPECT_EQ(right_degree(std::get<1>(k)), 0);
      }
    }
  }
}

TEST(ConnectionProperty, BLinearity) {
  test::Gen gen(test::kSeed);
  const AlgebraElement bs[] = {ow("bc"), ow("ab"), ow("cd")};
  for (int i = 0; i < 20; ++i) {
    const AlgebraElement p = AlgebraElement::basis(gen.monomial(3));
    for (const auto& b : bs) {
      EXPECT_EQ(splitting_s(b * p), left_multiply(b, splitting_s(p)));
      EXPECT_EQ(splitting_s_check(p * b), right_multiply(splitting_s_check(p), b));
    }
  }
}

}  // namespace
}  // namespace slq
