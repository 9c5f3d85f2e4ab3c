#include <gtest/gtest.h>

#include "slq/connection.hpp"
#include "slq/fibration.hpp"
#include "slq/hopf.hpp"
#include "slq/projectors.hpp"
#include "support.hpp"

namespace slq {
namespace {

using test::ow;
using test::qp;

AlgebraMatrix matrix2(AlgebraElement a, AlgebraElement b, AlgebraElement c, AlgebraElement d) {
  AlgebraMatrix m(2, 2);
  m.at(0, 0) = std::move(a);
  m.at(0, 1) = std::move(b);
  m.at(1, 0) = std::move(c);
  m.at(1, 1) = std::move(d);
  return m;
}

mpz_class binomial(int n, int k) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

TEST(QBinomial, Values) {
  EXPECT_EQ(qbinom(1, 1), LaurentQ(1));
  EXPECT_EQ(qbinom(2, 1), LaurentQ(1) + LaurentQ::q_power(2));
  EXPECT_TRUE(qbinom(3, 4).is_zero());
  EXPECT_TRUE(qbinom(3, -1).is_zero());
  for (int n = 0; n <= 8; ++n)
    for (int k = 0; k <= n; ++k) {
      EXPECT_EQ(qbinom(n, k).evaluate(1), mpq_class(binomial(n, k))) << n << " " << k;
      EXPECT_EQ(qbinom(n, k), test::gauss_binomial(n, k, 2));
      const LaurentQ b = qbinom(n, k);
      for (const auto& [e, c] : b.terms()) EXPECT_GT(c, 0);
    }
}

TEST(Projectors, Examples) {
  EXPECT_EQ(build_e(0), identity_matrix(1));
  EXPECT_EQ(build_f(0), identity_matrix(1));
  EXPECT_EQ(build_e(-1), matrix2(ow("ad"), -qp(1) * ow("ab"), ow("cd"), -qp(1) * ow("bc")));
  EXPECT_EQ(build_e(1), matrix2(ow("da"), -ow("cd"), qp(1) * ow("ab"), -qp(-1) * ow("bc")));
  EXPECT_EQ(build_f(-1), matrix2(ow("da"), ow("dc"), -ow("ab"), -qp(-1) * ow("bc")));
  // Tr e_1 = 1 + (1 - q^2) zeta
  EXPECT_EQ(trace(build_e(1)), unit_element() + (QScalar(1) - qp(2)) * zeta());
}

TEST(Projectors, IdempotentWithPerturbationControl) {
  EXPECT_TRUE(verify_idempotent(identity_matrix(3)).passed());
  EXPECT_TRUE(verify_idempotent(build_e(-1), "e_-1").passed());
  AlgebraMatrix bad = build_e(-1);
  bad.at(1, 0) += unit_element();
  const VerificationReport r = verify_idempotent(bad, "e_-1");
  ASSERT_FALSE(r.passed());
  ASSERT_TRUE(r.checks().front().counterexample.has_value());
  EXPECT_NE(r.checks().front().counterexample->find("e_-1["), std::string::npos);
  EXPECT_FALSE(verify_idempotent(AlgebraMatrix(2, 3)).passed());
}

TEST(Projectors, RankOne) {
  const RankOneFactors f0 = rank_one_factor(0);
  EXPECT_EQ(f0.u, std::vector<AlgebraElement>{unit_element()});
  EXPECT_EQ(f0.v, std::vector<AlgebraElement>{unit_element()});
  // n = 1: v^T u = S(delta) delta + S(gamma) beta = eps(delta) = 1
  const RankOneFactors f1 = rank_one_factor(1);
  EXPECT_EQ(f1.u, (std::vector<AlgebraElement>{delta(), beta()}));
  EXPECT_EQ(f1.v, (std::vector<AlgebraElement>{alpha(), -qp(-1) * gamma()}));
  EXPECT_EQ(inner_product(f1), unit_element());
  const RankOneFactors f2 = rank_one_factor(-2);
  EXPECT_EQ(inner_product(f2), unit_element());
  EXPECT_EQ(outer_product(f2), build_e(-2));
}

TEST(Projectors, FromSplitting) {
  const std::vector<AlgebraElement> p0{unit_element()};
  EXPECT_EQ(projector_from_splitting(p0, splitting_s, Side::left), identity_matrix(1));
  const std::vector<AlgebraElement> p_minus{alpha(), gamma()};
  EXPECT_EQ(projector_from_splitting(p_minus, splitting_s, Side::left), build_e(-1));
  const std::vector<AlgebraElement> p_plus{delta(), beta()};
  EXPECT_EQ(projector_from_splitting(p_plus, splitting_s_check, Side::right), build_f(1));
  const std::vector<AlgebraElement> partial{alpha()};
  EXPECT_THROW(projector_from_splitting(partial, splitting_s, Side::left), std::domain_error);
}

TEST(Projectors, CounitFibre) {
  EXPECT_EQ(counit_fibre(build_e(0)).at(0, 0), QScalar(1));
  for (const AlgebraMatrix& m : {build_e(-1), build_f(-1)}) {
    const ScalarMatrix p = counit_fibre(m);
    EXPECT_EQ(p.at(0, 0), QScalar(1));
    EXPECT_EQ(p.at(0, 1), QScalar());
    EXPECT_EQ(p.at(1, 0), QScalar());
    EXPECT_EQ(p.at(1, 1), QScalar());
  }
}

TEST(ProjectorProperty, AllWindingsUpToSix) {
  for (int n = -6; n <= 6; ++n) {
    const AlgebraMatrix e = build_e(n), f = build_f(n);
    EXPECT_EQ(e * e, e) << n;
    EXPECT_EQ(f * f, f) << n;
    for (const AlgebraMatrix* m : {&e, &f})
      for (std::size_t r = 0; r < m->rows(); ++r)
        for (std::size_t c = 0; c < m->cols(); ++c) EXPECT_TRUE(is_coinvariant(m->at(r, c)));
    const RankOneFactors uv = rank_one_factor(n);
    EXPECT_EQ(outer_product(uv), e);
    EXPECT_EQ(inner_product(uv), unit_element());
    QScalar tr;
    for (std::size_t i = 0; i < e.rows(); ++i) tr += counit(e.at(i, i));
    EXPECT_EQ(tr, QScalar(1));
  }
}

TEST(ProjectorProperty, SplittingEquivalence) {
  for (int n = -4; n <= 4; ++n) {
    const auto gens = winding_generators(n);
    EXPECT_EQ(projector_from_splitting(gens, splitting_s, Side::left), build_e(n)) << n;
    EXPECT_EQ(projector_from_splitting(gens, splitting_s_check, Side::right), build_f(n)) << n;
  }
}

}  // namespace
}  // namespace slq
