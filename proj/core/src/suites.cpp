#include "slq/suites.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "slq/chern.hpp"
#include "slq/connection.hpp"
#include "slq/fibration.hpp"
#include "slq/hopf.hpp"
#include "slq/projectors.hpp"
#include "slq/rewriting.hpp"
#include "slq/textio.hpp"

namespace slq {

namespace {

std::string winding_range(int n_max) { return "|n| <= " + std::to_string(n_max); }
std::string degree_range(int d) { return "degree <= " + std::to_string(d); }

std::string both(const std::string& lhs, const std::string& rhs) { return "lhs = " + lhs + ", rhs = " + rhs; }

QScalar qp(int e) { return QScalar::q_power(e); }

TensorAA coproduct_of(const PbwMonomial& x) { return coproduct(x); }

bool left_legs_have_right_degree(const TensorAA& t, int d) {
  return std::all_of(t.terms().begin(), t.terms().end(),
                     [d](const auto& kv) { return right_degree(std::get<0>(kv.first)) == d; });
}

bool right_legs_have_right_degree(const TensorAA& t, int d) {
  return std::all_of(t.terms().begin(), t.terms().end(),
                     [d](const auto& kv) { return right_degree(std::get<1>(kv.first)) == d; });
}

bool right_legs_left_coinvariant(const TensorAA& t) {
  return std::all_of(t.terms().begin(), t.terms().end(),
                     [](const auto& kv) { return left_degree(std::get<1>(kv.first)) == 0; });
}

std::string word_text(const Word& w) {
  static const char* names = "abcd";
  std::string out;
  for (Generator g : w) out += names[static_cast<int>(g)];
  return out.empty() ? "(empty)" : out;
}

// Basis elements of A(S_q^2) in its three families, up to a total degree.
std::vector<PbwMonomial> coinvariant_monomials(int max_degree) {
  std::vector<PbwMonomial> out;
  for (const auto& x : pbw_monomials(max_degree))
    if (right_degree(x) == 0) out.push_back(x);
  return out;
}

std::string matrix_text(const AlgebraMatrix& m) {
  std::string out = "[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out += r ? "; " : "";
    for (std::size_t c = 0; c < m.cols(); ++c) out += (c ? ", " : "") + print_algebra(m.at(r, c));
  }
  return out + "]";
}

AlgebraMatrix perturbed(AlgebraMatrix m) {
  m.at(0, 0) += unit_element();
  return m;
}

}  // namespace

// ---------------------------------------------------------------- generators

int ElementGenerator::uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

PbwMonomial ElementGenerator::monomial(int max_degree) {
  const int degree = uniform(0, max_degree);
  int exps[4] = {0, 0, 0, 0};
  // Either alpha or delta is allowed, never both.
  const bool use_alpha = uniform(0, 1) == 0;
  for (int i = 0; i < degree; ++i) {
    int g = uniform(0, 2);
    if (g == 0) g = use_alpha ? 0 : 3;
    ++exps[g];
  }
  return PbwMonomial{exps[0], exps[1], exps[2], exps[3]};
}

QScalar ElementGenerator::scalar() {
  int c = uniform(-3, 3);
  if (c == 0) c = 1;
  QScalar out = QScalar(c) * qp(uniform(-2, 2));
  switch (uniform(0, 5)) {
    case 0: out += qp(uniform(-2, 3)); break;
    case 1: out /= QScalar(LaurentQ(1) - LaurentQ::q_power(2 * uniform(1, 2))); break;
    case 2: out /= QScalar(uniform(2, 5)); break;
    default: break;
  }
  return out;
}

AlgebraElement ElementGenerator::element(int max_degree, int max_terms) {
  AlgebraElement out;
  const int terms = uniform(1, max_terms);
  for (int i = 0; i < terms; ++i) out.add_term(monomial(max_degree), scalar());
  return out;
}

Word ElementGenerator::word(int max_length) {
  Word w(static_cast<std::size_t>(uniform(0, max_length)));
  for (auto& g : w) g = static_cast<Generator>(uniform(0, 3));
  return w;
}

AlgebraElement ElementGenerator::sphere_element(int max_factors) {
  static const std::array<AlgebraElement, 4> factors{alpha() * beta(), beta() * gamma(), gamma() * delta(),
                                                     unit_element()};
  AlgebraElement out = unit_element(scalar());
  const int count = uniform(0, max_factors);
  for (int i = 0; i < count; ++i) out = out * factors[static_cast<std::size_t>(uniform(0, 3))];
  return out;
}

std::vector<PbwMonomial> pbw_monomials(int max_degree) {
  std::vector<PbwMonomial> out;
  for (int k = 0; k <= max_degree; ++k)
    for (int l = 0; k + l <= max_degree; ++l)
      for (int m = 0; k + l + m <= max_degree; ++m)
        for (int s = 0; k + l + m + s <= max_degree; ++s)
          if (k == 0 || s == 0) out.push_back({k, l, m, s});
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------- relations

VerificationReport check_relations(int max_degree) {
  VerificationReport report("relations");
  const AlgebraElement a = alpha(), b = beta(), c = gamma(), d = delta();
  struct Identity {
    const char* name;
    AlgebraElement lhs, rhs;
  };
  const Identity identities[] = {
      {"alpha beta = q^-1 beta alpha", a * b, qp(-1) * (b * a)},
      {"alpha gamma = q^-1 gamma alpha", a * c, qp(-1) * (c * a)},
      {"beta delta = q^-1 delta beta", b * d, qp(-1) * (d * b)},
      {"gamma delta = q^-1 delta gamma", c * d, qp(-1) * (d * c)},
      {"beta gamma = gamma beta", b * c, c * b},
      {"alpha delta - delta alpha = (q^-1 - q) beta gamma", a * d - d * a,
       (qp(-1) - qp(1)) * (b * c)},
      {"alpha delta - q^-1 beta gamma = 1", a * d - qp(-1) * (b * c), unit_element()},
      {"delta alpha - q beta gamma = 1", d * a - qp(1) * (b * c), unit_element()},
  };
  for (const auto& [name, lhs, rhs] : identities) {
    CheckAccumulator check(name, "generators");
    check.expect(lhs == rhs, [&] { return both(print_algebra(lhs), print_algebra(rhs)); });
    // Same identity through the rewriting engine.
    auto rewritten = [](const AlgebraElement& x) {
      AlgebraElement out;
      for (const auto& [mono, coef] : x.terms()) out += coef * rewrite_word(to_word(mono), RewriteStrategy::leftmost);
      return out;
    };
    check.expect(rewritten(lhs) == rewritten(rhs), [&] { return std::string("rewriting engine disagrees"); });
    check.commit(report);
  }
  CheckAccumulator fixpoints("PBW monomials are rewriting fixpoints", degree_range(max_degree));
  for (const auto& x : pbw_monomials(max_degree)) {
    const AlgebraElement nf = rewrite_word(to_word(x), RewriteStrategy::leftmost);
    fixpoints.expect(nf == AlgebraElement::basis(x) && normal_form(to_word(x)) == nf,
                     [&] { return print_monomial(x) + " -> " + print_algebra(nf); });
  }
  fixpoints.commit(report);
  return report;
}

VerificationReport check_confluence(int samples, int max_length, std::uint64_t seed) {
  VerificationReport report("relations");
  ElementGenerator gen(seed);
  CheckAccumulator check("normal form is strategy independent",
                         "random words of length <= " + std::to_string(max_length));
  for (int i = 0; i < samples; ++i) {
    const Word w = gen.word(max_length);
    const AlgebraElement left = rewrite_word(w, RewriteStrategy::leftmost);
    const AlgebraElement right = rewrite_word(w, RewriteStrategy::rightmost);
    const AlgebraElement structured = normal_form(w);
    check.expect(left == right && left == structured, [&] {
      return word_text(w) + ": leftmost = " + print_algebra(left) + ", rightmost = " + print_algebra(right) +
             ", structured = " + print_algebra(structured);
    });
  }
  check.commit(report);
  return report;
}

VerificationReport check_oracle_equivalence(int max_total_degree) {
  VerificationReport report("relations");
  CheckAccumulator check("structured product agrees with word rewriting",
                         "monomial pairs, total " + degree_range(max_total_degree));
  const auto monos = pbw_monomials(max_total_degree);
  for (const auto& x : monos) {
    for (const auto& y : monos) {
      if (x.degree() + y.degree() > max_total_degree) continue;
      const AlgebraElement fast = multiply_monomials(x, y);
      const AlgebraElement slow = rewrite_product(x, y);
      check.expect(fast == slow, [&] {
        return print_monomial(x) + " * " + print_monomial(y) + ": " + both(print_algebra(fast), print_algebra(slow));
      });
    }
  }
  check.commit(report);
  return report;
}

VerificationReport check_associativity(int samples, int max_degree, std::uint64_t seed) {
  VerificationReport report("relations");
  ElementGenerator gen(seed);
  CheckAccumulator check("(xy)z = x(yz)", "random triples, " + degree_range(max_degree));
  for (int i = 0; i < samples; ++i) {
    const AlgebraElement x = gen.element(max_degree, 3), y = gen.element(max_degree, 3), z = gen.element(max_degree, 3);
    const AlgebraElement lhs = (x * y) * z, rhs = x * (y * z);
    check.expect(lhs == rhs, [&] {
      return "x = " + print_algebra(x) + ", y = " + print_algebra(y) + ", z = " + print_algebra(z);
    });
  }
  check.commit(report);
  CheckAccumulator distributive("x(y + z) = xy + xz", "random triples, " + degree_range(max_degree));
  for (int i = 0; i < samples; ++i) {
    const AlgebraElement x = gen.element(max_degree, 3), y = gen.element(max_degree, 3), z = gen.element(max_degree, 3);
    distributive.expect(x * (y + z) == x * y + x * z,
                        [&] { return "x = " + print_algebra(x) + ", y = " + print_algebra(y); });
  }
  distributive.commit(report);
  return report;
}

VerificationReport check_appendix_products(int j_max) {
  VerificationReport report("relations");
  CheckAccumulator ad("alpha^j delta^j = prod_{i=1..j} (1 - q^{-2(i-1)} zeta)", "j <= " + std::to_string(j_max));
  CheckAccumulator da("delta^j alpha^j = prod_{i=1..j} (1 - q^{2i} zeta)", "j <= " + std::to_string(j_max));
  for (int j = 1; j <= j_max; ++j) {
    AlgebraElement rhs_ad = unit_element(), rhs_da = unit_element();
    for (int i = 1; i <= j; ++i) {
      rhs_ad = rhs_ad * (unit_element() - qp(-2 * (i - 1)) * zeta());
      rhs_da = rhs_da * (unit_element() - qp(2 * i) * zeta());
    }
    const AlgebraElement lhs_ad = monomial_element(j, 0, 0, 0) * monomial_element(0, 0, 0, j);
    const AlgebraElement lhs_da = monomial_element(0, 0, 0, j) * monomial_element(j, 0, 0, 0);
    ad.expect(lhs_ad == rhs_ad, [&] {
      return "j = " + std::to_string(j) + ": " + both(print_algebra(lhs_ad), print_algebra(rhs_ad));
    });
    da.expect(lhs_da == rhs_da, [&] {
      return "j = " + std::to_string(j) + ": " + both(print_algebra(lhs_da), print_algebra(rhs_da));
    });
  }
  ad.commit(report);
  da.commit(report);
  return report;
}

// ---------------------------------------------------------------- hopf

VerificationReport check_hopf_axioms(int max_degree) {
  VerificationReport report("hopf");
  const std::string range = "PBW monomials, " + degree_range(max_degree);
  CheckAccumulator coassoc("(Delta (x) id) Delta = (id (x) Delta) Delta", range);
  CheckAccumulator counit_ax("(eps (x) id) Delta = id = (id (x) eps) Delta", range);
  CheckAccumulator antipode_ax("m (S (x) id) Delta = eta eps = m (id (x) S) Delta", range);
  for (const auto& x : pbw_monomials(max_degree)) {
    const TensorAA& dx = coproduct(x);
    const auto lhs = expand_left<LegA, LegA>(dx, coproduct_of);
    const auto rhs = expand_right<LegA, LegA>(dx, coproduct_of);
    coassoc.expect(lhs == rhs, [&] { return print_monomial(x); });

    const AlgebraElement basis = AlgebraElement::basis(x);
    const AlgebraElement l = apply_leg<Leg::left>(dx, Counit{});
    const AlgebraElement r = apply_leg<Leg::right>(dx, Counit{});
    counit_ax.expect(l == basis && r == basis, [&] {
      return print_monomial(x) + ": left = " + print_algebra(l) + ", right = " + print_algebra(r);
    });

    const AlgebraElement sl = multiply_legs(apply_leg<Leg::left>(dx, Antipode{}));
    const AlgebraElement sr = multiply_legs(apply_leg<Leg::right>(dx, Antipode{}));
    const AlgebraElement expected = unit_element(counit(x));
    antipode_ax.expect(sl == expected && sr == expected, [&] {
      return print_monomial(x) + ": m(S (x) id) = " + print_algebra(sl) + ", m(id (x) S) = " + print_algebra(sr);
    });
  }
  coassoc.commit(report);
  counit_ax.commit(report);
  antipode_ax.commit(report);
  return report;
}

VerificationReport check_hopf_morphisms(int max_degree, std::uint64_t seed) {
  VerificationReport report("hopf");
  ElementGenerator gen(seed);
  const int d = std::max(1, std::min(max_degree, 3));
  CheckAccumulator delta_mult("Delta(xy) = Delta(x) Delta(y)", "random pairs, " + degree_range(d));
  CheckAccumulator eps_mult("eps(xy) = eps(x) eps(y)", "random pairs, " + degree_range(d));
  CheckAccumulator anti("S(xy) = S(y) S(x)", "random pairs, " + degree_range(d));
  CheckAccumulator pi_mult("pi(xy) = pi(x) pi(y)", "random pairs, " + degree_range(d));
  for (int i = 0; i < 20; ++i) {
    const AlgebraElement x = gen.element(d, 3), y = gen.element(d, 3);
    const AlgebraElement xy = x * y;
    delta_mult.expect(coproduct(xy) == coproduct(x) * coproduct(y),
                      [&] { return "x = " + print_algebra(x) + ", y = " + print_algebra(y); });
    eps_mult.expect(counit(xy) == counit(x) * counit(y),
                    [&] { return "x = " + print_algebra(x) + ", y = " + print_algebra(y); });
    const AlgebraElement lhs = antipode(xy), rhs = antipode(y) * antipode(x);
    anti.expect(lhs == rhs, [&] {
      return "x = " + print_algebra(x) + ", y = " + print_algebra(y) + ": " +
             both(print_algebra(lhs), print_algebra(rhs));
    });
    pi_mult.expect(project_pi(xy) == project_pi(x) * project_pi(y),
                   [&] { return "x = " + print_algebra(x) + ", y = " + print_algebra(y); });
  }
  delta_mult.commit(report);
  eps_mult.commit(report);
  anti.commit(report);
  pi_mult.commit(report);

  CheckAccumulator pi_hopf("(pi (x) pi) Delta = Delta_H pi, eps_H pi = eps", degree_range(max_degree));
  for (const auto& x : pbw_monomials(max_degree)) {
    const TensorHH lhs = project_both(coproduct(x));
    const HElement px = project_pi(x);
    const TensorHH rhs = h_coproduct(px);
    pi_hopf.expect(lhs == rhs && h_counit(px) == counit(x),
                   [&] { return print_monomial(x) + ": " + both(print_tensor(lhs), print_tensor(rhs)); });
  }
  pi_hopf.commit(report);
  return report;
}

// ---------------------------------------------------------------- fibration

VerificationReport check_degree_formulas(int max_degree) {
  VerificationReport report("fibration");
  CheckAccumulator right("Delta_R x = x (x) z^{k-l+m-s}", degree_range(max_degree));
  CheckAccumulator left("Delta_L x = z^{k+l-m-s} (x) x", degree_range(max_degree));
  for (const auto& x : pbw_monomials(max_degree)) {
    const TensorAA& dx = coproduct(x);
    const TensorAH coact_r = apply_leg<Leg::right>(dx, Pi{});
    const TensorHA coact_l = apply_leg<Leg::left>(dx, Pi{});
    const AlgebraElement basis = AlgebraElement::basis(x);
    const TensorAH expect_r = TensorAH::pure(basis, z_power(x.k - x.l + x.m - x.s));
    const TensorHA expect_l = TensorHA::pure(z_power(x.k + x.l - x.m - x.s), basis);
    right.expect(coact_r == expect_r && coact_right(basis) == expect_r,
                 [&] { return print_monomial(x) + ": " + print_tensor(coact_r); });
    left.expect(coact_l == expect_l && coact_left(basis) == expect_l,
                [&] { return print_monomial(x) + ": " + print_tensor(coact_l); });
  }
  right.commit(report);
  left.commit(report);
  return report;
}

VerificationReport check_bigrading(int max_degree, std::uint64_t seed) {
  VerificationReport report("fibration");
  ElementGenerator gen(seed);
  CheckAccumulator mult("A[m,n] A[m',n'] in A[m+m',n+n']", "homogeneous samples, " + degree_range(max_degree));
  CheckAccumulator complete("sum of bidegree components = x", "random elements, " + degree_range(max_degree));
  for (int i = 0; i < 60; ++i) {
    const PbwMonomial mx = gen.monomial(max_degree), my = gen.monomial(max_degree);
    // beta gamma has bidegree (0, 0), so this keeps x homogeneous.
    AlgebraElement x = AlgebraElement::basis(mx, gen.scalar());
    AlgebraElement y = AlgebraElement::basis(my, gen.scalar());
    x += gen.scalar() * (AlgebraElement::basis(mx) * (beta() * gamma()));
    const auto dx = bidegree_decompose(x), dy = bidegree_decompose(y);
    if (dx.size() != 1 || dy.size() != 1) continue;
    const Bidegree bx = dx.begin()->first, by = dy.begin()->first;
    const auto dxy = bidegree_decompose(x * y);
    const bool ok = (x * y).is_zero() ||
                    (dxy.size() == 1 && dxy.begin()->first == Bidegree{bx.left + by.left, bx.right + by.right});
    mult.expect(ok, [&] { return "x = " + print_algebra(x) + ", y = " + print_algebra(y); });

    const AlgebraElement z = gen.element(max_degree, 5);
    AlgebraElement sum;
    bool homogeneous = true;
    for (const auto& [bd, part] : bidegree_decompose(z)) {
      sum += part;
      for (const auto& [mono, c] : part.terms()) homogeneous = homogeneous && bidegree(mono) == bd;
    }
    complete.expect(sum == z && homogeneous, [&] { return print_algebra(z); });
  }
  mult.commit(report);
  complete.commit(report);
  return report;
}

VerificationReport check_fibration_maps(int max_winding, int max_degree, std::uint64_t seed) {
  VerificationReport report("fibration");
  (void)seed;
  CheckAccumulator chi_tau("chi(tau(z^n)) = 1 (x) z^n", winding_range(max_winding));
  for (int n = -max_winding; n <= max_winding; ++n) {
    const TensorAH lhs = canonical_chi(translation_map(z_power(n)));
    const TensorAH rhs = TensorAH::pure(unit_element(), z_power(n));
    chi_tau.expect(lhs == rhs, [&] { return "n = " + std::to_string(n) + ": " + print_tensor(lhs); });
  }
  chi_tau.commit(report);

  const int td = max_degree + 1;
  CheckAccumulator involution("T o T = id", degree_range(td));
  CheckAccumulator sphere_to_left("T maps A(S_q^2) into left coinvariants", degree_range(2 * td));
  CheckAccumulator t_algebra("T(xy) = T(x) T(y)", degree_range(td));
  const auto monos = pbw_monomials(td);
  for (const auto& x : monos) {
    const AlgebraElement e = AlgebraElement::basis(x);
    involution.expect(transpose_T(transpose_T(e)) == e, [&] { return print_monomial(x); });
  }
  for (const auto& x : coinvariant_monomials(2 * td)) {
    const AlgebraElement t = transpose_T(AlgebraElement::basis(x));
    sphere_to_left.expect(is_left_coinvariant(t), [&] { return print_monomial(x) + " -> " + print_algebra(t); });
  }
  for (std::size_t i = 0; i < monos.size(); i += 7) {
    for (std::size_t j = 0; j < monos.size(); j += 5) {
      if (monos[i].degree() + monos[j].degree() > td) continue;
      const AlgebraElement x = AlgebraElement::basis(monos[i]), y = AlgebraElement::basis(monos[j]);
      t_algebra.expect(transpose_T(x * y) == transpose_T(x) * transpose_T(y),
                       [&] { return print_monomial(monos[i]) + " * " + print_monomial(monos[j]); });
    }
  }
  involution.commit(report);
  sphere_to_left.commit(report);
  t_algebra.commit(report);

  CheckAccumulator ideal("beta = (-q^-1 beta gamma) beta + (q alpha beta) delta, "
                         "gamma = (-q beta gamma) gamma + (q^-1 delta gamma) alpha",
                         "generators");
  const AlgebraElement bg = beta() * gamma();
  const AlgebraElement b_rhs = (qp(-1) * -bg) * beta() + (qp(1) * (alpha() * beta())) * delta();
  const AlgebraElement c_rhs = (qp(1) * -bg) * gamma() + (qp(-1) * (delta() * gamma())) * alpha();
  ideal.expect(b_rhs == beta(), [&] { return "beta: rhs = " + print_algebra(b_rhs); });
  ideal.expect(c_rhs == gamma(), [&] { return "gamma: rhs = " + print_algebra(c_rhs); });
  ideal.commit(report);

  CheckAccumulator round("sphere basis expansion reconstructs its input", "coinvariant monomials, degree <= 8");
  for (const auto& x : coinvariant_monomials(8)) {
    const auto b = SphereElement::certify(AlgebraElement::basis(x));
    const bool ok = b && sphere_basis_expand(*b).reconstruct() == b->element();
    round.expect(ok, [&] { return print_monomial(x); });
  }
  round.commit(report);
  return report;
}

// ---------------------------------------------------------------- connection

VerificationReport check_splittings(int max_winding, int max_degree) {
  VerificationReport report("connection");
  const int d = std::max(max_degree, 1) + 1;
  CheckAccumulator m_s("m o s = id", degree_range(d));
  CheckAccumulator m_st("m o s~ = id", degree_range(d));
  CheckAccumulator m_sc("m o s^ = id", degree_range(d));
  CheckAccumulator st_image("s~ right legs are left coinvariant", degree_range(d));
  for (const auto& x : pbw_monomials(d)) {
    const AlgebraElement e = AlgebraElement::basis(x);
    const TensorAA s = splitting_s(e), st = splitting_s_tilde(e), sc = splitting_s_check(e);
    m_s.expect(multiply_legs(s) == e, [&] { return print_monomial(x) + ": s = " + print_tensor(s); });
    m_st.expect(multiply_legs(st) == e, [&] { return print_monomial(x) + ": s~ = " + print_tensor(st); });
    m_sc.expect(multiply_legs(sc) == e, [&] { return print_monomial(x) + ": s^ = " + print_tensor(sc); });
    st_image.expect(right_legs_left_coinvariant(st), [&] { return print_monomial(x) + ": " + print_tensor(st); });
  }
  m_s.commit(report);
  m_st.commit(report);
  m_sc.commit(report);
  st_image.commit(report);

  const AlgebraElement samples_b[] = {beta() * gamma(), alpha() * beta(), gamma() * delta()};
  const AlgebraElement samples_p[] = {alpha(), beta(), gamma(), delta()};
  CheckAccumulator left_lin("s(b p) = b s(p)", "b in {bc, ab, cd}, p a generator");
  CheckAccumulator right_lin("s^(p b) = s^(p) b", "b in {bc, ab, cd}, p a generator");
  for (const auto& b : samples_b) {
    for (const auto& p : samples_p) {
      left_lin.expect(splitting_s(b * p) == left_multiply(b, splitting_s(p)),
                      [&] { return "b = " + print_algebra(b) + ", p = " + print_algebra(p); });
      right_lin.expect(splitting_s_check(p * b) == right_multiply(splitting_s_check(p), b),
                       [&] { return "b = " + print_algebra(b) + ", p = " + print_algebra(p); });
    }
  }
  left_lin.commit(report);
  right_lin.commit(report);

  CheckAccumulator sector_s("s(P_n) in B (x) P_n", winding_range(max_winding));
  CheckAccumulator sector_sc("s^(P_n) in P_n (x) B", winding_range(max_winding));
  CheckAccumulator grass("d xi - Pi(d xi) = 1 (x) xi - s(xi)", winding_range(max_winding));
  for (int n = -max_winding; n <= max_winding; ++n) {
    for (const auto& xi : winding_generators(n)) {
      const TensorAA s = splitting_s(xi), sc = splitting_s_check(xi);
      sector_s.expect(left_legs_have_right_degree(s, 0) && right_legs_have_right_degree(s, -n),
                      [&] { return "xi = " + print_algebra(xi) + ": " + print_tensor(s); });
      sector_sc.expect(left_legs_have_right_degree(sc, -n) && right_legs_have_right_degree(sc, 0),
                       [&] { return "xi = " + print_algebra(xi) + ": " + print_tensor(sc); });
      const TensorAA lhs = covariant_derivative(xi, n);
      const TensorAA rhs = TensorAA::pure(unit_element(), xi) - s;
      grass.expect(lhs == rhs, [&] { return "xi = " + print_algebra(xi) + ": " + both(print_tensor(lhs), print_tensor(rhs)); });
    }
  }
  sector_s.commit(report);
  sector_sc.commit(report);
  grass.commit(report);

  CheckAccumulator leibniz("nabla(b xi) = b nabla(xi) + db xi", "b = bc, xi in {c, d}");
  const AlgebraElement b = beta() * gamma();
  for (const auto& [xi, n] : {std::pair{gamma(), -1}, std::pair{delta(), 1}}) {
    const TensorAA lhs = covariant_derivative(b * xi, n);
    const TensorAA rhs = left_multiply(b, covariant_derivative(xi, n)) + right_multiply(universal_d(b), xi);
    leibniz.expect(lhs == rhs, [&] { return "xi = " + print_algebra(xi) + ": " + both(print_tensor(lhs), print_tensor(rhs)); });
  }
  leibniz.commit(report);
  return report;
}

// ---------------------------------------------------------------- projectors

VerificationReport check_projectors(int max_winding, bool inject_fault) {
  VerificationReport report("projectors");
  for (int n = -max_winding; n <= max_winding; ++n) {
    const AlgebraMatrix e = inject_fault ? perturbed(build_e(n)) : build_e(n);
    const AlgebraMatrix f = build_f(n);
    const std::string en = "e_" + std::to_string(n), fn = "f_" + std::to_string(n);
    report.merge(verify_idempotent(e, en));
    report.merge(verify_idempotent(f, fn));
    report.merge(verify_coinvariant_entries(e, en));
    report.merge(verify_coinvariant_entries(f, fn));
  }
  return report;
}

VerificationReport check_rank_one(int max_winding) {
  VerificationReport report("projectors");
  CheckAccumulator outer("e_n = u v^T", winding_range(max_winding));
  CheckAccumulator inner("v^T u = 1", winding_range(max_winding));
  for (int n = -max_winding; n <= max_winding; ++n) {
    const RankOneFactors f = rank_one_factor(n);
    outer.expect(outer_product(f) == build_e(n), [&] { return "n = " + std::to_string(n); });
    const AlgebraElement vu = inner_product(f);
    inner.expect(vu == unit_element(), [&] { return "n = " + std::to_string(n) + ": v^T u = " + print_algebra(vu); });
  }
  outer.commit(report);
  inner.commit(report);
  return report;
}

VerificationReport check_counit_fibres(int max_winding) {
  VerificationReport report("projectors");
  CheckAccumulator check("eps(e_n), eps(f_n) are idempotents of trace 1", winding_range(max_winding));
  for (int n = -max_winding; n <= max_winding; ++n) {
    for (const AlgebraMatrix& m : {build_e(n), build_f(n)}) {
      const ScalarMatrix p = counit_fibre(m);
      bool idempotent = true;
      QScalar tr;
      for (std::size_t r = 0; r < p.rows(); ++r) {
        tr += p.at(r, r);
        for (std::size_t c = 0; c < p.cols(); ++c) {
          QScalar sum;
          for (std::size_t i = 0; i < p.cols(); ++i) sum += p.at(r, i) * p.at(i, c);
          idempotent = idempotent && sum == p.at(r, c) && p.at(r, c).as_constant().has_value();
        }
      }
      check.expect(idempotent && tr == QScalar(1), [&] { return "n = " + std::to_string(n); });
    }
  }
  check.commit(report);
  return report;
}

VerificationReport check_splitting_projectors(int max_winding) {
  VerificationReport report("projectors");
  CheckAccumulator left("projector read off s equals e_n", winding_range(max_winding));
  CheckAccumulator right("projector read off s^ equals f_n", winding_range(max_winding));
  for (int n = -max_winding; n <= max_winding; ++n) {
    const auto gens = winding_generators(n);
    const AlgebraMatrix e = projector_from_splitting(gens, splitting_s, Side::left);
    const AlgebraMatrix f = projector_from_splitting(gens, splitting_s_check, Side::right);
    left.expect(e == build_e(n), [&] { return "n = " + std::to_string(n) + ": " + matrix_text(e); });
    right.expect(f == build_f(n), [&] { return "n = " + std::to_string(n) + ": " + matrix_text(f); });
  }
  left.commit(report);
  right.commit(report);
  return report;
}

VerificationReport check_qbinomials(int n_max) {
  VerificationReport report("projectors");
  CheckAccumulator check("q-Pascal recurrence agrees with the product formula", "n <= " + std::to_string(n_max));
  // [n k] = prod_{i=1..k} (1 - q^{2(n-k+i)}) / (1 - q^{2i})
  for (int n = 0; n <= n_max; ++n) {
    for (int k = 0; k <= n; ++k) {
      QScalar product(1);
      for (int i = 1; i <= k; ++i)
        product *= QScalar::fraction(LaurentQ(1) - LaurentQ::q_power(2 * (n - k + i)),
                                     LaurentQ(1) - LaurentQ::q_power(2 * i));
      check.expect(QScalar(qbinom(n, k)) == product, [&] {
        return "n = " + std::to_string(n) + ", k = " + std::to_string(k);
      });
    }
  }
  check.commit(report);
  return report;
}

// ---------------------------------------------------------------- chern

VerificationReport check_chern_values(int identity_max) {
  VerificationReport report("chern");
  CheckAccumulator values("(tau1 o Tr)(e_-1) = -1 and (tau1 o Tr)(f_-1) = 1", "n = -1");
  const QScalar pe = pairing(build_e(-1)), pf = pairing(build_f(-1));
  values.expect(pe == QScalar(-1) && pf == QScalar(1),
                [&] { return "e: " + print_scalar(pe) + ", f: " + print_scalar(pf); });
  values.commit(report);
  CheckAccumulator free("pairing of I_k vanishes", "k <= " + std::to_string(identity_max));
  for (int k = 1; k <= identity_max; ++k) {
    const QScalar v = pairing(identity_matrix(static_cast<std::size_t>(k)));
    free.expect(v.is_zero(), [&] { return "k = " + std::to_string(k) + ": " + print_scalar(v); });
  }
  free.commit(report);
  CheckAccumulator witness("pairing(e_-1) differs from every free module", "k <= " + std::to_string(identity_max));
  witness.expect(!pe.is_zero(), [&] { return "pairing(e_-1) = 0"; });
  witness.commit(report);
  return report;
}

VerificationReport check_chern_properties(int max_winding, std::uint64_t seed) {
  VerificationReport report("chern");
  const auto rows = chern_scan(-max_winding, max_winding);
  std::map<std::pair<int, Side>, PairingResult> table;
  for (const auto& r : rows) table[{r.winding, r.side}] = r;
  CheckAccumulator integral("pairing values are q-independent integers", winding_range(max_winding));
  CheckAccumulator anti_side("pairing(e_n) = -pairing(f_n)", winding_range(max_winding));
  CheckAccumulator anti_n("pairing(e_n) = -pairing(e_-n)", winding_range(max_winding));
  for (const auto& r : rows)
    integral.expect(r.simplified_integer.has_value(), [&] {
      return "n = " + std::to_string(r.winding) + (r.side == Side::left ? " left: " : " right: ") + print_scalar(r.value);
    });
  for (int n = -max_winding; n <= max_winding; ++n) {
    const QScalar e = table[{n, Side::left}].value, f = table[{n, Side::right}].value;
    const QScalar em = table[{-n, Side::left}].value;
    anti_side.expect(e == -f, [&] { return "n = " + std::to_string(n) + ": " + print_scalar(e) + ", " + print_scalar(f); });
    anti_n.expect(e == -em, [&] { return "n = " + std::to_string(n) + ": " + print_scalar(e) + ", " + print_scalar(em); });
  }
  integral.commit(report);
  anti_side.commit(report);
  anti_n.commit(report);

  ElementGenerator gen(seed);
  CheckAccumulator well_defined("tau1 does not depend on how a product is formed", "10 random sphere products");
  for (int i = 0; i < 10; ++i) {
    const AlgebraElement x = gen.sphere_element(2), y = gen.sphere_element(2), z = gen.sphere_element(2);
    const QScalar a = tau1((x * y) * z), b = tau1(x * (y * z));
    const auto sx = SphereElement::certify(x * y * z);
    const QScalar c = tau1(sphere_basis_expand(*sx).reconstruct());
    well_defined.expect(a == b && b == c, [&] { return "x = " + print_algebra(x) + ", y = " + print_algebra(y); });
  }
  well_defined.commit(report);
  return report;
}

// ---------------------------------------------------------------- textio

VerificationReport check_round_trip(int samples, int max_degree, int max_winding, std::uint64_t seed) {
  VerificationReport report("textio");
  ElementGenerator gen(seed);
  CheckAccumulator random("parse(print(x)) = x", std::to_string(samples) + " random elements, " + degree_range(max_degree));
  for (int i = 0; i < samples; ++i) {
    const AlgebraElement x = gen.element(max_degree, 5);
    const std::string text = print_algebra(x);
    random.expect(parse_algebra(text) == x, [&] { return text; });
  }
  random.commit(report);
  CheckAccumulator entries("parse(print(x)) = x on projector entries", winding_range(max_winding));
  for (int n = -max_winding; n <= max_winding; ++n) {
    for (const AlgebraMatrix& m : {build_e(n), build_f(n)}) {
      for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
          const std::string text = print_algebra(m.at(r, c));
          entries.expect(parse_algebra(text) == m.at(r, c), [&] { return text; });
        }
      }
    }
  }
  entries.commit(report);
  return report;
}

// ---------------------------------------------------------------- driver

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"relations", "hopf", "fibration", "connection",
                                              "projectors", "chern", "textio"};
  return names;
}

VerificationReport run_suite(std::string_view name, const SuiteBounds& bounds) {
  const int w = bounds.max_winding;
  const int d = bounds.max_degree;
  const std::uint64_t seed = bounds.seed;
  if (name == "all") {
    VerificationReport all("all");
    for (const auto& n : suite_names()) all.merge(run_suite(n, bounds));
    return all;
  }
  VerificationReport report{std::string(name)};
  if (name == "relations") {
    report.merge(check_relations(d));
    report.merge(check_confluence(100 * d, 2 * d, seed));
    report.merge(check_oracle_equivalence(d + 1));
    report.merge(check_associativity(10 * d, d, seed));
    report.merge(check_appendix_products(2 * d));
  } else if (name == "hopf") {
    report.merge(check_hopf_axioms(d));
    report.merge(check_hopf_morphisms(d, seed));
  } else if (name == "fibration") {
    report.merge(check_degree_formulas(d + 2));
    report.merge(check_bigrading(d, seed));
    report.merge(check_fibration_maps(w, d, seed));
  } else if (name == "connection") {
    report.merge(check_connection_axioms(w));
    report.merge(check_strongness(w));
    report.merge(check_bicovariance(w));
    report.merge(check_splittings(w, d));
  } else if (name == "projectors") {
    report.merge(check_projectors(w, bounds.inject_fault));
    report.merge(check_rank_one(w));
    report.merge(check_counit_fibres(w));
    report.merge(check_splitting_projectors(std::min(w, 4)));
    report.merge(check_qbinomials(10));
  } else if (name == "chern") {
    report.merge(check_chern_values(6));
    report.merge(check_chern_properties(w, seed));
  } else if (name == "textio") {
    report.merge(check_round_trip(20 * d, d, std::min(w, 4), seed));
  } else {
    throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
  }
  return report;
}

}  // namespace slq
