#pragma once

// Property suites behind `slq verify`. Each family takes explicit bounds;
// run_suite wires them to SuiteBounds.

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "slq/algebra.hpp"
#include "slq/report.hpp"

namespace slq {

struct SuiteBounds {
  int max_winding = 3;
  int max_degree = 4;
  std::uint64_t seed = 20240611;
  bool inject_fault = false;
};

/// relations, hopf, fibration, connection, projectors, chern, textio.
const std::vector<std::string>& suite_names();

/// Runs one named suite, or every suite for "all". Throws
/// std::invalid_argument for an unknown name.
VerificationReport run_suite(std::string_view name, const SuiteBounds& bounds);

/// All PBW monomials of degree <= max_degree, in basis order.
std::vector<PbwMonomial> pbw_monomials(int max_degree);

/// Seeded generators shared by the property checks.
class ElementGenerator {
 public:
  explicit ElementGenerator(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi);
  PbwMonomial monomial(int max_degree);
  QScalar scalar();
  /// Up to max_terms terms, each of degree <= max_degree.
  AlgebraElement element(int max_degree, int max_terms = 4);
  Word word(int max_length);
  /// Product of random sphere generators (alpha beta, beta gamma, gamma delta, 1).
  AlgebraElement sphere_element(int max_factors);

 private:
  std::mt19937_64 rng_;
};

// Relations and the product.
VerificationReport check_relations(int max_degree);
VerificationReport check_confluence(int samples, int max_length, std::uint64_t seed);
VerificationReport check_oracle_equivalence(int max_total_degree);
VerificationReport check_associativity(int samples, int max_degree, std::uint64_t seed);
VerificationReport check_appendix_products(int j_max);

// Hopf structure.
VerificationReport check_hopf_axioms(int max_degree);
VerificationReport check_hopf_morphisms(int max_degree, std::uint64_t seed);

// Fibration.
VerificationReport check_degree_formulas(int max_degree);
VerificationReport check_bigrading(int max_degree, std::uint64_t seed);
VerificationReport check_fibration_maps(int max_winding, int max_degree, std::uint64_t seed);

// Connection and splittings.
VerificationReport check_splittings(int max_winding, int max_degree);

// Projectors.
VerificationReport check_projectors(int max_winding, bool inject_fault);
VerificationReport check_rank_one(int max_winding);
VerificationReport check_counit_fibres(int max_winding);
VerificationReport check_splitting_projectors(int max_winding);
VerificationReport check_qbinomials(int n_max);

// Pairing.
VerificationReport check_chern_values(int identity_max);
VerificationReport check_chern_properties(int max_winding, std::uint64_t seed);

// Printing and parsing.
VerificationReport check_round_trip(int samples, int max_degree, int max_winding, std::uint64_t seed);

}  // namespace slq
