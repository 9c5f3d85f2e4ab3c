#pragma once

// The quantum principal Hopf fibration A(S_q^2) -> A(SL_q(2)) with the
// right coaction (id (x) pi) Delta of k[z, z^-1].
//
// A PBW monomial alpha^k beta^l gamma^m delta^s is bihomogeneous:
//   left degree  (exponent of z under (pi (x) id) Delta) = k + l - m - s
//   right degree (exponent of z under (id (x) pi) Delta) = k - l + m - s
// The winding space P_n is the right-degree -n component, so that
// Delta_R p = p (x) z^-n.

#include <compare>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "slq/algebra.hpp"
#include "slq/tensor.hpp"

namespace slq {

struct Bidegree {
  int left = 0;
  int right = 0;
  friend auto operator<=>(const Bidegree&, const Bidegree&) = default;
};

int left_degree(const PbwMonomial& x);
int right_degree(const PbwMonomial& x);
Bidegree bidegree(const PbwMonomial& x);

TensorAH coact_right(const AlgebraElement& x);
TensorHA coact_left(const AlgebraElement& x);

std::map<Bidegree, AlgebraElement> bidegree_decompose(const AlgebraElement& x);

/// The P_n-component of x.
AlgebraElement winding_component(const AlgebraElement& x, int n);
bool in_winding_space(const AlgebraElement& x, int n);

/// Module generators of P_n: alpha^{-n-k} gamma^k for n <= 0 and
/// beta^k delta^{n-k} for n >= 0, k = 0..|n|.
std::vector<AlgebraElement> winding_generators(int n);

/// An element certified to lie in A(S_q^2) (right degree 0 on every term).
class SphereElement {
 public:
  static std::optional<SphereElement> certify(const AlgebraElement& x);
  const AlgebraElement& element() const { return element_; }

 private:
  explicit SphereElement(AlgebraElement x) : element_(std::move(x)) {}
  AlgebraElement element_;
};

bool is_coinvariant(const AlgebraElement& x);
/// Coinvariance under the left coaction (pi (x) id) Delta.
bool is_left_coinvariant(const AlgebraElement& x);

/// Coordinates in the basis  zeta^n,  (alpha beta)^m zeta^n,  (gamma delta)^m zeta^n  (m >= 1).
struct SphereBasisExpansion {
  std::map<int, QScalar> zeta_part;
  std::map<std::pair<int, int>, QScalar> ab_part;  // (m, n)
  std::map<std::pair<int, int>, QScalar> cd_part;  // (m, n)

  AlgebraElement reconstruct() const;
  friend bool operator==(const SphereBasisExpansion&, const SphereBasisExpansion&) = default;
};

enum class SphereFamily { zeta, alpha_beta, gamma_delta };

/// Normal form of a sphere basis element; memoized.
const AlgebraElement& sphere_basis_element(SphereFamily family, int m, int n);

SphereBasisExpansion sphere_basis_expand(const SphereElement& b);

/// The algebra automorphism alpha->alpha, beta->gamma, gamma->beta, delta->delta.
AlgebraElement transpose_T(const AlgebraElement& x);

/// tau(h) = chi^-1(1 (x) h), lifted to A (x) A.
TensorAA translation_map(const HElement& h);

/// chi(x (x) y) = x y_(0) (x) y_(1).
TensorAH canonical_chi(const TensorAA& t);

}  // namespace slq
