#pragma once

// The trace tau^1 on A(S_q^2) and its pairing with projector matrices.
//   tau^1(zeta^n) = 1/(1 - q^{2n})  for n > 0,
//   tau^1 vanishes on 1 and on the (alpha beta)^m, (gamma delta)^m families, m >= 1.

#include <optional>
#include <vector>

#include "slq/algebra.hpp"
#include "slq/fibration.hpp"
#include "slq/projectors.hpp"
#include "slq/qscalar.hpp"

namespace slq {

QScalar tau1(const SphereElement& b);
/// Throws std::invalid_argument when x is not coinvariant.
QScalar tau1(const AlgebraElement& x);

struct PairingResult {
  int winding = 0;
  Side side = Side::left;
  QScalar value;
  std::optional<long> simplified_integer;
};

/// (tau^1 o Tr)(m). Throws std::invalid_argument on non-coinvariant entries.
QScalar pairing(const AlgebraMatrix& m);
PairingResult pairing(const AlgebraMatrix& m, int winding, Side side);

/// pairing(e_n) and pairing(f_n) for n_min <= n <= n_max, left before right.
/// Throws std::invalid_argument when n_min > n_max.
std::vector<PairingResult> chern_scan(int n_min, int n_max);

}  // namespace slq
