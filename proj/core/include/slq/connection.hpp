#pragma once

// The q-monopole: the canonical strong connection on the Hopf fibration
// induced by the bicovariant splitting  i(z^n) = alpha^n,  i(z^-n) = delta^n
// of pi, together with the splittings of the multiplication map it
// determines. All one-forms are universal: Omega^1 P is the kernel of
// m: P (x) P -> P and dp = 1 (x) p - p (x) 1.

#include "slq/algebra.hpp"
#include "slq/report.hpp"
#include "slq/tensor.hpp"

namespace slq {

AlgebraElement splitting_i(const HElement& h);

/// omega(h) = S(i(h)_(1)) (x) i(h)_(2) - eps(h) 1 (x) 1
TensorAA connection_form(const HElement& h);

TensorAA universal_d(const AlgebraElement& p);

/// Pi^omega(dp) = p_(0) omega(p_(1))
TensorAA connection_projection(const AlgebraElement& p);

/// Fundamental vector field condition and right-degree-0 covariance of omega(z^n).
VerificationReport check_connection_axioms(int n_max);
/// i(h_(2))_(2) (x) h_(1) S pi(i(h_(2))_(1)) = i(h) (x) 1, plus left-leg
/// coinvariance of (id - Pi^omega)(d xi) on P_n generators.
VerificationReport check_strongness(int n_max);
/// (i (x) id) Delta = Delta_R i  and  (id (x) i) Delta = Delta_L i.
VerificationReport check_bicovariance(int n_max);

/// s(p) = p_(1) S(i(pi p_(2))_(1)) (x) i(pi p_(2))_(2); left B-linear, lands in B (x) P.
TensorAA splitting_s(const AlgebraElement& p);
/// s~(p) = i(pi p_(1))_(1) (x) S(i(pi p_(1))_(2)) p_(2); lands in P (x) left coinvariants.
TensorAA splitting_s_tilde(const AlgebraElement& p);
/// s^ = (T (x) T) s~ T; right B-linear, lands in P (x) B.
TensorAA splitting_s_check(const AlgebraElement& p);

/// (id - Pi^omega)(d xi) for xi in P_n. Throws std::invalid_argument when
/// xi is not homogeneous of winding n.
TensorAA covariant_derivative(const AlgebraElement& xi, int n);

}  // namespace slq
