#pragma once

// Hopf structure of A(SL_q(2)) and of k[z, z^-1], and the Hopf surjection
// pi: A(SL_q(2)) -> k[z, z^-1] killing beta and gamma.

#include <type_traits>

#include "slq/algebra.hpp"
#include "slq/tensor.hpp"

namespace slq {

/// Delta on a PBW monomial; memoized, safe for concurrent use.
const TensorAA& coproduct(const PbwMonomial& x);
TensorAA coproduct(const AlgebraElement& x);

QScalar counit(const PbwMonomial& x);
QScalar counit(const AlgebraElement& x);

/// S on a PBW monomial; memoized, safe for concurrent use.
const AlgebraElement& antipode(const PbwMonomial& x);
AlgebraElement antipode(const AlgebraElement& x);

HElement project_pi(const PbwMonomial& x);
HElement project_pi(const AlgebraElement& x);

TensorHH h_coproduct(const HElement& h);
QScalar h_counit(const HElement& h);
HElement h_antipode(const HElement& h);

struct HHopfValues {
  TensorHH coproduct;
  QScalar counit;
  HElement antipode;
};
HHopfValues h_hopf_ops(const HElement& h);

// Leg-wise application of the structure maps. Only the combinations that
// make sense for the leg's algebra are provided; anything else fails to
// compile.
enum class Leg { left, right };
struct Pi {};
struct Antipode {};
struct Counit {};
struct Coproduct {};

template <Leg side, class L, class R>
auto apply_leg(const Tensor2<L, R>& t, Pi) {
  if constexpr (side == Leg::left) {
    static_assert(std::is_same_v<L, LegA>, "pi applies to an A-leg");
    return map_left<LegH>(t, [](const PbwMonomial& x) { return project_pi(x); });
  } else {
    static_assert(std::is_same_v<R, LegA>, "pi applies to an A-leg");
    return map_right<LegH>(t, [](const PbwMonomial& x) { return project_pi(x); });
  }
}

template <Leg side, class L, class R>
Tensor2<L, R> apply_leg(const Tensor2<L, R>& t, Antipode) {
  using Target = std::conditional_t<side == Leg::left, L, R>;
  auto f = [](const typename Target::Index& i) -> typename Target::Element {
    if constexpr (std::is_same_v<Target, LegA>) {
      return antipode(i);
    } else {
      return z_power(-i);
    }
  };
  if constexpr (side == Leg::left) {
    return map_left<L>(t, f);
  } else {
    return map_right<R>(t, f);
  }
}

template <Leg side, class L, class R>
auto apply_leg(const Tensor2<L, R>& t, Counit) {
  using Target = std::conditional_t<side == Leg::left, L, R>;
  auto f = [](const typename Target::Index& i) -> QScalar {
    if constexpr (std::is_same_v<Target, LegA>) {
      return counit(i);
    } else {
      return QScalar(1);
    }
  };
  if constexpr (side == Leg::left) {
    return collapse_left(t, f);
  } else {
    return collapse_right(t, f);
  }
}

template <Leg side, class L, class R>
auto apply_leg(const Tensor2<L, R>& t, Coproduct) {
  using Target = std::conditional_t<side == Leg::left, L, R>;
  auto f = [](const typename Target::Index& i) -> Tensor2<Target, Target> {
    if constexpr (std::is_same_v<Target, LegA>) {
      return coproduct(i);
    } else {
      return TensorHH::pure(z_power(i), z_power(i));
    }
  };
  if constexpr (side == Leg::left) {
    return expand_left<Target, Target>(t, f);
  } else {
    return expand_right<Target, Target>(t, f);
  }
}

/// (pi (x) pi) on an A (x) A tensor.
TensorHH project_both(const TensorAA& t);

}  // namespace slq
