#include "slq/hopf.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>

namespace slq {

namespace {

const QScalar& q1() {
  static const QScalar value = QScalar::q_power(1);
  return value;
}

TensorAA generator_coproduct(Generator g) {
  const auto a = alpha();
  const auto b = beta();
  const auto c = gamma();
  const auto d = delta();
  switch (g) {
    case Generator::A: return TensorAA::pure(a, a) + TensorAA::pure(b, c);
    case Generator::B: return TensorAA::pure(a, b) + TensorAA::pure(b, d);
    case Generator::C: return TensorAA::pure(c, a) + TensorAA::pure(d, c);
    case Generator::D: return TensorAA::pure(c, b) + TensorAA::pure(d, d);
  }
  return {};
}

template <class Value>
class MonomialCache {
 public:
  template <class Compute>
  const Value& get(const PbwMonomial& x, Compute&& compute) {
    {
      std::shared_lock lock(mutex_);
      auto it = cache_.find(x);
      if (it != cache_.end()) return it->second;
    }
    Value v = compute(x);
    std::unique_lock lock(mutex_);
    return cache_.try_emplace(x, std::move(v)).first->second;
  }

 private:
  std::shared_mutex mutex_;
  std::map<PbwMonomial, Value> cache_;
};

}  // namespace

const TensorAA& coproduct(const PbwMonomial& x) {
  static MonomialCache<TensorAA> cache;
  return cache.get(x, [](const PbwMonomial& mono) -> TensorAA {
    if (mono.is_unit()) return TensorAA::unit();
    // Peel the last generator of alpha^k beta^l gamma^m delta^s.
    PbwMonomial rest = mono;
    Generator last;
    if (rest.s > 0) {
      --rest.s;
      last = Generator::D;
    } else if (rest.m > 0) {
      --rest.m;
      last = Generator::C;
    } else if (rest.l > 0) {
      --rest.l;
      last = Generator::B;
    } else {
      --rest.k;
      last = Generator::A;
    }
    return tensor_multiply(coproduct(rest), generator_coproduct(last));
  });
}

TensorAA coproduct(const AlgebraElement& x) {
  TensorAA out;
  for (const auto& [mono, c] : x.terms()) out += c * coproduct(mono);
  return out;
}

QScalar counit(const PbwMonomial& x) { return (x.l + x.m > 0) ? QScalar() : QScalar(1); }

QScalar counit(const AlgebraElement& x) {
  QScalar out;
  for (const auto& [mono, c] : x.terms()) out += c * counit(mono);
  return out;
}

const AlgebraElement& antipode(const PbwMonomial& x) {
  static MonomialCache<AlgebraElement> cache;
  return cache.get(x, [](const PbwMonomial& mono) {
    static const std::array<AlgebraElement, 4> images{
        delta(), -q1() * beta(), -inverse(q1()) * gamma(), alpha()};
    return extend_on_generators(AlgebraElement::basis(mono), images, /*anti=*/true);
  });
}

AlgebraElement antipode(const AlgebraElement& x) {
  AlgebraElement out;
  for (const auto& [mono, c] : x.terms()) out += c * antipode(mono);
  return out;
}

HElement project_pi(const PbwMonomial& x) {
  if (x.l + x.m > 0) return {};
  return z_power(x.k - x.s);
}

HElement project_pi(const AlgebraElement& x) {
  HElement out;
  for (const auto& [mono, c] : x.terms()) out += c * project_pi(mono);
  return out;
}

TensorHH h_coproduct(const HElement& h) {
  TensorHH out;
  for (const auto& [e, c] : h.terms()) out.add_term({e, e}, c);
  return out;
}

QScalar h_counit(const HElement& h) {
  QScalar out;
  for (const auto& [e, c] : h.terms()) out += c;
  return out;
}

HElement h_antipode(const HElement& h) {
  HElement out;
  for (const auto& [e, c] : h.terms()) out.add_term(-e, c);
  return out;
}

HHopfValues h_hopf_ops(const HElement& h) { return {h_coproduct(h), h_counit(h), h_antipode(h)}; }

TensorHH project_both(const TensorAA& t) {
  return apply_leg<Leg::right>(apply_leg<Leg::left>(t, Pi{}), Pi{});
}

}  // namespace slq
