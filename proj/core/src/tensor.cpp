#include "slq/tensor.hpp"

namespace slq {

HElement z_power(int n, const QScalar& c) { return HElement::basis(n, c); }

HElement multiply(const HElement& x, const HElement& y) {
  HElement out;
  for (const auto& [ex, cx] : x.terms())
    for (const auto& [ey, cy] : y.terms()) out.add_term(ex + ey, cx * cy);
  return out;
}

AlgebraElement multiply_legs(const TensorAA& t) {
  AlgebraElement out;
  for (const auto& [k, c] : t.terms()) out += c * multiply_monomials(std::get<0>(k), std::get<1>(k));
  return out;
}

}  // namespace slq
