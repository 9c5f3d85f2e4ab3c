#pragma once

// Typed sparse tensors over A = A(SL_q(2)) and H = k[z, z^-1].
//
// Each leg is tagged with its algebra, so an attempt to combine an A-leg
// with an H-leg is rejected at compile time. Tensors live in the plain
// tensor product over k: identities over a balanced product P (x)_B P are
// always checked on lifts.

#include <map>
#include <tuple>
#include <utility>

#include "slq/algebra.hpp"
#include "slq/sparse.hpp"

namespace slq {

using HElement = SparseVector<int>;  // index = exponent of z

HElement z_power(int n, const QScalar& c = QScalar(1));
HElement multiply(const HElement& x, const HElement& y);
inline HElement operator*(const HElement& x, const HElement& y) { return multiply(x, y); }

struct LegA {
  using Index = PbwMonomial;
  using Element = AlgebraElement;
  static Index unit() { return PbwMonomial{}; }
  static Element product(const Index& x, const Index& y) { return multiply_monomials(x, y); }
};

struct LegH {
  using Index = int;
  using Element = HElement;
  static Index unit() { return 0; }
  static Element product(Index x, Index y) { return z_power(x + y); }
};

template <class... Legs>
class Tensor {
 public:
  using Key = std::tuple<typename Legs::Index...>;
  using Terms = std::map<Key, QScalar>;

  Tensor() = default;

  /// x_1 (x) x_2 (x) ... for elements of the respective legs.
  static Tensor pure(const typename Legs::Element&... parts) {
    Tensor out;
    out.template expand<0>(Key{}, QScalar(1), parts...);
    return out;
  }

  static Tensor unit(const QScalar& c = QScalar(1)) {
    Tensor out;
    out.add_term(Key{Legs::unit()...}, c);
    return out;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  QScalar coefficient(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? QScalar() : it->second;
  }

  void add_term(const Key& k, const QScalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Tensor& operator+=(const Tensor& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
  }
  Tensor& operator-=(const Tensor& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
  }
  Tensor& operator*=(const QScalar& c) {
    if (c.is_zero()) terms_.clear();
    for (auto& [k, v] : terms_) v *= c;
    return *this;
  }
  friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
  friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
  friend Tensor operator*(const QScalar& c, Tensor a) { return a *= c; }
  Tensor operator-() const { return QScalar(-1) * *this; }

  friend bool operator==(const Tensor& a, const Tensor& b) { return a.terms_ == b.terms_; }

 private:
  template <std::size_t P, class First, class... Rest>
  void expand(Key key, const QScalar& c, const First& first, const Rest&... rest) {
    for (const auto& [idx, v] : first.terms()) {
      std::get<P>(key) = idx;
      if constexpr (sizeof...(Rest) == 0) {
        add_term(key, c * v);
      } else {
        expand<P + 1>(key, c * v, rest...);
      }
    }
  }

  Terms terms_;
};

template <class L, class R>
using Tensor2 = Tensor<L, R>;
template <class L, class M, class R>
using Tensor3 = Tensor<L, M, R>;

/// (a (x) b)(c (x) d) = ac (x) bd, no braiding.
template <class L, class R>
Tensor2<L, R> tensor_multiply(const Tensor2<L, R>& x, const Tensor2<L, R>& y) {
  Tensor2<L, R> out;
  for (const auto& [kx, cx] : x.terms()) {
    for (const auto& [ky, cy] : y.terms()) {
      const auto left = L::product(std::get<0>(kx), std::get<0>(ky));
      const auto right = R::product(std::get<1>(kx), std::get<1>(ky));
      const QScalar c = cx * cy;
      for (const auto& [il, vl] : left.terms())
        for (const auto& [ir, vr] : right.terms()) out.add_term({il, ir}, c * vl * vr);
    }
  }
  return out;
}

template <class L, class R>
Tensor2<L, R> operator*(const Tensor2<L, R>& x, const Tensor2<L, R>& y) {
  return tensor_multiply(x, y);
}

/// Replace the left leg through a linear map given on basis indices.
template <class NewL, class L, class R, class F>
Tensor2<NewL, R> map_left(const Tensor2<L, R>& t, F&& f) {
  Tensor2<NewL, R> out;
  for (const auto& [k, c] : t.terms()) {
    const typename NewL::Element image = f(std::get<0>(k));
    for (const auto& [i, v] : image.terms()) out.add_term({i, std::get<1>(k)}, c * v);
  }
  return out;
}

template <class NewR, class L, class R, class F>
Tensor2<L, NewR> map_right(const Tensor2<L, R>& t, F&& f) {
  Tensor2<L, NewR> out;
  for (const auto& [k, c] : t.terms()) {
    const typename NewR::Element image = f(std::get<1>(k));
    for (const auto& [i, v] : image.terms()) out.add_term({std::get<0>(k), i}, c * v);
  }
  return out;
}

/// Contract the left leg with a functional; returns the right-leg element.
template <class L, class R, class F>
typename R::Element collapse_left(const Tensor2<L, R>& t, F&& f) {
  typename R::Element out;
  for (const auto& [k, c] : t.terms()) out.add_term(std::get<1>(k), c * f(std::get<0>(k)));
  return out;
}

template <class L, class R, class F>
typename L::Element collapse_right(const Tensor2<L, R>& t, F&& f) {
  typename L::Element out;
  for (const auto& [k, c] : t.terms()) out.add_term(std::get<0>(k), c * f(std::get<1>(k)));
  return out;
}

/// Replace the left leg by a two-leg tensor, e.g. (Delta (x) id).
template <class X, class Y, class L, class R, class F>
Tensor3<X, Y, R> expand_left(const Tensor2<L, R>& t, F&& f) {
  Tensor3<X, Y, R> out;
  for (const auto& [k, c] : t.terms()) {
    const Tensor2<X, Y> image = f(std::get<0>(k));
    for (const auto& [ik, v] : image.terms())
      out.add_term({std::get<0>(ik), std::get<1>(ik), std::get<1>(k)}, c * v);
  }
  return out;
}

template <class X, class Y, class L, class R, class F>
Tensor3<L, X, Y> expand_right(const Tensor2<L, R>& t, F&& f) {
  Tensor3<L, X, Y> out;
  for (const auto& [k, c] : t.terms()) {
    const Tensor2<X, Y> image = f(std::get<1>(k));
    for (const auto& [ik, v] : image.terms())
      out.add_term({std::get<0>(k), std::get<0>(ik), std::get<1>(ik)}, c * v);
  }
  return out;
}

/// Multiplication map m: A (x) A -> A.
AlgebraElement multiply_legs(const Tensor2<LegA, LegA>& t);

/// (m (x) id) on a three-leg tensor whose first two legs are in A.
template <class R>
Tensor2<LegA, R> multiply_first_legs(const Tensor3<LegA, LegA, R>& t) {
  Tensor2<LegA, R> out;
  for (const auto& [k, c] : t.terms()) {
    const AlgebraElement p = multiply_monomials(std::get<0>(k), std::get<1>(k));
    for (const auto& [i, v] : p.terms()) out.add_term({i, std::get<2>(k)}, c * v);
  }
  return out;
}

/// (x (x) 1) * t : left multiplication of the first leg.
template <class R>
Tensor2<LegA, R> left_multiply(const AlgebraElement& x, const Tensor2<LegA, R>& t) {
  Tensor2<LegA, R> out;
  for (const auto& [mx, cx] : x.terms()) {
    for (const auto& [k, c] : t.terms()) {
      const AlgebraElement p = multiply_monomials(mx, std::get<0>(k));
      for (const auto& [i, v] : p.terms()) out.add_term({i, std::get<1>(k)}, cx * c * v);
    }
  }
  return out;
}

/// t * (1 (x) x) : right multiplication of the last leg.
template <class L>
Tensor2<L, LegA> right_multiply(const Tensor2<L, LegA>& t, const AlgebraElement& x) {
  Tensor2<L, LegA> out;
  for (const auto& [k, c] : t.terms()) {
    for (const auto& [mx, cx] : x.terms()) {
      const AlgebraElement p = multiply_monomials(std::get<1>(k), mx);
      for (const auto& [i, v] : p.terms()) out.add_term({std::get<0>(k), i}, cx * c * v);
    }
  }
  return out;
}

using TensorAA = Tensor2<LegA, LegA>;
using TensorAH = Tensor2<LegA, LegH>;
using TensorHA = Tensor2<LegH, LegA>;
using TensorHH = Tensor2<LegH, LegH>;

}  // namespace slq
