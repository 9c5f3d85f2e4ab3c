#pragma once

#include <map>
#include <utility>

#include "slq/qscalar.hpp"

namespace slq {

/// Finite linear combination of basis indices with coefficients in Q(q).
/// Zero coefficients are never stored, so two vectors are equal iff their
/// term maps are identical.
template <class Index>
class SparseVector {
 public:
  using index_type = Index;
  using Terms = std::map<Index, QScalar>;

  SparseVector() = default;

  static SparseVector basis(const Index& i, const QScalar& c = QScalar(1)) {
    SparseVector out;
    out.add_term(i, c);
    return out;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  QScalar coefficient(const Index& i) const {
    auto it = terms_.find(i);
    return it == terms_.end() ? QScalar() : it->second;
  }

  void add_term(const Index& i, const QScalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(i, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  SparseVector& operator+=(const SparseVector& o) {
    for (const auto& [i, c] : o.terms_) add_term(i, c);
    return *this;
  }
  SparseVector& operator-=(const SparseVector& o) {
    for (const auto& [i, c] : o.terms_) add_term(i, -c);
    return *this;
  }
  SparseVector& operator*=(const QScalar& c) {
    if (c.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [i, v] : terms_) v *= c;
    return *this;
  }

  friend SparseVector operator+(SparseVector a, const SparseVector& b) { return a += b; }
  friend SparseVector operator-(SparseVector a, const SparseVector& b) { return a -= b; }
  friend SparseVector operator*(const QScalar& c, SparseVector a) { return a *= c; }
  SparseVector operator-() const {
    SparseVector out = *this;
    for (auto& [i, v] : out.terms_) v = -v;
    return out;
  }

  friend bool operator==(const SparseVector& a, const SparseVector& b) {
    return a.terms_ == b.terms_;
  }

 private:
  Terms terms_;
};

}  // namespace slq
