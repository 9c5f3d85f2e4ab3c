#pragma once

// Projector matrices of the quantum Hopf line bundles P_n over A(S_q^2).

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "slq/algebra.hpp"
#include "slq/qscalar.hpp"
#include "slq/report.hpp"
#include "slq/tensor.hpp"

namespace slq {

/// Gaussian binomial coefficient in base q^2, via the q-Pascal recurrence
///   [n k] = [n-1 k-1] + q^{2k} [n-1 k].
/// Zero for k < 0 or k > n. Memoized.
LaurentQ qbinom(int n, int k);

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using AlgebraMatrix = Matrix<AlgebraElement>;
using ScalarMatrix = Matrix<QScalar>;

AlgebraMatrix identity_matrix(std::size_t n);
AlgebraMatrix operator*(const AlgebraMatrix& x, const AlgebraMatrix& y);
AlgebraElement trace(const AlgebraMatrix& x);

/// Left projector: A(S_q^2)^{|n|+1} e_n is isomorphic to P_n.
AlgebraMatrix build_e(int n);
/// Right projector: f_n A(S_q^2)^{|n|+1} is isomorphic to P_n; entry (l, k).
AlgebraMatrix build_f(int n);

/// Exact check M*M = M; each failing entry is named in the counterexample.
VerificationReport verify_idempotent(const AlgebraMatrix& m, const std::string& label = "matrix");
/// Every entry lies in A(S_q^2).
VerificationReport verify_coinvariant_entries(const AlgebraMatrix& m, const std::string& label = "matrix");

struct RankOneFactors {
  std::vector<AlgebraElement> u;
  std::vector<AlgebraElement> v;
};

/// e_n = u v^T with v^T u = 1. For n >= 0, u_k = beta^k delta^{n-k} and
/// v_k = [n k] S(gamma^k delta^{n-k}); for n <= 0, u_k = alpha^{|n|-k} gamma^k
/// and v_k = [|n| k] S(alpha^{|n|-k} beta^k).
RankOneFactors rank_one_factor(int n);
AlgebraMatrix outer_product(const RankOneFactors& f);
AlgebraElement inner_product(const RankOneFactors& f);

enum class Side { left, right };

using Splitting = std::function<TensorAA(const AlgebraElement&)>;

/// Reads a projector off a splitting of the multiplication map restricted to
/// the span of `generators`. Left: split(g_k) = sum_l a_kl (x) g_l gives
/// e_kl = a_kl. Right: split(g_k) = sum_l g_l (x) a_lk gives f_lk = a_lk.
/// Throws std::domain_error when a value is not expressible over the generators.
AlgebraMatrix projector_from_splitting(std::span<const AlgebraElement> generators, const Splitting& split,
                                       Side side);

/// Entrywise counit: the fibre over the classical point of the sphere.
ScalarMatrix counit_fibre(const AlgebraMatrix& m);

}  // namespace slq
