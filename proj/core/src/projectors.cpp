#include "slq/projectors.hpp"

#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <string>

#include "slq/fibration.hpp"
#include "slq/hopf.hpp"
#include "slq/textio.hpp"

namespace slq {

namespace {

QScalar minus_q_power(int e) {
  // (-q)^e
  QScalar v = QScalar::q_power(e);
  return (e % 2 == 0) ? v : -v;
}

std::string entry_name(const std::string& label, std::size_t r, std::size_t c) {
  return label + "[" + std::to_string(r) + "," + std::to_string(c) + "]";
}

struct GeneratorLead {
  PbwMonomial lead;
  QScalar coefficient;
};

GeneratorLead leading_term(const AlgebraElement& g) {
  if (g.is_zero()) throw std::invalid_argument("zero module generator");
  const auto& last = *g.terms().rbegin();
  return {last.first, last.second};
}

}  // namespace

LaurentQ qbinom(int n, int k) {
  if (n < 0 || k < 0 || k > n) return {};
  if (k == 0 || k == n) return LaurentQ(1);
  static std::shared_mutex mutex;
  static std::map<std::pair<int, int>, LaurentQ> cache;
  {
    std::shared_lock lock(mutex);
    auto it = cache.find({n, k});
    if (it != cache.end()) return it->second;
  }
  LaurentQ value = qbinom(n - 1, k - 1) + qbinom(n - 1, k).shifted(2 * k);
  std::unique_lock lock(mutex);
  return cache.try_emplace({n, k}, std::move(value)).first->second;
}

AlgebraMatrix identity_matrix(std::size_t n) {
  AlgebraMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) out.at(i, i) = unit_element();
  return out;
}

AlgebraMatrix operator*(const AlgebraMatrix& x, const AlgebraMatrix& y) {
  if (x.cols() != y.rows()) throw std::invalid_argument("matrix dimension mismatch");
  AlgebraMatrix out(x.rows(), y.cols());
  for (std::size_t r = 0; r < x.rows(); ++r)
    for (std::size_t c = 0; c < y.cols(); ++c)
      for (std::size_t i = 0; i < x.cols(); ++i) out.at(r, c) += x.at(r, i) * y.at(i, c);
  return out;
}

AlgebraElement trace(const AlgebraMatrix& x) {
  if (x.rows() != x.cols()) throw std::invalid_argument("trace of a non-square matrix");
  AlgebraElement out;
  for (std::size_t i = 0; i < x.rows(); ++i) out += x.at(i, i);
  return out;
}

AlgebraMatrix build_e(int n) {
  const int size = n < 0 ? -n : n;
  AlgebraMatrix e(static_cast<std::size_t>(size + 1), static_cast<std::size_t>(size + 1));
  for (int k = 0; k <= size; ++k) {
    for (int l = 0; l <= size; ++l) {
      AlgebraElement entry;
      if (n <= 0) {
        // alpha^{-n-k} gamma^k [-n l] (-q)^l beta^l delta^{-n-l}
        entry = monomial_element(size - k, 0, k, 0) *
                monomial_element(0, l, 0, size - l, QScalar(qbinom(size, l)) * minus_q_power(l));
      } else {
        // beta^k delta^{n-k} [n l] (-q)^-l alpha^{n-l} gamma^l
        entry = monomial_element(0, k, 0, size - k) *
                monomial_element(size - l, 0, l, 0, QScalar(qbinom(size, l)) * minus_q_power(-l));
      }
      e.at(static_cast<std::size_t>(k), static_cast<std::size_t>(l)) = std::move(entry);
    }
  }
  return e;
}

AlgebraMatrix build_f(int n) {
  const int size = n < 0 ? -n : n;
  AlgebraMatrix f(static_cast<std::size_t>(size + 1), static_cast<std::size_t>(size + 1));
  for (int l = 0; l <= size; ++l) {
    for (int k = 0; k <= size; ++k) {
      AlgebraElement entry;
      if (n <= 0) {
        // [-n l] (-q)^-l beta^l delta^{-n-l} alpha^{-n-k} gamma^k
        entry = monomial_element(0, l, 0, size - l, QScalar(qbinom(size, l)) * minus_q_power(-l)) *
                monomial_element(size - k, 0, k, 0);
      } else {
        // [n l] (-q)^l alpha^{n-l} gamma^l beta^k delta^{n-k}
        entry = monomial_element(size - l, 0, l, 0, QScalar(qbinom(size, l)) * minus_q_power(l)) *
                monomial_element(0, k, 0, size - k);
      }
      f.at(static_cast<std::size_t>(l), static_cast<std::size_t>(k)) = std::move(entry);
    }
  }
  return f;
}

VerificationReport verify_idempotent(const AlgebraMatrix& m, const std::string& label) {
  VerificationReport report("projectors");
  const std::string range = std::to_string(m.rows()) + "x" + std::to_string(m.cols());
  if (m.rows() != m.cols()) {
    report.fail("idempotent " + label, range, "matrix is not square");
    return report;
  }
  const AlgebraMatrix square = m * m;
  CheckAccumulator check("idempotent " + label, range);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      check.expect(square.at(r, c) == m.at(r, c), [&] {
        return entry_name(label, r, c) + ": (M*M) = " + print_algebra(square.at(r, c)) +
               ", M = " + print_algebra(m.at(r, c));
      });
    }
  }
  check.commit(report);
  return report;
}

VerificationReport verify_coinvariant_entries(const AlgebraMatrix& m, const std::string& label) {
  VerificationReport report("projectors");
  CheckAccumulator check("coinvariant entries " + label,
                         std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      check.expect(is_coinvariant(m.at(r, c)),
                   [&] { return entry_name(label, r, c) + " = " + print_algebra(m.at(r, c)); });
  check.commit(report);
  return report;
}

RankOneFactors rank_one_factor(int n) {
  const int size = n < 0 ? -n : n;
  RankOneFactors f;
  for (int k = 0; k <= size; ++k) {
    const QScalar binom(qbinom(size, k));
    if (n >= 0) {
      f.u.push_back(monomial_element(0, k, 0, size - k));
      f.v.push_back(binom * antipode(monomial_element(0, 0, k, size - k)));
    } else {
      f.u.push_back(monomial_element(size - k, 0, k, 0));
      f.v.push_back(binom * antipode(monomial_element(size - k, k, 0, 0)));
    }
  }
  return f;
}

AlgebraMatrix outer_product(const RankOneFactors& f) {
  AlgebraMatrix out(f.u.size(), f.v.size());
  for (std::size_t r = 0; r < f.u.size(); ++r)
    for (std::size_t c = 0; c < f.v.size(); ++c) out.at(r, c) = f.u[r] * f.v[c];
  return out;
}

AlgebraElement inner_product(const RankOneFactors& f) {
  AlgebraElement out;
  for (std::size_t i = 0; i < f.u.size() && i < f.v.size(); ++i) out += f.v[i] * f.u[i];
  return out;
}

AlgebraMatrix projector_from_splitting(std::span<const AlgebraElement> generators, const Splitting& split,
                                       Side side) {
  const std::size_t n = generators.size();
  std::map<PbwMonomial, std::size_t> by_lead;
  std::vector<GeneratorLead> leads;
  for (std::size_t i = 0; i < n; ++i) {
    leads.push_back(leading_term(generators[i]));
    if (!by_lead.emplace(leads.back().lead, i).second)
      throw std::invalid_argument("module generators share a leading monomial");
  }
  AlgebraMatrix out(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    TensorAA rest = split(generators[k]);
    while (!rest.is_zero()) {
      // Largest generator-side monomial still present.
      std::optional<PbwMonomial> top;
      for (const auto& [key, c] : rest.terms()) {
        const PbwMonomial& mono = side == Side::left ? std::get<1>(key) : std::get<0>(key);
        if (!top || *top < mono) top = mono;
      }
      auto it = by_lead.find(*top);
      if (it == by_lead.end()) {
        throw std::domain_error("splitting value of generator " + std::to_string(k) +
                                " is not expressible over the generators; offending term " +
                                print_monomial(*top) + " in " + print_tensor(rest));
      }
      const std::size_t l = it->second;
      AlgebraElement coef;
      for (const auto& [key, c] : rest.terms()) {
        if (side == Side::left && std::get<1>(key) == *top) coef.add_term(std::get<0>(key), c);
        if (side == Side::right && std::get<0>(key) == *top) coef.add_term(std::get<1>(key), c);
      }
      coef *= inverse(leads[l].coefficient);
      if (side == Side::left) {
        rest -= TensorAA::pure(coef, generators[l]);
        out.at(k, l) += coef;
      } else {
        rest -= TensorAA::pure(generators[l], coef);
        out.at(l, k) += coef;
      }
    }
  }
  return out;
}

ScalarMatrix counit_fibre(const AlgebraMatrix& m) {
  ScalarMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out.at(r, c) = counit(m.at(r, c));
  return out;
}

}  // namespace slq
