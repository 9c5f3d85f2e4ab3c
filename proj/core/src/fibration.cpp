#include "slq/fibration.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <tuple>

#include "slq/hopf.hpp"

namespace slq {

int left_degree(const PbwMonomial& x) { return x.k + x.l - x.m - x.s; }
int right_degree(const PbwMonomial& x) { return x.k - x.l + x.m - x.s; }
Bidegree bidegree(const PbwMonomial& x) { return {left_degree(x), right_degree(x)}; }

TensorAH coact_right(const AlgebraElement& x) {
  TensorAH out;
  for (const auto& [mono, c] : x.terms()) out.add_term({mono, right_degree(mono)}, c);
  return out;
}

TensorHA coact_left(const AlgebraElement& x) {
  TensorHA out;
  for (const auto& [mono, c] : x.terms()) out.add_term({left_degree(mono), mono}, c);
  return out;
}

std::map<Bidegree, AlgebraElement> bidegree_decompose(const AlgebraElement& x) {
  std::map<Bidegree, AlgebraElement> out;
  for (const auto& [mono, c] : x.terms()) out[bidegree(mono)].add_term(mono, c);
  return out;
}

AlgebraElement winding_component(const AlgebraElement& x, int n) {
  AlgebraElement out;
  for (const auto& [mono, c] : x.terms())
    if (right_degree(mono) == -n) out.add_term(mono, c);
  return out;
}

bool in_winding_space(const AlgebraElement& x, int n) {
  return std::all_of(x.terms().begin(), x.terms().end(),
                     [n](const auto& t) { return right_degree(t.first) == -n; });
}

std::vector<AlgebraElement> winding_generators(int n) {
  std::vector<AlgebraElement> out;
  const int size = n < 0 ? -n : n;
  for (int k = 0; k <= size; ++k) {
    if (n <= 0) {
      out.push_back(monomial_element(size - k, 0, k, 0));
    } else {
      out.push_back(monomial_element(0, k, 0, n - k));
    }
  }
  return out;
}

std::optional<SphereElement> SphereElement::certify(const AlgebraElement& x) {
  if (!is_coinvariant(x)) return std::nullopt;
  return SphereElement(x);
}

bool is_coinvariant(const AlgebraElement& x) { return in_winding_space(x, 0); }

bool is_left_coinvariant(const AlgebraElement& x) {
  return std::all_of(x.terms().begin(), x.terms().end(),
                     [](const auto& t) { return left_degree(t.first) == 0; });
}

AlgebraElement SphereBasisExpansion::reconstruct() const {
  AlgebraElement out;
  for (const auto& [n, c] : zeta_part) out += c * sphere_basis_element(SphereFamily::zeta, 0, n);
  for (const auto& [mn, c] : ab_part)
    out += c * sphere_basis_element(SphereFamily::alpha_beta, mn.first, mn.second);
  for (const auto& [mn, c] : cd_part)
    out += c * sphere_basis_element(SphereFamily::gamma_delta, mn.first, mn.second);
  return out;
}

const AlgebraElement& sphere_basis_element(SphereFamily family, int m, int n) {
  if (m < 0 || n < 0 || (family != SphereFamily::zeta && m == 0))
    throw std::invalid_argument("sphere basis index out of range");
  static std::shared_mutex mutex;
  static std::map<std::tuple<int, int, int>, AlgebraElement> cache;
  const auto key = std::make_tuple(static_cast<int>(family), m, n);
  {
    std::shared_lock lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  AlgebraElement head = unit_element();
  if (family == SphereFamily::alpha_beta) head = power(alpha() * beta(), static_cast<unsigned>(m));
  if (family == SphereFamily::gamma_delta) head = power(gamma() * delta(), static_cast<unsigned>(m));
  AlgebraElement value = head * power(zeta(), static_cast<unsigned>(n));
  std::unique_lock lock(mutex);
  return cache.try_emplace(key, std::move(value)).first->second;
}

SphereBasisExpansion sphere_basis_expand(const SphereElement& b) {
  SphereBasisExpansion out;
  AlgebraElement rest = b.element();
  // Each coinvariant monomial belongs to exactly one basis element:
  //   alpha^M beta^{M+j} gamma^j        <-> (alpha beta)^M zeta^j   (M > 0)
  //   beta^j gamma^{j+M} delta^M        <-> (gamma delta)^M zeta^j  (M > 0)
  //   beta^j gamma^j                    <-> zeta^j
  // The conversion factor is read off the basis element's normal form.
  std::size_t guard = 0;
  while (!rest.is_zero()) {
    if (++guard > 100000) throw std::logic_error("sphere_basis_expand did not terminate");
    auto top = std::max_element(rest.terms().begin(), rest.terms().end(),
                                [](const auto& a, const auto& b) {
                                  return std::make_pair(a.first.degree(), a.first) <
                                         std::make_pair(b.first.degree(), b.first);
                                });
    const PbwMonomial mono = top->first;
    const QScalar coef = top->second;
    SphereFamily family;
    int m = 0;
    int n = 0;
    if (mono.k > 0) {
      family = SphereFamily::alpha_beta;
      m = mono.k;
      n = mono.m;
    } else if (mono.s > 0) {
      family = SphereFamily::gamma_delta;
      m = mono.s;
      n = mono.l;
    } else {
      family = SphereFamily::zeta;
      n = mono.l;
    }
    const AlgebraElement& basis = sphere_basis_element(family, m, n);
    const QScalar lead = basis.coefficient(mono);
    if (lead.is_zero()) throw std::logic_error("element is not in the span of the sphere basis");
    const QScalar factor = coef / lead;
    rest -= factor * basis;
    switch (family) {
      case SphereFamily::zeta: out.zeta_part[n] += factor; break;
      case SphereFamily::alpha_beta: out.ab_part[{m, n}] += factor; break;
      case SphereFamily::gamma_delta: out.cd_part[{m, n}] += factor; break;
    }
  }
  std::erase_if(out.zeta_part, [](const auto& t) { return t.second.is_zero(); });
  std::erase_if(out.ab_part, [](const auto& t) { return t.second.is_zero(); });
  std::erase_if(out.cd_part, [](const auto& t) { return t.second.is_zero(); });
  return out;
}

AlgebraElement transpose_T(const AlgebraElement& x) {
  static const std::array<AlgebraElement, 4> images{alpha(), gamma(), beta(), delta()};
  return extend_on_generators(x, images, /*anti=*/false);
}

TensorAA translation_map(const HElement& h) {
  TensorAA out;
  for (const auto& [n, c] : h.terms()) {
    const PbwMonomial lift = n >= 0 ? PbwMonomial{n, 0, 0, 0} : PbwMonomial{0, 0, 0, -n};
    out += c * apply_leg<Leg::left>(coproduct(lift), Antipode{});
  }
  return out;
}

TensorAH canonical_chi(const TensorAA& t) {
  auto lifted = expand_right<LegA, LegH>(
      t, [](const PbwMonomial& y) { return coact_right(AlgebraElement::basis(y)); });
  return multiply_first_legs(lifted);
}

}  // namespace slq
