#include "slq/algebra.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <tuple>

namespace slq {

namespace {

// alpha^a (beta gamma)^j delta^b with a*b = 0, times a q-Laurent coefficient.
struct ZetaTerm {
  int a;
  int j;
  int b;
  LaurentQ c;
};
using ZetaExpansion = std::vector<ZetaTerm>;

// Left multiplication by c * beta gamma:  beta gamma alpha^a = q^{2a} alpha^a beta gamma.
ZetaExpansion times_one_plus_bg(const ZetaExpansion& in, int q_exp) {
  std::map<std::tuple<int, int, int>, LaurentQ> acc;
  for (const auto& t : in) {
    acc[{t.a, t.j, t.b}] += t.c;
    acc[{t.a, t.j + 1, t.b}] += t.c.shifted(q_exp + 2 * t.a);
  }
  ZetaExpansion out;
  for (auto& [key, c] : acc)
    if (!c.is_zero()) out.push_back({std::get<0>(key), std::get<1>(key), std::get<2>(key), c});
  return out;
}

class ExpansionTable {
 public:
  // delta^s alpha^k = (1 + q^{2s-1} beta gamma) delta^{s-1} alpha^{k-1}
  const ZetaExpansion& delta_alpha(int s, int k) { return lookup(true, s, k); }
  // alpha^k delta^s = (1 + q^{1-2k} beta gamma) alpha^{k-1} delta^{s-1}
  const ZetaExpansion& alpha_delta(int k, int s) { return lookup(false, k, s); }

 private:
  const ZetaExpansion& lookup(bool delta_first, int x, int y) {
    const auto key = std::make_tuple(delta_first, x, y);
    {
      std::shared_lock lock(mutex_);
      auto it = table_.find(key);
      if (it != table_.end()) return it->second;
    }
    ZetaExpansion value;
    if (x == 0 || y == 0) {
      // delta_first: delta^x alpha^y ; otherwise alpha^x delta^y
      const int a = delta_first ? y : x;
      const int b = delta_first ? x : y;
      value.push_back({a, 0, b, LaurentQ(1)});
    } else {
      const ZetaExpansion& prev = lookup(delta_first, x - 1, y - 1);
      value = times_one_plus_bg(prev, delta_first ? 2 * x - 1 : 1 - 2 * x);
    }
    std::unique_lock lock(mutex_);
    return table_.try_emplace(key, std::move(value)).first->second;
  }

  std::shared_mutex mutex_;
  std::map<std::tuple<bool, int, int>, ZetaExpansion> table_;
};

ExpansionTable& expansion_table() {
  static ExpansionTable table;
  return table;
}

// Accumulates c * alpha^K beta^L gamma^M delta^S into `out`, resolving K*S > 0.
void emit(AlgebraElement& out, int K, int L, int M, int S, const QScalar& c) {
  if (K == 0 || S == 0) {
    out.add_term(PbwMonomial{K, L, M, S}, c);
    return;
  }
  // alpha^K beta^L gamma^M delta^S = q^{-S(L+M)} alpha^K delta^S beta^L gamma^M
  for (const auto& t : expansion_table().alpha_delta(K, S)) {
    // ... alpha^a (beta gamma)^j delta^b beta^L gamma^M, delta^b past beta^L gamma^M
    const int e = (t.b - S) * (L + M);
    out.add_term(PbwMonomial{t.a, L + t.j, M + t.j, t.b}, c * QScalar(t.c.shifted(e)));
  }
}

void accumulate_product(AlgebraElement& out, const PbwMonomial& x, const PbwMonomial& y,
                        const QScalar& c) {
  // alpha^k beta^l gamma^m [delta^s alpha^k'] beta^l' gamma^m' delta^s'
  for (const auto& t : expansion_table().delta_alpha(x.s, y.k)) {
    const int e = (x.l + x.m) * t.a + t.b * (y.l + y.m);
    emit(out, x.k + t.a, x.l + t.j + y.l, x.m + t.j + y.m, t.b + y.s,
         c * QScalar(t.c.shifted(e)));
  }
}

}  // namespace

PbwMonomial PbwMonomial::make(int k, int l, int m, int s) {
  if (k < 0 || l < 0 || m < 0 || s < 0) throw std::invalid_argument("negative PBW exponent");
  if (k != 0 && s != 0) throw std::invalid_argument("PBW monomial cannot contain both alpha and delta");
  return PbwMonomial{k, l, m, s};
}

AlgebraElement unit_element(const QScalar& c) { return AlgebraElement::basis(PbwMonomial{}, c); }

AlgebraElement generator_element(Generator g) {
  switch (g) {
    case Generator::A: return AlgebraElement::basis(PbwMonomial{1, 0, 0, 0});
    case Generator::B: return AlgebraElement::basis(PbwMonomial{0, 1, 0, 0});
    case Generator::C: return AlgebraElement::basis(PbwMonomial{0, 0, 1, 0});
    case Generator::D: return AlgebraElement::basis(PbwMonomial{0, 0, 0, 1});
  }
  throw std::invalid_argument("unknown generator");
}

AlgebraElement monomial_element(int k, int l, int m, int s, const QScalar& c) {
  return AlgebraElement::basis(PbwMonomial::make(k, l, m, s), c);
}

AlgebraElement zeta() { return monomial_element(0, 1, 1, 0, -QScalar::q_power(-1)); }

AlgebraElement multiply_monomials(const PbwMonomial& x, const PbwMonomial& y) {
  AlgebraElement out;
  accumulate_product(out, x, y, QScalar(1));
  return out;
}

AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y) {
  AlgebraElement out;
  for (const auto& [mx, cx] : x.terms())
    for (const auto& [my, cy] : y.terms()) accumulate_product(out, mx, my, cx * cy);
  return out;
}

AlgebraElement power(const AlgebraElement& x, unsigned n) {
  AlgebraElement result = unit_element();
  for (unsigned i = 0; i < n; ++i) result = result * x;
  return result;
}

AlgebraElement linear_combine(std::span<const std::pair<QScalar, AlgebraElement>> pairs) {
  AlgebraElement out;
  for (const auto& [c, x] : pairs) out += c * x;
  return out;
}

AlgebraElement normal_form(const Word& w) {
  AlgebraElement result = unit_element();
  for (Generator g : w) result = result * generator_element(g);
  return result;
}

Word to_word(const PbwMonomial& x) {
  Word w;
  w.insert(w.end(), static_cast<std::size_t>(x.k), Generator::A);
  w.insert(w.end(), static_cast<std::size_t>(x.l), Generator::B);
  w.insert(w.end(), static_cast<std::size_t>(x.m), Generator::C);
  w.insert(w.end(), static_cast<std::size_t>(x.s), Generator::D);
  return w;
}

AlgebraElement extend_on_generators(const AlgebraElement& x,
                                    const std::array<AlgebraElement, 4>& images, bool anti) {
  // Powers of each image, shared across the terms of x.
  std::array<std::vector<AlgebraElement>, 4> powers;
  auto image_power = [&](int g, int n) -> const AlgebraElement& {
    auto& p = powers[static_cast<std::size_t>(g)];
    if (p.empty()) p.push_back(unit_element());
    while (static_cast<int>(p.size()) <= n) p.push_back(p.back() * images[static_cast<std::size_t>(g)]);
    return p[static_cast<std::size_t>(n)];
  };
  AlgebraElement out;
  for (const auto& [mono, c] : x.terms()) {
    const std::array<int, 4> exps{mono.k, mono.l, mono.m, mono.s};
    AlgebraElement value = unit_element(c);
    for (int i = 0; i < 4; ++i) {
      const int g = anti ? 3 - i : i;
      if (exps[static_cast<std::size_t>(g)] == 0) continue;
      value = value * image_power(g, exps[static_cast<std::size_t>(g)]);
    }
    out += value;
  }
  return out;
}

}  // namespace slq
