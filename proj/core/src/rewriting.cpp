#include "slq/rewriting.hpp"

#include <map>
#include <optional>

namespace slq {

namespace {

using G = Generator;

struct Redex {
  std::size_t begin;
  std::size_t end;  // one past the last rewritten letter
  std::vector<std::pair<Word, QScalar>> replacement;
};

Word repeat_bc(int l, int m) {
  Word w(static_cast<std::size_t>(l), G::B);
  w.insert(w.end(), static_cast<std::size_t>(m), G::C);
  return w;
}

std::optional<Redex> redex_at(const Word& w, std::size_t i) {
  const QScalar q = QScalar::q_power(1);
  if (i + 1 >= w.size()) return std::nullopt;
  const G x = w[i];
  const G y = w[i + 1];
  if (x == G::B && y == G::A) return Redex{i, i + 2, {{{G::A, G::B}, q}}};
  if (x == G::C && y == G::A) return Redex{i, i + 2, {{{G::A, G::C}, q}}};
  if (x == G::D && y == G::B) return Redex{i, i + 2, {{{G::B, G::D}, q}}};
  if (x == G::D && y == G::C) return Redex{i, i + 2, {{{G::C, G::D}, q}}};
  if (x == G::C && y == G::B) return Redex{i, i + 2, {{{G::B, G::C}, QScalar(1)}}};
  if (x == G::D && y == G::A) return Redex{i, i + 2, {{{}, QScalar(1)}, {{G::B, G::C}, q}}};
  if (x != G::A) return std::nullopt;
  // alpha beta^l gamma^m delta
  std::size_t j = i + 1;
  int l = 0;
  int m = 0;
  while (j < w.size() && w[j] == G::B) ++l, ++j;
  while (j < w.size() && w[j] == G::C) ++m, ++j;
  if (j >= w.size() || w[j] != G::D) return std::nullopt;
  return Redex{i,
               j + 1,
               {{repeat_bc(l, m), QScalar::q_power(-(l + m))},
                {repeat_bc(l + 1, m + 1), QScalar::q_power(-(l + m) - 1)}}};
}

std::optional<Redex> find_redex(const Word& w, RewriteStrategy strategy) {
  if (w.size() < 2) return std::nullopt;
  if (strategy == RewriteStrategy::leftmost) {
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
      if (auto r = redex_at(w, i)) return r;
  } else {
    for (std::size_t i = w.size() - 1; i-- > 0;)
      if (auto r = redex_at(w, i)) return r;
  }
  return std::nullopt;
}

PbwMonomial irreducible_to_monomial(const Word& w) {
  PbwMonomial x;
  for (G g : w) {
    switch (g) {
      case G::A: ++x.k; break;
      case G::B: ++x.l; break;
      case G::C: ++x.m; break;
      case G::D: ++x.s; break;
    }
  }
  return x;
}

}  // namespace

AlgebraElement rewrite_word(const Word& w, RewriteStrategy strategy) {
  std::map<Word, QScalar> pending;
  pending.emplace(w, QScalar(1));
  AlgebraElement result;
  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    const Word& word = node.key();
    const QScalar& c = node.mapped();
    if (c.is_zero()) continue;
    auto redex = find_redex(word, strategy);
    if (!redex) {
      result.add_term(irreducible_to_monomial(word), c);
      continue;
    }
    for (const auto& [middle, coef] : redex->replacement) {
      Word next(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(redex->begin));
      next.insert(next.end(), middle.begin(), middle.end());
      next.insert(next.end(), word.begin() + static_cast<std::ptrdiff_t>(redex->end), word.end());
      auto [it, inserted] = pending.try_emplace(std::move(next), c * coef);
      if (!inserted) it->second += c * coef;
    }
  }
  return result;
}

AlgebraElement rewrite_product(const PbwMonomial& x, const PbwMonomial& y, RewriteStrategy strategy) {
  Word w = to_word(x);
  Word tail = to_word(y);
  w.insert(w.end(), tail.begin(), tail.end());
  return rewrite_word(w, strategy);
}

}  // namespace slq
