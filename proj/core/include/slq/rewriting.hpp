#pragma once

// Word-rewriting engine for A(SL_q(2)), built directly from the defining
// relations. Independent of the structured product in algebra.cpp; used as
// the reference when validating it.
//
// Rules (degree-lexicographic order with alpha < beta < gamma < delta):
//   beta alpha   -> q alpha beta        gamma alpha -> q alpha gamma
//   delta beta   -> q beta delta        delta gamma  -> q gamma delta
//   gamma beta   -> beta gamma          delta alpha  -> 1 + q beta gamma
//   alpha beta^l gamma^m delta -> q^{-(l+m)} (beta^l gamma^m + q^-1 beta^{l+1} gamma^{m+1})
// Irreducible words are exactly the PBW monomials.

#include "slq/algebra.hpp"

namespace slq {

enum class RewriteStrategy { leftmost, rightmost };

AlgebraElement rewrite_word(const Word& w, RewriteStrategy strategy);

/// Product x*y obtained by rewriting the concatenated words.
AlgebraElement rewrite_product(const PbwMonomial& x, const PbwMonomial& y,
                               RewriteStrategy strategy = RewriteStrategy::leftmost);

}  // namespace slq
