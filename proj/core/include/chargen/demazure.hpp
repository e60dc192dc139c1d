#pragma once

#include "chargen/polyengine.hpp"

namespace chargen {

struct non_reduced_word_error : std::runtime_error {
	using std::runtime_error::runtime_error;
};

// The five primitive weight-lattice operators, all indexed by a simple root.
// On a monomial a^phi with k = phi_i:
//   D:     k >= 0  -> a^phi + a^{phi-alpha} + ... + a^{phi-k*alpha}
//          k == -1 -> 0
//          k <= -2 -> -(a^{phi+alpha} + ... + a^{phi+(|k|-1)*alpha})
//   d:     D minus the identity term (d = D - 1)
//   Dbar:  d minus the reflection term (Dbar = d - r = D * a^{-alpha})
//   d_neg: the counterpart of d acting along the negative string:
//          k <= -1 -> a^{phi+alpha} + ... + a^{phi+|k|*alpha}
//          k == 0  -> 0
//          k >= 1  -> -(a^phi + a^{phi-alpha} + ... + a^{phi-(k-1)*alpha})
//   Reflect: a^{r_i phi}
// The L-variables of a GenSeries are inert.
enum class OpKind { D, d, Dbar, d_neg, Reflect };

CharPoly apply_op(const AlgebraSpec &spec, OpKind kind, int i,
                  const CharPoly &p);
GenSeries apply_op(const AlgebraSpec &spec, OpKind kind, int i,
                   const GenSeries &s);

// Compose the operator over a word (i1,...,ik): op_{i1} ... op_{ik}, the
// rightmost factor acting first. With check_reduced the word must be a
// reduced decomposition in the Weyl group.
CharPoly compose_over_word(const AlgebraSpec &spec, OpKind kind,
                           const Word &word, const CharPoly &p,
                           bool check_reduced = true);
GenSeries compose_over_word(const AlgebraSpec &spec, OpKind kind,
                            const Word &word, const GenSeries &s,
                            bool check_reduced = true);

bool word_is_reduced(const AlgebraSpec &spec, const Word &word);

} // namespace chargen
