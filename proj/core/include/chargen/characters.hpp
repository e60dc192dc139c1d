#pragma once

#include "chargen/demazure.hpp"

namespace chargen {

struct invalid_weight_error : std::runtime_error {
	using std::runtime_error::runtime_error;
};

// Multiplicity of the weight sigma in the irreducible module of highest
// weight lam (0 if sigma is not a weight of it). lam must be dominant.
Coeff weight_multiplicity(const AlgebraSpec &spec, const Weight &lam,
                          const Weight &sigma);

// Irreducible character as a Laurent polynomial in a (recursive multiplicity
// formula; cached per algebra and highest weight).
const CharPoly &weyl_character(const AlgebraSpec &spec, const Weight &lam);

// The same character computed by the operator sweep over the preferred
// longest-element decomposition (uncached, independent route).
CharPoly demazure_character(const AlgebraSpec &spec, const Weight &lam);

Coeff dimension(const AlgebraSpec &spec, const Weight &lam);

// Sum of a^mu over the Weyl orbit of lam (each orbit weight once).
CharPoly orbit_sum(const AlgebraSpec &spec, const Weight &lam);

// Linear "straightening" map sending a^nu to det(w) * ch_lam when the shifted
// Weyl action carries nu to the dominant weight lam, and to 0 when nu + rho
// has a zero label. Returns the resulting virtual character as a polynomial.
CharPoly chhat(const AlgebraSpec &spec, const CharPoly &p);

// Same map with the L-variables carried along untouched.
GenSeries chhat_series(const AlgebraSpec &spec, const GenSeries &s);

// Decomposition form of chhat: dominant highest weight -> integer coefficient.
std::map<Weight, Coeff, GradedLex> chhat_decompose(const AlgebraSpec &spec,
                                                   const CharPoly &p);

// All dominant weights with label sum <= maxsum.
std::vector<Weight> dominant_weights_up_to(int rank, int maxsum);

} // namespace chargen
