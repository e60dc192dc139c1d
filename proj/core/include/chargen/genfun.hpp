#pragma once

#include "chargen/characters.hpp"

namespace chargen {

// Integer polynomial in the L-variables (L-exponent -> coefficient).
using LPoly = std::map<Weight, Coeff, GradedLex>;

// Numerator data of the closed form X = Y / Z.
struct YZResult {
	GenSeries Y; // exact polynomial (truncation = its exact degree bound)
	// Decomposition Y = sum_nu y_nu(L) * ch_nu over dominant nu.
	std::map<Weight, LPoly, GradedLex> y_coeffs;
};

// Sum over dominant lam with label sum <= N of L^lam * ch_lam.
GenSeries x_by_definition(const AlgebraSpec &spec, int N);

// Product over fundamentals Lam and all orbit weights phi of (1 - L^Lam a^phi).
GenSeries z_denominator(const AlgebraSpec &spec, int N);

// 1/Z: product of geometric series [L^Lam a^phi] over the same factors.
GenSeries z_inverse(const AlgebraSpec &spec, int N);

// Product over fundamentals Lam and phi in (orbit of Lam minus the highest
// weight) of (1 - L^Lam a^phi). Exact: total L-degree sum_Lam(|orbit|-1).
GenSeries script_y(const AlgebraSpec &spec);

// Upper bound on the total L-degree of Y for this algebra.
int y_degree_bound(const AlgebraSpec &spec);

// Numerator Y: straighten every L-slice of script_y into characters.
YZResult y_via_chhat(const AlgebraSpec &spec);

// Same numerator through the partition-function route: read the coefficient
// K_tau(L) of a^tau off script_y and set y_nu = sum_w det(w) K_{w.nu} (shifted
// action).
YZResult y_via_partition(const AlgebraSpec &spec);

GenSeries x_via_yz(const AlgebraSpec &spec, int N);

// Product of brackets [L_j a^{Lam_j}] over the fundamentals.
GenSeries highest_weight_series(const AlgebraSpec &spec, int N);

// Operator sweep over a reduced word applied to the highest-weight series;
// the default word is the preferred longest-element decomposition.
GenSeries x_via_demazure(const AlgebraSpec &spec, int N);
GenSeries x_via_demazure(const AlgebraSpec &spec, int N, const Word &word);

struct InsideOutside {
	Weight fundamental;
	CharPoly outside; // orbit sum
	CharPoly inside;  // character minus orbit sum
};
std::vector<InsideOutside> inside_outside_split(const AlgebraSpec &spec);

// First terms of Y by L-degree: 1, the degree-1 slice, the degree-2 slice.
struct YSlices {
	GenSeries y0, y1, y2;
};
YSlices y_expansion_terms(const AlgebraSpec &spec);

// Rank-two sanity report: rebuilds the degree-2 slice of Y from the
// inside/outside generator products and compares against y_expansion_terms.
struct IncompatReport {
	bool ok = false;
	std::string detail;
};
IncompatReport verify_incompatibility_decomposition(const AlgebraSpec &spec);

} // namespace chargen
