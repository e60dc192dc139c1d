#pragma once

#include "chargen/weyl.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <map>

namespace chargen {

using Coeff = boost::multiprecision::cpp_int;

// Canonical term order: total grade (sum of absolute values of the exponent
// labels), then lexicographic. Iterating any exponent map in this order gives
// the canonical serialization order.
struct GradedLex {
	bool operator()(const Weight &a, const Weight &b) const
	{
		long long ga = 0, gb = 0;
		for (int x : a)
			ga += x < 0 ? -x : x;
		for (int x : b)
			gb += x < 0 ? -x : x;
		if (ga != gb)
			return ga < gb;
		return a < b;
	}
};

struct non_invertible_series_error : std::runtime_error {
	using std::runtime_error::runtime_error;
};

// Laurent polynomial in the formal weight-lattice exponentials a^mu with
// arbitrary-precision integer coefficients.
class CharPoly {
public:
	std::map<Weight, Coeff, GradedLex> terms;

	CharPoly() = default;

	static CharPoly zero() { return CharPoly(); }
	static CharPoly monomial(const Weight &exp, Coeff c = 1);
	static CharPoly constant(int rank, Coeff c);

	bool is_zero() const { return terms.empty(); }
	Coeff coeff(const Weight &exp) const;
	void add_term(const Weight &exp, const Coeff &c);

	CharPoly operator+(const CharPoly &o) const;
	CharPoly operator-(const CharPoly &o) const;
	CharPoly operator*(const CharPoly &o) const;
	CharPoly operator-() const;
	CharPoly operator*(const Coeff &c) const;
	CharPoly &operator+=(const CharPoly &o);
	CharPoly &operator-=(const CharPoly &o);
	bool operator==(const CharPoly &o) const { return terms == o.terms; }
	bool operator!=(const CharPoly &o) const { return !(*this == o); }

	std::string str() const; // human-readable, canonical order
};

// Value at a = 1 (sum of coefficients); for a character this is the dimension.
Coeff specialize_a_one(const CharPoly &p);

// Action of a Weyl group element on the a-exponents.
CharPoly weyl_act(const WeylElement &w, const CharPoly &p);

// Formal power series in the dummy variables L_1..L_r, truncated at a fixed
// total L-degree, with CharPoly coefficients. L-exponents are non-negative.
class GenSeries {
public:
	int rank = 0;
	int trunc = 0;
	std::map<Weight, CharPoly, GradedLex> coeffs;

	GenSeries() = default;
	GenSeries(int rank_, int trunc_) : rank(rank_), trunc(trunc_) {}

	static GenSeries one(int rank, int trunc);
	static GenSeries monomial(int rank, int trunc, const Weight &lexp,
	                          const Weight &aexp, Coeff c = 1);

	bool is_zero() const { return coeffs.empty(); }
	const CharPoly &coeff(const Weight &lexp) const; // zero poly if absent
	void add_term(const Weight &lexp, const CharPoly &p);

	GenSeries operator+(const GenSeries &o) const;
	GenSeries operator-(const GenSeries &o) const;
	GenSeries operator*(const GenSeries &o) const;
	GenSeries operator-() const;
	// Equality compares coefficient data (not the truncation bound).
	bool operator==(const GenSeries &o) const;
	bool operator!=(const GenSeries &o) const { return !(*this == o); }

	GenSeries with_trunc(int n) const; // re-truncate (up or down)
	// Smallest total L-degree with a nonzero coefficient (-1 if zero).
	int min_l_degree() const;

	std::string str() const;
};

// Geometric series [x] = 1 + x + x^2 + ... at the series truncation. Requires
// the argument to have no total-L-degree-0 part.
GenSeries bracket(const GenSeries &x);

GenSeries weyl_act(const WeylElement &w, const GenSeries &s);

int total_degree(const Weight &exp); // sum of entries (L-exponents)

} // namespace chargen
