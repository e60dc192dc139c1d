#pragma once

#include <boost/rational.hpp>
#include <stdexcept>
#include <string>
#include <vector>

namespace chargen {

// A weight in the fundamental-weight (Dynkin label) basis. This is the only
// coordinate system used anywhere in the library: simple roots, orbit weights
// and monomial exponents are all integer label vectors of length rank.
using Weight = std::vector<int>;
using Rational = boost::rational<long long>;

struct unsupported_algebra_error : std::runtime_error {
	using std::runtime_error::runtime_error;
};

struct AlgebraSpec {
	std::string name;
	int rank = 0;
	// cartan[i] is the i-th simple root expressed in Dynkin labels.
	std::vector<std::vector<int>> cartan;
	std::vector<Weight> simple_roots;
	std::vector<Weight> positive_roots;
	Weight weyl_vector; // all-ones vector (half the sum of positive roots)
	// symmetrizers d_i with d_i * cartan[j][i] == d_j * cartan[i][j];
	// used for the invariant bilinear form on the weight lattice
	std::vector<long long> sym;
};

// Built-in algebras: "A1".."A4", "B2", "C2", "G2".
AlgebraSpec algebra(const std::string &name);

// Arbitrary Cartan matrix (rows = simple roots in Dynkin labels).
AlgebraSpec algebra_from_cartan(const std::string &name,
                                const std::vector<std::vector<int>> &cartan);

// Primitive reflection r_i (i is 1-based): lam - lam_i * alpha_i.
Weight reflect(const AlgebraSpec &spec, int i, const Weight &lam);

// Shifted action r_i.lam = r_i(lam + rho) - rho.
Weight shifted_reflect(const AlgebraSpec &spec, int i, const Weight &lam);

bool is_dominant(const Weight &w);

Weight add(const Weight &a, const Weight &b);
Weight sub(const Weight &a, const Weight &b);
Weight negate(const Weight &a);

// Coordinates of a weight in the simple-root basis (exact rationals).
std::vector<Rational> simple_root_coords(const AlgebraSpec &spec,
                                         const Weight &w);

// Invariant bilinear form (u, v), normalized so (alpha_i, alpha_i) = 2*sym[i].
Rational inner_product(const AlgebraSpec &spec, const Weight &u,
                       const Weight &v);

std::string weight_str(const Weight &w);

} // namespace chargen
