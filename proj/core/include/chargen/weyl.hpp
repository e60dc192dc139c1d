#pragma once

#include "chargen/rootsys.hpp"

#include <map>
#include <set>
#include <stdexcept>
#include <vector>

namespace chargen {

// Integer matrix acting on Dynkin-label column vectors.
using Matrix = std::vector<std::vector<int>>;
// Word in the simple reflections, 1-based indices. A word (i1,...,ik) denotes
// the product r_{i1} r_{i2} ... r_{ik}; the rightmost factor acts first on
// weights.
using Word = std::vector<int>;

struct resource_limit_error : std::runtime_error {
	using std::runtime_error::runtime_error;
};

struct no_path_error : std::runtime_error {
	using std::runtime_error::runtime_error;
};

Matrix identity_matrix(int r);
Matrix reflection_matrix(const AlgebraSpec &spec, int i);
Matrix mat_mul(const Matrix &a, const Matrix &b);
Weight mat_apply(const Matrix &m, const Weight &w);

struct WeylElement {
	Word word;     // ShortLex-minimal reduced word
	Matrix matrix; // product of reflection matrices in word order
	int length = 0;
	int det = 1;

	bool operator==(const WeylElement &o) const { return matrix == o.matrix; }
	Weight apply(const Weight &w) const { return mat_apply(matrix, w); }
	// Shifted action w.lam = w(lam + rho) - rho.
	Weight shifted_apply(const Weight &lam) const;
};

class WeylGroup {
public:
	explicit WeylGroup(const AlgebraSpec &spec, std::size_t cap = 1000000);

	const AlgebraSpec &spec() const { return spec_; }
	// All elements, in BFS (length-then-ShortLex) discovery order.
	const std::vector<WeylElement> &elements() const { return elements_; }
	std::size_t size() const { return elements_.size(); }

	const WeylElement &identity() const { return elements_[0]; }
	const WeylElement &longest() const { return elements_[longest_]; }
	// The reduced decomposition of the longest element used by downstream
	// operator sweeps (hard-coded choices for A_r, B2, G2; canonical word
	// otherwise).
	const Word &preferred_longest_word() const { return preferred_word_; }

	int index_of(const Matrix &m) const; // -1 if absent
	const WeylElement &element_from_word(const Word &w) const;
	const WeylElement &multiply(const WeylElement &a, const WeylElement &b) const;
	const WeylElement &inverse(const WeylElement &a) const;

	bool is_reflection(const Matrix &m) const;
	// v covers w in Bruhat order: l(v) = l(w) + 1 and v w^{-1} is a reflection.
	bool is_bruhat_cover(const WeylElement &w, const WeylElement &v) const;
	// All pairs (w, v) with v covering w, as indices into elements().
	std::vector<std::pair<int, int>> bruhat_covers() const;

private:
	AlgebraSpec spec_;
	std::vector<WeylElement> elements_;
	std::map<Matrix, int> index_;
	std::set<Matrix> reflections_;
	int longest_ = 0;
	Word preferred_word_;
};

// Cached per-algebra group (thread-safe, write-once).
const WeylGroup &group_for(const AlgebraSpec &spec);

// Cache key for an algebra (name + Cartan matrix).
std::string spec_key(const AlgebraSpec &spec);

std::set<Weight> orbit(const AlgebraSpec &spec, const Weight &lam);

// Apply a word to a weight (rightmost reflection first).
Weight apply_word(const AlgebraSpec &spec, const Word &word, const Weight &w);

// ShortLex-minimal word of minimal length carrying source to target within
// the orbit of source. Throws no_path_error if target is not in the orbit.
Word min_word_to_weight(const AlgebraSpec &spec, const Weight &source,
                        const Weight &target);

} // namespace chargen
