#include "chargen/demazure.hpp"

#include <cassert>
#include <sstream>

namespace chargen {

namespace {

// Accumulate op_i applied to the single monomial c*a^phi into out.
void apply_to_monomial(const AlgebraSpec &spec, OpKind kind, int i,
                       const Weight &phi, const Coeff &c, CharPoly &out)
{
	assert(i >= 1 && i <= spec.rank);
	const Weight &alpha = spec.simple_roots[i - 1];
	int k = phi[i - 1];

	auto string_down = [&](const Weight &start, int count, bool negate_sign) {
		// start, start-alpha, ..., start-(count-1)*alpha
		Weight e = start;
		for (int t = 0; t < count; ++t) {
			out.add_term(e, negate_sign ? -c : c);
			e = sub(e, alpha);
		}
	};
	auto string_up = [&](int count, bool negate_sign) {
		// phi+alpha, ..., phi+count*alpha
		Weight e = phi;
		for (int t = 0; t < count; ++t) {
			e = add(e, alpha);
			out.add_term(e, negate_sign ? -c : c);
		}
	};

	switch (kind) {
	case OpKind::D:
		if (k >= 0)
			string_down(phi, k + 1, false);
		else if (k <= -2)
			string_up(-k - 1, true);
		// k == -1: zero
		break;
	case OpKind::d:
		if (k >= 1)
			string_down(sub(phi, alpha), k, false);
		else if (k <= -1) {
			out.add_term(phi, -c);
			string_up(-k - 1, true);
		}
		// k == 0: zero
		break;
	case OpKind::Dbar: {
		// Dbar_i = D_i composed with multiplication by a^{-alpha_i}.
		Weight shifted = sub(phi, alpha);
		int ks = shifted[i - 1]; // k - 2
		if (ks >= 0)
			string_down(shifted, ks + 1, false);
		else if (ks <= -2) {
			Weight e = shifted;
			for (int t = 0; t < -ks - 1; ++t) {
				e = add(e, alpha);
				out.add_term(e, -c);
			}
		}
		break;
	}
	case OpKind::d_neg:
		if (k <= -1)
			string_up(-k, false);
		else if (k >= 1)
			string_down(phi, k, true);
		// k == 0: zero
		break;
	case OpKind::Reflect:
		out.add_term(reflect(spec, i, phi), c);
		break;
	}
}

} // namespace

CharPoly apply_op(const AlgebraSpec &spec, OpKind kind, int i,
                  const CharPoly &p)
{
	CharPoly out;
	for (auto &[phi, c] : p.terms)
		apply_to_monomial(spec, kind, i, phi, c, out);
	return out;
}

GenSeries apply_op(const AlgebraSpec &spec, OpKind kind, int i,
                   const GenSeries &s)
{
	GenSeries out(s.rank, s.trunc);
	for (auto &[l, p] : s.coeffs)
		out.add_term(l, apply_op(spec, kind, i, p));
	return out;
}

bool word_is_reduced(const AlgebraSpec &spec, const Word &word)
{
	const WeylGroup &g = group_for(spec);
	return g.element_from_word(word).length == (int)word.size();
}

namespace {

void check_word(const AlgebraSpec &spec, const Word &word, bool check_reduced)
{
	for (int i : word)
		if (i < 1 || i > spec.rank)
			throw std::out_of_range("reflection index out of range");
	if (check_reduced && !word_is_reduced(spec, word)) {
		std::ostringstream os;
		os << "operator word (";
		for (std::size_t t = 0; t < word.size(); ++t)
			os << (t ? "," : "") << word[t];
		os << ") is not a reduced decomposition";
		throw non_reduced_word_error(os.str());
	}
}

} // namespace

CharPoly compose_over_word(const AlgebraSpec &spec, OpKind kind,
                           const Word &word, const CharPoly &p,
                           bool check_reduced)
{
	check_word(spec, word, check_reduced);
	CharPoly cur = p;
	for (auto it = word.rbegin(); it != word.rend(); ++it)
		cur = apply_op(spec, kind, *it, cur);
	return cur;
}

GenSeries compose_over_word(const AlgebraSpec &spec, OpKind kind,
                            const Word &word, const GenSeries &s,
                            bool check_reduced)
{
	check_word(spec, word, check_reduced);
	GenSeries cur = s;
	for (auto it = word.rbegin(); it != word.rend(); ++it)
		cur = apply_op(spec, kind, *it, cur);
	return cur;
}

} // namespace chargen
