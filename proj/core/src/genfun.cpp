#include "chargen/genfun.hpp"

#include <cassert>
#include <sstream>

namespace chargen {

namespace {

Weight fundamental(int rank, int j) // 1-based
{
	Weight w(rank, 0);
	w[j - 1] = 1;
	return w;
}

} // namespace

GenSeries x_by_definition(const AlgebraSpec &spec, int N)
{
	GenSeries x(spec.rank, N);
	for (auto &lam : dominant_weights_up_to(spec.rank, N))
		x.add_term(lam, weyl_character(spec, lam));
	return x;
}

GenSeries z_denominator(const AlgebraSpec &spec, int N)
{
	GenSeries z = GenSeries::one(spec.rank, N);
	for (int j = 1; j <= spec.rank; ++j) {
		Weight lam = fundamental(spec.rank, j);
		for (auto &phi : orbit(spec, lam)) {
			GenSeries f = GenSeries::one(spec.rank, N) -
			              GenSeries::monomial(spec.rank, N, lam, phi);
			z = z * f;
		}
	}
	return z;
}

GenSeries z_inverse(const AlgebraSpec &spec, int N)
{
	GenSeries z = GenSeries::one(spec.rank, N);
	for (int j = 1; j <= spec.rank; ++j) {
		Weight lam = fundamental(spec.rank, j);
		for (auto &phi : orbit(spec, lam))
			z = z * bracket(GenSeries::monomial(spec.rank, N, lam, phi));
	}
	return z;
}

int y_degree_bound(const AlgebraSpec &spec)
{
	int n = 0;
	for (int j = 1; j <= spec.rank; ++j)
		n += (int)orbit(spec, fundamental(spec.rank, j)).size() - 1;
	return n;
}

GenSeries script_y(const AlgebraSpec &spec)
{
	int N = y_degree_bound(spec);
	GenSeries y = GenSeries::one(spec.rank, N);
	for (int j = 1; j <= spec.rank; ++j) {
		Weight lam = fundamental(spec.rank, j);
		for (auto &phi : orbit(spec, lam)) {
			if (phi == lam)
				continue;
			GenSeries f = GenSeries::one(spec.rank, N) -
			              GenSeries::monomial(spec.rank, N, lam, phi);
			y = y * f;
		}
	}
	return y;
}

namespace {

YZResult assemble_y(const AlgebraSpec &spec,
                    std::map<Weight, LPoly, GradedLex> y_coeffs)
{
	YZResult r;
	r.y_coeffs = std::move(y_coeffs);
	r.Y = GenSeries(spec.rank, y_degree_bound(spec));
	for (auto &[nu, lp] : r.y_coeffs) {
		const CharPoly &ch = weyl_character(spec, nu);
		for (auto &[lexp, c] : lp)
			r.Y.add_term(lexp, ch * c);
	}
	return r;
}

} // namespace

YZResult y_via_chhat(const AlgebraSpec &spec)
{
	GenSeries sy = script_y(spec);
	std::map<Weight, LPoly, GradedLex> y_coeffs;
	for (auto &[lexp, p] : sy.coeffs)
		for (auto &[nu, c] : chhat_decompose(spec, p)) {
			auto &lp = y_coeffs[nu];
			lp[lexp] += c;
			if (lp[lexp] == 0)
				lp.erase(lexp);
		}
	for (auto it = y_coeffs.begin(); it != y_coeffs.end();)
		it = it->second.empty() ? y_coeffs.erase(it) : std::next(it);
	return assemble_y(spec, std::move(y_coeffs));
}

YZResult y_via_partition(const AlgebraSpec &spec)
{
	GenSeries sy = script_y(spec);
	const WeylGroup &g = group_for(spec);

	// K_tau(L) = coefficient of a^tau in script_y.
	std::map<Weight, LPoly, GradedLex> K;
	for (auto &[lexp, p] : sy.coeffs)
		for (auto &[tau, c] : p.terms)
			K[tau][lexp] = c;

	// Candidate dominant weights: shifted-dominant images of the support.
	std::set<Weight> candidates;
	for (auto &[tau, lp] : K)
		for (auto &w : g.elements()) {
			Weight nu = w.shifted_apply(tau);
			if (is_dominant(nu))
				candidates.insert(nu);
		}

	std::map<Weight, LPoly, GradedLex> y_coeffs;
	for (auto &nu : candidates) {
		LPoly y;
		for (auto &w : g.elements()) {
			auto it = K.find(w.shifted_apply(nu));
			if (it == K.end())
				continue;
			for (auto &[lexp, c] : it->second) {
				y[lexp] += w.det * c;
				if (y[lexp] == 0)
					y.erase(lexp);
			}
		}
		if (!y.empty())
			y_coeffs.emplace(nu, std::move(y));
	}
	return assemble_y(spec, std::move(y_coeffs));
}

GenSeries x_via_yz(const AlgebraSpec &spec, int N)
{
	return z_inverse(spec, N) * y_via_chhat(spec).Y.with_trunc(N);
}

GenSeries highest_weight_series(const AlgebraSpec &spec, int N)
{
	GenSeries h = GenSeries::one(spec.rank, N);
	for (int j = spec.rank; j >= 1; --j) {
		Weight lam = fundamental(spec.rank, j);
		h = h * bracket(GenSeries::monomial(spec.rank, N, lam, lam));
	}
	return h;
}

GenSeries x_via_demazure(const AlgebraSpec &spec, int N)
{
	return x_via_demazure(spec, N, group_for(spec).preferred_longest_word());
}

GenSeries x_via_demazure(const AlgebraSpec &spec, int N, const Word &word)
{
	return compose_over_word(spec, OpKind::D, word,
	                         highest_weight_series(spec, N));
}

std::vector<InsideOutside> inside_outside_split(const AlgebraSpec &spec)
{
	std::vector<InsideOutside> out;
	for (int j = 1; j <= spec.rank; ++j) {
		InsideOutside io;
		io.fundamental = fundamental(spec.rank, j);
		io.outside = orbit_sum(spec, io.fundamental);
		io.inside = weyl_character(spec, io.fundamental) - io.outside;
		out.push_back(std::move(io));
	}
	return out;
}

namespace {

CharPoly halve(const CharPoly &p)
{
	CharPoly r;
	for (auto &[e, c] : p.terms) {
		if (c % 2 != 0)
			throw std::logic_error(
			    "diagonal quadratic term has an odd coefficient");
		r.terms[e] = c / 2;
	}
	return r;
}

} // namespace

YSlices y_expansion_terms(const AlgebraSpec &spec)
{
	int r = spec.rank;
	YSlices s{GenSeries::one(r, 2), GenSeries(r, 2), GenSeries(r, 2)};
	auto split = inside_outside_split(spec);

	for (auto &io : split)
		s.y1.add_term(io.fundamental, io.inside);

	auto S = [&](const Weight &a, const Weight &b) {
		return weyl_character(spec, a) * weyl_character(spec, b) -
		       weyl_character(spec, add(a, b));
	};
	// Off-diagonal: unordered pairs of distinct fundamentals.
	for (int a = 0; a < r; ++a)
		for (int b = a + 1; b < r; ++b) {
			const Weight &la = split[a].fundamental;
			const Weight &lb = split[b].fundamental;
			CharPoly term =
			    split[a].inside * split[b].inside - S(la, lb);
			s.y2.add_term(add(la, lb), term);
		}
	// Diagonal: L^{2 Lam} terms; the quadratic sum runs over ordered pairs of
	// distinct orbit weights, hence the factor 1/2.
	for (int a = 0; a < r; ++a) {
		const Weight &la = split[a].fundamental;
		Weight two = add(la, la);
		CharPoly term = weyl_character(spec, two) - orbit_sum(spec, two) -
		                S(la, la) + split[a].inside * split[a].inside;
		s.y2.add_term(two, halve(term));
	}
	return s;
}

IncompatReport verify_incompatibility_decomposition(const AlgebraSpec &spec)
{
	IncompatReport rep;
	if (spec.name != "G2") {
		rep.detail = "generator-product decomposition is tabulated for G2 only";
		return rep;
	}
	const int N = 2;
	auto mono = [&](int lj, const Weight &aexp) {
		return GenSeries::monomial(2, N, fundamental(2, lj), aexp);
	};
	// Outside generators (orbit monomials), long orbit then short orbit.
	GenSeries G = mono(1, {1, 0}), H = mono(1, {-1, 3}), I = mono(1, {2, -3}),
	          J = mono(1, {-2, 3}), K = mono(1, {1, -3}), Lv = mono(1, {-1, 0});
	GenSeries A = mono(2, {0, 1}), B = mono(2, {1, -1}), C = mono(2, {-1, 2}),
	          D = mono(2, {1, -2}), E = mono(2, {-1, 1}), F = mono(2, {0, -1});
	(void)A;
	(void)B;
	(void)Lv;
	(void)K;
	// Inside generators, produced by operator sweeps on the outside ones.
	auto op = [&](OpKind k, int i, const GenSeries &s) {
		return apply_op(spec, k, i, s);
	};
	GenSeries gh = op(OpKind::Dbar, 2, H);
	GenSeries z1 = op(OpKind::Dbar, 1, I);
	GenSeries kl = op(OpKind::Dbar, 2, J);
	GenSeries i_ = op(OpKind::d, 1, gh);
	GenSeries j_ = op(OpKind::Reflect, 2, i_);
	GenSeries z = op(OpKind::Dbar, 2, i_);
	GenSeries z2 = op(OpKind::Dbar, 2, C);

	GenSeries oo = G * (C + D + E + F) + H * (D + E + F) + I * (E + F) + J * F;
	GenSeries io = z2 * (G + H) + (z + gh + i_) * (D + E + F) + z1 * (E + F) +
	               j_ * (E + F) + kl * F + z * (I + J) + i_ * I + j_ * J;
	// i pairs only with k and l among the inside generators (like j, its
	// mirror under the second reflection, which pairs with none of z, z').
	GenSeries ii = (z2 + gh) * (j_ + kl + z1) + i_ * kl + z1 * kl;

	GenSeries rebuilt = -oo + ii - io;
	GenSeries expected = y_expansion_terms(spec).y2;
	if (rebuilt == expected) {
		rep.ok = true;
		rep.detail = "degree-2 slice of Y matches the generator-product form";
	} else {
		std::ostringstream os;
		os << "mismatch: rebuilt = " << rebuilt.str()
		   << " expected = " << expected.str();
		rep.detail = os.str();
	}
	return rep;
}

} // namespace chargen
