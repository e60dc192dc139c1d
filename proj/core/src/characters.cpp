#include "chargen/characters.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <cassert>
#include <deque>
#include <functional>
#include <mutex>
#include <set>

namespace chargen {

namespace {

using BigRat = boost::multiprecision::cpp_rational;

BigRat to_big(const Rational &r)
{
	return BigRat(r.numerator(), r.denominator());
}

// Full multiplicity table of the irreducible module with highest weight lam,
// via the recursive multiplicity formula evaluated level by level over the
// weight system (generated from lam by simple-root strings).
std::map<Weight, Coeff> multiplicity_table(const AlgebraSpec &spec,
                                           const Weight &lam)
{
	if (!is_dominant(lam))
		throw invalid_weight_error("highest weight must be dominant: " +
		                           weight_str(lam));

	// Weight system: close lam under the strings sigma, sigma - alpha_i, ...,
	// sigma - sigma_i * alpha_i for every positive label sigma_i.
	std::set<Weight> weights{lam};
	std::deque<Weight> q{lam};
	while (!q.empty()) {
		Weight w = q.front();
		q.pop_front();
		for (int i = 1; i <= spec.rank; ++i) {
			int k = w[i - 1];
			Weight e = w;
			for (int t = 0; t < k; ++t) {
				e = sub(e, spec.simple_roots[i - 1]);
				if (weights.insert(e).second)
					q.push_back(e);
			}
		}
	}

	// Depth of a weight = sum of the simple-root coordinates of lam - sigma
	// (a non-negative integer).
	auto depth_of = [&](const Weight &sigma) {
		auto c = simple_root_coords(spec, sub(lam, sigma));
		Rational s(0);
		for (auto &x : c)
			s += x;
		assert(s.denominator() == 1 && s.numerator() >= 0);
		return (long long)s.numerator();
	};
	std::map<long long, std::vector<Weight>> by_depth;
	for (auto &w : weights)
		by_depth[depth_of(w)].push_back(w);

	const Weight &rho = spec.weyl_vector;
	BigRat norm_top = to_big(inner_product(spec, add(lam, rho), add(lam, rho)));

	std::map<Weight, Coeff> mult;
	for (auto &[depth, layer] : by_depth) {
		for (auto &sigma : layer) {
			if (depth == 0) {
				mult[sigma] = 1;
				continue;
			}
			BigRat num = 0;
			for (auto &alpha : spec.positive_roots) {
				Weight e = sigma;
				while (true) {
					e = add(e, alpha);
					auto it = mult.find(e);
					if (it == mult.end())
						break;
					num += BigRat(it->second) *
					       to_big(inner_product(spec, e, alpha));
				}
			}
			num *= 2;
			BigRat den =
			    norm_top -
			    to_big(inner_product(spec, add(sigma, rho), add(sigma, rho)));
			if (den == 0)
				throw std::logic_error("multiplicity recursion denominator "
				                       "vanished");
			BigRat m = num / den;
			if (denominator(m) != 1)
				throw std::logic_error(
				    "multiplicity recursion produced a non-integer");
			mult[sigma] = numerator(m);
		}
	}
	return mult;
}

std::mutex char_mutex;
std::map<std::string, std::map<Weight, CharPoly>> char_cache;

std::string cache_key(const AlgebraSpec &spec) { return spec_key(spec); }

} // namespace

Coeff weight_multiplicity(const AlgebraSpec &spec, const Weight &lam,
                          const Weight &sigma)
{
	const CharPoly &ch = weyl_character(spec, lam);
	return ch.coeff(sigma);
}

const CharPoly &weyl_character(const AlgebraSpec &spec, const Weight &lam)
{
	std::lock_guard<std::mutex> lk(char_mutex);
	auto &per_algebra = char_cache[cache_key(spec)];
	auto it = per_algebra.find(lam);
	if (it != per_algebra.end())
		return it->second;
	auto table = multiplicity_table(spec, lam);
	CharPoly ch;
	for (auto &[w, m] : table)
		ch.add_term(w, m);
	return per_algebra.emplace(lam, std::move(ch)).first->second;
}

CharPoly demazure_character(const AlgebraSpec &spec, const Weight &lam)
{
	if (!is_dominant(lam))
		throw invalid_weight_error("highest weight must be dominant: " +
		                           weight_str(lam));
	const Word &word = group_for(spec).preferred_longest_word();
	return compose_over_word(spec, OpKind::D, word, CharPoly::monomial(lam));
}

Coeff dimension(const AlgebraSpec &spec, const Weight &lam)
{
	return specialize_a_one(weyl_character(spec, lam));
}

CharPoly orbit_sum(const AlgebraSpec &spec, const Weight &lam)
{
	CharPoly p;
	for (auto &w : orbit(spec, lam))
		p.add_term(w, 1);
	return p;
}

std::map<Weight, Coeff, GradedLex> chhat_decompose(const AlgebraSpec &spec,
                                                   const CharPoly &p)
{
	std::map<Weight, Coeff, GradedLex> out;
	const std::size_t max_steps = 4 * spec.positive_roots.size() + 4;
	for (auto &[nu, c] : p.terms) {
		Weight mu = add(nu, spec.weyl_vector); // nu + rho
		int det = 1;
		std::size_t steps = 0;
		for (;;) {
			bool any_zero = false, all_pos = true;
			int worst = -1;
			for (int i = 0; i < spec.rank; ++i) {
				if (mu[i] == 0)
					any_zero = true;
				if (mu[i] <= 0)
					all_pos = false;
				if (mu[i] < 0 && (worst < 0 || mu[i] < mu[worst]))
					worst = i;
			}
			if (any_zero)
				break; // on a reflection wall: contributes zero
			if (all_pos) {
				Weight lam = sub(mu, spec.weyl_vector);
				auto it = out.find(lam);
				if (it == out.end())
					out.emplace(lam, det * c);
				else {
					it->second += det * c;
					if (it->second == 0)
						out.erase(it);
				}
				break;
			}
			mu = reflect(spec, worst + 1, mu);
			det = -det;
			assert(++steps <= max_steps);
		}
	}
	return out;
}

CharPoly chhat(const AlgebraSpec &spec, const CharPoly &p)
{
	CharPoly out;
	for (auto &[lam, c] : chhat_decompose(spec, p))
		out += weyl_character(spec, lam) * c;
	return out;
}

GenSeries chhat_series(const AlgebraSpec &spec, const GenSeries &s)
{
	GenSeries out(s.rank, s.trunc);
	for (auto &[l, p] : s.coeffs)
		out.add_term(l, chhat(spec, p));
	return out;
}

std::vector<Weight> dominant_weights_up_to(int rank, int maxsum)
{
	std::vector<Weight> out;
	Weight cur(rank, 0);
	// Enumerate label vectors with entries >= 0 and sum <= maxsum.
	std::function<void(int, int)> rec = [&](int pos, int remaining) {
		if (pos == rank) {
			out.push_back(cur);
			return;
		}
		for (int v = 0; v <= remaining; ++v) {
			cur[pos] = v;
			rec(pos + 1, remaining - v);
		}
		cur[pos] = 0;
	};
	rec(0, maxsum);
	return out;
}

} // namespace chargen
