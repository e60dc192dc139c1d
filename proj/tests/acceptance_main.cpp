// Acceptance driver: one PASS/FAIL line per criterion, exit 1 on any failure.

#include "test_util.hpp"

#include <chrono>
#include <functional>
#include <iostream>

using namespace chargen;
using namespace testutil;

namespace {

int failures = 0;

void run_criterion(int n, const std::string &label,
                   const std::function<bool()> &fn)
{
	bool ok = false;
	std::string detail;
	auto t0 = std::chrono::steady_clock::now();
	try {
		ok = fn();
	} catch (const std::exception &e) {
		detail = e.what();
	}
	auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
	              std::chrono::steady_clock::now() - t0)
	              .count();
	if (!ok)
		failures++;
	std::cout << (ok ? "PASS" : "FAIL") << " criterion " << n << ": " << label
	          << " (" << ms << " ms)";
	if (!ok && !detail.empty())
		std::cout << " [" << detail << "]";
	std::cout << std::endl;
}

// ---- 1: exact numerator golden values ----
bool crit1()
{
	return y_via_chhat(algebra("A1")).Y == GenSeries::one(1, 0) &&
	       y_via_chhat(algebra("A2")).Y == a2_Y_golden() &&
	       y_via_chhat(algebra("B2")).Y == b2_Y_golden() &&
	       y_via_chhat(algebra("G2")).Y == g2_Y_golden();
}

// ---- 2: all four generator routes agree ----
bool crit2()
{
	auto agree = [](const std::string &n, int N) {
		auto spec = algebra(n);
		GenSeries ref = x_by_definition(spec, N);
		return x_via_yz(spec, N) == ref && x_via_demazure(spec, N) == ref &&
		       x_via_graph(spec, N) == ref;
	};
	return agree("A2", 3) && agree("B2", 3) && agree("G2", 2);
}

// ---- 3: character engine cross-checks and frozen displays ----
bool crit3()
{
	for (std::string n : {"A1", "A2", "A3", "B2", "G2"}) {
		auto spec = algebra(n);
		for (auto &lam : dominant_weights_up_to(spec.rank, 4))
			if (weyl_character(spec, lam) != demazure_character(spec, lam))
				return false;
	}
	auto g2 = algebra("G2");
	return weyl_character(g2, {1, 0}) == g2_ch_fund1() &&
	       weyl_character(g2, {0, 1}) == g2_ch_fund2() &&
	       weyl_character(g2, {1, 1}) == g2_ch_11() &&
	       weyl_character(g2, {0, 2}) == g2_ch_02() &&
	       specialize_a_one(g2_ch_fund1()) == 14 &&
	       specialize_a_one(g2_ch_fund2()) == 7 &&
	       specialize_a_one(g2_ch_11()) == 64 &&
	       specialize_a_one(g2_ch_02()) == 27;
}

// ---- 4: staged operator sweep on the rank-two worked example ----
bool crit4()
{
	auto a2 = algebra("A2");
	auto no_negative = [](const CharPoly &p) {
		for (auto &[e, c] : p.terms)
			if (c < 0)
				return false;
		return true;
	};

	CharPoly stage1 = apply_op(a2, OpKind::D, 1, CharPoly::monomial({2, 1}));
	if (stage1 != poly_of({{{2, 1}, 1}, {{0, 2}, 1}, {{-2, 3}, 1}}))
		return false;

	CharPoly stage2 = apply_op(a2, OpKind::D, 2, stage1);
	CharPoly stage2_want = poly_of({{{2, 1}, 1},
	                                {{3, -1}, 1},
	                                {{0, 2}, 1},
	                                {{1, 0}, 1},
	                                {{2, -2}, 1},
	                                {{-2, 3}, 1},
	                                {{-1, 1}, 1},
	                                {{0, -1}, 1},
	                                {{1, -3}, 1}});
	if (stage2 != stage2_want)
		return false;

	// Split off the part already invariant under the first reflection.
	CharPoly invariant = poly_of({{{2, 1}, 1},
	                              {{0, 2}, 1},
	                              {{-2, 3}, 1},
	                              {{1, 0}, 1},
	                              {{-1, 1}, 1},
	                              {{0, -1}, 1}});
	CharPoly rest = poly_of({{{3, -1}, 1}, {{2, -2}, 1}, {{1, -3}, 1}});
	if (invariant + rest != stage2)
		return false;
	if (weyl_act(group_for(a2).element_from_word({1}), invariant) != invariant)
		return false;
	// The invariant part is fixed by the sweep, so only the rest is expanded.
	if (apply_op(a2, OpKind::D, 1, invariant) != invariant)
		return false;

	CharPoly image = apply_op(a2, OpKind::D, 1, rest);
	CharPoly image_want = poly_of({{{3, -1}, 1},
	                               {{1, 0}, 1},
	                               {{-1, 1}, 1},
	                               {{-3, 2}, 1},
	                               {{2, -2}, 1},
	                               {{0, -1}, 1},
	                               {{-2, 0}, 1},
	                               {{1, -3}, 1},
	                               {{-1, -2}, 1}});
	if (image != image_want)
		return false;
	if (!no_negative(stage1) || !no_negative(stage2) || !no_negative(image))
		return false;

	// Six invariant monomials plus the nine-monomial image, all coefficients
	// one, sum to the full character (15 monomials with multiplicity).
	CharPoly total = invariant + image;
	if (total != weyl_character(a2, {2, 1}))
		return false;
	return specialize_a_one(total) == 15;
}

// ---- 5: operator identities on seeded random inputs ----
bool crit5()
{
	const std::vector<std::string> ranktwo{"A2", "B2", "C2", "G2"};

	// Projection, sign, and composition identities.
	{
		std::mt19937 rng(1001);
		for (int t = 0; t < 120; ++t) {
			auto spec = algebra(ranktwo[t % ranktwo.size()]);
			GenSeries s = random_genseries(rng, 2, 2);
			int i = 1 + (int)(rng() % 2);
			GenSeries D = apply_op(spec, OpKind::D, i, s);
			GenSeries d = apply_op(spec, OpKind::d, i, s);
			GenSeries r = apply_op(spec, OpKind::Reflect, i, s);
			if (apply_op(spec, OpKind::D, i, D) != D)
				return false;
			if (apply_op(spec, OpKind::Reflect, i, D) != D)
				return false;
			if (apply_op(spec, OpKind::d, i, d) != -d)
				return false;
			if (D != s + d)
				return false;
			if (apply_op(spec, OpKind::Dbar, i, s) != d - r)
				return false;
		}
	}

	// Product (Leibniz-type) rules.
	{
		std::mt19937 rng(1002);
		for (int t = 0; t < 120; ++t) {
			auto spec = algebra(ranktwo[t % ranktwo.size()]);
			GenSeries F = random_genseries(rng, 2, 2);
			GenSeries G = random_genseries(rng, 2, 2);
			int i = 1 + (int)(rng() % 2);
			auto op = [&](OpKind k, const GenSeries &x) {
				return apply_op(spec, k, i, x);
			};
			GenSeries DF = op(OpKind::D, F), DG = op(OpKind::D, G);
			GenSeries dF = op(OpKind::d, F), dG = op(OpKind::d, G);
			GenSeries rF = op(OpKind::Reflect, F), rG = op(OpKind::Reflect, G);
			GenSeries FG = F * G;
			if (op(OpKind::D, FG) != DF * G + rF * dG)
				return false;
			if (op(OpKind::D, FG) != F * DG + dF * rG)
				return false;
			if (op(OpKind::d, FG) != dF * G + rF * dG)
				return false;
			if (op(OpKind::d, FG) != F * dG + dF * rG)
				return false;
			if (F * dG + dF * rG != F * op(OpKind::Dbar, G) + DF * rG)
				return false;
		}
	}

	// Straightening of orbit-sum products.
	{
		std::mt19937 rng(1003);
		int cases = 0;
		for (std::string n : {"A2", "B2", "G2"}) {
			auto spec = algebra(n);
			for (int t = 0; t < 35; ++t) {
				Weight mu = random_weight(rng, 2, 0, 3);
				Weight lam = random_weight(rng, 2, 0, 2);
				CharPoly lhs = chhat(
				    spec, orbit_sum(spec, lam) * CharPoly::monomial(mu));
				if (lhs != weyl_character(spec, mu) * orbit_sum(spec, lam))
					return false;
				cases++;
			}
		}
		if (cases < 100)
			return false;
	}

	// Shifted antisymmetry of the straightening map.
	{
		std::mt19937 rng(1004);
		for (std::string n : {"A2", "B2", "G2"}) {
			auto spec = algebra(n);
			auto &g = group_for(spec);
			for (int t = 0; t < 10; ++t) {
				Weight lam = random_weight(rng, 2, 0, 3);
				const CharPoly &ch = weyl_character(spec, lam);
				for (auto &w : g.elements())
					if (chhat(spec,
					          CharPoly::monomial(w.shifted_apply(lam))) !=
					    ch * Coeff(w.det))
						return false;
			}
		}
	}

	// Inverted-root partition identities, exhaustive for the rank-two groups.
	for (std::string n : {"B2", "G2"}) {
		auto spec = algebra(n);
		auto &g = group_for(spec);
		std::set<Weight> pos(spec.positive_roots.begin(),
		                     spec.positive_roots.end());
		for (auto &w : g.elements()) {
			std::vector<Weight> dminus;
			for (auto &b : spec.positive_roots)
				if (!pos.count(w.apply(b)))
					dminus.push_back(b);
			if ((int)dminus.size() != w.length)
				return false;
			if (w.det != (dminus.size() % 2 ? -1 : 1))
				return false;
			Weight s(spec.rank, 0);
			for (auto &b : dminus) {
				Weight img = w.apply(b);
				if (!pos.count(negate(img)))
					return false;
				s = add(s, negate(img));
			}
			if (sub(spec.weyl_vector, w.apply(spec.weyl_vector)) != s)
				return false;
		}
	}
	return true;
}

// ---- 6: low-degree slices from inside generators and products ----
bool crit6()
{
	// Degree-1 slice equals the sum of inside parts over the fundamentals.
	for (std::string n : {"A2", "A3", "B2", "G2"}) {
		auto spec = algebra(n);
		auto split = inside_outside_split(spec);
		GenSeries want(spec.rank, 2);
		for (auto &io : split)
			want.add_term(io.fundamental, io.inside);
		if (y_expansion_terms(spec).y1 != want)
			return false;
	}

	// Degree-2 slices in closed form.
	auto a2 = algebra("A2");
	GenSeries wantA(2, 2);
	wantA.add_term({1, 1}, -CharPoly::monomial({0, 0}));
	if (y_expansion_terms(a2).y2 != wantA)
		return false;

	auto b2 = algebra("B2");
	GenSeries wantB(2, 2);
	wantB.add_term({1, 1}, -b2_ch_fund2());
	if (y_expansion_terms(b2).y2 != wantB)
		return false;

	auto g2 = algebra("G2");
	GenSeries wantG(2, 2);
	wantG.add_term({2, 0},
	               CharPoly::monomial({0, 0}) + weyl_character(g2, {0, 1}));
	wantG.add_term({1, 1},
	               CharPoly::monomial({0, 0}) - weyl_character(g2, {0, 2}));
	if (y_expansion_terms(g2).y2 != wantG)
		return false;

	// The degree-2 slice rebuilt from generator products and incompatibilities.
	if (!verify_incompatibility_decomposition(g2).ok)
		return false;

	// Four incompatible products summing to a single bilinear term.
	GenSeries sum =
	    mono(2, 2, {1, 0}, {1, 0}) * mono(2, 2, {0, 1}, {-1, 1}) +
	    mono(2, 2, {1, 0}, {1, 0}) * mono(2, 2, {0, 1}, {0, -1}) +
	    mono(2, 2, {1, 0}, {-1, 2}) * mono(2, 2, {0, 1}, {0, -1}) +
	    mono(2, 2, {1, 0}, {0, 0}) * mono(2, 2, {0, 1}, {0, -1});
	GenSeries prod(2, 2);
	prod.add_term({1, 1}, b2_ch_fund2());
	return sum == prod;
}

// ---- 7: generator-graph structure goldens ----
bool crit7()
{
	auto a2 = build_generator_graph(algebra("A2"));
	if (a2.vertices.size() != 6 || maximal_chains(a2, false).size() != 2)
		return false;

	auto b2 = build_generator_graph(algebra("B2"));
	if (b2.vertices.size() != 8 || !b2.extra_edges.empty())
		return false;
	int nonunit = 0;
	for (auto &[e, d] : b2.edge_d)
		if (!d.is_zero())
			nonunit++;
	std::pair<int, int> fg{b2.vertex_by_name("F"), b2.vertex_by_name("G")};
	if (nonunit != 1 || !b2.edge_d.count(fg) ||
	    b2.edge_d.at(fg) != mono(2, 1, {1, 0}, {0, 0}))
		return false;

	auto g2 = build_generator_graph(algebra("G2"));
	if (g2.vertices.size() != 12 || g2.extra_edges.size() != 3)
		return false;
	auto v = [&](const char *nm) { return g2.vertex_by_name(nm); };
	std::set<std::pair<int, int>> extras(g2.extra_edges.begin(),
	                                     g2.extra_edges.end());
	if (extras != std::set<std::pair<int, int>>{{v("H"), v("J")},
	                                            {v("H"), v("K")},
	                                            {v("I"), v("K")}})
		return false;
	if (g2.edge_d.at({v("H"), v("J")}) != mono(2, 1, {1, 0}, {-1, 2}))
		return false;
	if (g2.edge_d.at({v("I"), v("K")}) != mono(2, 1, {1, 0}, {1, -2}))
		return false;
	if (g2.edge_d.at({v("H"), v("K")}) != mono(2, 1, {1, 0}, {0, 0}))
		return false;
	return maximal_chains(g2, true).size() == 12;
}

// ---- 8: chain-label and multichain evaluations ----
bool crit8()
{
	auto g = build_generator_graph(algebra("A2"));
	GenSeries ref = x_by_definition(algebra("A2"), 3);
	if (baclawski_x(g, 3, default_linking(g)) != ref)
		return false;
	auto v = [&](const char *nm) { return g.vertex_by_name(nm); };
	Linking alt;
	alt.minus = {{v("B"), v("D"), v("E")}};
	if (!is_valid_linking(g, alt) || baclawski_x(g, 3, alt) != ref)
		return false;

	for (std::string n : {"A1", "A2", "A3"})
		if (x_via_multichains(algebra(n), 2) !=
		    x_by_definition(algebra(n), 2))
			return false;
	return true;
}

// ---- 9: denominator times generator reproduces the numerator ----
bool crit9()
{
	const int N = 3;
	for (std::string n : {"A1", "A2", "B2", "G2"}) {
		auto spec = algebra(n);
		GenSeries zx = z_denominator(spec, N) * x_by_definition(spec, N);
		if (zx != y_via_chhat(spec).Y.with_trunc(N))
			return false;
	}
	return true;
}

} // namespace

int main()
{
	run_criterion(1, "exact numerator golden values", crit1);
	run_criterion(2, "all generator routes agree", crit2);
	run_criterion(3, "character engine cross-checks", crit3);
	run_criterion(4, "staged operator sweep worked example", crit4);
	run_criterion(5, "operator identities on seeded inputs", crit5);
	run_criterion(6, "inside generators and incompatible products", crit6);
	run_criterion(7, "generator-graph structure", crit7);
	run_criterion(8, "chain-label and multichain evaluations", crit8);
	run_criterion(9, "denominator times generator equals numerator", crit9);
	return failures == 0 ? 0 : 1;
}
