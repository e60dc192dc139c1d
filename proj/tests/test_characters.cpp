#include "test_util.hpp"

#include <doctest.h>

using namespace chargen;
using namespace testutil;

TEST_CASE("character goldens")
{
	auto b2 = algebra("B2");
	CHECK(weyl_character(b2, {0, 1}) == b2_ch_fund2());

	auto g2 = algebra("G2");
	CHECK(weyl_character(g2, {1, 0}) == g2_ch_fund1());
	CHECK(weyl_character(g2, {0, 1}) == g2_ch_fund2());
	CHECK(weyl_character(g2, {1, 1}) == g2_ch_11());
	CHECK(weyl_character(g2, {0, 2}) == g2_ch_02());

	CHECK(weyl_character(b2, {0, 0}) == CharPoly::monomial({0, 0}));
	auto a1 = algebra("A1");
	CHECK(weyl_character(a1, {1}) == poly_of({{{1}, 1}, {{-1}, 1}}));

	CHECK_THROWS_AS(weyl_character(b2, {-1, 0}), invalid_weight_error);
	CHECK_THROWS_AS(demazure_character(b2, {0, -2}), invalid_weight_error);
}

TEST_CASE("dimensions")
{
	auto g2 = algebra("G2");
	CHECK(dimension(g2, {1, 0}) == 14);
	CHECK(dimension(g2, {0, 1}) == 7);
	CHECK(dimension(g2, {1, 1}) == 64);
	CHECK(dimension(g2, {0, 2}) == 27);
	CHECK(dimension(algebra("A3"), {1, 0, 0}) == 4);
	CHECK(dimension(algebra("A3"), {0, 1, 0}) == 6);
	CHECK(dimension(algebra("A3"), {1, 0, 1}) == 15);
}

TEST_CASE("multiplicity goldens")
{
	auto g2 = algebra("G2");
	CHECK(weight_multiplicity(g2, {1, 1}, {0, 0}) == 4);
	CHECK(weight_multiplicity(g2, {1, 1}, {1, 1}) == 1);
	auto a2 = algebra("A2");
	CHECK(weight_multiplicity(a2, {2, 1}, {1, 0}) == 2);
	CHECK(weight_multiplicity(a2, {2, 1}, {0, 0}) == 0); // wrong congruence class
	CHECK(weight_multiplicity(a2, {2, 1}, {5, 5}) == 0);
}

TEST_CASE("two character routes agree")
{
	for (std::string n : {"A1", "A2", "A3", "B2", "G2"}) {
		auto spec = algebra(n);
		for (auto &lam : dominant_weights_up_to(spec.rank, 3))
			CHECK(weyl_character(spec, lam) ==
			      demazure_character(spec, lam));
	}
}

TEST_CASE("characters are Weyl invariant")
{
	auto g2 = algebra("G2");
	auto &g = group_for(g2);
	for (auto &lam : dominant_weights_up_to(2, 2)) {
		const CharPoly &ch = weyl_character(g2, lam);
		for (auto &w : g.elements())
			CHECK(weyl_act(w, ch) == ch);
	}
}

TEST_CASE("orbit sums")
{
	auto b2 = algebra("B2");
	CHECK(orbit_sum(b2, {0, 1}) == weyl_character(b2, {0, 1})); // minuscule
	CHECK(orbit_sum(algebra("G2"), {1, 0}).terms.size() == 6);
	CHECK(orbit_sum(b2, {0, 0}) == CharPoly::monomial({0, 0}));
}

TEST_CASE("straightening map basics")
{
	auto a1 = algebra("A1");
	CHECK(chhat(a1, CharPoly::monomial({-1})).is_zero());
	CHECK(chhat(a1, CharPoly::monomial({1})) == weyl_character(a1, {1}));

	auto b2 = algebra("B2");
	CHECK(chhat(b2, CharPoly::monomial({-2, 3})) ==
	      -weyl_character(b2, {0, 1}));
}

TEST_CASE("straightening equals the signed-character rule (100+ cases)")
{
	std::mt19937 rng(404);
	for (std::string n : {"A2", "B2", "G2"}) {
		auto spec = algebra(n);
		auto &g = group_for(spec);
		for (int t = 0; t < 10; ++t) {
			Weight lam = random_weight(rng, 2, 0, 3);
			const CharPoly &ch = weyl_character(spec, lam);
			for (auto &w : g.elements()) {
				CharPoly m = CharPoly::monomial(w.shifted_apply(lam));
				CHECK(chhat(spec, m) == ch * Coeff(w.det));
			}
		}
	}
}

TEST_CASE("straightening of orbit-sum products (100+ cases)")
{
	std::mt19937 rng(505);
	int cases = 0;
	for (std::string n : {"A2", "B2", "G2"}) {
		auto spec = algebra(n);
		for (int t = 0; t < 35; ++t) {
			Weight mu = random_weight(rng, 2, 0, 3);
			Weight lam = random_weight(rng, 2, 0, 2);
			CharPoly lhs = chhat(
			    spec, orbit_sum(spec, lam) * CharPoly::monomial(mu));
			CharPoly rhs = weyl_character(spec, mu) * orbit_sum(spec, lam);
			CHECK(lhs == rhs);
			cases++;
		}
	}
	CHECK(cases >= 100);
}

TEST_CASE("straightening equals the summed reduced sweeps")
{
	std::mt19937 rng(606);
	for (std::string n : {"A1", "A2", "B2", "G2"}) {
		auto spec = algebra(n);
		auto &g = group_for(spec);
		for (int t = 0; t < 12; ++t) {
			Weight nu = random_weight(rng, spec.rank, 0, 3);
			CharPoly m = CharPoly::monomial(nu);
			CharPoly total;
			for (auto &w : g.elements())
				total += compose_over_word(spec, OpKind::d, w.word, m);
			CHECK(total == chhat(spec, m));
		}
	}
}

TEST_CASE("root partition identities, exhaustive for rank two")
{
	for (std::string n : {"B2", "G2"}) {
		auto spec = algebra(n);
		auto &g = group_for(spec);
		std::set<Weight> pos(spec.positive_roots.begin(),
		                     spec.positive_roots.end());
		for (auto &w : g.elements()) {
			std::vector<Weight> dplus, dminus;
			for (auto &b : spec.positive_roots)
				(pos.count(w.apply(b)) ? dplus : dminus).push_back(b);
			// Partition of the positive roots by the sign of the image.
			CHECK(dplus.size() + dminus.size() ==
			      spec.positive_roots.size());
			CHECK((int)dminus.size() == w.length);
			CHECK(w.det == (dminus.size() % 2 ? -1 : 1));
			for (auto &b : dplus)
				CHECK(pos.count(w.apply(b)) == 1);
			for (auto &b : dminus)
				CHECK(pos.count(negate(w.apply(b))) == 1);
			// rho - w(rho) is the sum of the inverted positive roots
			// (the images, made positive again).
			Weight s(spec.rank, 0);
			for (auto &b : dminus)
				s = add(s, negate(w.apply(b)));
			CHECK(sub(spec.weyl_vector, w.apply(spec.weyl_vector)) == s);
		}
	}
}

TEST_CASE("dominant weight enumeration")
{
	auto all = dominant_weights_up_to(2, 2);
	CHECK(all.size() == 6);
	for (auto &w : all)
		CHECK(is_dominant(w));
	CHECK(dominant_weights_up_to(3, 0) ==
	      std::vector<Weight>{{0, 0, 0}});
}
