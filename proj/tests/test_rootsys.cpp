#include "test_util.hpp"

#include <doctest.h>

using namespace chargen;
using testutil::random_weight;

TEST_CASE("built-in algebra data")
{
	auto b2 = algebra("B2");
	CHECK(b2.rank == 2);
	CHECK(b2.simple_roots[0] == Weight{2, -2});
	CHECK(b2.simple_roots[1] == Weight{-1, 2});
	CHECK(b2.sym == std::vector<long long>{2, 1});

	auto g2 = algebra("G2");
	CHECK(g2.simple_roots[0] == Weight{2, -3});
	CHECK(g2.simple_roots[1] == Weight{-1, 2});
	CHECK(g2.sym == std::vector<long long>{3, 1});

	auto a1 = algebra("A1");
	CHECK(a1.rank == 1);
	CHECK(a1.simple_roots[0] == Weight{2});
	CHECK(a1.weyl_vector == Weight{1});

	CHECK(algebra("A2").sym == std::vector<long long>{1, 1});
	CHECK(algebra("C2").sym == std::vector<long long>{1, 2});
}

TEST_CASE("positive root counts and Weyl-vector identity")
{
	auto count = [](const std::string &n) {
		return algebra(n).positive_roots.size();
	};
	CHECK(count("A1") == 1);
	CHECK(count("A2") == 3);
	CHECK(count("A3") == 6);
	CHECK(count("A4") == 10);
	CHECK(count("B2") == 4);
	CHECK(count("C2") == 4);
	CHECK(count("G2") == 6);

	for (std::string n : {"A1", "A2", "A3", "B2", "C2", "G2"}) {
		auto spec = algebra(n);
		Weight s(spec.rank, 0);
		for (auto &b : spec.positive_roots)
			s = add(s, b);
		Weight rho2(spec.rank, 2);
		CHECK(s == rho2); // 2*rho = sum of positive roots
		for (auto &alpha : spec.simple_roots)
			CHECK(std::count(spec.positive_roots.begin(),
			                 spec.positive_roots.end(), alpha) == 1);
	}
}

TEST_CASE("reflections")
{
	auto b2 = algebra("B2");
	CHECK(reflect(b2, 1, {1, 0}) == Weight{-1, 2});
	auto g2 = algebra("G2");
	CHECK(reflect(g2, 2, {0, 1}) == Weight{1, -1});
	CHECK(reflect(g2, 1, {0, 0}) == Weight{0, 0});

	// Involutivity on random weights.
	std::mt19937 rng(7);
	for (int t = 0; t < 50; ++t) {
		Weight w = random_weight(rng, 2, -4, 4);
		for (int i = 1; i <= 2; ++i) {
			CHECK(reflect(b2, i, reflect(b2, i, w)) == w);
			CHECK(reflect(g2, i, reflect(g2, i, w)) == w);
		}
	}
}

TEST_CASE("shifted reflections")
{
	auto b2 = algebra("B2");
	CHECK(shifted_reflect(b2, 1, {-2, 3}) == Weight{0, 1});
	CHECK(shifted_reflect(b2, 2, {1, -2}) == Weight{0, 0});
	// A weight with label -1 sits on the reflection wall.
	CHECK(shifted_reflect(b2, 1, {-1, 2}) == Weight{-1, 2});
	CHECK(shifted_reflect(b2, 2, {3, -1}) == Weight{3, -1});
}

TEST_CASE("simple reflections permute the other positive roots")
{
	for (std::string n : {"A2", "A3", "B2", "G2"}) {
		auto spec = algebra(n);
		std::set<Weight> pos(spec.positive_roots.begin(),
		                     spec.positive_roots.end());
		for (int i = 1; i <= spec.rank; ++i) {
			for (auto &b : spec.positive_roots) {
				Weight rb = reflect(spec, i, b);
				if (b == spec.simple_roots[i - 1])
					CHECK(rb == negate(b));
				else
					CHECK(pos.count(rb) == 1);
			}
		}
	}
}

TEST_CASE("simple-root coordinates and the bilinear form")
{
	auto g2 = algebra("G2");
	for (int i = 0; i < 2; ++i) {
		auto c = simple_root_coords(g2, g2.simple_roots[i]);
		for (int j = 0; j < 2; ++j)
			CHECK(c[j] == Rational(i == j ? 1 : 0));
	}
	// Symmetry and the normalization (alpha_i, alpha_i) = 2 d_i.
	std::mt19937 rng(11);
	for (int t = 0; t < 30; ++t) {
		Weight u = random_weight(rng, 2, -3, 3);
		Weight v = random_weight(rng, 2, -3, 3);
		CHECK(inner_product(g2, u, v) == inner_product(g2, v, u));
	}
	for (int i = 0; i < 2; ++i)
		CHECK(inner_product(g2, g2.simple_roots[i], g2.simple_roots[i]) ==
		      Rational(2 * g2.sym[i]));
}

TEST_CASE("dominance and arithmetic")
{
	CHECK(is_dominant({0, 0}));
	CHECK(is_dominant({2, 1}));
	CHECK(!is_dominant({1, -1}));
	CHECK(add({1, 2}, {3, -1}) == Weight{4, 1});
	CHECK(sub({1, 2}, {3, -1}) == Weight{-2, 3});
	CHECK(negate({1, -2}) == Weight{-1, 2});
}

TEST_CASE("bad input rejected")
{
	CHECK_THROWS_AS(algebra("F4"), unsupported_algebra_error);
	CHECK_THROWS_AS(algebra("Q1"), unsupported_algebra_error);
	CHECK_THROWS_AS(algebra_from_cartan("bad", {{2, -1}}),
	                unsupported_algebra_error);
	CHECK_THROWS_AS(algebra_from_cartan("bad", {{2, 1}, {1, 2}}),
	                unsupported_algebra_error);
	CHECK_THROWS_AS(algebra_from_cartan("bad", {{1, -1}, {-1, 1}}),
	                unsupported_algebra_error);
	// An affine (singular) Cartan matrix must not loop forever.
	CHECK_THROWS(algebra_from_cartan("affine", {{2, -2}, {-2, 2}}));
}

TEST_CASE("custom Cartan matrix reproduces a built-in algebra")
{
	auto builtin = algebra("G2");
	auto custom = algebra_from_cartan("mine", {{2, -3}, {-1, 2}});
	CHECK(custom.positive_roots == builtin.positive_roots);
	CHECK(custom.sym == builtin.sym);
}
