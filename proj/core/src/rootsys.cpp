#include "chargen/rootsys.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <set>
#include <sstream>

namespace chargen {

bool is_dominant(const Weight &w)
{
	return std::all_of(w.begin(), w.end(), [](int x) { return x >= 0; });
}

Weight add(const Weight &a, const Weight &b)
{
	assert(a.size() == b.size());
	Weight r(a.size());
	for (size_t i = 0; i < a.size(); ++i)
		r[i] = a[i] + b[i];
	return r;
}

Weight sub(const Weight &a, const Weight &b)
{
	assert(a.size() == b.size());
	Weight r(a.size());
	for (size_t i = 0; i < a.size(); ++i)
		r[i] = a[i] - b[i];
	return r;
}

Weight negate(const Weight &a)
{
	Weight r(a.size());
	for (size_t i = 0; i < a.size(); ++i)
		r[i] = -a[i];
	return r;
}

Weight reflect(const AlgebraSpec &spec, int i, const Weight &lam)
{
	assert(i >= 1 && i <= spec.rank);
	assert((int)lam.size() == spec.rank);
	Weight r = lam;
	int c = lam[i - 1];
	for (int j = 0; j < spec.rank; ++j)
		r[j] -= c * spec.cartan[i - 1][j];
	return r;
}

Weight shifted_reflect(const AlgebraSpec &spec, int i, const Weight &lam)
{
	Weight r = lam;
	int c = lam[i - 1] + 1; // label of lam + rho
	for (int j = 0; j < spec.rank; ++j)
		r[j] -= c * spec.cartan[i - 1][j];
	return r;
}

std::vector<Rational> simple_root_coords(const AlgebraSpec &spec,
                                         const Weight &w)
{
	// Solve c * C = w for the row vector c, i.e. C^T c = w, by Gaussian
	// elimination over rationals (rank is tiny).
	int r = spec.rank;
	std::vector<std::vector<Rational>> m(r, std::vector<Rational>(r + 1));
	for (int i = 0; i < r; ++i) {
		for (int j = 0; j < r; ++j)
			m[i][j] = Rational(spec.cartan[j][i]);
		m[i][r] = Rational(w[i]);
	}
	for (int col = 0; col < r; ++col) {
		int piv = -1;
		for (int row = col; row < r; ++row)
			if (m[row][col] != Rational(0)) {
				piv = row;
				break;
			}
		assert(piv >= 0 && "Cartan matrix must be invertible");
		std::swap(m[col], m[piv]);
		Rational d = m[col][col];
		for (int j = col; j <= r; ++j)
			m[col][j] /= d;
		for (int row = 0; row < r; ++row) {
			if (row == col)
				continue;
			Rational f = m[row][col];
			if (f == Rational(0))
				continue;
			for (int j = col; j <= r; ++j)
				m[row][j] -= f * m[col][j];
		}
	}
	std::vector<Rational> c(r);
	for (int i = 0; i < r; ++i)
		c[i] = m[i][r];
	return c;
}

Rational inner_product(const AlgebraSpec &spec, const Weight &u,
                       const Weight &v)
{
	// (u, alpha_j) = u_j * d_j, so with v = sum_j c_j alpha_j we get
	// (u, v) = sum_j c_j u_j d_j.
	auto c = simple_root_coords(spec, v);
	Rational s(0);
	for (int j = 0; j < spec.rank; ++j)
		s += c[j] * Rational(u[j]) * Rational(spec.sym[j]);
	return s;
}

std::string weight_str(const Weight &w)
{
	std::ostringstream os;
	os << "(";
	for (size_t i = 0; i < w.size(); ++i)
		os << (i ? "," : "") << w[i];
	os << ")";
	return os.str();
}

namespace {

std::vector<long long> compute_symmetrizers(
    const std::vector<std::vector<int>> &cartan)
{
	int r = (int)cartan.size();
	std::vector<Rational> d(r, Rational(0));
	d[0] = Rational(1);
	// With row i holding the labels of alpha_i, cartan[i][j] * d_j =
	// (alpha_i, alpha_j) = cartan[j][i] * d_i; propagate across the graph.
	bool changed = true;
	while (changed) {
		changed = false;
		for (int i = 0; i < r; ++i)
			for (int j = 0; j < r; ++j) {
				if (i == j || cartan[i][j] == 0)
					continue;
				if (d[i] != Rational(0) && d[j] == Rational(0)) {
					d[j] = d[i] * Rational(cartan[j][i]) /
					       Rational(cartan[i][j]);
					changed = true;
				}
			}
	}
	for (int i = 0; i < r; ++i)
		if (d[i] == Rational(0))
			d[i] = Rational(1); // disconnected node
	long long lcm = 1;
	for (auto &x : d)
		lcm = std::lcm(lcm, x.denominator());
	std::vector<long long> out(r);
	for (int i = 0; i < r; ++i) {
		Rational v = d[i] * Rational(lcm);
		assert(v.denominator() == 1);
		out[i] = v.numerator();
	}
	long long g = 0;
	for (auto v : out)
		g = std::gcd(g, v);
	for (auto &v : out)
		v /= g;
	return out;
}

} // namespace

AlgebraSpec algebra_from_cartan(const std::string &name,
                                const std::vector<std::vector<int>> &cartan)
{
	int r = (int)cartan.size();
	if (r < 1)
		throw unsupported_algebra_error("empty Cartan matrix");
	for (auto &row : cartan) {
		if ((int)row.size() != r)
			throw unsupported_algebra_error("Cartan matrix not square");
	}
	for (int i = 0; i < r; ++i) {
		if (cartan[i][i] != 2)
			throw unsupported_algebra_error("Cartan diagonal must be 2");
		for (int j = 0; j < r; ++j)
			if (i != j && cartan[i][j] > 0)
				throw unsupported_algebra_error(
				    "off-diagonal Cartan entries must be <= 0");
	}
	// Reject singular matrices (e.g. affine Cartan matrices) up front.
	{
		std::vector<std::vector<Rational>> m(r, std::vector<Rational>(r));
		for (int i = 0; i < r; ++i)
			for (int j = 0; j < r; ++j)
				m[i][j] = Rational(cartan[i][j]);
		for (int col = 0; col < r; ++col) {
			int piv = -1;
			for (int row = col; row < r; ++row)
				if (m[row][col] != Rational(0)) {
					piv = row;
					break;
				}
			if (piv < 0)
				throw unsupported_algebra_error(
				    "Cartan matrix is singular");
			std::swap(m[col], m[piv]);
			for (int row = col + 1; row < r; ++row) {
				Rational f = m[row][col] / m[col][col];
				for (int j = col; j < r; ++j)
					m[row][j] -= f * m[col][j];
			}
		}
	}

	AlgebraSpec spec;
	spec.name = name;
	spec.rank = r;
	spec.cartan = cartan;
	for (int i = 0; i < r; ++i)
		spec.simple_roots.push_back(Weight(cartan[i].begin(), cartan[i].end()));
	spec.weyl_vector = Weight(r, 1);
	spec.sym = compute_symmetrizers(cartan);

	// Full root system: close the simple roots under all primitive
	// reflections, then keep the roots whose simple-root coordinates are
	// all non-negative.
	std::set<Weight> roots(spec.simple_roots.begin(), spec.simple_roots.end());
	std::vector<Weight> frontier(spec.simple_roots);
	size_t cap = 1 << 20;
	while (!frontier.empty()) {
		std::vector<Weight> next;
		for (auto &b : frontier)
			for (int i = 1; i <= r; ++i) {
				Weight g = reflect(spec, i, b);
				if (roots.insert(g).second)
					next.push_back(g);
			}
		if (roots.size() > cap)
			throw unsupported_algebra_error(
			    "root system closure exceeded cap (non-finite Cartan matrix?)");
		frontier = std::move(next);
	}
	for (auto &b : roots) {
		auto c = simple_root_coords(spec, b);
		bool pos = std::all_of(c.begin(), c.end(),
		                       [](const Rational &x) { return x >= Rational(0); });
		if (pos)
			spec.positive_roots.push_back(b);
	}
	std::sort(spec.positive_roots.begin(), spec.positive_roots.end());

	// Sanity: twice the Weyl vector is the sum of the positive roots.
	Weight s(r, 0);
	for (auto &b : spec.positive_roots)
		s = add(s, b);
	Weight rho2(r, 2);
	if (s != rho2)
		throw unsupported_algebra_error(
		    "positive-root closure inconsistent with the Weyl vector");
	return spec;
}

AlgebraSpec algebra(const std::string &name)
{
	if (name.size() == 2 && name[0] == 'A' && name[1] >= '1' && name[1] <= '9') {
		int r = name[1] - '0';
		std::vector<std::vector<int>> c(r, std::vector<int>(r, 0));
		for (int i = 0; i < r; ++i) {
			c[i][i] = 2;
			if (i > 0)
				c[i][i - 1] = -1;
			if (i + 1 < r)
				c[i][i + 1] = -1;
		}
		return algebra_from_cartan(name, c);
	}
	if (name == "B2")
		return algebra_from_cartan(name, {{2, -2}, {-1, 2}});
	if (name == "C2")
		return algebra_from_cartan(name, {{2, -1}, {-2, 2}});
	if (name == "G2")
		return algebra_from_cartan(name, {{2, -3}, {-1, 2}});
	throw unsupported_algebra_error("unsupported algebra: " + name);
}

} // namespace chargen
