#include "chargen/polyengine.hpp"

#include <cassert>
#include <sstream>

namespace chargen {

int total_degree(const Weight &exp)
{
	int s = 0;
	for (int x : exp)
		s += x;
	return s;
}

CharPoly CharPoly::monomial(const Weight &exp, Coeff c)
{
	CharPoly p;
	if (c != 0)
		p.terms[exp] = std::move(c);
	return p;
}

CharPoly CharPoly::constant(int rank, Coeff c)
{
	return monomial(Weight(rank, 0), std::move(c));
}

Coeff CharPoly::coeff(const Weight &exp) const
{
	auto it = terms.find(exp);
	return it == terms.end() ? Coeff(0) : it->second;
}

void CharPoly::add_term(const Weight &exp, const Coeff &c)
{
	if (c == 0)
		return;
	auto it = terms.find(exp);
	if (it == terms.end()) {
		terms.emplace(exp, c);
		return;
	}
	it->second += c;
	if (it->second == 0)
		terms.erase(it);
}

CharPoly CharPoly::operator+(const CharPoly &o) const
{
	CharPoly r = *this;
	r += o;
	return r;
}

CharPoly &CharPoly::operator+=(const CharPoly &o)
{
	for (auto &[e, c] : o.terms)
		add_term(e, c);
	return *this;
}

CharPoly CharPoly::operator-(const CharPoly &o) const
{
	CharPoly r = *this;
	r -= o;
	return r;
}

CharPoly &CharPoly::operator-=(const CharPoly &o)
{
	for (auto &[e, c] : o.terms)
		add_term(e, -c);
	return *this;
}

CharPoly CharPoly::operator-() const
{
	CharPoly r;
	for (auto &[e, c] : terms)
		r.terms[e] = -c;
	return r;
}

CharPoly CharPoly::operator*(const Coeff &c) const
{
	CharPoly r;
	if (c == 0)
		return r;
	for (auto &[e, k] : terms)
		r.terms[e] = k * c;
	return r;
}

CharPoly CharPoly::operator*(const CharPoly &o) const
{
	CharPoly r;
	for (auto &[e1, c1] : terms)
		for (auto &[e2, c2] : o.terms)
			r.add_term(add(e1, e2), c1 * c2);
	return r;
}

std::string CharPoly::str() const
{
	if (terms.empty())
		return "0";
	std::ostringstream os;
	bool first = true;
	for (auto &[e, c] : terms) {
		if (!first)
			os << " + ";
		first = false;
		os << c << "*a^" << weight_str(e);
	}
	return os.str();
}

Coeff specialize_a_one(const CharPoly &p)
{
	Coeff s = 0;
	for (auto &[e, c] : p.terms)
		s += c;
	return s;
}

CharPoly weyl_act(const WeylElement &w, const CharPoly &p)
{
	CharPoly r;
	for (auto &[e, c] : p.terms)
		r.add_term(w.apply(e), c);
	return r;
}

GenSeries GenSeries::one(int rank, int trunc)
{
	GenSeries s(rank, trunc);
	s.coeffs[Weight(rank, 0)] = CharPoly::constant(rank, 1);
	return s;
}

GenSeries GenSeries::monomial(int rank, int trunc, const Weight &lexp,
                              const Weight &aexp, Coeff c)
{
	GenSeries s(rank, trunc);
	if (total_degree(lexp) <= trunc && c != 0)
		s.coeffs[lexp] = CharPoly::monomial(aexp, std::move(c));
	return s;
}

const CharPoly &GenSeries::coeff(const Weight &lexp) const
{
	static const CharPoly zero;
	auto it = coeffs.find(lexp);
	return it == coeffs.end() ? zero : it->second;
}

void GenSeries::add_term(const Weight &lexp, const CharPoly &p)
{
	assert((int)lexp.size() == rank);
	for (int x : lexp)
		assert(x >= 0);
	if (total_degree(lexp) > trunc || p.is_zero())
		return;
	auto it = coeffs.find(lexp);
	if (it == coeffs.end()) {
		coeffs.emplace(lexp, p);
		return;
	}
	it->second += p;
	if (it->second.is_zero())
		coeffs.erase(it);
}

GenSeries GenSeries::operator+(const GenSeries &o) const
{
	assert(rank == o.rank);
	GenSeries r(rank, std::min(trunc, o.trunc));
	for (auto &[l, p] : coeffs)
		r.add_term(l, p);
	for (auto &[l, p] : o.coeffs)
		r.add_term(l, p);
	return r;
}

GenSeries GenSeries::operator-(const GenSeries &o) const
{
	return *this + (-o);
}

GenSeries GenSeries::operator-() const
{
	GenSeries r(rank, trunc);
	for (auto &[l, p] : coeffs)
		r.coeffs[l] = -p;
	return r;
}

GenSeries GenSeries::operator*(const GenSeries &o) const
{
	assert(rank == o.rank);
	GenSeries r(rank, std::min(trunc, o.trunc));
	for (auto &[l1, p1] : coeffs) {
		int d1 = total_degree(l1);
		if (d1 > r.trunc)
			continue;
		for (auto &[l2, p2] : o.coeffs) {
			if (d1 + total_degree(l2) > r.trunc)
				continue;
			r.add_term(add(l1, l2), p1 * p2);
		}
	}
	return r;
}

bool GenSeries::operator==(const GenSeries &o) const
{
	return rank == o.rank && coeffs == o.coeffs;
}

GenSeries GenSeries::with_trunc(int n) const
{
	GenSeries r(rank, n);
	for (auto &[l, p] : coeffs)
		if (total_degree(l) <= n)
			r.coeffs[l] = p;
	return r;
}

int GenSeries::min_l_degree() const
{
	int best = -1;
	for (auto &[l, p] : coeffs) {
		int d = total_degree(l);
		if (best < 0 || d < best)
			best = d;
	}
	return best;
}

std::string GenSeries::str() const
{
	if (coeffs.empty())
		return "0";
	std::ostringstream os;
	bool first = true;
	for (auto &[l, p] : coeffs) {
		if (!first)
			os << " + ";
		first = false;
		os << "L^" << weight_str(l) << "*(" << p.str() << ")";
	}
	return os.str();
}

GenSeries bracket(const GenSeries &x)
{
	int d = x.min_l_degree();
	if (d == 0)
		throw non_invertible_series_error(
		    "geometric series requires argument with no L-degree-0 term");
	GenSeries result = GenSeries::one(x.rank, x.trunc);
	GenSeries pow = GenSeries::one(x.rank, x.trunc);
	while (true) {
		pow = pow * x;
		if (pow.is_zero())
			break;
		result = result + pow;
	}
	return result;
}

GenSeries weyl_act(const WeylElement &w, const GenSeries &s)
{
	GenSeries r(s.rank, s.trunc);
	for (auto &[l, p] : s.coeffs)
		r.coeffs[l] = weyl_act(w, p);
	return r;
}

} // namespace chargen
