#include "chargen/weyl.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <mutex>
#include <sstream>

namespace chargen {

Matrix identity_matrix(int r)
{
	Matrix m(r, std::vector<int>(r, 0));
	for (int i = 0; i < r; ++i)
		m[i][i] = 1;
	return m;
}

Matrix reflection_matrix(const AlgebraSpec &spec, int i)
{
	// Column k of the matrix is r_i(e_k) where e_k is the k-th fundamental
	// weight: (r_i lam)_j = lam_j - lam_{i-1} * cartan[i-1][j].
	int r = spec.rank;
	Matrix m = identity_matrix(r);
	for (int j = 0; j < r; ++j)
		m[j][i - 1] -= spec.cartan[i - 1][j];
	return m;
}

Matrix mat_mul(const Matrix &a, const Matrix &b)
{
	int r = (int)a.size();
	Matrix c(r, std::vector<int>(r, 0));
	for (int i = 0; i < r; ++i)
		for (int k = 0; k < r; ++k) {
			int av = a[i][k];
			if (av == 0)
				continue;
			for (int j = 0; j < r; ++j)
				c[i][j] += av * b[k][j];
		}
	return c;
}

Weight mat_apply(const Matrix &m, const Weight &w)
{
	int r = (int)m.size();
	Weight out(r, 0);
	for (int i = 0; i < r; ++i)
		for (int j = 0; j < r; ++j)
			out[i] += m[i][j] * w[j];
	return out;
}

Weight WeylElement::shifted_apply(const Weight &lam) const
{
	Weight shifted(lam);
	for (auto &x : shifted)
		x += 1;
	Weight out = mat_apply(matrix, shifted);
	for (auto &x : out)
		x -= 1;
	return out;
}

namespace {

Word preferred_word_for(const AlgebraSpec &spec)
{
	const std::string &n = spec.name;
	if (n.size() == 2 && n[0] == 'A' && n[1] >= '1' && n[1] <= '9' &&
	    n[1] - '0' == spec.rank) {
		int r = spec.rank;
		Word w;
		for (int j = 1; j <= r; ++j)
			for (int i = r; i >= j; --i)
				w.push_back(i);
		return w;
	}
	if (n == "B2" || n == "C2")
		return {1, 2, 1, 2};
	if (n == "G2")
		return {1, 2, 1, 2, 1, 2};
	return {};
}

} // namespace

WeylGroup::WeylGroup(const AlgebraSpec &spec, std::size_t cap) : spec_(spec)
{
	int r = spec_.rank;
	std::vector<Matrix> gens;
	for (int i = 1; i <= r; ++i)
		gens.push_back(reflection_matrix(spec_, i));

	WeylElement id{{}, identity_matrix(r), 0, 1};
	elements_.push_back(id);
	index_[id.matrix] = 0;
	// BFS over right multiplication by generators in ascending order; the
	// first word reaching an element is its ShortLex-minimal reduced word.
	for (std::size_t head = 0; head < elements_.size(); ++head) {
		WeylElement cur = elements_[head]; // copy: vector may reallocate
		for (int i = 1; i <= r; ++i) {
			Matrix m = mat_mul(cur.matrix, gens[i - 1]);
			if (index_.count(m))
				continue;
			WeylElement e;
			e.word = cur.word;
			e.word.push_back(i);
			e.matrix = m;
			e.length = cur.length + 1;
			e.det = -cur.det;
			index_[e.matrix] = (int)elements_.size();
			elements_.push_back(std::move(e));
			if (elements_.size() > cap)
				throw resource_limit_error(
				    "Weyl group enumeration exceeded element cap");
		}
	}

	for (std::size_t k = 1; k < elements_.size(); ++k)
		if (elements_[k].length > elements_[longest_].length)
			longest_ = (int)k;

	// Reflections: conjugates of the generators.
	for (auto &u : elements_)
		for (int i = 1; i <= r; ++i) {
			Matrix m = mat_mul(mat_mul(u.matrix, gens[i - 1]),
			                   inverse(u).matrix);
			reflections_.insert(m);
		}

	preferred_word_ = preferred_word_for(spec_);
	if (preferred_word_.empty())
		preferred_word_ = longest().word;
	// The hard-coded decomposition must spell the longest element.
	if (!(element_from_word(preferred_word_) == longest()) ||
	    preferred_word_.size() != (std::size_t)longest().length)
		throw std::logic_error("longest-element decomposition mismatch");
}

int WeylGroup::index_of(const Matrix &m) const
{
	auto it = index_.find(m);
	return it == index_.end() ? -1 : it->second;
}

const WeylElement &WeylGroup::element_from_word(const Word &w) const
{
	Matrix m = identity_matrix(spec_.rank);
	for (int i : w) {
		if (i < 1 || i > spec_.rank)
			throw std::out_of_range("reflection index out of range");
		m = mat_mul(m, reflection_matrix(spec_, i));
	}
	int idx = index_of(m);
	assert(idx >= 0);
	return elements_[idx];
}

const WeylElement &WeylGroup::multiply(const WeylElement &a,
                                       const WeylElement &b) const
{
	int idx = index_of(mat_mul(a.matrix, b.matrix));
	assert(idx >= 0);
	return elements_[idx];
}

const WeylElement &WeylGroup::inverse(const WeylElement &a) const
{
	// Matrices are integer orthogonal-like with finite order; invert by
	// searching the word reversed (r_i are involutions).
	Matrix m = identity_matrix(spec_.rank);
	for (auto it = a.word.rbegin(); it != a.word.rend(); ++it)
		m = mat_mul(m, reflection_matrix(spec_, *it));
	int idx = index_of(m);
	assert(idx >= 0);
	return elements_[idx];
}

bool WeylGroup::is_reflection(const Matrix &m) const
{
	return reflections_.count(m) != 0;
}

bool WeylGroup::is_bruhat_cover(const WeylElement &w,
                                const WeylElement &v) const
{
	if (v.length != w.length + 1)
		return false;
	Matrix t = mat_mul(v.matrix, inverse(w).matrix);
	return is_reflection(t);
}

std::vector<std::pair<int, int>> WeylGroup::bruhat_covers() const
{
	std::vector<std::pair<int, int>> out;
	for (std::size_t a = 0; a < elements_.size(); ++a)
		for (std::size_t b = 0; b < elements_.size(); ++b)
			if (is_bruhat_cover(elements_[a], elements_[b]))
				out.emplace_back((int)a, (int)b);
	return out;
}

std::string spec_key(const AlgebraSpec &spec)
{
	std::ostringstream os;
	os << spec.name << ":" << spec.rank;
	for (auto &row : spec.cartan)
		for (int x : row)
			os << "," << x;
	return os.str();
}

const WeylGroup &group_for(const AlgebraSpec &spec)
{
	static std::mutex mu;
	static std::map<std::string, std::unique_ptr<WeylGroup>> cache;
	std::lock_guard<std::mutex> lk(mu);
	auto key = spec_key(spec);
	auto it = cache.find(key);
	if (it == cache.end())
		it = cache.emplace(key, std::make_unique<WeylGroup>(spec)).first;
	return *it->second;
}

std::set<Weight> orbit(const AlgebraSpec &spec, const Weight &lam)
{
	std::set<Weight> seen{lam};
	std::deque<Weight> q{lam};
	while (!q.empty()) {
		Weight w = q.front();
		q.pop_front();
		for (int i = 1; i <= spec.rank; ++i) {
			Weight n = reflect(spec, i, w);
			if (seen.insert(n).second)
				q.push_back(n);
		}
	}
	return seen;
}

Weight apply_word(const AlgebraSpec &spec, const Word &word, const Weight &w)
{
	Weight cur = w;
	for (auto it = word.rbegin(); it != word.rend(); ++it)
		cur = reflect(spec, *it, cur);
	return cur;
}

Word min_word_to_weight(const AlgebraSpec &spec, const Weight &source,
                        const Weight &target)
{
	// BFS distances over the orbit, then reconstruct the ShortLex-minimal
	// word front-to-back: the leftmost letter is the last reflection applied,
	// so pick the smallest i with dist(r_i target) == dist(target) - 1 and
	// recurse towards the source.
	std::map<Weight, int> dist{{source, 0}};
	std::deque<Weight> q{source};
	while (!q.empty()) {
		Weight w = q.front();
		q.pop_front();
		int d = dist[w];
		for (int i = 1; i <= spec.rank; ++i) {
			Weight n = reflect(spec, i, w);
			if (!dist.count(n)) {
				dist[n] = d + 1;
				q.push_back(n);
			}
		}
	}
	auto it = dist.find(target);
	if (it == dist.end())
		throw no_path_error("target weight " + weight_str(target) +
		                    " not in the orbit of " + weight_str(source));
	Word word;
	Weight cur = target;
	int d = it->second;
	while (d > 0) {
		bool found = false;
		for (int i = 1; i <= spec.rank; ++i) {
			Weight n = reflect(spec, i, cur);
			auto jt = dist.find(n);
			if (jt != dist.end() && jt->second == d - 1) {
				word.push_back(i);
				cur = n;
				d -= 1;
				found = true;
				break;
			}
		}
		assert(found);
	}
	return word;
}

} // namespace chargen
