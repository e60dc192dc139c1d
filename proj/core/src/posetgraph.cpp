#include "chargen/posetgraph.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <sstream>

namespace chargen {

namespace {

Weight fundamental_weight(int rank, int j) // 1-based
{
	Weight w(rank, 0);
	w[j - 1] = 1;
	return w;
}

std::string vertex_name(std::size_t idx)
{
	if (idx < 26)
		return std::string(1, (char)('A' + idx));
	return "V" + std::to_string(idx);
}

// Adjacency over vertex indices, with reachability helper.
std::vector<std::vector<int>> adjacency(int n,
                                        const std::vector<std::pair<int, int>> &edges)
{
	std::vector<std::vector<int>> adj(n);
	for (auto &[a, b] : edges)
		adj[a].push_back(b);
	for (auto &v : adj)
		std::sort(v.begin(), v.end());
	return adj;
}

std::vector<std::vector<bool>> reachability(int n,
                                            const std::vector<std::vector<int>> &adj)
{
	std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
	for (int s = 0; s < n; ++s) {
		std::vector<int> stack{s};
		while (!stack.empty()) {
			int u = stack.back();
			stack.pop_back();
			for (int v : adj[u])
				if (!reach[s][v]) {
					reach[s][v] = true;
					stack.push_back(v);
				}
		}
	}
	return reach;
}

} // namespace

GenSeries GeneratorGraph::vertex_label(int v, int trunc) const
{
	const OrbitVertex &ov = vertices[v];
	return GenSeries::monomial(spec.rank, trunc, ov.fundamental, ov.weight);
}

bool GeneratorGraph::same_shape_edge(int a, int b) const
{
	return vertices[a].shape == vertices[b].shape;
}

bool GeneratorGraph::is_extra_edge(int a, int b) const
{
	return std::find(extra_edges.begin(), extra_edges.end(),
	                 std::make_pair(a, b)) != extra_edges.end();
}

int GeneratorGraph::vertex_by_name(const std::string &name) const
{
	for (std::size_t i = 0; i < vertices.size(); ++i)
		if (vertices[i].name == name)
			return (int)i;
	return -1;
}

GeneratorGraph build_orbit_poset(const AlgebraSpec &spec)
{
	const WeylGroup &g = group_for(spec);
	const Word &wl = g.preferred_longest_word();

	GeneratorGraph graph;
	graph.spec = spec;

	// Witness of the top vertex of each shape: the longest suffix of the
	// preferred longest-element word whose product fixes the fundamental.
	struct ShapeInfo {
		Weight fund;
		Word suffix;
		int suffix_len;
	};
	std::vector<ShapeInfo> shapes;
	for (int j = 1; j <= spec.rank; ++j) {
		Weight lam = fundamental_weight(spec.rank, j);
		Word best;
		for (std::size_t k = 0; k <= wl.size(); ++k) {
			Word suffix(wl.begin() + (wl.size() - k), wl.end());
			if (apply_word(spec, suffix, lam) == lam)
				best = suffix;
		}
		shapes.push_back({lam, best, (int)best.size()});
	}
	std::stable_sort(shapes.begin(), shapes.end(),
	                 [](const ShapeInfo &a, const ShapeInfo &b) {
		                 return a.suffix_len < b.suffix_len;
	                 });
	for (std::size_t i = 0; i + 1 < shapes.size(); ++i)
		if (shapes[i].suffix_len == shapes[i + 1].suffix_len)
			throw construction_error(
			    "fundamentals are not totally ordered by witness length");

	for (auto &sh : shapes)
		graph.shape_funds.push_back(sh.fund);

	// Vertices: every orbit weight of every shape, with witness
	// (minimal word to the weight) * (top witness).
	for (std::size_t s = 0; s < shapes.size(); ++s) {
		std::vector<OrbitVertex> shape_vertices;
		for (auto &mu : orbit(spec, shapes[s].fund)) {
			OrbitVertex v;
			v.shape = (int)s;
			v.fundamental = shapes[s].fund;
			v.weight = mu;
			Word word = min_word_to_weight(spec, shapes[s].fund, mu);
			word.insert(word.end(), shapes[s].suffix.begin(),
			            shapes[s].suffix.end());
			v.witness = g.element_from_word(word);
			if (!(v.witness.apply(shapes[s].fund) == mu))
				throw construction_error("witness does not map the "
				                         "fundamental to its orbit weight");
			shape_vertices.push_back(std::move(v));
		}
		std::sort(shape_vertices.begin(), shape_vertices.end(),
		          [](const OrbitVertex &a, const OrbitVertex &b) {
			          if (a.witness.length != b.witness.length)
				          return a.witness.length < b.witness.length;
			          return a.witness.word < b.witness.word;
		          });
		for (auto &v : shape_vertices)
			graph.vertices.push_back(std::move(v));
	}
	for (std::size_t i = 0; i < graph.vertices.size(); ++i)
		graph.vertices[i].name = vertex_name(i);

	int n = (int)graph.vertices.size();
	// Same-shape covers: Bruhat covers between witnesses (shorter witness is
	// the greater poset element).
	std::vector<std::pair<int, int>> edges;
	for (int a = 0; a < n; ++a)
		for (int b = 0; b < n; ++b) {
			if (a == b || graph.vertices[a].shape != graph.vertices[b].shape)
				continue;
			if (g.is_bruhat_cover(graph.vertices[a].witness,
			                      graph.vertices[b].witness))
				edges.emplace_back(a, b);
		}
	// Cross-shape covers: adjacent shapes, identical witnesses.
	for (int a = 0; a < n; ++a)
		for (int b = 0; b < n; ++b) {
			if (graph.vertices[b].shape != graph.vertices[a].shape + 1)
				continue;
			if (graph.vertices[a].witness == graph.vertices[b].witness)
				edges.emplace_back(a, b);
		}

	// Transitive reduction.
	auto adj = adjacency(n, edges);
	auto reach = reachability(n, adj);
	for (auto &[a, b] : edges) {
		bool implied = false;
		for (int m = 0; m < n && !implied; ++m)
			if (m != a && m != b && reach[a][m] && reach[m][b])
				implied = true;
		if (!implied)
			graph.hasse_edges.emplace_back(a, b);
	}

	// Structural checks: a unique source from which everything is reachable.
	std::vector<int> indeg(n, 0);
	for (auto &[a, b] : graph.hasse_edges)
		indeg[b] += 1;
	int source = -1;
	for (int v = 0; v < n; ++v)
		if (indeg[v] == 0) {
			if (source >= 0)
				throw construction_error("orbit poset has multiple maxima");
			source = v;
		}
	if (source < 0)
		throw construction_error("orbit poset has no maximum");
	auto hadj = adjacency(n, graph.hasse_edges);
	auto hreach = reachability(n, hadj);
	for (int v = 0; v < n; ++v)
		if (v != source && !hreach[source][v])
			throw construction_error("orbit poset is not connected");
	graph.source = source;
	return graph;
}

GenSeries edge_demazure_data(const AlgebraSpec &spec, const Weight &fund,
                             const Weight &upper, const Weight &lower)
{
	const WeylGroup &g = group_for(spec);
	Weight bottom = g.longest().apply(fund);

	GenSeries top_mono = GenSeries::monomial(spec.rank, 1, fund, fund);
	GenSeries bot_mono = GenSeries::monomial(spec.rank, 1, fund, bottom);

	Word t2 = min_word_to_weight(spec, fund, lower);
	Word b1 = min_word_to_weight(spec, bottom, upper);
	GenSeries down = compose_over_word(spec, OpKind::d, t2, top_mono);
	GenSeries up = compose_over_word(spec, OpKind::d_neg, b1, bot_mono);

	// Every term of a sweep is produced by its leftmost operator, i.e. along
	// the simple-root string of the word's first letter. For weights of
	// multiplicity >= 2 in the fundamental module that string identifies
	// which copy of the weight vector is meant, so such terms only match
	// when the two sweeps end along the same string direction.
	bool strings_agree = !t2.empty() && !b1.empty() && t2.front() == b1.front();
	const CharPoly &fund_char = weyl_character(spec, fund);

	GenSeries common(spec.rank, 1);
	for (auto &[lexp, p] : down.coeffs) {
		const CharPoly &q = up.coeff(lexp);
		CharPoly both;
		for (auto &[aexp, c] : p.terms) {
			Coeff c2 = q.coeff(aexp);
			if (c2 == 0)
				continue;
			if (fund_char.coeff(aexp) >= 2 && !strings_agree)
				continue;
			if (c2 != c)
				throw construction_error(
				    "sweep overlap with inconsistent coefficients at a^" +
				    weight_str(aexp));
			both.add_term(aexp, c);
		}
		common.add_term(lexp, both);
	}
	return common;
}

GeneratorGraph build_generator_graph(const AlgebraSpec &spec)
{
	GeneratorGraph graph = build_orbit_poset(spec);
	int n = (int)graph.vertices.size();
	auto hadj = adjacency(n, graph.hasse_edges);
	auto hreach = reachability(n, hadj);

	for (int a = 0; a < n; ++a)
		for (int b = 0; b < n; ++b) {
			if (a == b || graph.vertices[a].shape != graph.vertices[b].shape)
				continue;
			if (!hreach[a][b])
				continue;
			GenSeries d = edge_demazure_data(spec,
			                                 graph.vertices[a].fundamental,
			                                 graph.vertices[a].weight,
			                                 graph.vertices[b].weight);
			bool is_hasse =
			    std::find(graph.hasse_edges.begin(), graph.hasse_edges.end(),
			              std::make_pair(a, b)) != graph.hasse_edges.end();
			if (is_hasse)
				graph.edge_d.emplace(std::make_pair(a, b), std::move(d));
			else if (!d.is_zero()) {
				graph.extra_edges.emplace_back(a, b);
				graph.edge_d.emplace(std::make_pair(a, b), std::move(d));
			}
		}
	std::sort(graph.extra_edges.begin(), graph.extra_edges.end());
	return graph;
}

std::vector<std::array<int, 3>> all_links(const GeneratorGraph &g)
{
	int n = (int)g.vertices.size();
	// Endpoint-extended cover edges.
	std::vector<std::pair<int, int>> edges = g.hasse_edges;
	std::vector<int> indeg(n, 0), outdeg(n, 0);
	for (auto &[a, b] : g.hasse_edges) {
		indeg[b]++;
		outdeg[a]++;
	}
	for (int v = 0; v < n; ++v) {
		if (indeg[v] == 0)
			edges.emplace_back(kTopNode, v);
		if (outdeg[v] == 0)
			edges.emplace_back(v, kBottomNode);
	}
	std::vector<std::array<int, 3>> links;
	for (auto &[a, b] : edges)
		for (auto &[c, d] : edges)
			if (b == c && b >= 0)
				links.push_back({a, b, d});
	std::sort(links.begin(), links.end());
	return links;
}

namespace {

// Endpoint-extended adjacency keyed by id+2 (so kBottomNode -> 0, kTopNode -> 1,
// vertex v -> v+2).
struct ExtPoset {
	int n;
	std::vector<std::vector<int>> adj; // size n+2
	static int key(int id) { return id + 2; }
	static int id(int key) { return key - 2; }
};

ExtPoset extended_poset(const GeneratorGraph &g)
{
	int n = (int)g.vertices.size();
	ExtPoset p;
	p.n = n;
	p.adj.assign(n + 2, {});
	std::vector<int> indeg(n, 0), outdeg(n, 0);
	for (auto &[a, b] : g.hasse_edges) {
		p.adj[ExtPoset::key(a)].push_back(ExtPoset::key(b));
		indeg[b]++;
		outdeg[a]++;
	}
	for (int v = 0; v < n; ++v) {
		if (indeg[v] == 0)
			p.adj[ExtPoset::key(kTopNode)].push_back(ExtPoset::key(v));
		if (outdeg[v] == 0)
			p.adj[ExtPoset::key(v)].push_back(ExtPoset::key(kBottomNode));
	}
	return p;
}

} // namespace

bool is_valid_linking(const GeneratorGraph &g, const Linking &l)
{
	ExtPoset p = extended_poset(g);
	int m = p.n + 2;
	auto reach = reachability(m, p.adj);

	// Count all-plus saturated chains between every comparable pair.
	for (int uk = 0; uk < m; ++uk)
		for (int vk = 0; vk < m; ++vk) {
			if (uk == vk || !reach[uk][vk])
				continue;
			long long count = 0;
			// DFS over paths u -> v avoiding minus links.
			std::vector<int> path{uk};
			std::function<void()> dfs = [&]() {
				int cur = path.back();
				if (cur == vk) {
					count++;
					return;
				}
				for (int nk : p.adj[cur]) {
					if (nk != vk && !reach[nk][vk])
						continue;
					if (path.size() >= 2) {
						std::array<int, 3> link{
						    ExtPoset::id(path[path.size() - 2]),
						    ExtPoset::id(cur), ExtPoset::id(nk)};
						if (l.minus.count(link))
							continue;
					}
					path.push_back(nk);
					dfs();
					path.pop_back();
				}
			};
			dfs();
			if (count != 1)
				return false;
		}
	return true;
}

Linking default_linking(const GeneratorGraph &g)
{
	// Group the links by their endpoints: for a fixed pair (x, z) two rank
	// levels apart, the saturated chains x > y > z correspond to the links
	// (x, y, z), and exactly one of them must stay plus. Links that share
	// their endpoints with no other link are forced plus. The choice of
	// which chain survives is made per diamond; validity over longer
	// intervals is then checked globally, backtracking over the choices.
	std::map<std::pair<int, int>, std::vector<std::array<int, 3>>> diamonds;
	for (auto &link : all_links(g))
		diamonds[{link[0], link[2]}].push_back(link);

	std::vector<std::vector<std::array<int, 3>>> choices;
	for (auto &[xz, links] : diamonds)
		if (links.size() >= 2)
			choices.push_back(links);

	// Prefer keeping the chain whose middle element leaves the shape of the
	// top endpoint; remaining ties break by vertex order of the middle.
	auto shape_of = [&](int v) { return v >= 0 ? g.vertices[v].shape : -1; };
	for (auto &links : choices)
		std::stable_sort(links.begin(), links.end(),
		                 [&](const std::array<int, 3> &a,
		                     const std::array<int, 3> &b) {
			                 bool ca = shape_of(a[1]) != shape_of(a[0]);
			                 bool cb = shape_of(b[1]) != shape_of(b[0]);
			                 if (ca != cb)
				                 return ca > cb;
			                 return a[1] < b[1];
		                 });

	Linking l;
	std::function<bool(size_t)> solve = [&](size_t k) -> bool {
		if (k == choices.size())
			return is_valid_linking(g, l);
		auto &links = choices[k];
		for (size_t keep = 0; keep < links.size(); ++keep) {
			for (size_t i = 0; i < links.size(); ++i)
				if (i != keep)
					l.minus.insert(links[i]);
			if (solve(k + 1))
				return true;
			for (size_t i = 0; i < links.size(); ++i)
				if (i != keep)
					l.minus.erase(links[i]);
		}
		return false;
	};
	if (!solve(0))
		throw linking_error("no valid linking found for " + g.spec.name);
	return l;
}

std::vector<std::vector<int>> maximal_chains(const GeneratorGraph &g,
                                             bool extended)
{
	int n = (int)g.vertices.size();
	std::vector<std::pair<int, int>> edges = g.hasse_edges;
	if (extended)
		edges.insert(edges.end(), g.extra_edges.begin(), g.extra_edges.end());
	auto adj = adjacency(n, edges);
	std::vector<int> indeg(n, 0);
	for (auto &[a, b] : edges)
		indeg[b]++;

	std::vector<std::vector<int>> chains;
	std::vector<int> path;
	std::function<void(int)> dfs = [&](int u) {
		path.push_back(u);
		if (adj[u].empty())
			chains.push_back(path);
		for (int v : adj[u])
			dfs(v);
		path.pop_back();
	};
	for (int v = 0; v < n; ++v)
		if (indeg[v] == 0)
			dfs(v);
	return chains;
}

std::vector<ChainTerm> graph_chain_terms(const GeneratorGraph &g, int N,
                                         const Linking &l)
{
	std::vector<ChainTerm> out;
	GenSeries one = GenSeries::one(g.spec.rank, N);
	for (auto &chain : maximal_chains(g, true)) {
		ChainTerm ct;
		ct.chain = chain;
		int k = (int)chain.size();

		auto descent_at = [&](int t) {
			// Link around chain[t]: predecessor (or the virtual top) and
			// successor (or the virtual bottom).
			int prev = t > 0 ? chain[t - 1] : kTopNode;
			int next = t + 1 < k ? chain[t + 1] : kBottomNode;
			return l.minus.count({prev, chain[t], next}) != 0;
		};

		GenSeries term = bracket(g.vertex_label(chain[0], N));
		if (descent_at(0)) {
			ct.descents.push_back(chain[0]);
			term = term * g.vertex_label(chain[0], N);
		}
		for (int t = 0; t + 1 < k; ++t) {
			int a = chain[t], b = chain[t + 1];
			GenSeries s = one;
			if (descent_at(t + 1)) {
				ct.descents.push_back(b);
				s = g.vertex_label(b, N);
			}
			GenSeries factor;
			if (g.is_extra_edge(a, b))
				factor = g.edge_d.at({a, b}).with_trunc(N) * s;
			else if (g.same_shape_edge(a, b))
				factor = g.edge_d.at({a, b}).with_trunc(N) + s;
			else
				factor = s;
			term = term * factor * bracket(g.vertex_label(b, N));
		}
		ct.term = std::move(term);
		out.push_back(std::move(ct));
	}
	return out;
}

GenSeries x_via_graph(const GeneratorGraph &g, int N, const Linking &l)
{
	GenSeries x(g.spec.rank, N);
	for (auto &ct : graph_chain_terms(g, N, l))
		x = x + ct.term;
	return x;
}

GenSeries x_via_graph(const AlgebraSpec &spec, int N)
{
	GeneratorGraph g = build_generator_graph(spec);
	return x_via_graph(g, N, default_linking(g));
}

GenSeries baclawski_x(const GeneratorGraph &g, int N, const Linking &l)
{
	if (!g.extra_edges.empty())
		throw unsupported_formula_error(
		    "chain-label evaluation requires a poset without extra edges");
	for (auto &[e, d] : g.edge_d)
		if (!d.is_zero())
			throw unsupported_formula_error(
			    "chain-label evaluation requires trivial edge data");
	return x_via_graph(g, N, l);
}

GenSeries x_via_multichains(const AlgebraSpec &spec, int N)
{
	for (auto &io : inside_outside_split(spec))
		if (!io.inside.is_zero())
			throw unsupported_formula_error(
			    "multichain expansion requires all fundamental characters "
			    "to equal their orbit sums");

	GeneratorGraph g = build_orbit_poset(spec);
	int n = (int)g.vertices.size();
	auto adj = adjacency(n, g.hasse_edges);
	auto reach = reachability(n, adj);
	auto comparable = [&](int a, int b) {
		return a == b || reach[a][b] || reach[b][a];
	};

	GenSeries x(spec.rank, N);
	std::vector<int> support;
	GenSeries cur = GenSeries::one(spec.rank, N);
	// Enumerate multisets of pairwise-comparable vertices with at most N
	// entries (each vertex label has total L-degree 1).
	std::function<void(int, int)> rec = [&](int v, int budget) {
		if (v == n) {
			x = x + cur;
			return;
		}
		rec(v + 1, budget);
		bool ok = true;
		for (int u : support)
			if (!comparable(u, v)) {
				ok = false;
				break;
			}
		if (!ok || budget == 0)
			return;
		support.push_back(v);
		GenSeries saved = cur;
		GenSeries label = g.vertex_label(v, N);
		for (int count = 1; count <= budget; ++count) {
			cur = cur * label;
			rec(v + 1, budget - count);
		}
		cur = std::move(saved);
		support.pop_back();
	};
	rec(0, N);
	return x;
}

std::string export_dot(const GeneratorGraph &g)
{
	std::ostringstream os;
	os << "digraph generator_poset {\n";
	os << "  rankdir=TB;\n";
	for (std::size_t v = 0; v < g.vertices.size(); ++v) {
		const OrbitVertex &ov = g.vertices[v];
		os << "  " << ov.name << " [label=\"" << ov.name << "\\nL^"
		   << weight_str(ov.fundamental) << " a^" << weight_str(ov.weight)
		   << "\\nw=(";
		for (std::size_t t = 0; t < ov.witness.word.size(); ++t)
			os << (t ? "," : "") << ov.witness.word[t];
		os << ")\"];\n";
	}
	for (auto &[a, b] : g.hasse_edges) {
		os << "  " << g.vertices[a].name << " -> " << g.vertices[b].name;
		auto it = g.edge_d.find({a, b});
		if (it != g.edge_d.end() && !it->second.is_zero())
			os << " [label=\"1+" << it->second.str() << "\"]";
		os << ";\n";
	}
	for (auto &[a, b] : g.extra_edges) {
		os << "  " << g.vertices[a].name << " -> " << g.vertices[b].name
		   << " [style=dashed, label=\"" << g.edge_d.at({a, b}).str()
		   << "\"];\n";
	}
	os << "}\n";
	return os.str();
}

} // namespace chargen
