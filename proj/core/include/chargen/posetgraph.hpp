#pragma once

#include "chargen/genfun.hpp"

#include <array>

namespace chargen {

struct construction_error : std::runtime_error {
	using std::runtime_error::runtime_error;
};

struct linking_error : std::runtime_error {
	using std::runtime_error::runtime_error;
};

struct unsupported_formula_error : std::runtime_error {
	using std::runtime_error::runtime_error;
};

// A vertex of the fundamental-orbit poset: an orbit weight of a fundamental
// together with its Weyl-group witness.
struct OrbitVertex {
	int shape = 0;      // index into GeneratorGraph::shape_funds
	Weight fundamental; // the fundamental weight of this shape
	Weight weight;      // the orbit weight mu (witness * fundamental)
	WeylElement witness;
	std::string name; // "A", "B", ... in display order
};

// Virtual endpoints used in linkings and chains.
inline constexpr int kTopNode = -1;
inline constexpr int kBottomNode = -2;

struct GeneratorGraph {
	AlgebraSpec spec;
	// Fundamentals in decreasing poset order (shortest witness first).
	std::vector<Weight> shape_funds;
	std::vector<OrbitVertex> vertices;
	// Directed cover edges (upper, lower) of the orbit poset.
	std::vector<std::pair<int, int>> hasse_edges;
	// Additional operator-detected edges between non-adjacent same-shape
	// vertices.
	std::vector<std::pair<int, int>> extra_edges;
	// Edge data d(V1, V2) for same-shape Hasse edges and extra edges.
	std::map<std::pair<int, int>, GenSeries> edge_d;

	int source = 0; // unique maximal vertex
	GenSeries vertex_label(int v, int trunc) const;
	bool same_shape_edge(int a, int b) const;
	bool is_extra_edge(int a, int b) const;
	int vertex_by_name(const std::string &name) const; // -1 if absent
};

// Orbit poset only (vertices + Hasse edges, no operator data).
GeneratorGraph build_orbit_poset(const AlgebraSpec &spec);
// Full graph: poset plus edge data and extra edges.
GeneratorGraph build_generator_graph(const AlgebraSpec &spec);

// d(V1, V2): common monomials of a forward sweep from the top of the orbit
// down to V2 and a backward sweep from the bottom of the orbit up to V1.
GenSeries edge_demazure_data(const AlgebraSpec &spec, const Weight &fund,
                             const Weight &upper, const Weight &lower);

// A linking: the set of minus-marked links (saturated 3-chains x > y > z) of
// the endpoint-extended orbit poset. Virtual endpoints use kTopNode /
// kBottomNode.
struct Linking {
	std::set<std::array<int, 3>> minus;
};

std::vector<std::array<int, 3>> all_links(const GeneratorGraph &g);
// Every comparable pair must admit exactly one saturated all-plus chain.
bool is_valid_linking(const GeneratorGraph &g, const Linking &l);
// Canonical linking: mark (x > y > z) when x and y share a shape, z does not,
// and x > z has an alternative saturated chain. Throws linking_error if the
// result is not a valid linking.
Linking default_linking(const GeneratorGraph &g);

// Maximal chains of the poset (extended=false) or of the graph including the
// extra edges (extended=true), as vertex-index paths from the top.
std::vector<std::vector<int>> maximal_chains(const GeneratorGraph &g,
                                             bool extended);

struct ChainTerm {
	std::vector<int> chain;
	std::vector<int> descents; // vertices contributing a descent factor
	GenSeries term;
};

// Per-chain contributions of the graph evaluation at truncation N.
std::vector<ChainTerm> graph_chain_terms(const GeneratorGraph &g, int N,
                                         const Linking &l);

GenSeries x_via_graph(const AlgebraSpec &spec, int N);
GenSeries x_via_graph(const GeneratorGraph &g, int N, const Linking &l);

// Chain-label evaluation for posets with no edge data (all fundamentals
// minuscule); throws unsupported_formula_error otherwise.
GenSeries baclawski_x(const GeneratorGraph &g, int N, const Linking &l);

// Multichain expansion of the orbit poset (same minuscule restriction).
GenSeries x_via_multichains(const AlgebraSpec &spec, int N);

std::string export_dot(const GeneratorGraph &g);

} // namespace chargen
