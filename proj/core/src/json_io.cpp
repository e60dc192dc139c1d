#include "chargen/json_io.hpp"

namespace chargen {

namespace {

// Arbitrary-precision coefficients: emit a JSON number when it fits in
// int64, otherwise a decimal string.
json coeff_to_json(const Coeff &c)
{
	if (c >= std::numeric_limits<std::int64_t>::min() &&
	    c <= std::numeric_limits<std::int64_t>::max())
		return (std::int64_t)c;
	return c.str();
}

Coeff coeff_from_json(const json &j)
{
	if (j.is_string())
		return Coeff(j.get<std::string>());
	return Coeff(j.get<std::int64_t>());
}

} // namespace

json to_json(const CharPoly &p)
{
	json arr = json::array();
	for (auto &[e, c] : p.terms) {
		json t;
		t["exp"] = e;
		t["coeff"] = coeff_to_json(c);
		arr.push_back(std::move(t));
	}
	return arr;
}

json to_json(const GenSeries &s)
{
	json out;
	out["rank"] = s.rank;
	out["trunc"] = s.trunc;
	json terms = json::array();
	for (auto &[l, p] : s.coeffs) {
		json t;
		t["L"] = l;
		t["poly"] = to_json(p);
		terms.push_back(std::move(t));
	}
	out["terms"] = std::move(terms);
	return out;
}

json to_json(const GeneratorGraph &g)
{
	json out;
	out["algebra"] = g.spec.name;
	json shapes = json::array();
	for (auto &f : g.shape_funds)
		shapes.push_back(f);
	out["shape_order"] = std::move(shapes);

	json verts = json::array();
	for (auto &v : g.vertices) {
		json jv;
		jv["name"] = v.name;
		jv["shape"] = v.shape;
		jv["fundamental"] = v.fundamental;
		jv["weight"] = v.weight;
		jv["witness"] = v.witness.word;
		verts.push_back(std::move(jv));
	}
	out["vertices"] = std::move(verts);

	auto edge_json = [&](const std::pair<int, int> &e) {
		json je;
		je["from"] = g.vertices[e.first].name;
		je["to"] = g.vertices[e.second].name;
		auto it = g.edge_d.find(e);
		if (it != g.edge_d.end())
			je["d"] = to_json(it->second);
		return je;
	};
	json hasse = json::array();
	for (auto &e : g.hasse_edges)
		hasse.push_back(edge_json(e));
	out["hasse_edges"] = std::move(hasse);
	json extra = json::array();
	for (auto &e : g.extra_edges)
		extra.push_back(edge_json(e));
	out["extra_edges"] = std::move(extra);
	return out;
}

CharPoly charpoly_from_json(int rank, const json &j)
{
	CharPoly p;
	for (auto &t : j) {
		Weight e = t.at("exp").get<Weight>();
		if ((int)e.size() != rank)
			throw std::invalid_argument("exponent rank mismatch");
		p.add_term(e, coeff_from_json(t.at("coeff")));
	}
	return p;
}

GenSeries genseries_from_json(const json &j)
{
	GenSeries s(j.at("rank").get<int>(), j.at("trunc").get<int>());
	for (auto &t : j.at("terms"))
		s.add_term(t.at("L").get<Weight>(),
		           charpoly_from_json(s.rank, t.at("poly")));
	return s;
}

json envelope(const std::string &kind, json payload)
{
	json out;
	out["schema"] = 1;
	out["kind"] = kind;
	out["data"] = std::move(payload);
	return out;
}

AlgebraSpec algebra_from_json(const std::string &name, const json &j)
{
	int rank = j.at("rank").get<int>();
	auto cartan = j.at("cartan").get<std::vector<std::vector<int>>>();
	if ((int)cartan.size() != rank)
		throw std::invalid_argument("cartan size does not match rank");
	return algebra_from_cartan(name, cartan);
}

} // namespace chargen
