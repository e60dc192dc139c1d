// chargen: exact character generating functions of simple Lie algebras.
//
// Subcommands:
//   character      irreducible character of a dominant highest weight
//   generator      the character generating function by a selectable route
//   verify         cross-route and golden-value verification suite
//   poset          fundamental-orbit poset / generator graph (DOT or JSON)
//   graph-x        the generator computed through the graph evaluation
//   demazure-apply apply an operator word to a single monomial (debugging)
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.

#include "chargen/json_io.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

using namespace chargen;

namespace {

struct usage_error : std::runtime_error {
	using std::runtime_error::runtime_error;
};

Weight parse_weight(const std::string &s, int rank)
{
	Weight w;
	std::stringstream ss(s);
	std::string part;
	while (std::getline(ss, part, ',')) {
		try {
			size_t pos = 0;
			int v = std::stoi(part, &pos);
			if (pos != part.size())
				throw std::invalid_argument(part);
			w.push_back(v);
		} catch (const std::exception &) {
			throw usage_error("cannot parse integer list entry '" + part +
			                  "' in '" + s + "'");
		}
	}
	if (rank > 0 && (int)w.size() != rank)
		throw usage_error("expected " + std::to_string(rank) +
		                  " comma-separated integers, got '" + s + "'");
	return w;
}

struct AlgebraOpts {
	std::string name;
	std::string cartan_file;

	AlgebraSpec load() const
	{
		if (!cartan_file.empty()) {
			std::ifstream in(cartan_file);
			if (!in)
				throw usage_error("cannot open Cartan file: " + cartan_file);
			json j;
			try {
				in >> j;
			} catch (const std::exception &e) {
				throw usage_error(std::string("bad Cartan JSON: ") + e.what());
			}
			return algebra_from_json(name.empty() ? "custom" : name, j);
		}
		if (name.empty())
			throw usage_error("no algebra given (use --algebra or --cartan)");
		return algebra(name);
	}
};

void add_algebra_opts(CLI::App *cmd, AlgebraOpts &a)
{
	cmd->add_option("-a,--algebra", a.name,
	                "algebra name (A1..A9, B2, C2, G2, or a label for --cartan)");
	cmd->add_option("--cartan", a.cartan_file,
	                "JSON file {\"rank\": r, \"cartan\": [[...], ...]}");
}

int default_trunc()
{
	if (const char *env = std::getenv("CHARGEN_TRUNC")) {
		try {
			return std::max(0, std::stoi(env));
		} catch (const std::exception &) {
			throw usage_error(std::string("bad CHARGEN_TRUNC value: ") + env);
		}
	}
	return 3;
}

void emit(const std::string &kind, const json &payload,
          const std::string &text_form, const std::string &format)
{
	if (format == "json")
		std::cout << envelope(kind, payload).dump(2) << "\n";
	else
		std::cout << text_form << "\n";
}

// First coefficient (in canonical order) where two series differ.
struct SeriesDiff {
	Weight lexp, aexp;
	Coeff lhs, rhs;
};

std::optional<SeriesDiff> first_diff(const GenSeries &a, const GenSeries &b)
{
	std::set<Weight, GradedLex> lexps;
	for (auto &[l, p] : a.coeffs)
		lexps.insert(l);
	for (auto &[l, p] : b.coeffs)
		lexps.insert(l);
	for (auto &l : lexps) {
		const CharPoly &pa = a.coeff(l), &pb = b.coeff(l);
		std::set<Weight, GradedLex> aexps;
		for (auto &[e, c] : pa.terms)
			aexps.insert(e);
		for (auto &[e, c] : pb.terms)
			aexps.insert(e);
		for (auto &e : aexps)
			if (pa.coeff(e) != pb.coeff(e))
				return SeriesDiff{l, e, pa.coeff(e), pb.coeff(e)};
	}
	return std::nullopt;
}

GenSeries route(const AlgebraSpec &spec, const std::string &method, int N)
{
	if (method == "def")
		return x_by_definition(spec, N);
	if (method == "yz")
		return x_via_yz(spec, N);
	if (method == "demazure")
		return x_via_demazure(spec, N);
	if (method == "graph")
		return x_via_graph(spec, N);
	throw usage_error("unknown method: " + method);
}

int run_verify(const AlgebraSpec &spec, int N)
{
	bool all_ok = true;
	GenSeries ref = x_by_definition(spec, N);

	auto check_series = [&](const std::string &label, const GenSeries &got,
	                        const GenSeries &want) {
		if (got == want) {
			std::cout << "PASS " << label << "\n";
			return;
		}
		all_ok = false;
		std::cout << "FAIL " << label;
		if (auto d = first_diff(got, want))
			std::cout << ": first differing coefficient at L^"
			          << weight_str(d->lexp) << " a^" << weight_str(d->aexp)
			          << ": " << d->lhs << " vs " << d->rhs;
		std::cout << "\n";
	};
	auto check = [&](const std::string &label, bool ok,
	                 const std::string &detail = "") {
		if (!ok)
			all_ok = false;
		std::cout << (ok ? "PASS " : "FAIL ") << label;
		if (!ok && !detail.empty())
			std::cout << ": " << detail;
		std::cout << "\n";
	};

	check_series("route yz == def", x_via_yz(spec, N), ref);
	check_series("route demazure == def", x_via_demazure(spec, N), ref);
	try {
		check_series("route graph == def", x_via_graph(spec, N), ref);
	} catch (const std::exception &e) {
		check("route graph == def", false, e.what());
	}

	auto y1 = y_via_chhat(spec);
	auto y2 = y_via_partition(spec);
	check_series("numerator: straightening == partition route", y1.Y, y2.Y);

	// Z * X == Y modulo L-degree > N certifies the closed form X = Y / Z.
	GenSeries zx = z_denominator(spec, N) * ref;
	check_series("denominator * generator == numerator (mod degree > " +
	                 std::to_string(N) + ")",
	             zx, y1.Y.with_trunc(N));

	auto slices = y_expansion_terms(spec);
	GenSeries y_low = y1.Y.with_trunc(2);
	check_series("numerator slices (degree <= 2)",
	             slices.y0 + slices.y1 + slices.y2, y_low);

	if (spec.name == "G2") {
		auto g = build_generator_graph(spec);
		auto chains = maximal_chains(g, true);
		check("extended graph has 12 maximal chains", chains.size() == 12,
		      "got " + std::to_string(chains.size()));
		auto rep = verify_incompatibility_decomposition(spec);
		check("quadratic slice generator-product decomposition", rep.ok,
		      rep.detail);
	}
	return all_ok ? 0 : 1;
}

OpKind parse_op(const std::string &s)
{
	if (s == "D")
		return OpKind::D;
	if (s == "d")
		return OpKind::d;
	if (s == "Dbar")
		return OpKind::Dbar;
	if (s == "dneg")
		return OpKind::d_neg;
	if (s == "r" || s == "reflect")
		return OpKind::Reflect;
	throw usage_error("unknown operator kind: " + s +
	                  " (expected D, d, Dbar, dneg, or r)");
}

} // namespace

int main(int argc, char **argv)
{
	CLI::App app{"Exact character generating functions of simple Lie algebras"};
	app.require_subcommand(1);

	// character
	auto *c_char = app.add_subcommand(
	    "character", "Irreducible character of a dominant highest weight");
	AlgebraOpts char_alg;
	add_algebra_opts(c_char, char_alg);
	std::string char_weight, char_method = "weyl", char_format = "json";
	c_char->add_option("-w,--weight", char_weight,
	                   "dominant highest weight as comma-separated labels")
	    ->required();
	c_char->add_option("-m,--method", char_method,
	                   "weyl (multiplicity recursion) or demazure (operator sweep)")
	    ->check(CLI::IsMember({"weyl", "demazure"}));
	c_char->add_option("-f,--format", char_format, "json or text")
	    ->check(CLI::IsMember({"json", "text"}));

	// generator
	auto *c_gen = app.add_subcommand(
	    "generator", "Character generating function, truncated in L");
	AlgebraOpts gen_alg;
	add_algebra_opts(c_gen, gen_alg);
	std::string gen_method = "def", gen_format = "json";
	int gen_trunc = -1;
	c_gen->add_option("-m,--method", gen_method, "def, yz, demazure, or graph")
	    ->check(CLI::IsMember({"def", "yz", "demazure", "graph"}));
	c_gen->add_option("-N,--truncate", gen_trunc,
	                  "maximum total L-degree (default 3 or $CHARGEN_TRUNC)");
	c_gen->add_option("-f,--format", gen_format, "json or text")
	    ->check(CLI::IsMember({"json", "text"}));

	// verify
	auto *c_ver = app.add_subcommand(
	    "verify", "Cross-route verification; exit 1 on any mismatch");
	AlgebraOpts ver_alg;
	add_algebra_opts(c_ver, ver_alg);
	int ver_trunc = -1;
	c_ver->add_option("-N,--truncate", ver_trunc, "maximum total L-degree");

	// poset
	auto *c_poset = app.add_subcommand(
	    "poset", "Fundamental-orbit poset and generator graph");
	AlgebraOpts poset_alg;
	add_algebra_opts(c_poset, poset_alg);
	bool poset_dot = false;
	std::string poset_format = "json";
	c_poset->add_flag("--dot", poset_dot, "emit Graphviz DOT");
	c_poset->add_option("-f,--format", poset_format, "json or dot")
	    ->check(CLI::IsMember({"json", "dot"}));

	// graph-x
	auto *c_gx = app.add_subcommand(
	    "graph-x", "Generator evaluated through the graph formula");
	AlgebraOpts gx_alg;
	add_algebra_opts(c_gx, gx_alg);
	int gx_trunc = -1;
	std::string gx_format = "json";
	c_gx->add_option("-N,--truncate", gx_trunc, "maximum total L-degree");
	c_gx->add_option("-f,--format", gx_format, "json or text")
	    ->check(CLI::IsMember({"json", "text"}));

	// demazure-apply
	auto *c_dem = app.add_subcommand(
	    "demazure-apply", "Apply an operator word to a monomial");
	AlgebraOpts dem_alg;
	add_algebra_opts(c_dem, dem_alg);
	std::string dem_op = "D", dem_word, dem_aexp, dem_lexp, dem_format = "json";
	c_dem->add_option("-o,--op", dem_op, "operator kind: D, d, Dbar, dneg, r");
	c_dem->add_option("--word", dem_word,
	                  "comma-separated simple-root indices (rightmost acts "
	                  "first); empty word = identity");
	c_dem->add_option("--aexp", dem_aexp, "a-exponent of the monomial")
	    ->required();
	c_dem->add_option("--lexp", dem_lexp,
	                  "L-exponent of the monomial (default all zero)");
	c_dem->add_option("-f,--format", dem_format, "json or text")
	    ->check(CLI::IsMember({"json", "text"}));

	try {
		app.parse(argc, argv);
	} catch (const CLI::ParseError &e) {
		int code = app.exit(e);
		return code == 0 ? 0 : 2; // --help exits 0; any parse error is 2
	}

	try {
		if (c_char->parsed()) {
			AlgebraSpec spec = char_alg.load();
			Weight lam = parse_weight(char_weight, spec.rank);
			if (!is_dominant(lam))
				throw usage_error("weight must be dominant: " +
				                  weight_str(lam));
			CharPoly ch = char_method == "weyl"
			                  ? weyl_character(spec, lam)
			                  : demazure_character(spec, lam);
			json payload;
			payload["algebra"] = spec.name;
			payload["weight"] = lam;
			payload["dimension"] = specialize_a_one(ch).str();
			payload["character"] = to_json(ch);
			emit("character", payload, ch.str(), char_format);
		} else if (c_gen->parsed() || c_gx->parsed()) {
			bool gx = c_gx->parsed();
			AlgebraSpec spec = (gx ? gx_alg : gen_alg).load();
			int N = gx ? gx_trunc : gen_trunc;
			if (N < 0)
				N = default_trunc();
			std::string method = gx ? "graph" : gen_method;
			GenSeries x = route(spec, method, N);
			json payload;
			payload["algebra"] = spec.name;
			payload["method"] = method;
			payload["series"] = to_json(x);
			emit("generator", payload, x.str(),
			     gx ? gx_format : gen_format);
		} else if (c_ver->parsed()) {
			AlgebraSpec spec = ver_alg.load();
			int N = ver_trunc < 0 ? default_trunc() : ver_trunc;
			return run_verify(spec, N);
		} else if (c_poset->parsed()) {
			AlgebraSpec spec = poset_alg.load();
			GeneratorGraph g = build_generator_graph(spec);
			if (poset_dot || poset_format == "dot")
				std::cout << export_dot(g);
			else
				std::cout << envelope("graph", to_json(g)).dump(2) << "\n";
		} else if (c_dem->parsed()) {
			AlgebraSpec spec = dem_alg.load();
			OpKind kind = parse_op(dem_op);
			Weight aexp = parse_weight(dem_aexp, spec.rank);
			Weight lexp = dem_lexp.empty() ? Weight(spec.rank, 0)
			                               : parse_weight(dem_lexp, spec.rank);
			Word word;
			if (!dem_word.empty())
				for (int i : parse_weight(dem_word, 0)) {
					if (i < 1 || i > spec.rank)
						throw usage_error("word index out of range: " +
						                  std::to_string(i));
					word.push_back(i);
				}
			GenSeries mono = GenSeries::monomial(
			    spec.rank, total_degree(lexp), lexp, aexp);
			GenSeries out = compose_over_word(spec, kind, word, mono);
			json payload;
			payload["algebra"] = spec.name;
			payload["op"] = dem_op;
			payload["word"] = word;
			payload["series"] = to_json(out);
			emit("demazure-apply", payload, out.str(), dem_format);
		}
	} catch (const usage_error &e) {
		std::cerr << "error: " << e.what() << "\n";
		return 2;
	} catch (const invalid_weight_error &e) {
		std::cerr << "error: " << e.what() << "\n";
		return 2;
	} catch (const unsupported_algebra_error &e) {
		std::cerr << "error: " << e.what() << "\n";
		return 2;
	} catch (const std::exception &e) {
		std::cerr << "error: " << e.what() << "\n";
		return 1;
	}
	return 0;
}
