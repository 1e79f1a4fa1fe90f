#include "evensym/manifest.hpp"

#include <fstream>
#include <sstream>

#include "evensym/parser.hpp"
#include "json.hpp"

namespace evensym {

namespace {

using nlohmann::json;

[[noreturn]] void rethrow_with_path(const std::string& path, const Error& e) {
	std::string msg = e.what();
	std::string prefix = std::string(errc_name(e.code())) + ": ";
	if (msg.rfind(prefix, 0) == 0) msg = msg.substr(prefix.size());
	fail(e.code(), path + ": " + msg);
}

const json& member(const json& obj, const std::string& path, const char* key) {
	auto it = obj.find(key);
	require(it != obj.end(), Errc::SemanticError, path + ": missing field '" + key + "'");
	return *it;
}

std::string expression_string(const json& node, const std::string& path) {
	require(node.is_string(), Errc::SemanticError, path + ": expected an expression string");
	return node.get<std::string>();
}

CoeffFn coeff_field(const RingSpec& spec, const json& node, const std::string& path) {
	std::string text = expression_string(node, path);
	try {
		return parse_coeff(spec, text);
	} catch (const Error& e) {
		rethrow_with_path(path, e);
	}
}

Superfunction section_field(const RingSpec& spec, int rank, const json& node,
                            const std::string& path) {
	std::string text = expression_string(node, path);
	try {
		return parse_superfunction(spec, rank, text);
	} catch (const Error& e) {
		rethrow_with_path(path, e);
	}
}

CMatrix matrix_field(const RingSpec& spec, const json& node, const std::string& path, int rows,
                     int cols) {
	require(node.is_array() && int(node.size()) == rows, Errc::SemanticError,
	        path + ": expected " + std::to_string(rows) + " rows");
	CMatrix m;
	for (int i = 0; i < rows; ++i) {
		const json& row = node[size_t(i)];
		std::string row_path = path + "[" + std::to_string(i + 1) + "]";
		require(row.is_array() && int(row.size()) == cols, Errc::SemanticError,
		        row_path + ": expected " + std::to_string(cols) + " entries");
		m.emplace_back();
		for (int j = 0; j < cols; ++j)
			m.back().push_back(coeff_field(
			    spec, row[size_t(j)], path + "[" + std::to_string(i + 1) + "][" + std::to_string(j + 1) + "]"));
	}
	return m;
}

int int_field(const json& node, const std::string& path, int lo, int hi) {
	require(node.is_number_integer(), Errc::SemanticError, path + ": expected an integer");
	long long v = node.get<long long>();
	require(v >= lo && v <= hi, Errc::SemanticError,
	        path + ": expected a value in " + std::to_string(lo) + ".." + std::to_string(hi));
	return int(v);
}

GradedDerivation derivation_field(const SymplecticData& sd, const json& node,
                                  const std::string& path) {
	require(node.is_object(), Errc::SemanticError,
	        path + ": expected an object with 'nabla' and 'contra' lists");
	GradedDerivation d(sd.conn);
	const RingSpec& spec = sd.spec;
	if (auto it = node.find("nabla"); it != node.end()) {
		require(it->is_array() && int(it->size()) == spec.dim, Errc::SemanticError,
		        path + ".nabla: expected " + std::to_string(spec.dim) + " entries");
		for (int a = 0; a < spec.dim; ++a)
			d.set_nabla_part(a, section_field(spec, sd.rank, (*it)[size_t(a)],
			                                  path + ".nabla[" + std::to_string(a + 1) + "]"));
	}
	if (auto it = node.find("contra"); it != node.end()) {
		require(it->is_array() && int(it->size()) == sd.rank, Errc::SemanticError,
		        path + ".contra: expected " + std::to_string(sd.rank) + " entries");
		for (int j = 0; j < sd.rank; ++j)
			d.set_contra_part(j, section_field(spec, sd.rank, (*it)[size_t(j)],
			                                   path + ".contra[" + std::to_string(j + 1) + "]"));
	}
	return d;
}

Manifest from_json(const json& root, std::optional<Mode> mode_override) {
	require(root.is_object(), Errc::SemanticError, "manifest: expected a JSON object");

	std::string mode_name = expression_string(member(root, "manifest", "mode"), "mode");
	Mode mode;
	if (mode_name == "chart")
		mode = Mode::Chart;
	else if (mode_name == "torus")
		mode = Mode::Torus;
	else
		fail(Errc::SemanticError, "mode: expected \"chart\" or \"torus\"");
	if (mode_override) mode = *mode_override;

	int dim = int_field(member(root, "manifest", "dim"), "dim", 2, 6);
	require(dim % 2 == 0, Errc::SemanticError, "dim: base dimension must be even");
	int rank = int_field(member(root, "manifest", "rank"), "rank", 1, 16);
	RingSpec spec{mode, dim};

	CMatrix omega = matrix_field(spec, member(root, "manifest", "omega"), "omega", dim, dim);

	CMatrix g;
	if (auto it = root.find("g"); it != root.end()) {
		g = matrix_field(spec, *it, "g", rank, rank);
	} else {
		g = cmat_identity(spec, rank);
	}

	std::vector<CMatrix> gamma;
	if (auto it = root.find("gamma"); it != root.end()) {
		require(it->is_array() && int(it->size()) == dim, Errc::SemanticError,
		        "gamma: expected one matrix per coordinate");
		for (int a = 0; a < dim; ++a)
			gamma.push_back(
			    matrix_field(spec, (*it)[size_t(a)], "gamma[" + std::to_string(a + 1) + "]", rank, rank));
	} else {
		gamma.assign(size_t(dim), cmat_zero(spec, rank, rank));
	}

	std::optional<Q> metric_scale;
	if (auto it = root.find("metric_scale"); it != root.end()) {
		CoeffFn c = coeff_field(spec, *it, "metric_scale");
		require(c.is_constant() && !c.is_zero(), Errc::SemanticError,
		        "metric_scale: expected a nonzero rational constant");
		metric_scale = c.constant_value();
	}

	Manifest m{SymplecticData{}, {}, {}, std::nullopt, std::nullopt, std::nullopt};
	m.data = make_symplectic_data(spec, rank, std::move(omega), std::move(g), std::move(gamma),
	                              metric_scale);
	DataReport report = check_data(m.data);
	if (!report.ok) {
		std::string msg;
		for (const std::string& p : report.problems) {
			if (!msg.empty()) msg += "; ";
			msg += p;
		}
		fail(Errc::SemanticError, msg);
	}

	if (auto it = root.find("sections"); it != root.end()) {
		require(it->is_object(), Errc::SemanticError, "sections: expected an object");
		for (const auto& [name, node] : it->items())
			m.sections.emplace(name, section_field(spec, rank, node, "sections." + name));
	}
	if (auto it = root.find("derivations"); it != root.end()) {
		require(it->is_object(), Errc::SemanticError, "derivations: expected an object");
		for (const auto& [name, node] : it->items())
			m.derivations.emplace(name, derivation_field(m.data, node, "derivations." + name));
	}
	if (auto it = root.find("rescale"); it != root.end()) {
		Superfunction s = section_field(spec, rank, *it, "rescale");
		require(s.is_even(), Errc::SemanticError, "rescale: expected an even section");
		require(s.body_coeff().is_unit(), Errc::SemanticError,
		        "rescale: expected an invertible body");
		m.rescale = std::move(s);
	}
	if (auto it = root.find("canonical_volume"); it != root.end()) {
		require(!m.rescale, Errc::SemanticError,
		        "canonical_volume: cannot be combined with rescale");
		CoeffFn c = coeff_field(spec, *it, "canonical_volume");
		require(c.is_unit(), Errc::SemanticError,
		        "canonical_volume: expected an invertible coefficient");
		m.canonical_volume = std::move(c);
	}
	if (auto it = root.find("density"); it != root.end()) {
		require(it->is_object(), Errc::SemanticError,
		        "density: expected an object with 'base' and 'sigma'");
		TimeDependentSection rho{Superfunction(spec, rank), Superfunction(spec, rank)};
		if (auto b = it->find("base"); b != it->end())
			rho.base = section_field(spec, rank, *b, "density.base");
		if (auto sg = it->find("sigma"); sg != it->end())
			rho.sigma = section_field(spec, rank, *sg, "density.sigma");
		m.density = std::move(rho);
	}

	static const char* known[] = {"mode",   "dim",          "rank",    "omega",
	                              "g",      "gamma",        "metric_scale", "sections",
	                              "derivations", "rescale", "canonical_volume", "density"};
	for (const auto& [key, node] : root.items()) {
		bool ok = false;
		for (const char* k : known) ok = ok || key == k;
		require(ok, Errc::SemanticError, key + ": unknown manifest field");
	}
	return m;
}

}  // namespace

Manifest parse_manifest_text(const std::string& text, std::optional<Mode> mode_override) {
	json root;
	try {
		root = json::parse(text, nullptr, true, true);
	} catch (const json::parse_error& e) {
		fail(Errc::ParseError, std::string("manifest: ") + e.what());
	}
	return from_json(root, mode_override);
}

Manifest parse_manifest(const std::string& path, std::optional<Mode> mode_override) {
	std::ifstream in(path);
	require(in.good(), Errc::SemanticError, "cannot read manifest file: " + path);
	std::ostringstream buf;
	buf << in.rdbuf();
	return parse_manifest_text(buf.str(), mode_override);
}

}  // namespace evensym
