#include "evensym/cli.hpp"

#include <cctype>
#include <optional>
#include <ostream>

#include "CLI11.hpp"
#include "evensym/checks.hpp"
#include "evensym/manifest.hpp"
#include "evensym/parser.hpp"
#include "evensym/random_gen.hpp"
#include "json.hpp"

namespace evensym {

namespace {

using nlohmann::json;

struct Session {
	Manifest manifest;
	bool json_output = false;
	uint64_t seed = 2026;
	int cases = 25;
	std::ostream& out;
};

Superfunction resolve_section(const Session& s, const std::string& text) {
	auto it = s.manifest.sections.find(text);
	if (it != s.manifest.sections.end()) return it->second;
	return parse_superfunction(s.manifest.data.spec, s.manifest.data.rank, text);
}

// Named derivations from the manifest, plus the frame itself: nabla_<a> for
// the coordinate directions and i_<j> for the contractions.
GradedDerivation resolve_derivation(const Session& s, const std::string& text) {
	auto it = s.manifest.derivations.find(text);
	if (it != s.manifest.derivations.end()) return it->second;
	const SymplecticData& sd = s.manifest.data;
	auto indexed = [&](const std::string& prefix, int hi) -> int {
		if (text.rfind(prefix, 0) != 0) return -1;
		std::string rest = text.substr(prefix.size());
		if (rest.empty() || rest.size() > 2) return -1;
		for (char c : rest)
			if (!std::isdigit(static_cast<unsigned char>(c))) return -1;
		int v = std::stoi(rest);
		require(v >= 1 && v <= hi, Errc::SemanticError,
		        "derivation index out of range in '" + text + "'");
		return v - 1;
	};
	if (int a = indexed("nabla_", sd.spec.dim); a >= 0)
		return GradedDerivation::coordinate(sd.conn, a);
	if (int j = indexed("i_", sd.rank); j >= 0) return GradedDerivation::contraction(sd.conn, j);
	fail(Errc::SemanticError, "unknown derivation '" + text +
	                              "': expected a manifest name, nabla_<a>, or i_<j>");
}

RothsteinForm pairing(const Session& s) { return RothsteinForm(s.manifest.data); }

DivergenceOperator divergence(const Session& s) {
	RothsteinForm th = pairing(s);
	if (s.manifest.canonical_volume)
		return DivergenceOperator::canonical(std::move(th), *s.manifest.canonical_volume);
	if (s.manifest.rescale)
		return DivergenceOperator::symplectic(BerezinianVolume(std::move(th), *s.manifest.rescale));
	return DivergenceOperator::symplectic(BerezinianVolume(std::move(th)));
}

std::vector<std::vector<std::string>> matrix_strings(const SMatrix& m) {
	std::vector<std::vector<std::string>> out;
	for (const auto& row : m) {
		out.emplace_back();
		for (const auto& entry : row) out.back().push_back(entry.str());
	}
	return out;
}

std::vector<std::vector<std::string>> matrix_strings(const CMatrix& m) {
	std::vector<std::vector<std::string>> out;
	for (const auto& row : m) {
		out.emplace_back();
		for (const auto& entry : row) out.back().push_back(entry.str());
	}
	return out;
}

void emit_matrix(Session& s, const char* label,
                 const std::vector<std::vector<std::string>>& entries) {
	for (size_t i = 0; i < entries.size(); ++i)
		for (size_t j = 0; j < entries[i].size(); ++j)
			s.out << label << "[" << i + 1 << "][" << j + 1 << "] = " << entries[i][j] << "\n";
}

int cmd_check(Session& s) {
	DataReport report = check_data(s.manifest.data);
	if (s.json_output) {
		s.out << json{{"ok", report.ok}, {"problems", report.problems}}.dump(2) << "\n";
	} else if (report.ok) {
		s.out << "model admissible\n";
	} else {
		for (const std::string& p : report.problems) s.out << "problem: " << p << "\n";
	}
	return report.ok ? 0 : 1;
}

int cmd_theta(Session& s) {
	RothsteinForm th = pairing(s);
	auto w = matrix_strings(th.w_block());
	auto g = matrix_strings(s.manifest.data.g);
	if (s.json_output) {
		s.out << json{{"w", w}, {"g", g}}.dump(2) << "\n";
		return 0;
	}
	emit_matrix(s, "W", w);
	emit_matrix(s, "G", g);
	return 0;
}

int cmd_bracket(Session& s, const std::string& a, const std::string& b) {
	RothsteinForm th = pairing(s);
	Superfunction r = poisson_bracket(th, resolve_section(s, a), resolve_section(s, b));
	if (s.json_output)
		s.out << json{{"bracket", r.str()}}.dump(2) << "\n";
	else
		s.out << "bracket: " << r.str() << "\n";
	return 0;
}

int cmd_ham(Session& s, const std::string& a) {
	RothsteinForm th = pairing(s);
	GradedDerivation d = hamiltonian_field(th, resolve_section(s, a));
	if (s.json_output)
		s.out << json{{"derivation", d.str()}}.dump(2) << "\n";
	else
		s.out << "hamiltonian field: " << d.str() << "\n";
	return 0;
}

int cmd_div(Session& s, const std::string& name) {
	Superfunction r = divergence(s).apply(resolve_derivation(s, name));
	if (s.json_output)
		s.out << json{{"divergence", r.str()}}.dump(2) << "\n";
	else
		s.out << "divergence: " << r.str() << "\n";
	return 0;
}

int cmd_modular(Session& s) {
	GradedDerivation z = modular_field(divergence(s));
	if (s.json_output)
		s.out << json{{"modular_field", z.str()}}.dump(2) << "\n";
	else
		s.out << "modular field: " << z.str() << "\n";
	return 0;
}

int cmd_class(Session& s) {
	ModularClassReport report = modular_class_trivial(divergence(s));
	std::vector<std::string> cert;
	for (const CoeffFn& c : report.certificate) cert.push_back(c.str());
	if (s.json_output) {
		s.out << json{{"trivial", report.trivial}, {"certificate", cert}}.dump(2) << "\n";
		return 0;
	}
	s.out << "modular class: " << (report.trivial ? "trivial" : "nontrivial") << "\n";
	std::string joined;
	for (const std::string& c : cert) {
		if (!joined.empty()) joined += ", ";
		joined += c;
	}
	s.out << "certificate: [" << joined << "]\n";
	return 0;
}

int cmd_integrate(Session& s, const std::string& a) {
	BerezinianVolume vol =
	    s.manifest.rescale ? BerezinianVolume(pairing(s), *s.manifest.rescale)
	                       : BerezinianVolume(pairing(s));
	TorusIntegral r = berezin_integral(vol, resolve_section(s, a));
	if (s.json_output)
		s.out << json{{"integral", r.str()}}.dump(2) << "\n";
	else
		s.out << "integral: " << r.str() << "\n";
	return 0;
}

int cmd_continuity(Session& s, const std::string& rho_name, const std::string& d_name) {
	const RingSpec& spec = s.manifest.data.spec;
	TimeDependentSection rho{Superfunction(spec, s.manifest.data.rank),
	                         Superfunction(spec, s.manifest.data.rank)};
	if (rho_name == "density") {
		require(s.manifest.density.has_value(), Errc::SemanticError,
		        "the manifest declares no density");
		rho = *s.manifest.density;
	} else {
		rho.base = resolve_section(s, rho_name);
	}
	DivergenceOperator div = divergence(s);
	GradedDerivation d = resolve_derivation(s, d_name);
	ContinuityResidual res = continuity_residual(rho, d, div);
	bool agree = res.divergence_form == res.lie_form;
	bool transported = res.divergence_form.is_zero();
	if (s.json_output) {
		s.out << json{{"divergence_form",
		               {{"base", res.divergence_form.base.str()},
		                {"sigma", res.divergence_form.sigma.str()}}},
		              {"lie_form",
		               {{"base", res.lie_form.base.str()}, {"sigma", res.lie_form.sigma.str()}}},
		              {"forms_agree", agree},
		              {"transported", transported}}
		             .dump(2)
		      << "\n";
		return 0;
	}
	s.out << "divergence form residual: base = " << res.divergence_form.base.str()
	      << ", sigma = " << res.divergence_form.sigma.str() << "\n";
	s.out << "lie form residual: base = " << res.lie_form.base.str()
	      << ", sigma = " << res.lie_form.sigma.str() << "\n";
	s.out << "forms agree: " << (agree ? "yes" : "no") << "\n";
	s.out << "transport satisfied: " << (transported ? "yes" : "no") << "\n";
	return 0;
}

// The integral characterization of the divergence, case by case on the
// manifest's own model: -integral(D(s)) against integral(div(D) ^ s).
int cmd_oracle(Session& s) {
	const SymplecticData& sd = s.manifest.data;
	require(sd.spec.mode == Mode::Torus, Errc::TorusModeUnsupported,
	        "the integral oracle needs a torus manifest");
	require(!s.manifest.canonical_volume.has_value(), Errc::SemanticError,
	        "the integral oracle uses the pairing volume, not a canonical one");
	BerezinianVolume vol = s.manifest.rescale
	                           ? BerezinianVolume(pairing(s), *s.manifest.rescale)
	                           : BerezinianVolume(pairing(s));
	DivergenceOperator div = DivergenceOperator::symplectic(vol);
	Rng rng(s.seed);
	int matches = 0;
	std::vector<int> failed;
	for (int i = 0; i < s.cases; ++i) {
		GradedDerivation d = random_derivation(rng, sd);
		Superfunction sec = random_superfunction(rng, sd.spec, sd.rank);
		TorusIntegral lhs = berezin_integral(vol, d.apply(sec));
		TorusIntegral rhs = berezin_integral(vol, div.apply(d) * sec);
		if ((lhs.value + rhs.value).is_zero())
			++matches;
		else if (failed.size() < 8)
			failed.push_back(i);
	}
	if (s.json_output) {
		s.out << json{{"cases", s.cases}, {"matches", matches}, {"failed_cases", failed}}.dump(2)
		      << "\n";
	} else {
		s.out << matches << "/" << s.cases << " exact matches\n";
		for (int i : failed) s.out << "mismatch at case " << i << "\n";
	}
	return matches == s.cases ? 0 : 1;
}

int run_props(bool json_output, uint64_t seed, int cases, std::ostream& out) {
	std::vector<SuiteResult> suites = run_all_suites(seed, cases);
	bool all_ok = true;
	for (const SuiteResult& r : suites) all_ok = all_ok && r.ok();
	if (json_output) {
		json rep = json::array();
		for (const SuiteResult& r : suites)
			rep.push_back({{"name", r.name},
			               {"law", r.law},
			               {"cases", r.cases},
			               {"failures", r.failures},
			               {"details", r.detail}});
		out << rep.dump(2) << "\n";
		return all_ok ? 0 : 1;
	}
	size_t width = 0;
	for (const SuiteResult& r : suites) width = std::max(width, r.name.size());
	for (const SuiteResult& r : suites) {
		out << r.name << std::string(width + 2 - r.name.size(), ' ') << r.cases << " cases  "
		    << r.failures << " failures  law: " << r.law << "\n";
		for (const std::string& d : r.detail) out << "    " << d << "\n";
	}
	out << (all_ok ? "all suites passed" : "some suites failed") << "\n";
	return all_ok ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
	CLI::App app{"exact kernel for even symplectic supergeometry"};
	app.name("evensym");

	std::string manifest_path;
	bool json_output = false;
	uint64_t seed = 2026;
	int cases = 25;
	std::string mode_override_name;
	app.add_option("--manifest", manifest_path, "model description file");
	app.add_flag("--json", json_output, "machine-readable reports");
	app.add_option("--seed", seed, "randomization seed for oracle and props");
	app.add_option("--cases", cases, "cases per randomized suite")->check(CLI::PositiveNumber);
	app.add_option("--mode-override", mode_override_name,
	               "reinterpret every manifest expression in this coefficient mode")
	    ->check(CLI::IsMember({"chart", "torus"}));
	app.require_subcommand(1);

	std::string arg_a, arg_b;
	CLI::App* cmd_check_p = app.add_subcommand("check", "validate the model data");
	CLI::App* cmd_theta_p = app.add_subcommand("theta", "print the pairing blocks");
	CLI::App* cmd_bracket_p = app.add_subcommand("bracket", "even bracket of two sections");
	cmd_bracket_p->add_option("s", arg_a, "first section")->required();
	cmd_bracket_p->add_option("t", arg_b, "second section")->required();
	CLI::App* cmd_ham_p = app.add_subcommand("ham", "hamiltonian field of a section");
	cmd_ham_p->add_option("s", arg_a, "section")->required();
	CLI::App* cmd_div_p = app.add_subcommand("div", "divergence of a derivation");
	cmd_div_p->add_option("D", arg_a, "derivation name")->required();
	CLI::App* cmd_modular_p = app.add_subcommand("modular", "modular field of the volume");
	CLI::App* cmd_class_p = app.add_subcommand("class", "modular class verdict and certificate");
	CLI::App* cmd_integrate_p = app.add_subcommand("integrate", "berezin integral of a section");
	cmd_integrate_p->add_option("s", arg_a, "section")->required();
	CLI::App* cmd_continuity_p =
	    app.add_subcommand("continuity", "transport residuals of a density along a derivation");
	cmd_continuity_p->add_option("rho", arg_a, "density: a section or the manifest density")
	    ->required();
	cmd_continuity_p->add_option("D", arg_b, "derivation name")->required();
	CLI::App* cmd_oracle_p =
	    app.add_subcommand("oracle", "integral characterization of the divergence");
	CLI::App* cmd_props_p =
	    app.add_subcommand("props", "randomized law suites on fuzzed models");
	for (CLI::App* sub : {cmd_check_p, cmd_theta_p, cmd_bracket_p, cmd_ham_p, cmd_div_p,
	                      cmd_modular_p, cmd_class_p, cmd_integrate_p, cmd_continuity_p,
	                      cmd_oracle_p, cmd_props_p})
		sub->fallthrough();

	std::vector<const char*> argv;
	argv.push_back("evensym");
	for (const std::string& a : args) argv.push_back(a.c_str());
	try {
		app.parse(int(argv.size()), argv.data());
	} catch (const CLI::CallForHelp&) {
		out << app.help();
		return 0;
	} catch (const CLI::ParseError& e) {
		err << e.what() << "\n";
		return 2;
	}

	try {
		if (cmd_props_p->parsed()) return run_props(json_output, seed, cases, out);

		require(!manifest_path.empty(), Errc::SemanticError,
		        "this command needs --manifest <file>");
		std::optional<Mode> mode_override;
		if (mode_override_name == "chart") mode_override = Mode::Chart;
		if (mode_override_name == "torus") mode_override = Mode::Torus;
		Session s{parse_manifest(manifest_path, mode_override), json_output, seed, cases, out};

		if (cmd_check_p->parsed()) return cmd_check(s);
		if (cmd_theta_p->parsed()) return cmd_theta(s);
		if (cmd_bracket_p->parsed()) return cmd_bracket(s, arg_a, arg_b);
		if (cmd_ham_p->parsed()) return cmd_ham(s, arg_a);
		if (cmd_div_p->parsed()) return cmd_div(s, arg_a);
		if (cmd_modular_p->parsed()) return cmd_modular(s);
		if (cmd_class_p->parsed()) return cmd_class(s);
		if (cmd_integrate_p->parsed()) return cmd_integrate(s, arg_a);
		if (cmd_continuity_p->parsed()) return cmd_continuity(s, arg_a, arg_b);
		if (cmd_oracle_p->parsed()) return cmd_oracle(s);
	} catch (const Error& e) {
		err << e.what() << "\n";
		return 2;
	}
	err << "no command given\n";
	return 2;
}

}  // namespace evensym
