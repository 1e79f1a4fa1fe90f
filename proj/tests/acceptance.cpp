#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "evensym/checks.hpp"

using namespace evensym;

namespace {

int failures = 0;
int index = 0;

void report(const std::string& label, const std::vector<SuiteResult>& parts) {
	++index;
	bool ok = !parts.empty();
	for (const SuiteResult& p : parts) ok = ok && p.ok();
	if (!ok) ++failures;
	std::cout << (ok ? "[pass] " : "[FAIL] ") << index << ". " << label << " (";
	bool first = true;
	for (const SuiteResult& p : parts) {
		if (!first) std::cout << ", ";
		first = false;
		std::cout << p.name << " " << p.cases << " cases";
		if (p.failures > 0) std::cout << ", " << p.failures << " failed";
	}
	std::cout << ")\n";
	for (const SuiteResult& p : parts)
		for (const std::string& d : p.detail) std::cout << "       " << d << "\n";
}

}  // namespace

int main(int argc, char** argv) {
	uint64_t seed = 2026;
	if (argc > 1) seed = std::stoull(argv[1]);

	report("graded product rule of the divergence on flat and curved models",
	       {check_divergence_axiom(seed, 200)});
	report("integral characterization of the divergence on the torus",
	       {check_integral_characterization(seed, 100)});
	report("product rule and correction law for rescaled volumes",
	       {check_product_rule_rescaled(seed, 100), check_rescaling(seed, 100)});
	report("contraction divergences vanish, coordinate divergences reduce to the base",
	       {check_basic_divergences(seed, 10)});
	report("bracket antisymmetry, product rule, Jacobi, and the classical restriction",
	       {check_bracket_laws(seed, 100), check_classical_restriction(seed, 100)});
	report("modular field triviality across random models",
	       {check_unimodularity(seed, 10)});
	report("modular class invariance under volume rescaling",
	       {check_class_invariance(seed, 20)});
	report("transport residual forms, classical reduction, and conservation",
	       {check_continuity_forms(seed, 50), check_classical_reduction(seed, 10),
	        check_conservation(seed, 10)});
	report("curvature blocks against commutators of covariant derivatives",
	       {check_curvature_commutator(seed, 10)});

	if (failures == 0) {
		std::cout << "all acceptance criteria satisfied\n";
		return 0;
	}
	std::cout << failures << " acceptance criteria failed\n";
	return 1;
}
