#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "evensym/continuity.hpp"
#include "evensym/random_gen.hpp"

namespace evensym {

// Outcome of one randomized law suite. Every case is checked with exact
// arithmetic, so a single failure means the law is false as stated.
struct SuiteResult {
	std::string name;
	std::string law;
	int cases = 0;
	int failures = 0;
	std::vector<std::string> detail;  // descriptions of the first failing cases

	bool ok() const { return cases > 0 && failures == 0; }
};

// Divergence product rule div(s ^ D) = s ^ div(D) + (-1)^{|s||D|} D(s) over
// random homogeneous pairs on flat and curved models, both modes, ranks 2
// and 4, with the plain pairing volume.
SuiteResult check_divergence_axiom(uint64_t seed, int cases);

// The divergence is the integral adjoint on the torus:
// integral of D(s) plus integral of div(D) ^ s vanishes.
SuiteResult check_integral_characterization(uint64_t seed, int cases);

// The product rule again, against volumes rescaled by random even units.
SuiteResult check_product_rule_rescaled(uint64_t seed, int cases);

// Volume rescaling law: div_{xi s}(D) - div_{xi}(D) = s^{-1} ^ D(s) for even
// unit rescalings, with the integral characterization re-verified against
// the rescaled volume on torus models.
SuiteResult check_rescaling(uint64_t seed, int cases);

// Per instance: div(i_j) = 0 for every contraction, div(nabla_a) matches the
// classical divergence of the coordinate direction, and lifting a classical
// vector field reproduces its classical divergence.
SuiteResult check_basic_divergences(uint64_t seed, int cases);

// Bracket antisymmetry, Leibniz rule, and Jacobi identity over random
// homogeneous triples on curved models.
SuiteResult check_bracket_laws(uint64_t seed, int cases);

// The bracket of base functions has classical Poisson body, and equals the
// classical bracket exactly on flat models.
SuiteResult check_classical_restriction(uint64_t seed, int cases);

// Per instance: the modular class is trivial and the modular field of any
// base function has vanishing body.
SuiteResult check_unimodularity(uint64_t seed, int cases);

// Per rescaling: the modular fields of the plain and rescaled volumes differ
// by an explicit hamiltonian derivation (checked as an identity of frame
// coefficients for body-one rescalings) and certify the same verdict.
SuiteResult check_class_invariance(uint64_t seed, int cases);

// The divergence and derivation forms of the transport residual agree for
// divergence-free flows.
SuiteResult check_continuity_forms(uint64_t seed, int cases);

// Transporting a top-degree density along the lift of a classical vector
// field reproduces the classical continuity residual.
SuiteResult check_classical_reduction(uint64_t seed, int cases);

// A density transported along a hamiltonian flow on the torus has vanishing
// residual and conserved total integral.
SuiteResult check_conservation(uint64_t seed, int cases);

// Per instance: the curvature blocks equal the commutator of coordinate
// derivations acting on each generator.
SuiteResult check_curvature_commutator(uint64_t seed, int cases);

// All suites with decorrelated seeds; cases is forwarded to each suite.
std::vector<SuiteResult> run_all_suites(uint64_t seed, int cases);

}  // namespace evensym
