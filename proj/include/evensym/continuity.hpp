#pragma once

#include "evensym/berezin.hpp"

namespace evensym {

// Density with first-order dependence on an external odd flow parameter:
// rho = base + sigma_coefficient, the latter sitting against the parameter.
// A homogeneous density has the sigma coefficient of opposite parity.
struct TimeDependentSection {
	Superfunction base;
	Superfunction sigma;

	bool is_zero() const { return base.is_zero() && sigma.is_zero(); }
	bool operator==(const TimeDependentSection&) const = default;
};

struct ContinuityResidual {
	TimeDependentSection divergence_form;
	TimeDependentSection lie_form;
};

// Residual of the transport equation for rho along D: the time derivative,
// the odd-parameter derivative, and the signed divergence of rho ^ D. The
// Lie form replaces the divergence term by the application of D; the two
// agree whenever D is divergence-free.
ContinuityResidual continuity_residual(const TimeDependentSection& rho,
                                       const GradedDerivation& D,
                                       const DivergenceOperator& div);

struct ConservationReport {
	bool conserved = false;
	Poly base_rate = Poly(1);   // d/dt of the base integral plus the sigma integral
	Poly sigma_rate = Poly(1);  // d/dt of the sigma integral
};

// For a density with vanishing transport residual on the torus, the super
// time derivative of the total integral vanishes: both rates are zero.
ConservationReport conservation_check(const TimeDependentSection& rho,
                                      const GradedDerivation& D,
                                      const DivergenceOperator& div);

struct ClassicalReductionReport {
	Superfunction residual;  // base part of the divergence-form residual
	Superfunction expected;  // classical continuity residual times the frame top
	bool match = false;
};

// Transports the top-degree density f e_1^e_2 along the lift of a base
// vector field X and compares against the classical continuity equation
// d_t f + div(f X). Needs a flat frame of rank two.
ClassicalReductionReport classical_reduction_demo(const DivergenceOperator& div,
                                                  const CoeffFn& f,
                                                  const std::vector<CoeffFn>& X);

}  // namespace evensym
