#pragma once

#include "evensym/geometry.hpp"

namespace evensym {

// Gram blocks of the even symplectic pairing over the derivation frame:
// connection directions pair through W (base form plus curvature bivector),
// contraction directions through the fiber metric, mixed entries vanish.
class RothsteinForm {
 public:
	explicit RothsteinForm(SymplecticData sd);

	const SymplecticData& data() const { return sd_; }
	const CurvatureData& curvature_blocks() const { return curv_; }
	const SMatrix& w_block() const { return w_; }
	const SMatrix& w_inverse() const { return w_inv_; }
	const CMatrix& g_inverse() const { return g_inv_; }
	// Degree-0 part of the connection pairing block (the base form alone).
	CMatrix w_body() const;

 private:
	SymplecticData sd_;
	CurvatureData curv_;
	SMatrix w_;
	SMatrix w_inv_;
	CMatrix g_inv_;
};

// Grade involution: even part minus odd part.
Superfunction grade_involution(const Superfunction& s);

// Evaluation of the pairing on two derivations, bilinear over superfunction
// coefficients with the Koszul twist on the second slot.
Superfunction theta_pair(const RothsteinForm& th, const GradedDerivation& D,
                         const GradedDerivation& E);

// The unique derivation D_s whose frame insertions reproduce the frame
// differential of s, with contraction slots read through the grade
// involution; verified by back-substitution.
GradedDerivation hamiltonian_field(const RothsteinForm& th, const Superfunction& s);

// Even bracket [[s, t]] = D_s(t).
Superfunction poisson_bracket(const RothsteinForm& th, const Superfunction& s,
                              const Superfunction& t);

}  // namespace evensym
