#pragma once

#include <cstdint>
#include <random>

#include "evensym/geometry.hpp"

namespace evensym {

// Deterministic stream for the randomized law suites: the same seed always
// reproduces the same cases.
class Rng {
 public:
	explicit Rng(uint64_t seed) : eng_(seed) {}

	int range(int lo, int hi);  // uniform on [lo, hi]
	bool flip() { return range(0, 1) == 1; }
	Q rational(int bound = 3);          // numerator in [-bound, bound], denominator in {1, 2, 3}
	Q nonzero_rational(int bound = 3);

 private:
	std::mt19937_64 eng_;
};

// Sparse low-degree ring elements so that iterated products stay small.
CoeffFn random_coeff(Rng& rng, const RingSpec& spec, bool allow_time = false);
CoeffFn random_base_coeff(Rng& rng, const RingSpec& spec);  // never zero, never time-dependent

Superfunction random_superfunction(Rng& rng, const RingSpec& spec, int rank,
                                   bool allow_time = false);
// Nonzero, all terms of the given parity.
Superfunction random_homogeneous(Rng& rng, const RingSpec& spec, int rank, int parity,
                                 bool allow_time = false);
// 1 + even soul.
Superfunction random_body_one_even(Rng& rng, const RingSpec& spec, int rank);
// Unit body (constant in torus mode) + even soul.
Superfunction random_unit_even(Rng& rng, const RingSpec& spec, int rank);

GradedDerivation random_derivation(Rng& rng, const SymplecticData& sd, bool allow_time = false);
GradedDerivation random_homogeneous_derivation(Rng& rng, const SymplecticData& sd, int parity);

// Admissible random model on a two-dimensional base: omega invertible
// antisymmetric (closed by construction), g = S^T diag(q_i^2) S constant
// symmetric with an exactly square determinant, gamma_a = h_a g^{-1} with h_a
// antisymmetric, which is metric compatible and trace free. Curved instances
// draw coordinate-dependent h_a and are regenerated until the curvature is
// nonzero.
SymplecticData random_symplectic_data(Rng& rng, Mode mode, int rank, bool curved);

}  // namespace evensym
