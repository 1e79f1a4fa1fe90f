#pragma once

#include <optional>
#include <string>
#include <vector>

#include "evensym/derivation.hpp"

namespace evensym {

// Classical data of an even symplectic model: base symplectic form, fiber
// metric on the dual frame, metric connection, and an optional explicit
// normalization for the metric volume.
struct SymplecticData {
	RingSpec spec;
	int rank = 0;
	CMatrix omega;  // d x d, antisymmetric, closed, invertible
	CMatrix g;      // r x r, symmetric, unit determinant
	ConnectionPtr conn;
	std::optional<Q> metric_scale;  // overrides det(g)^{-1/2} when supplied
};

SymplecticData make_symplectic_data(RingSpec spec, int rank, CMatrix omega, CMatrix g,
                                    std::vector<CMatrix> gamma,
                                    std::optional<Q> metric_scale = std::nullopt);

struct DataReport {
	bool ok = true;
	std::vector<std::string> problems;

	void fail(std::string msg) {
		ok = false;
		problems.push_back(std::move(msg));
	}
};

// Verifies antisymmetry and closedness of omega, unit determinants, symmetry
// of g, and metric compatibility of the connection, reporting each offending
// entry by field path.
DataReport check_data(const SymplecticData& sd);

// Curvature blocks R[a][b] (endomorphism form, antisymmetric in a,b) and
// their metric-raised bivector components B[a][b] = R[a][b] * g.
struct CurvatureData {
	std::vector<std::vector<CMatrix>> R;
	std::vector<std::vector<CMatrix>> B;
};

CurvatureData curvature(const SymplecticData& sd);

// Coefficient W of the top wedge power of omega: omega^(d/2) = W dx1...dxd,
// computed literally with no factorial normalization.
CoeffFn symplectic_volume_coefficient(const SymplecticData& sd);

// Divergence of the base vector field X against the volume W dx1...dxd.
CoeffFn classical_divergence(const SymplecticData& sd, const std::vector<CoeffFn>& X);

// Solves sum_a X^a omega_{ab} = (df)_b.
std::vector<CoeffFn> hamiltonian_vector_field(const SymplecticData& sd, const CoeffFn& f);

CoeffFn classical_poisson(const SymplecticData& sd, const CoeffFn& f, const CoeffFn& h);

// Normalization det(g)^{-1/2} (or the explicit override) times the top
// generator coefficient of s.
CoeffFn metric_volume_contract(const SymplecticData& sd, const Superfunction& s);

bool is_closed_classical(const SymplecticData& sd, const std::vector<CoeffFn>& alpha);
// Chart mode: exact iff closed. Torus mode: exact iff closed with zero
// constant Fourier mode in every component (periods vanish).
bool is_exact_classical(const SymplecticData& sd, const std::vector<CoeffFn>& alpha);

}  // namespace evensym
