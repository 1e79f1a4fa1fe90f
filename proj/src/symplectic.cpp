#include "evensym/symplectic.hpp"

namespace evensym {

RothsteinForm::RothsteinForm(SymplecticData sd) : sd_(std::move(sd)), curv_(curvature(sd_)) {
	int d = sd_.spec.dim, r = sd_.rank;
	Superfunction zero(sd_.spec, r);
	w_ = mat_filled(d, d, zero);
	for (int a = 0; a < d; ++a)
		for (int b = 0; b < d; ++b) {
			Superfunction wab = Superfunction::scalar(sd_.spec, r, sd_.omega[a][b]);
			// Curvature bivector part: -1/2 sum_{j,k} B^{jk} e_j ^ e_k. The
			// sign makes the induced bracket satisfy the Jacobi identity; see
			// the bracket law suite.
			const CMatrix& bab = curv_.B[a][b];
			for (int j = 0; j < r; ++j)
				for (int k = j + 1; k < r; ++k) {
					CoeffFn c = (bab[j][k] - bab[k][j]) * Q(-1, 2);
					if (c.is_zero()) continue;
					wab.add_term((1u << j) | (1u << k), c);
				}
			w_[a][b] = std::move(wab);
		}
	w_inv_ = smat_inverse(w_);
	g_inv_ = cmat_inverse(sd_.g);
}

CMatrix RothsteinForm::w_body() const {
	int d = sd_.spec.dim;
	CMatrix r = cmat_zero(sd_.spec, d, d);
	for (int a = 0; a < d; ++a)
		for (int b = 0; b < d; ++b) r[a][b] = w_[a][b].body_coeff();
	return r;
}

Superfunction grade_involution(const Superfunction& s) {
	Superfunction r(s.spec(), s.rank());
	for (int k = 0; k <= s.max_degree(); ++k) {
		Superfunction part = s.grade(k);
		r += (k % 2) ? -part : part;
	}
	return r;
}

Superfunction theta_pair(const RothsteinForm& th, const GradedDerivation& D,
                         const GradedDerivation& E) {
	const SymplecticData& sd = th.data();
	Superfunction r(sd.spec, sd.rank);
	for (int a = 0; a < sd.spec.dim; ++a) {
		if (D.nabla_part(a).is_zero()) continue;
		for (int b = 0; b < sd.spec.dim; ++b)
			r += D.nabla_part(a) * E.nabla_part(b) * th.w_block()[a][b];
	}
	for (int j = 0; j < sd.rank; ++j) {
		if (D.contra_part(j).is_zero()) continue;
		for (int k = 0; k < sd.rank; ++k)
			r += (D.contra_part(j) * grade_involution(E.contra_part(k))) * sd.g[j][k];
	}
	return r;
}

GradedDerivation hamiltonian_field(const RothsteinForm& th, const Superfunction& s) {
	const SymplecticData& sd = th.data();
	const ConnectionPtr& conn = th.data().conn;
	int d = sd.spec.dim, r = sd.rank;

	GradedDerivation ds(conn);
	std::vector<Superfunction> rhs;
	rhs.reserve(d);
	for (int b = 0; b < d; ++b) rhs.push_back(nabla_apply(*conn, b, s));
	for (int a = 0; a < d; ++a) {
		Superfunction alpha(sd.spec, r);
		for (int b = 0; b < d; ++b) alpha += rhs[b] * th.w_inverse()[b][a];
		ds.set_nabla_part(a, std::move(alpha));
	}
	// The contraction block reads the differential through the grade
	// involution. This twist makes the pairing against a whole derivation
	// reduce uniformly to its application, which is what gives the bracket
	// its graded antisymmetry; see the bracket law suite.
	Superfunction tw = grade_involution(s);
	for (int k = 0; k < r; ++k) {
		Superfunction beta(sd.spec, r);
		for (int j = 0; j < r; ++j) beta += contract_apply(j, tw) * th.g_inverse()[j][k];
		ds.set_contra_part(k, std::move(beta));
	}

	// Back-substitution: frame insertions of the result must reproduce the
	// frame differential of s exactly.
	for (int b = 0; b < d; ++b) {
		Superfunction got = theta_pair(th, ds, GradedDerivation::coordinate(conn, b));
		require(got == rhs[b], Errc::Internal, "pairing solve failed on a connection direction");
	}
	for (int k = 0; k < r; ++k) {
		Superfunction got = theta_pair(th, ds, GradedDerivation::contraction(conn, k));
		require(got == contract_apply(k, tw), Errc::Internal,
		        "pairing solve failed on a contraction direction");
	}
	return ds;
}

Superfunction poisson_bracket(const RothsteinForm& th, const Superfunction& s,
                              const Superfunction& t) {
	return hamiltonian_field(th, s).apply(t);
}

}  // namespace evensym
