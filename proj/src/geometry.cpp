#include "evensym/geometry.hpp"

namespace evensym {

SymplecticData make_symplectic_data(RingSpec spec, int rank, CMatrix omega, CMatrix g,
                                    std::vector<CMatrix> gamma, std::optional<Q> metric_scale) {
	require(spec.dim >= 2 && spec.dim % 2 == 0, Errc::DimensionMismatch,
	        "base dimension must be even and at least 2");
	require((int)omega.size() == spec.dim, Errc::DimensionMismatch, "omega size");
	require((int)g.size() == rank, Errc::RankMismatch, "metric size");
	require((int)gamma.size() == spec.dim, Errc::DimensionMismatch, "connection block count");
	for (const auto& row : omega)
		require((int)row.size() == spec.dim, Errc::DimensionMismatch, "omega row size");
	for (const auto& row : g)
		require((int)row.size() == rank, Errc::RankMismatch, "metric row size");
	for (const auto& blk : gamma) {
		require((int)blk.size() == rank, Errc::RankMismatch, "connection block size");
		for (const auto& row : blk)
			require((int)row.size() == rank, Errc::RankMismatch, "connection block row size");
	}
	auto conn = std::make_shared<const ConnectionData>(ConnectionData{spec, rank, std::move(gamma)});
	return SymplecticData{spec, rank, std::move(omega), std::move(g), std::move(conn), metric_scale};
}

static std::string entry(const std::string& name, int i, int j) {
	return name + "[" + std::to_string(i) + "][" + std::to_string(j) + "]";
}

DataReport check_data(const SymplecticData& sd) {
	DataReport rep;
	int d = sd.spec.dim, r = sd.rank;
	const CoeffFn zero = CoeffFn::zero(sd.spec);

	for (int a = 0; a < d; ++a)
		for (int b = 0; b < d; ++b)
			if (!(sd.omega[a][b] + sd.omega[b][a]).is_zero())
				rep.fail("omega is not antisymmetric at " + entry("omega", a, b));
	for (int a = 0; a < d; ++a)
		for (int b = a + 1; b < d; ++b)
			for (int c = b + 1; c < d; ++c) {
				CoeffFn cyc = sd.omega[b][c].partial(a) + sd.omega[c][a].partial(b) +
				              sd.omega[a][b].partial(c);
				if (!cyc.is_zero())
					rep.fail("omega is not closed at coordinates (" + std::to_string(a + 1) + "," +
					         std::to_string(b + 1) + "," + std::to_string(c + 1) + ")");
			}
	if (!mat_det(sd.omega, zero).is_unit()) rep.fail("det(omega) is not a unit");

	for (int j = 0; j < r; ++j)
		for (int k = j + 1; k < r; ++k)
			if (!(sd.g[j][k] - sd.g[k][j]).is_zero())
				rep.fail("metric is not symmetric at " + entry("g", j, k));
	if (!mat_det(sd.g, zero).is_unit()) rep.fail("det(g) is not a unit");

	// Dual-frame metric compatibility: dG + Gamma_a G + G Gamma_a^T = 0.
	for (int a = 0; a < d; ++a) {
		const CMatrix& ga = sd.conn->gamma[a];
		for (int j = 0; j < r; ++j)
			for (int k = 0; k < r; ++k) {
				CoeffFn v = sd.g[j][k].partial(a);
				for (int l = 0; l < r; ++l) v = v + ga[j][l] * sd.g[l][k] + ga[k][l] * sd.g[j][l];
				if (!v.is_zero())
					rep.fail("connection is not metric at coordinate " + std::to_string(a + 1) +
					         ", " + entry("g", j, k));
			}
	}
	return rep;
}

CurvatureData curvature(const SymplecticData& sd) {
	int d = sd.spec.dim, r = sd.rank;
	const CoeffFn zero = CoeffFn::zero(sd.spec);
	CurvatureData cd;
	cd.R.assign(d, std::vector<CMatrix>(d, cmat_zero(sd.spec, r, r)));
	cd.B = cd.R;
	for (int a = 0; a < d; ++a)
		for (int b = 0; b < d; ++b) {
			const CMatrix& ga = sd.conn->gamma[a];
			const CMatrix& gb = sd.conn->gamma[b];
			CMatrix rab = cmat_zero(sd.spec, r, r);
			for (int j = 0; j < r; ++j)
				for (int k = 0; k < r; ++k) rab[j][k] = gb[j][k].partial(a) - ga[j][k].partial(b);
			rab = mat_add(rab, mat_sub(mat_mul(ga, gb, zero), mat_mul(gb, ga, zero)));
			cd.B[a][b] = mat_mul(rab, sd.g, zero);
			cd.R[a][b] = std::move(rab);
		}
	return cd;
}

CoeffFn symplectic_volume_coefficient(const SymplecticData& sd) {
	int d = sd.spec.dim;
	// Auxiliary exterior algebra on the coordinate differentials.
	Superfunction two_form(sd.spec, d);
	for (int a = 0; a < d; ++a)
		for (int b = a + 1; b < d; ++b)
			two_form.add_term((1u << a) | (1u << b), sd.omega[a][b]);
	Superfunction top = two_form.wedge_pow(d / 2);
	return top.coefficient((1u << d) - 1u);
}

static CoeffFn divide_by_volume(const CoeffFn& num, const CoeffFn& w) {
	auto q = num.divided_exactly_by(w);
	require(q.has_value(), Errc::NonUnitVolumeCoefficient,
	        "volume coefficient does not divide exactly");
	return *q;
}

CoeffFn classical_divergence(const SymplecticData& sd, const std::vector<CoeffFn>& X) {
	CoeffFn w = symplectic_volume_coefficient(sd);
	require(!w.is_zero(), Errc::NonUnitVolumeCoefficient, "volume coefficient vanishes");
	CoeffFn num = CoeffFn::zero(sd.spec);
	for (int a = 0; a < sd.spec.dim; ++a) num = num + (w * X[a]).partial(a);
	return divide_by_volume(num, w);
}

std::vector<CoeffFn> hamiltonian_vector_field(const SymplecticData& sd, const CoeffFn& f) {
	int d = sd.spec.dim;
	CMatrix winv = cmat_inverse(sd.omega);
	std::vector<CoeffFn> X(d, CoeffFn::zero(sd.spec));
	for (int a = 0; a < d; ++a)
		for (int b = 0; b < d; ++b) X[a] = X[a] + f.partial(b) * winv[b][a];
	return X;
}

CoeffFn classical_poisson(const SymplecticData& sd, const CoeffFn& f, const CoeffFn& h) {
	std::vector<CoeffFn> X = hamiltonian_vector_field(sd, f);
	CoeffFn r = CoeffFn::zero(sd.spec);
	for (int a = 0; a < sd.spec.dim; ++a) r = r + X[a] * h.partial(a);
	return r;
}

CoeffFn metric_volume_contract(const SymplecticData& sd, const Superfunction& s) {
	Q c;
	if (sd.metric_scale.has_value()) {
		c = *sd.metric_scale;
	} else {
		CoeffFn det = mat_det(sd.g, CoeffFn::zero(sd.spec));
		require(det.is_constant(), Errc::NonConstantMetricDeterminant,
		        "metric determinant is not constant");
		auto root = rational_sqrt(det.constant_value());
		require(root.has_value() && *root != 0, Errc::IrrationalSqrt,
		        "metric determinant has no rational square root");
		c = Q(1) / *root;
	}
	require(s.rank() == sd.rank, Errc::RankMismatch, "section rank");
	return s.coefficient((1u << sd.rank) - 1u) * c;
}

bool is_closed_classical(const SymplecticData& sd, const std::vector<CoeffFn>& alpha) {
	for (int a = 0; a < sd.spec.dim; ++a)
		for (int b = a + 1; b < sd.spec.dim; ++b)
			if (!(alpha[b].partial(a) - alpha[a].partial(b)).is_zero()) return false;
	return true;
}

bool is_exact_classical(const SymplecticData& sd, const std::vector<CoeffFn>& alpha) {
	if (!is_closed_classical(sd, alpha)) return false;
	if (sd.spec.mode == Mode::Torus) {
		for (const auto& a : alpha)
			if (!a.torus_constant_mode().is_zero()) return false;
	}
	return true;
}

}  // namespace evensym
