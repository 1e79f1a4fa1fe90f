#include "evensym/linalg.hpp"

namespace evensym {

CMatrix cmat_zero(const RingSpec& spec, int rows, int cols) {
	return mat_filled(rows, cols, CoeffFn::zero(spec));
}

CMatrix cmat_identity(const RingSpec& spec, int n) {
	return mat_identity(n, CoeffFn::zero(spec), CoeffFn::one(spec));
}

CMatrix cmat_inverse(const CMatrix& a) {
	const RingSpec& spec = a[0][0].spec();
	CoeffFn zero = CoeffFn::zero(spec);
	CoeffFn det = mat_det(a, zero);
	require(det.is_unit(), Errc::DegenerateBody, "matrix determinant is not a unit");
	CoeffFn dinv = det.inverse();
	CMatrix adj = mat_adjugate(a, zero, CoeffFn::one(spec));
	for (auto& row : adj)
		for (auto& v : row) v = v * dinv;
	return adj;
}

SMatrix smat_from_cmat(const CMatrix& a, int rank) {
	const RingSpec& spec = a[0][0].spec();
	SMatrix r;
	r.reserve(a.size());
	for (const auto& row : a) {
		std::vector<Superfunction> line;
		line.reserve(row.size());
		for (const auto& v : row) line.push_back(Superfunction::scalar(spec, rank, v));
		r.push_back(std::move(line));
	}
	return r;
}

bool smat_is_zero(const SMatrix& a) {
	for (const auto& row : a)
		for (const auto& v : row)
			if (!v.is_zero()) return false;
	return true;
}

SMatrix smat_inverse(const SMatrix& a) {
	int n = a.size();
	const RingSpec& spec = a[0][0].spec();
	int rank = a[0][0].rank();
	CMatrix body(n, std::vector<CoeffFn>(n, CoeffFn::zero(spec)));
	for (int i = 0; i < n; ++i)
		for (int j = 0; j < n; ++j) {
			require(a[i][j].is_even(), Errc::OddElement, "matrix entries must be even");
			body[i][j] = a[i][j].body_coeff();
		}
	SMatrix b0inv = smat_from_cmat(cmat_inverse(body), rank);
	SMatrix nil = mat_sub(a, smat_from_cmat(body, rank));

	Superfunction zero(spec, rank);
	Superfunction one = Superfunction::one(spec, rank);
	SMatrix m = mat_mul(b0inv, nil, zero);  // entries have fiber degree >= 2
	SMatrix acc = mat_identity(n, zero, one);
	SMatrix power = acc;
	int bound = rank / 2;
	for (int k = 1; k <= bound; ++k) {
		power = mat_mul(power, m, zero);
		if (smat_is_zero(power)) break;
		acc = (k % 2) ? mat_sub(acc, power) : mat_add(acc, power);
	}
	require(smat_is_zero(mat_mul(power, m, zero)), Errc::Internal, "matrix soul nilpotency bound violated");
	return mat_mul(acc, b0inv, zero);
}

}  // namespace evensym
