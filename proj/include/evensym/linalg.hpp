#pragma once

#include <vector>

#include "evensym/superfunction.hpp"

namespace evensym {

// Dense square matrices over the coefficient ring or the full exterior
// algebra. Sizes stay tiny (the base dimension or the fiber rank), so
// determinants expand by Laplace cofactors.
template <class T>
using Matrix = std::vector<std::vector<T>>;

using CMatrix = Matrix<CoeffFn>;
using SMatrix = Matrix<Superfunction>;

template <class T>
Matrix<T> mat_filled(int rows, int cols, const T& v) {
	return Matrix<T>(rows, std::vector<T>(cols, v));
}

template <class T>
Matrix<T> mat_identity(int n, const T& zero, const T& one) {
	Matrix<T> m = mat_filled(n, n, zero);
	for (int i = 0; i < n; ++i) m[i][i] = one;
	return m;
}

template <class T>
Matrix<T> mat_add(const Matrix<T>& a, const Matrix<T>& b) {
	Matrix<T> r = a;
	for (size_t i = 0; i < a.size(); ++i)
		for (size_t j = 0; j < a[i].size(); ++j) r[i][j] = a[i][j] + b[i][j];
	return r;
}

template <class T>
Matrix<T> mat_sub(const Matrix<T>& a, const Matrix<T>& b) {
	Matrix<T> r = a;
	for (size_t i = 0; i < a.size(); ++i)
		for (size_t j = 0; j < a[i].size(); ++j) r[i][j] = a[i][j] - b[i][j];
	return r;
}

template <class T>
Matrix<T> mat_neg(const Matrix<T>& a) {
	Matrix<T> r = a;
	for (auto& row : r)
		for (auto& v : row) v = -v;
	return r;
}

template <class T>
Matrix<T> mat_mul(const Matrix<T>& a, const Matrix<T>& b, const T& zero) {
	int n = a.size(), m = b[0].size(), k = b.size();
	Matrix<T> r = mat_filled(n, m, zero);
	for (int i = 0; i < n; ++i)
		for (int j = 0; j < m; ++j)
			for (int l = 0; l < k; ++l) r[i][j] = r[i][j] + a[i][l] * b[l][j];
	return r;
}

template <class T>
Matrix<T> mat_transpose(const Matrix<T>& a) {
	int n = a.size(), m = a[0].size();
	Matrix<T> r = mat_filled(m, n, a[0][0]);
	for (int i = 0; i < n; ++i)
		for (int j = 0; j < m; ++j) r[j][i] = a[i][j];
	return r;
}

template <class T>
Matrix<T> mat_minor(const Matrix<T>& a, int row, int col) {
	int n = a.size();
	Matrix<T> r;
	r.reserve(n - 1);
	for (int i = 0; i < n; ++i) {
		if (i == row) continue;
		std::vector<T> line;
		line.reserve(n - 1);
		for (int j = 0; j < n; ++j)
			if (j != col) line.push_back(a[i][j]);
		r.push_back(std::move(line));
	}
	return r;
}

template <class T>
T mat_det(const Matrix<T>& a, const T& zero) {
	int n = a.size();
	if (n == 0) return zero;
	if (n == 1) return a[0][0];
	T det = zero;
	for (int j = 0; j < n; ++j) {
		T term = a[0][j] * mat_det(mat_minor(a, 0, j), zero);
		det = (j % 2) ? det - term : det + term;
	}
	return det;
}

template <class T>
Matrix<T> mat_adjugate(const Matrix<T>& a, const T& zero, const T& one) {
	int n = a.size();
	if (n == 1) return mat_filled(1, 1, one);
	Matrix<T> r = mat_filled(n, n, zero);
	for (int i = 0; i < n; ++i)
		for (int j = 0; j < n; ++j) {
			T c = mat_det(mat_minor(a, i, j), zero);
			r[j][i] = ((i + j) % 2) ? -c : c;
		}
	return r;
}

// Inverse over the coefficient ring; the determinant must be a unit.
CMatrix cmat_inverse(const CMatrix& a);

// Inverse of a matrix of even superfunctions whose body matrix is invertible
// over the coefficient ring: finite Neumann series on the nilpotent part.
SMatrix smat_inverse(const SMatrix& a);

CMatrix cmat_zero(const RingSpec& spec, int rows, int cols);
CMatrix cmat_identity(const RingSpec& spec, int n);
SMatrix smat_from_cmat(const CMatrix& a, int rank);
bool smat_is_zero(const SMatrix& a);

}  // namespace evensym
