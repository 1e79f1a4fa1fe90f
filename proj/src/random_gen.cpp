#include "evensym/random_gen.hpp"

#include <cstdlib>
#include <utility>
#include <vector>

namespace evensym {

int Rng::range(int lo, int hi) {
	return std::uniform_int_distribution<int>(lo, hi)(eng_);
}

Q Rng::rational(int bound) {
	return Q(range(-bound, bound), range(1, 3));
}

Q Rng::nonzero_rational(int bound) {
	int num = range(1, bound) * (flip() ? 1 : -1);
	return Q(num, range(1, 3));
}

namespace {

// One multiplicative atom: a coordinate monomial or a single trig mode.
CoeffFn random_atom(Rng& rng, const RingSpec& spec) {
	if (spec.mode == Mode::Chart) {
		CoeffFn m = CoeffFn::one(spec);
		int degree = rng.range(1, 2);
		for (int i = 0; i < degree; ++i)
			m = m * CoeffFn::coordinate(spec, rng.range(0, spec.dim - 1));
		return m;
	}
	std::vector<int32_t> freq(spec.dim, 0);
	for (int32_t& k : freq) k = rng.range(-1, 1);
	bool any = false;
	for (int32_t k : freq) any = any || k != 0;
	bool is_sin = any && rng.flip();
	return CoeffFn::trig_mode(spec, std::move(freq), is_sin);
}

CoeffFn random_term(Rng& rng, const RingSpec& spec, bool allow_time) {
	CoeffFn term = random_atom(rng, spec) * rng.nonzero_rational();
	if (allow_time && rng.range(0, 3) == 0) term = term * CoeffFn::time(spec);
	return term;
}

uint32_t random_mask_of_parity(Rng& rng, int rank, int parity) {
	while (true) {
		uint32_t mask = static_cast<uint32_t>(rng.range(0, (1 << rank) - 1));
		if (__builtin_popcount(mask) % 2 == parity) return mask;
	}
}

}  // namespace

CoeffFn random_coeff(Rng& rng, const RingSpec& spec, bool allow_time) {
	CoeffFn c = CoeffFn::zero(spec);
	int terms = rng.range(0, 2);
	for (int i = 0; i < terms; ++i) c = c + random_term(rng, spec, allow_time);
	return c;
}

CoeffFn random_base_coeff(Rng& rng, const RingSpec& spec) {
	CoeffFn c = random_term(rng, spec, false);
	if (rng.flip()) c = c + random_term(rng, spec, false);
	if (c.is_zero()) c = CoeffFn::constant(spec, rng.nonzero_rational());
	return c;
}

Superfunction random_superfunction(Rng& rng, const RingSpec& spec, int rank, bool allow_time) {
	Superfunction s(spec, rank);
	int terms = rng.range(1, 3);
	for (int i = 0; i < terms; ++i) {
		uint32_t mask = static_cast<uint32_t>(rng.range(0, (1 << rank) - 1));
		s += Superfunction::basis_term(spec, rank, mask, random_coeff(rng, spec, allow_time));
	}
	return s;
}

Superfunction random_homogeneous(Rng& rng, const RingSpec& spec, int rank, int parity,
                                 bool allow_time) {
	Superfunction s = Superfunction::basis_term(spec, rank, random_mask_of_parity(rng, rank, parity),
	                                            random_base_coeff(rng, spec));
	int extra = rng.range(0, 2);
	for (int i = 0; i < extra; ++i)
		s += Superfunction::basis_term(spec, rank, random_mask_of_parity(rng, rank, parity),
		                               random_coeff(rng, spec, allow_time));
	return s;
}

Superfunction random_body_one_even(Rng& rng, const RingSpec& spec, int rank) {
	Superfunction s = Superfunction::one(spec, rank);
	int terms = rng.range(1, 2);
	for (int i = 0; i < terms; ++i) {
		uint32_t mask = random_mask_of_parity(rng, rank, 0);
		if (mask == 0) mask = (1u << rank) - (rank % 2 ? 2u : 1u);  // top even mask instead
		s += Superfunction::basis_term(spec, rank, mask, random_coeff(rng, spec, false));
	}
	return s;
}

Superfunction random_unit_even(Rng& rng, const RingSpec& spec, int rank) {
	CoeffFn body = CoeffFn::constant(spec, rng.nonzero_rational());
	if (spec.mode == Mode::Chart && rng.flip()) {
		CoeffFn x = CoeffFn::coordinate(spec, rng.range(0, spec.dim - 1));
		body = body + x * x * rng.nonzero_rational();
	}
	Superfunction s = Superfunction::scalar(spec, rank, body);
	int terms = rng.range(0, 2);
	for (int i = 0; i < terms; ++i) {
		uint32_t mask = random_mask_of_parity(rng, rank, 0);
		if (mask != 0)
			s += Superfunction::basis_term(spec, rank, mask, random_coeff(rng, spec, false));
	}
	return s;
}

GradedDerivation random_derivation(Rng& rng, const SymplecticData& sd, bool allow_time) {
	GradedDerivation d(sd.conn);
	for (int a = 0; a < sd.spec.dim; ++a)
		if (rng.flip()) d.set_nabla_part(a, random_superfunction(rng, sd.spec, sd.rank, allow_time));
	for (int j = 0; j < sd.rank; ++j)
		if (rng.flip()) d.set_contra_part(j, random_superfunction(rng, sd.spec, sd.rank, allow_time));
	if (d.is_zero())
		d.set_nabla_part(0, Superfunction::scalar(sd.spec, sd.rank, random_base_coeff(rng, sd.spec)));
	return d;
}

GradedDerivation random_homogeneous_derivation(Rng& rng, const SymplecticData& sd, int parity) {
	GradedDerivation d(sd.conn);
	d.set_nabla_part(rng.range(0, sd.spec.dim - 1),
	                 random_homogeneous(rng, sd.spec, sd.rank, parity));
	for (int a = 0; a < sd.spec.dim; ++a)
		if (rng.range(0, 2) == 0)
			d.set_nabla_part(a, random_homogeneous(rng, sd.spec, sd.rank, parity));
	for (int j = 0; j < sd.rank; ++j)
		if (rng.range(0, 2) == 0)
			d.set_contra_part(j, random_homogeneous(rng, sd.spec, sd.rank, (parity + 1) % 2));
	return d;
}

namespace {

CMatrix random_metric(Rng& rng, const RingSpec& spec, int rank) {
	CMatrix d = cmat_zero(spec, rank, rank);
	for (int i = 0; i < rank; ++i) {
		Q q = rng.nonzero_rational(2);
		d[i][i] = CoeffFn::constant(spec, q * q);
	}
	// Triangular shears keep det(S) = 1, so det(G) stays an exact square.
	CMatrix s = cmat_identity(spec, rank);
	bool upper = rng.flip();
	int shears = rng.range(1, 2);
	for (int k = 0; k < shears; ++k) {
		int i = rng.range(0, rank - 2);
		int j = rng.range(i + 1, rank - 1);
		int row = upper ? i : j;
		int col = upper ? j : i;
		s[row][col] = s[row][col] + CoeffFn::constant(spec, Q(rng.range(-2, 2)));
	}
	CoeffFn zero = CoeffFn::zero(spec);
	return mat_mul(mat_transpose(s), mat_mul(d, s, zero), zero);
}

std::vector<CMatrix> random_gamma(Rng& rng, const RingSpec& spec, int rank, const CMatrix& g,
                                  bool curved) {
	std::vector<CMatrix> gamma;
	CMatrix ginv = cmat_inverse(g);
	CoeffFn zero = CoeffFn::zero(spec);
	for (int a = 0; a < spec.dim; ++a) {
		CMatrix h = cmat_zero(spec, rank, rank);
		if (curved) {
			for (int i = 0; i < rank; ++i)
				for (int j = i + 1; j < rank; ++j) {
					CoeffFn entry = rng.flip() ? random_base_coeff(rng, spec) : zero;
					h[i][j] = entry;
					h[j][i] = -entry;
				}
		}
		gamma.push_back(mat_mul(h, ginv, zero));
	}
	return gamma;
}

bool has_curvature(const SymplecticData& sd) {
	CurvatureData cd = curvature(sd);
	for (const auto& row : cd.R)
		for (const CMatrix& block : row)
			for (const auto& line : block)
				for (const CoeffFn& c : line)
					if (!c.is_zero()) return true;
	return false;
}

}  // namespace

SymplecticData random_symplectic_data(Rng& rng, Mode mode, int rank, bool curved) {
	RingSpec spec{mode, 2};
	for (int attempt = 0; attempt < 32; ++attempt) {
		CoeffFn w = CoeffFn::constant(spec, rng.nonzero_rational());
		if (mode == Mode::Chart && !curved && rng.flip()) {
			// A position-dependent symplectic coefficient makes the pairing
			// inverse a genuine rational function.  Restricted to flat frames
			// so the curvature corrections stay polynomial and cheap.
			CoeffFn x = CoeffFn::coordinate(spec, rng.range(0, 1));
			w = w + x * x * rng.nonzero_rational();
		}
		CMatrix omega = cmat_zero(spec, 2, 2);
		omega[0][1] = w;
		omega[1][0] = -w;
		CMatrix g = random_metric(rng, spec, rank);
		std::vector<CMatrix> gamma = random_gamma(rng, spec, rank, g, curved);
		SymplecticData sd =
		    make_symplectic_data(spec, rank, std::move(omega), std::move(g), std::move(gamma));
		if (curved && !has_curvature(sd)) continue;
		DataReport report = check_data(sd);
		require(report.ok, Errc::Internal,
		        "generated model failed validation: " +
		            (report.problems.empty() ? std::string() : report.problems.front()));
		return sd;
	}
	fail(Errc::Internal, "could not generate a curved model");
}

}  // namespace evensym
