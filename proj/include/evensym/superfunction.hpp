#pragma once

#include <cstdint>
#include <map>
#include <optional>

#include "evensym/coeff.hpp"

namespace evensym {

// Koszul sign of merging the ordered generator blocks e_J ^ e_K into
// ascending order: 0 when the index sets overlap, else +-1.
int wedge_sign(uint32_t J, uint32_t K);

// Sign and remainder mask for extracting generator j out of the front of
// e_J (j must be a member): e_J = sign * e_j ^ e_{J without j}.
int extraction_sign(uint32_t J, int j);

// Section of the exterior bundle: a finite sum of coefficient functions
// times ascending generator monomials e_{j1}^...^e_{jp}, keyed by bitmask.
class Superfunction {
 public:
	Superfunction(RingSpec spec, int rank);
	static Superfunction scalar(RingSpec spec, int rank, CoeffFn c);
	static Superfunction constant(RingSpec spec, int rank, const Q& c);
	static Superfunction one(RingSpec spec, int rank) { return constant(spec, rank, Q(1)); }
	static Superfunction generator(RingSpec spec, int rank, int j);  // e_j, 1-based
	static Superfunction basis_term(RingSpec spec, int rank, uint32_t mask, CoeffFn c);

	const RingSpec& spec() const { return spec_; }
	int rank() const { return rank_; }
	const std::map<uint32_t, CoeffFn>& terms() const { return terms_; }
	CoeffFn coefficient(uint32_t mask) const;

	bool is_zero() const { return terms_.empty(); }
	bool is_even() const;
	bool is_odd() const;
	// 0 or 1 when every term has the same parity; nullopt for mixed. Zero
	// counts as even.
	std::optional<int> parity() const;
	std::optional<int> homogeneous_degree() const;
	int max_degree() const;
	bool depends_on_time() const;

	Superfunction grade(int k) const;
	Superfunction body() const { return grade(0); }
	CoeffFn body_coeff() const;
	Superfunction soul() const;

	Superfunction operator-() const;
	Superfunction& operator+=(const Superfunction& o);
	Superfunction& operator-=(const Superfunction& o);
	friend Superfunction operator+(Superfunction a, const Superfunction& b) { a += b; return a; }
	friend Superfunction operator-(Superfunction a, const Superfunction& b) { a -= b; return a; }
	// Wedge product.
	friend Superfunction operator*(const Superfunction& a, const Superfunction& b);
	Superfunction operator*(const CoeffFn& c) const;
	Superfunction operator*(const Q& c) const;
	Superfunction wedge_pow(unsigned k) const;

	// Inverse of an even element whose body is a unit (finite Neumann series
	// on the nilpotent soul).
	Superfunction inverse_even() const;
	// Logarithm of an even element with body exactly 1 (finite series).
	Superfunction log_even() const;
	// Exponential of an even element with zero body (finite series).
	Superfunction exp_nilpotent() const;

	// Coefficient-wise partial derivatives (no connection action).
	Superfunction partial_coeffs(int a) const;
	Superfunction partial_t() const;

	bool operator==(const Superfunction&) const = default;
	std::string str() const;

	void add_term(uint32_t mask, const CoeffFn& c);

 private:
	RingSpec spec_;
	int rank_;
	std::map<uint32_t, CoeffFn> terms_;
};

void check_same_shape(const Superfunction& a, const Superfunction& b);

}  // namespace evensym
