#pragma once

#include <string>

#include "evensym/poly.hpp"

namespace evensym {

// Quotient of polynomials in reduced canonical form: numerator and denominator
// are coprime and the denominator is monic in the lex leading coefficient, so
// equal functions compare equal structurally.
class RationalFn {
 public:
	explicit RationalFn(int nvars = 1) : num_(nvars), den_(Poly::constant(nvars, 1)) {}
	RationalFn(Poly num, Poly den);
	static RationalFn constant(int nvars, const Q& c) {
		return RationalFn(Poly::constant(nvars, c), Poly::constant(nvars, 1));
	}
	static RationalFn from_poly(Poly p) {
		int n = p.nvars();
		return RationalFn(std::move(p), Poly::constant(n, 1));
	}

	const Poly& num() const { return num_; }
	const Poly& den() const { return den_; }
	int nvars() const { return num_.nvars(); }
	bool is_zero() const { return num_.is_zero(); }
	bool is_polynomial() const { return den_ == Poly::constant(num_.nvars(), 1); }
	bool is_constant() const { return is_polynomial() && num_.is_constant(); }
	Q constant_value() const { return num_.constant_value(); }
	bool depends_on(int var) const { return num_.depends_on(var) || den_.depends_on(var); }

	RationalFn operator-() const;
	friend RationalFn operator+(const RationalFn& a, const RationalFn& b);
	friend RationalFn operator-(const RationalFn& a, const RationalFn& b);
	friend RationalFn operator*(const RationalFn& a, const RationalFn& b);
	friend RationalFn operator/(const RationalFn& a, const RationalFn& b);
	RationalFn derivative(int var) const;

	bool operator==(const RationalFn&) const = default;
	std::string str(std::span<const std::string> names) const;

 private:
	Poly num_, den_;
	void normalize();
	// For results that are reduced by construction: skips the gcd and only
	// fixes the zero representative and the denominator normalization.
	static RationalFn reduced(Poly num, Poly den);
};

}  // namespace evensym
