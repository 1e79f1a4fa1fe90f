#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>

#include "evensym/errors.hpp"
#include "evensym/rational.hpp"

namespace evensym {

inline constexpr int kMaxVars = 8;

// Exponent vector, lexicographically ordered.
struct Mono {
	std::array<uint16_t, kMaxVars> exp{};

	int total_degree() const {
		int d = 0;
		for (auto e : exp) d += e;
		return d;
	}
	friend auto operator<=>(const Mono&, const Mono&) = default;
};

// Map comparator putting the lex-greatest monomial first (leading term).
struct MonoLexGreater {
	bool operator()(const Mono& a, const Mono& b) const { return b.exp < a.exp; }
};

// Sparse multivariate polynomial over Q. Zero coefficients are never stored,
// so structural equality is canonical equality.
class Poly {
 public:
	using TermMap = std::map<Mono, Q, MonoLexGreater>;

	explicit Poly(int nvars = 1);
	static Poly constant(int nvars, const Q& c);
	static Poly variable(int nvars, int index);

	int nvars() const { return nvars_; }
	const TermMap& terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }
	bool is_constant() const;
	Q constant_value() const;  // requires is_constant(); zero poly gives 0
	int total_degree() const;  // -1 for the zero polynomial
	int degree_in(int var) const;
	bool depends_on(int var) const;

	Poly operator-() const;
	Poly& operator+=(const Poly& o);
	Poly& operator-=(const Poly& o);
	friend Poly operator+(Poly a, const Poly& b) { a += b; return a; }
	friend Poly operator-(Poly a, const Poly& b) { a -= b; return a; }
	friend Poly operator*(const Poly& a, const Poly& b);
	Poly operator*(const Q& c) const;
	Poly pow(unsigned k) const;
	Poly derivative(int var) const;

	// Quotient when the division is exact, nullopt otherwise.
	std::optional<Poly> divided_exactly_by(const Poly& d) const;
	// Primitive gcd with positive leading coefficient (1 for coprime inputs).
	static Poly gcd(const Poly& a, const Poly& b);

	bool operator==(const Poly&) const = default;
	std::string str(std::span<const std::string> names) const;

	void add_term(const Mono& m, const Q& c);

 private:
	int nvars_;
	TermMap terms_;
};

}  // namespace evensym
