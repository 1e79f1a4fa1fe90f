#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "evensym/poly.hpp"

namespace evensym {

// Fourier mode label. Canonical form: the zero frequency only appears as the
// cosine (constant) mode, and the first nonzero frequency entry is positive
// (cos is even and sin is odd under negating the frequency vector).
struct TrigKey {
	std::vector<int32_t> freq;
	bool is_sin = false;

	bool is_constant() const;
	friend auto operator<=>(const TrigKey&, const TrigKey&) = default;
};

// Finite Fourier series on the d-torus with coefficients in Q[t]. Products
// reduce through the product-to-sum identities, so the representation is
// closed under multiplication and structurally canonical.
class TrigPoly {
 public:
	explicit TrigPoly(int dim = 1) : dim_(dim) {}
	static TrigPoly constant(int dim, const Q& c);
	static TrigPoly constant_poly(int dim, Poly c);  // c in Q[t]
	static TrigPoly mode(int dim, std::vector<int32_t> freq, bool is_sin);

	int dim() const { return dim_; }
	const std::map<TrigKey, Poly>& terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }
	bool is_x_free() const;     // only the constant mode present
	bool is_constant() const;   // x-free and t-free
	Q constant_value() const;   // requires is_constant(); zero gives 0
	Poly constant_mode() const;  // coefficient of the constant mode, in Q[t]
	bool depends_on_time() const;

	TrigPoly operator-() const;
	TrigPoly& operator+=(const TrigPoly& o);
	TrigPoly& operator-=(const TrigPoly& o);
	friend TrigPoly operator+(TrigPoly a, const TrigPoly& b) { a += b; return a; }
	friend TrigPoly operator-(TrigPoly a, const TrigPoly& b) { a -= b; return a; }
	friend TrigPoly operator*(const TrigPoly& a, const TrigPoly& b);
	TrigPoly operator*(const Q& c) const;

	TrigPoly derivative(int coord) const;
	TrigPoly derivative_t() const;

	// Quotient when it stays in the ring (divisor must be x-free and divide
	// every mode coefficient exactly in Q[t]); nullopt otherwise.
	std::optional<TrigPoly> divided_exactly_by(const TrigPoly& d) const;

	bool operator==(const TrigPoly&) const = default;
	std::string str(std::span<const std::string> coord_names) const;

	void add_term(std::vector<int32_t> freq, bool is_sin, const Poly& c);

 private:
	int dim_;
	std::map<TrigKey, Poly> terms_;
};

}  // namespace evensym
