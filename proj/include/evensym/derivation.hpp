#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "evensym/linalg.hpp"

namespace evensym {

// Connection coefficients on the exterior bundle: gamma[a][k][j] is the
// e_k component of the covariant derivative of e_j along coordinate a.
struct ConnectionData {
	RingSpec spec;
	int rank = 0;
	std::vector<CMatrix> gamma;  // one rank x rank block per coordinate

	static ConnectionData flat(RingSpec spec, int rank);
};

using ConnectionPtr = std::shared_ptr<const ConnectionData>;

// Covariant derivative along coordinate a: coefficients differentiate and
// generators rotate through the connection block.
Superfunction nabla_apply(const ConnectionData& conn, int a, const Superfunction& s);

// Interior contraction against generator j (0-based): the odd superderivation
// dual to wedging by e_{j+1}.
Superfunction contract_apply(int j, const Superfunction& s);

// Derivation of the superfunction algebra written in the frame
//   D = sum_a alpha^a ^ nabla_a + sum_j beta^j ^ i_j
// with superfunction coefficients acting by left wedge.
class GradedDerivation {
 public:
	GradedDerivation(ConnectionPtr conn);
	static GradedDerivation coordinate(ConnectionPtr conn, int a);   // nabla_a
	static GradedDerivation contraction(ConnectionPtr conn, int j);  // i_j

	const ConnectionPtr& connection() const { return conn_; }
	const RingSpec& spec() const { return conn_->spec; }
	int dim() const { return conn_->spec.dim; }
	int rank() const { return conn_->rank; }
	const Superfunction& nabla_part(int a) const { return nabla_[a]; }
	const Superfunction& contra_part(int j) const { return contra_[j]; }
	void set_nabla_part(int a, Superfunction s);
	void set_contra_part(int j, Superfunction s);

	Superfunction apply(const Superfunction& s) const;

	bool is_zero() const;
	// Operator parity: 0 or 1 when all components agree, nullopt for mixed.
	std::optional<int> parity() const;
	int parity_required() const;
	// Shift of fiber degree for a homogeneous derivation (nabla coefficients
	// of degree m, contraction coefficients of degree m+1 give shift m).
	std::optional<int> degree() const;

	GradedDerivation operator-() const;
	GradedDerivation& operator+=(const GradedDerivation& o);
	GradedDerivation& operator-=(const GradedDerivation& o);
	friend GradedDerivation operator+(GradedDerivation a, const GradedDerivation& b) { a += b; return a; }
	friend GradedDerivation operator-(GradedDerivation a, const GradedDerivation& b) { a -= b; return a; }
	// Left multiplication s ^ D.
	GradedDerivation left_mul(const Superfunction& s) const;
	GradedDerivation operator*(const Q& c) const;

	bool operator==(const GradedDerivation&) const;
	std::string str() const;

 private:
	ConnectionPtr conn_;
	std::vector<Superfunction> nabla_;
	std::vector<Superfunction> contra_;
};

// Recover the frame components of a derivation from its action: probe with
// scalars to read the nabla coefficients, then with generators for the rest.
GradedDerivation derivation_from_action(
		ConnectionPtr conn, const std::function<Superfunction(const Superfunction&)>& act);

// Graded commutator [D, E] = D E - (-1)^{|D||E|} E D, reassembled into frame
// components. Both arguments must have definite parity and share a connection.
GradedDerivation commutator(const GradedDerivation& D, const GradedDerivation& E);

// Covector with one superfunction slot per frame direction, paired with a
// derivation by left-wedging the derivation coefficients onto the slots.
struct GradedOneForm {
	std::vector<Superfunction> nabla_cov;
	std::vector<Superfunction> contra_cov;
};

// Frame differential of a superfunction: slot I holds the I-th frame
// derivative, so pairing with any derivation reproduces its action.
GradedOneForm d_graded(const ConnectionData& conn, const Superfunction& s);

Superfunction pair(const GradedDerivation& D, const GradedOneForm& lambda);

}  // namespace evensym
