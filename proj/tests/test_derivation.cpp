#include "doctest.h"

#include <vector>

#include "evensym/derivation.hpp"

using namespace evensym;

namespace {

const RingSpec kChart{Mode::Chart, 2};
const RingSpec kTorus{Mode::Torus, 2};

CoeffFn cx(int a) { return CoeffFn::coordinate(kChart, a); }

// Rotation block: J e_1 = e_2, J e_2 = -e_1.
CMatrix rotation_block(const RingSpec& spec, const CoeffFn& scale) {
	CMatrix j = cmat_zero(spec, 2, 2);
	j[0][1] = -scale;
	j[1][0] = scale;
	return j;
}

// Chart-mode connection with curvature: the x1 block rotates at rate x2.
ConnectionPtr curved_chart() {
	ConnectionData c{kChart, 2, {rotation_block(kChart, cx(1)), cmat_zero(kChart, 2, 2)}};
	return std::make_shared<const ConnectionData>(std::move(c));
}

// Torus-mode analogue: the x1 block rotates at rate sin(x2).
ConnectionPtr curved_torus() {
	CoeffFn s2 = CoeffFn::trig_mode(kTorus, {0, 1}, true);
	ConnectionData c{kTorus, 2, {rotation_block(kTorus, s2), cmat_zero(kTorus, 2, 2)}};
	return std::make_shared<const ConnectionData>(std::move(c));
}

ConnectionPtr flat_chart(int rank = 2) {
	return std::make_shared<const ConnectionData>(ConnectionData::flat(kChart, rank));
}

Superfunction sc(const ConnectionPtr& c, CoeffFn v) {
	return Superfunction::scalar(c->spec, c->rank, std::move(v));
}

Superfunction gen(const ConnectionPtr& c, int j) {
	return Superfunction::generator(c->spec, c->rank, j);
}

}  // namespace

TEST_CASE("covariant derivative rotates the frame") {
	auto conn = curved_chart();
	Superfunction e1 = gen(conn, 1), e2 = gen(conn, 2);
	Superfunction y = sc(conn, cx(1));

	CHECK(nabla_apply(*conn, 0, e1) == y * e2);
	CHECK(nabla_apply(*conn, 0, e2) == -(y * e1));
	CHECK(nabla_apply(*conn, 1, e1).is_zero());
	CHECK(nabla_apply(*conn, 0, sc(conn, cx(0) * cx(1))) == y);
}

TEST_CASE("covariant derivative obeys the product rule") {
	auto conn = curved_chart();
	Superfunction e1 = gen(conn, 1), e2 = gen(conn, 2);
	Superfunction x = sc(conn, cx(0)), y = sc(conn, cx(1));
	Superfunction s = x * e1 + e2 * y + x * y;
	Superfunction u = e1 * e2 + y;

	for (int a = 0; a < 2; ++a) {
		CHECK(nabla_apply(*conn, a, s * u) ==
		      nabla_apply(*conn, a, s) * u + s * nabla_apply(*conn, a, u));
	}
}

TEST_CASE("contraction is an odd derivation dual to wedging") {
	auto conn = flat_chart(4);
	Superfunction e1 = gen(conn, 1), e2 = gen(conn, 2), e3 = gen(conn, 3), e4 = gen(conn, 4);
	Superfunction x = sc(conn, cx(0));

	CHECK(contract_apply(0, e1 * e2) == e2);
	CHECK(contract_apply(1, e1 * e2) == -e1);
	CHECK(contract_apply(2, e1 * e2).is_zero());
	CHECK(contract_apply(0, x).is_zero());

	// Odd product rule on homogeneous-parity factors.
	Superfunction odd = e1 + e2 * e3 * e4;
	Superfunction even = x + e2 * e4;
	for (int j = 0; j < 4; ++j) {
		CHECK(contract_apply(j, even * odd) ==
		      contract_apply(j, even) * odd + even * contract_apply(j, odd));
		CHECK(contract_apply(j, odd * even) ==
		      contract_apply(j, odd) * even - odd * contract_apply(j, even));
		CHECK(contract_apply(j, odd * (e1 + e3)) ==
		      contract_apply(j, odd) * (e1 + e3) - odd * contract_apply(j, e1 + e3));
	}
}

TEST_CASE("derivations satisfy the graded product rule") {
	auto conn = curved_chart();
	Superfunction e1 = gen(conn, 1), e2 = gen(conn, 2);
	Superfunction x = sc(conn, cx(0)), y = sc(conn, cx(1));

	GradedDerivation even(conn);  // parity 0: even nabla coefficient, odd contraction one
	even.set_nabla_part(0, x * y + e1 * e2);
	even.set_contra_part(1, e1 * x - e2);

	GradedDerivation odd(conn);  // parity 1
	odd.set_nabla_part(1, e2 * y);
	odd.set_contra_part(0, x + e1 * e2 * Q(3));

	REQUIRE(even.parity() == 0);
	REQUIRE(odd.parity() == 1);

	std::vector<Superfunction> evens = {x + e1 * e2, sc(conn, CoeffFn::one(kChart))};
	std::vector<Superfunction> odds = {e1, e2 * x + e1 * y};
	for (const auto& s : evens)
		for (const auto& u : odds) {
			CHECK(even.apply(s * u) == even.apply(s) * u + s * even.apply(u));
			CHECK(even.apply(u * s) == even.apply(u) * s + u * even.apply(s));
			CHECK(odd.apply(s * u) == odd.apply(s) * u + s * odd.apply(u));
			CHECK(odd.apply(u * s) == odd.apply(u) * s - u * odd.apply(s));
			CHECK(odd.apply(u * u) == odd.apply(u) * u - u * odd.apply(u));
		}
}

TEST_CASE("frame components are recovered from the action") {
	for (auto conn : {curved_chart(), curved_torus()}) {
		Superfunction e1 = gen(conn, 1), e2 = gen(conn, 2);
		CoeffFn f = conn->spec.mode == Mode::Chart
		                ? cx(0) * cx(1) + CoeffFn::one(kChart)
		                : CoeffFn::trig_mode(kTorus, {1, 1}, false) * CoeffFn::time(kTorus);
		GradedDerivation d(conn);
		d.set_nabla_part(0, sc(conn, f) + e1 * e2);
		d.set_nabla_part(1, e1 * e2 * Q(-2));
		d.set_contra_part(0, e1 * sc(conn, f));
		d.set_contra_part(1, Superfunction::one(conn->spec, conn->rank) + e1 * e2);

		auto rebuilt = derivation_from_action(conn, [&](const Superfunction& s) { return d.apply(s); });
		CHECK(rebuilt == d);
	}
}

TEST_CASE("commutator matches the composed action") {
	for (auto conn : {curved_chart(), curved_torus()}) {
		Superfunction e1 = gen(conn, 1), e2 = gen(conn, 2);
		CoeffFn f = conn->spec.mode == Mode::Chart ? cx(0) : CoeffFn::trig_mode(kTorus, {1, 0}, false);
		CoeffFn g = conn->spec.mode == Mode::Chart ? cx(1) : CoeffFn::trig_mode(kTorus, {0, 1}, true);

		GradedDerivation D(conn);  // odd
		D.set_nabla_part(0, e1 * g);
		D.set_contra_part(1, sc(conn, f) + e1 * e2);
		GradedDerivation E(conn);  // even
		E.set_nabla_part(1, sc(conn, g));
		E.set_contra_part(0, e2 * f);

		int sign = (D.parity_required() * E.parity_required()) % 2 ? -1 : 1;
		GradedDerivation C = commutator(D, E);
		std::vector<Superfunction> probes = {sc(conn, f), e1, e1 * e2, e2 * g + e1};
		for (const auto& s : probes) {
			Superfunction expect = D.apply(E.apply(s)) - E.apply(D.apply(s)) * Q(sign);
			CHECK(C.apply(s) == expect);
		}

		// Graded antisymmetry.
		CHECK((commutator(E, D) * Q(sign) + C).is_zero());
	}
}

TEST_CASE("graded Jacobi identity for the derivation bracket") {
	auto conn = curved_chart();
	Superfunction e1 = gen(conn, 1), e2 = gen(conn, 2);
	Superfunction x = sc(conn, cx(0)), y = sc(conn, cx(1));

	GradedDerivation A(conn);  // odd
	A.set_contra_part(0, x);
	A.set_nabla_part(1, e2);
	GradedDerivation B(conn);  // even
	B.set_nabla_part(0, y);
	B.set_contra_part(1, e1 * x);
	GradedDerivation C(conn);  // odd
	C.set_contra_part(1, Superfunction::one(kChart, 2));
	C.set_nabla_part(0, e1 * y);

	auto pa = [](const GradedDerivation& d) { return d.parity_required(); };
	auto term = [&](const GradedDerivation& u, const GradedDerivation& v, const GradedDerivation& w) {
		GradedDerivation t = commutator(u, commutator(v, w));
		return (pa(u) * pa(w)) % 2 ? -t : t;
	};
	GradedDerivation jac = term(A, B, C) + term(B, C, A) + term(C, A, B);
	CHECK(jac.is_zero());
}

TEST_CASE("commutator of covariant derivatives sees the curvature") {
	SUBCASE("chart") {
		auto conn = curved_chart();
		GradedDerivation C = commutator(GradedDerivation::coordinate(conn, 0),
		                                GradedDerivation::coordinate(conn, 1));
		// Rotation rate x2 along x1 only: the mixed commutator undoes the
		// rotation, sending e_1 to -e_2 and e_2 to e_1.
		GradedDerivation expect(conn);
		expect.set_contra_part(0, -gen(conn, 2));
		expect.set_contra_part(1, gen(conn, 1));
		CHECK(C == expect);
	}
	SUBCASE("torus") {
		auto conn = curved_torus();
		GradedDerivation C = commutator(GradedDerivation::coordinate(conn, 0),
		                                GradedDerivation::coordinate(conn, 1));
		Superfunction c2 = sc(conn, CoeffFn::trig_mode(kTorus, {0, 1}, false));
		GradedDerivation expect(conn);
		expect.set_contra_part(0, -(c2 * gen(conn, 2)));
		expect.set_contra_part(1, c2 * gen(conn, 1));
		CHECK(C == expect);
	}
	SUBCASE("flat") {
		auto conn = flat_chart();
		CHECK(commutator(GradedDerivation::coordinate(conn, 0),
		                 GradedDerivation::coordinate(conn, 1))
		          .is_zero());
	}
}

TEST_CASE("pairing against the frame differential reproduces the action") {
	for (auto conn : {curved_chart(), curved_torus()}) {
		Superfunction e1 = gen(conn, 1), e2 = gen(conn, 2);
		CoeffFn f = conn->spec.mode == Mode::Chart ? cx(0) * cx(0) : CoeffFn::trig_mode(kTorus, {2, 0}, false);
		GradedDerivation D(conn);
		D.set_nabla_part(0, e1);
		D.set_nabla_part(1, sc(conn, f));
		D.set_contra_part(0, e1 * e2 + sc(conn, f));
		D.set_contra_part(1, e2);

		for (const auto& s : {sc(conn, f) * e1 - e2, e1 * e2, sc(conn, f)}) {
			GradedOneForm ds = d_graded(*conn, s);
			CHECK(pair(D, ds) == D.apply(s));
		}
	}
}

TEST_CASE("left multiplication scales a derivation") {
	auto conn = curved_chart();
	Superfunction e1 = gen(conn, 1), e2 = gen(conn, 2);
	Superfunction x = sc(conn, cx(0));
	GradedDerivation D(conn);
	D.set_nabla_part(0, e1);
	D.set_contra_part(1, x);

	Superfunction u = x + e1 * e2;
	GradedDerivation uD = D.left_mul(u);
	for (const auto& s : {e1 * e2, x * e2, e1}) CHECK(uD.apply(s) == u * D.apply(s));
	CHECK((D * Q(3)).apply(e1 * e2) == D.apply(e1 * e2) * Q(3));
}

TEST_CASE("derivation degree bookkeeping") {
	auto conn = flat_chart(4);
	Superfunction e1 = gen(conn, 1), e2 = gen(conn, 2), e3 = gen(conn, 3);

	GradedDerivation shift(conn);  // degree 1: wedge-degree-1 nabla part, degree-2 contraction part
	shift.set_nabla_part(0, e1);
	shift.set_contra_part(2, e1 * e2);
	CHECK(shift.degree() == 1);
	CHECK(shift.parity() == 1);

	GradedDerivation lower(conn);  // pure contraction with scalar coefficient
	lower.set_contra_part(0, Superfunction::one(kChart, 4));
	CHECK(lower.degree() == -1);
	CHECK(lower.parity() == 1);

	GradedDerivation mixed(conn);
	mixed.set_nabla_part(0, e1);
	mixed.set_contra_part(0, e2 * e3 * e1);
	CHECK(mixed.degree() == std::nullopt);
	CHECK(GradedDerivation(conn).parity() == 0);
}
