#include "doctest.h"

#include "evensym/parser.hpp"
#include "evensym/random_gen.hpp"

using namespace evensym;

namespace {
const RingSpec kChart{Mode::Chart, 2};
const RingSpec kTorus{Mode::Torus, 2};

std::string parse_error_message(const RingSpec& spec, int rank, const char* text) {
	try {
		parse_superfunction(spec, rank, text);
	} catch (const Error& e) {
		CHECK(e.code() == Errc::ParseError);
		return e.what();
	}
	FAIL("expected a parse error for: ", text);
	return {};
}
}  // namespace

TEST_CASE("chart coefficients parse with the usual precedence") {
	CoeffFn x = CoeffFn::coordinate(kChart, 0);
	CoeffFn y = CoeffFn::coordinate(kChart, 1);
	CoeffFn t = CoeffFn::time(kChart);
	CHECK(parse_coeff(kChart, "0") == CoeffFn::zero(kChart));
	CHECK(parse_coeff(kChart, "7") == CoeffFn::constant(kChart, Q(7)));
	CHECK(parse_coeff(kChart, "3/4") == CoeffFn::constant(kChart, Q(3, 4)));
	CHECK(parse_coeff(kChart, "-x1 + x2") == y - x);
	CHECK(parse_coeff(kChart, "x1^2*x2 - 2*t") == x * x * y - t - t);
	CHECK(parse_coeff(kChart, "1 + 2 * x1 ^ 3") == CoeffFn::one(kChart) + x * x * x * Q(2));
	CHECK(parse_coeff(kChart, "(1+x1)/(1-x1)") ==
	      (CoeffFn::one(kChart) + x) * (CoeffFn::one(kChart) - x).inverse());
	CHECK(parse_coeff(kChart, "-x1^2") == -(x * x));
	CHECK(parse_coeff(kChart, "(1+x1)^0") == CoeffFn::one(kChart));
}

TEST_CASE("torus coefficients parse into canonical modes") {
	CoeffFn c10 = CoeffFn::trig_mode(kTorus, {1, 0}, false);
	CoeffFn s12 = CoeffFn::trig_mode(kTorus, {1, 2}, true);
	CHECK(parse_coeff(kTorus, "cos(x1)") == c10);
	CHECK(parse_coeff(kTorus, "sin(x1+2*x2)") == s12);
	CHECK(parse_coeff(kTorus, "sin(-x1-2*x2)") == -s12);
	CHECK(parse_coeff(kTorus, "cos(-x1)") == c10);
	CHECK(parse_coeff(kTorus, "cos(x2-x1) - cos(x1-x2)") == CoeffFn::zero(kTorus));
	CHECK(parse_coeff(kTorus, "(t^2+1)*sin(x1)") ==
	      CoeffFn::trig_mode(kTorus, {1, 0}, true) *
	          (CoeffFn::time(kTorus) * CoeffFn::time(kTorus) + CoeffFn::one(kTorus)));
	CHECK(parse_coeff(kTorus, "sin(x1)^2 + cos(x1)^2") == CoeffFn::one(kTorus));
	CHECK(parse_coeff(kTorus, "cos(x1)/2") == c10 * Q(1, 2));
}

TEST_CASE("superfunction literals parse") {
	Superfunction e1 = Superfunction::generator(kChart, 2, 1);
	Superfunction e2 = Superfunction::generator(kChart, 2, 2);
	Superfunction x = Superfunction::scalar(kChart, 2, CoeffFn::coordinate(kChart, 0));
	CHECK(parse_superfunction(kChart, 2, "e[1]") == e1);
	CHECK(parse_superfunction(kChart, 2, "e[1]^e[2]") == e1 * e2);
	CHECK(parse_superfunction(kChart, 2, "e[2]^e[1]") == -(e1 * e2));
	CHECK(parse_superfunction(kChart, 2, "e[1]^e[1]").is_zero());
	CHECK(parse_superfunction(kChart, 2, "x1*e[1] - e[2]") == e1 * x.body_coeff() - e2);
	CHECK(parse_superfunction(kChart, 2, "(1 + x1)*e[1]^e[2]") ==
	      e1 * e2 + e1 * e2 * x.body_coeff());
	CHECK(parse_superfunction(kTorus, 4, "cos(x1)*e[3]^e[4]") ==
	      Superfunction::basis_term(kTorus, 4, 0b1100u, CoeffFn::trig_mode(kTorus, {1, 0}, false)));
}

TEST_CASE("parse and print round-trip on random values") {
	for (uint64_t seed = 0; seed < 30; ++seed) {
		for (Mode mode : {Mode::Chart, Mode::Torus}) {
			RingSpec spec{mode, 2};
			Rng rng(seed);
			CoeffFn c = random_coeff(rng, spec, true);
			CAPTURE(c.str());
			CHECK(parse_coeff(spec, c.str()) == c);
			for (int rank : {2, 4}) {
				Superfunction s = random_superfunction(rng, spec, rank, true);
				CAPTURE(s.str());
				CHECK(parse_superfunction(spec, rank, s.str()) == s);
			}
		}
	}
}

TEST_CASE("division follows the mode rules") {
	CHECK(parse_coeff(kChart, "x1/(x1^2)") == CoeffFn::coordinate(kChart, 0).inverse());
	CHECK_THROWS_AS(parse_coeff(kChart, "1/0"), Error);
	CHECK_THROWS_AS(parse_coeff(kTorus, "1/cos(x1)"), Error);
	CHECK(parse_coeff(kTorus, "t/3") == CoeffFn::time(kTorus) * Q(1, 3));
	CHECK_THROWS_AS(parse_superfunction(kChart, 2, "1/(1 + e[1]^e[2])"), Error);
}

TEST_CASE("parse errors carry positions") {
	std::string m = parse_error_message(kTorus, 2, "t + x1^2");
	CHECK(m.find("non-periodic") != std::string::npos);
	CHECK(m.find("line 1, column 5") != std::string::npos);

	m = parse_error_message(kChart, 2, "x1 +\n* x2");
	CHECK(m.find("line 2, column 1") != std::string::npos);

	CHECK(parse_error_message(kChart, 2, "x3 + 1").find("unknown name") != std::string::npos);
	CHECK(parse_error_message(kChart, 2, "sin(x1)").find("torus mode") != std::string::npos);
	CHECK(parse_error_message(kChart, 2, "e[3]").find("out of range") != std::string::npos);
	CHECK(parse_error_message(kChart, 2, "(x1 + 1").find("')'") != std::string::npos);
	CHECK(parse_error_message(kChart, 2, "x1 $ 2").find("unexpected character") != std::string::npos);
	CHECK(parse_error_message(kChart, 2, "x1 x2").find("trailing") != std::string::npos);
	CHECK(parse_error_message(kTorus, 2, "sin(2)").find("'*'") != std::string::npos);
	CHECK(parse_error_message(kTorus, 2, "sin(t)").find("integer combinations") != std::string::npos);
	CHECK(parse_error_message(kChart, 2, "e[1]^2").find("scalars") != std::string::npos);
}
