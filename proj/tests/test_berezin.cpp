#include "doctest.h"

#include "evensym/berezin.hpp"
#include "evensym/geometry.hpp"
#include "test_models.hpp"

using namespace evensym;
using namespace evensym::testmodels;

namespace {

Superfunction coord_fn(const SymplecticData& sd, int a) {
	return Superfunction::scalar(sd.spec, sd.rank, CoeffFn::coordinate(sd.spec, a));
}

Superfunction trig_fn(const SymplecticData& sd, std::vector<int32_t> freq, bool is_sin) {
	return Superfunction::scalar(sd.spec, sd.rank, CoeffFn::trig_mode(sd.spec, std::move(freq), is_sin));
}

Superfunction gen(const SymplecticData& sd, int j) {
	return Superfunction::generator(sd.spec, sd.rank, j);
}

template <typename F>
Errc code_of(F&& f) {
	try {
		f();
	} catch (const Error& e) {
		return e.code();
	}
	FAIL("expected a kernel error");
	return Errc::Internal;
}

}  // namespace

TEST_CASE("integration over the torus fiber") {
	SymplecticData sd = flat_model(Mode::Torus, 2);
	BerezinianVolume vol{RothsteinForm(sd)};
	Superfunction top = gen(sd, 1) * gen(sd, 2);

	SUBCASE("top-degree sections integrate to their constant mode") {
		Superfunction s = top * (CoeffFn::constant(sd.spec, Q(2)) +
		                         CoeffFn::trig_mode(sd.spec, {1, 0}, false));
		TorusIntegral got = berezin_integral(vol, s);
		CHECK(got.value == Poly::constant(1, Q(2)));
		CHECK(got.two_pi_power == 2);
	}
	SUBCASE("lower degree integrates to zero") {
		CHECK(berezin_integral(vol, Superfunction::one(sd.spec, 2)).is_zero());
		CHECK(berezin_integral(vol, gen(sd, 1)).is_zero());
		CHECK(berezin_integral(vol, trig_fn(sd, {0, 1}, true)).is_zero());
	}
	SUBCASE("rescaling supplies the missing top part") {
		BerezinianVolume scaled{RothsteinForm(sd), Superfunction::one(sd.spec, 2) + top};
		TorusIntegral got = berezin_integral(scaled, Superfunction::one(sd.spec, 2));
		CHECK(got.value == Poly::constant(1, Q(1)));
		CHECK(got.two_pi_power == 2);
	}
	SUBCASE("the metric normalization divides the result") {
		RingSpec spec{Mode::Torus, 2};
		CMatrix g = cmat_identity(spec, 2);
		g[0][0] = CoeffFn::constant(spec, Q(4));
		g[1][1] = CoeffFn::constant(spec, Q(4));
		SymplecticData quad = make_symplectic_data(spec, 2, standard_omega(spec), std::move(g),
		                                           {cmat_zero(spec, 2, 2), cmat_zero(spec, 2, 2)});
		BerezinianVolume qvol{RothsteinForm(quad)};
		Superfunction s = Superfunction::generator(spec, 2, 1) *
		                  Superfunction::generator(spec, 2, 2);
		TorusIntegral got = berezin_integral(qvol, s);
		CHECK(got.value == Poly::constant(1, Q(1, 4)));
		CHECK(got.two_pi_power == 2);
	}
	SUBCASE("time dependence passes through") {
		TorusIntegral got = berezin_integral(vol, top * CoeffFn::time(sd.spec));
		CHECK(got.value == Poly::variable(1, 0));
	}
	SUBCASE("chart bases are rejected") {
		SymplecticData ch = flat_model(Mode::Chart, 2);
		BerezinianVolume cvol{RothsteinForm(ch)};
		CHECK(code_of([&] { berezin_integral(cvol, Superfunction::one(ch.spec, 2)); }) ==
		      Errc::ChartModeUnsupported);
	}
}

TEST_CASE("divergence of frame derivations") {
	SUBCASE("flat frame directions are divergence free") {
		for (Mode mode : {Mode::Chart, Mode::Torus}) {
			SymplecticData sd = flat_model(mode, 2);
			DivergenceOperator div = DivergenceOperator::symplectic(BerezinianVolume{RothsteinForm(sd)});
			for (int a = 0; a < 2; ++a)
				CHECK(div.apply(GradedDerivation::coordinate(sd.conn, a)).is_zero());
			for (int j = 0; j < 2; ++j)
				CHECK(div.apply(GradedDerivation::contraction(sd.conn, j)).is_zero());
		}
	}
	SUBCASE("coefficients differentiate through the coordinate part") {
		SymplecticData sd = flat_model(Mode::Chart, 2);
		DivergenceOperator div = DivergenceOperator::symplectic(BerezinianVolume{RothsteinForm(sd)});
		GradedDerivation euler = GradedDerivation::coordinate(sd.conn, 0).left_mul(coord_fn(sd, 0));
		CHECK(div.apply(euler) == Superfunction::one(sd.spec, 2));

		SymplecticData st = flat_model(Mode::Torus, 2);
		DivergenceOperator divt = DivergenceOperator::symplectic(BerezinianVolume{RothsteinForm(st)});
		GradedDerivation wave = GradedDerivation::coordinate(st.conn, 0).left_mul(trig_fn(st, {1, 0}, true));
		CHECK(divt.apply(wave) == trig_fn(st, {1, 0}, false));
	}
	SUBCASE("contraction coefficients contract with a parity flip") {
		SymplecticData sd = flat_model(Mode::Chart, 2);
		DivergenceOperator div = DivergenceOperator::symplectic(BerezinianVolume{RothsteinForm(sd)});
		GradedDerivation d = GradedDerivation::contraction(sd.conn, 0).left_mul(gen(sd, 1));
		CHECK(div.apply(d) == -Superfunction::one(sd.spec, 2));
		GradedDerivation e = GradedDerivation::contraction(sd.conn, 1).left_mul(gen(sd, 1) * gen(sd, 2));
		CHECK(div.apply(e) == -gen(sd, 1));
	}
	SUBCASE("a nonconstant base volume shows up in the frame divergence") {
		RingSpec spec{Mode::Chart, 2};
		CoeffFn w = CoeffFn::one(spec) + CoeffFn::coordinate(spec, 0);
		CMatrix omega = cmat_zero(spec, 2, 2);
		omega[0][1] = w;
		omega[1][0] = -w;
		SymplecticData sd = make_symplectic_data(spec, 2, std::move(omega), cmat_identity(spec, 2),
		                                         {cmat_zero(spec, 2, 2), cmat_zero(spec, 2, 2)});
		DivergenceOperator div = DivergenceOperator::symplectic(BerezinianVolume{RothsteinForm(sd)});
		CHECK(div.direction_divergence(0) == w.inverse());
		CHECK(div.direction_divergence(1).is_zero());
		GradedDerivation scaled = GradedDerivation::coordinate(sd.conn, 0)
		                              .left_mul(Superfunction::scalar(spec, 2, w));
		CHECK(div.apply(scaled) == Superfunction::constant(spec, 2, Q(2)));
	}
	SUBCASE("curved frames rotate coefficients before differentiating") {
		SymplecticData sd = curved_model(Mode::Chart);
		DivergenceOperator div = DivergenceOperator::symplectic(BerezinianVolume{RothsteinForm(sd)});
		CHECK(div.apply(GradedDerivation::coordinate(sd.conn, 0)).is_zero());
		GradedDerivation d = GradedDerivation::coordinate(sd.conn, 0).left_mul(gen(sd, 2));
		CHECK(div.apply(d) == -(gen(sd, 1) * CoeffFn::coordinate(sd.spec, 1)));
	}
	SUBCASE("the coordinate volume variant subtracts the connection trace") {
		SymplecticData sd = curved_model(Mode::Chart);
		DivergenceOperator canon = DivergenceOperator::canonical(RothsteinForm(sd), CoeffFn::one(sd.spec));
		CHECK(canon.direction_divergence(0).is_zero());
		CHECK(canon.direction_divergence(1).is_zero());

		RingSpec spec{Mode::Chart, 2};
		CoeffFn x = CoeffFn::coordinate(spec, 0);
		CoeffFn bulge = CoeffFn::one(spec) + x * x;
		CMatrix g = cmat_identity(spec, 2);
		g[0][0] = bulge;
		CMatrix gx = cmat_zero(spec, 2, 2);
		gx[0][0] = -x * bulge.inverse();
		SymplecticData traced = make_symplectic_data(spec, 2, standard_omega(spec), std::move(g),
		                                             {std::move(gx), cmat_zero(spec, 2, 2)});
		CHECK(check_data(traced).ok);
		DivergenceOperator tcanon =
		    DivergenceOperator::canonical(RothsteinForm(traced), CoeffFn::one(spec));
		CHECK(tcanon.direction_divergence(0) == x * bulge.inverse());
	}
}

TEST_CASE("divergence product rule") {
	std::vector<SymplecticData> models = {flat_model(Mode::Chart, 2), curved_model(Mode::Chart),
	                                      flat_model(Mode::Torus, 2), curved_model(Mode::Torus)};
	for (const SymplecticData& sd : models) {
		CoeffFn base = sd.spec.mode == Mode::Chart ? CoeffFn::coordinate(sd.spec, 0)
		                                           : CoeffFn::trig_mode(sd.spec, {1, 0}, false);
		std::vector<Superfunction> scalars = {
		    Superfunction::one(sd.spec, 2),
		    Superfunction::scalar(sd.spec, 2, base),
		    gen(sd, 1),
		    gen(sd, 1) * gen(sd, 2) + Superfunction::constant(sd.spec, 2, Q(3)),
		    gen(sd, 2) * base,
		};
		std::vector<GradedDerivation> ops = {
		    GradedDerivation::coordinate(sd.conn, 0),
		    GradedDerivation::coordinate(sd.conn, 1).left_mul(gen(sd, 1)),
		    GradedDerivation::contraction(sd.conn, 0),
		    GradedDerivation::contraction(sd.conn, 1).left_mul(gen(sd, 2) * base),
		    GradedDerivation::coordinate(sd.conn, 1).left_mul(gen(sd, 1) * gen(sd, 2)) +
		        GradedDerivation::contraction(sd.conn, 0).left_mul(gen(sd, 1)),
		};
		std::vector<BerezinianVolume> volumes;
		volumes.emplace_back(RothsteinForm(sd));
		volumes.emplace_back(RothsteinForm(sd),
		                     Superfunction::one(sd.spec, 2) + gen(sd, 1) * gen(sd, 2) * base);
		for (const BerezinianVolume& vol : volumes) {
			DivergenceOperator div = DivergenceOperator::symplectic(vol);
			for (const Superfunction& s : scalars)
				for (const GradedDerivation& d : ops) {
					int ps = s.parity().value();
					int pd = d.parity_required();
					Q sign = (ps == 1 && pd == 1) ? Q(-1) : Q(1);
					Superfunction defect =
					    div.apply(d.left_mul(s)) - s * div.apply(d) - d.apply(s) * sign;
					CHECK(defect.is_zero());
				}
		}
	}
}

TEST_CASE("rescaled divergence") {
	SUBCASE("the correction term for a contraction") {
		SymplecticData sd = flat_model(Mode::Chart, 2);
		Superfunction top = gen(sd, 1) * gen(sd, 2);
		BerezinianVolume vol{RothsteinForm(sd), Superfunction::one(sd.spec, 2) + top};
		DivergenceOperator div = DivergenceOperator::symplectic(vol);
		CHECK(div.apply(GradedDerivation::contraction(sd.conn, 0)) == gen(sd, 2));
	}
	SUBCASE("body-one rescalings act through their logarithm") {
		for (Mode mode : {Mode::Chart, Mode::Torus}) {
			SymplecticData sd = curved_model(mode);
			CoeffFn base = mode == Mode::Chart ? CoeffFn::coordinate(sd.spec, 0)
			                                   : CoeffFn::trig_mode(sd.spec, {1, 0}, false);
			Superfunction top = gen(sd, 1) * gen(sd, 2);
			std::vector<Superfunction> rescales = {Superfunction::one(sd.spec, 2) + top,
			                                       Superfunction::one(sd.spec, 2) + top * base};
			std::vector<GradedDerivation> ops = {
			    GradedDerivation::coordinate(sd.conn, 0),
			    GradedDerivation::contraction(sd.conn, 1),
			    GradedDerivation::coordinate(sd.conn, 1).left_mul(gen(sd, 1) * base),
			};
			DivergenceOperator plain = DivergenceOperator::symplectic(BerezinianVolume{RothsteinForm(sd)});
			for (const Superfunction& r : rescales) {
				DivergenceOperator scaled =
				    DivergenceOperator::symplectic(BerezinianVolume{RothsteinForm(sd), r});
				GradedOneForm dlog = d_graded(*sd.conn, r.log_even());
				for (const GradedDerivation& d : ops)
					CHECK(scaled.apply(d) - plain.apply(d) == pair(d, dlog));
			}
		}
	}
	SUBCASE("bad rescalings are rejected") {
		SymplecticData sd = flat_model(Mode::Torus, 2);
		RothsteinForm th(sd);
		CHECK(code_of([&] { BerezinianVolume(th, gen(sd, 1)); }) == Errc::OddElement);
		CHECK(code_of([&] { BerezinianVolume(th, trig_fn(sd, {1, 0}, false)); }) ==
		      Errc::NonInvertibleBody);
	}
}

TEST_CASE("divergence characterizes the integral") {
	for (bool curved : {false, true}) {
		SymplecticData sd = curved ? curved_model(Mode::Torus) : flat_model(Mode::Torus, 2);
		CoeffFn c1 = CoeffFn::trig_mode(sd.spec, {1, 0}, false);
		CoeffFn s2 = CoeffFn::trig_mode(sd.spec, {0, 1}, true);
		std::vector<Superfunction> sections = {
		    Superfunction::one(sd.spec, 2),
		    Superfunction::scalar(sd.spec, 2, c1),
		    gen(sd, 1),
		    gen(sd, 1) * gen(sd, 2) * (CoeffFn::constant(sd.spec, Q(2)) + c1),
		    gen(sd, 2) * s2,
		};
		std::vector<GradedDerivation> ops = {
		    GradedDerivation::coordinate(sd.conn, 0).left_mul(Superfunction::scalar(sd.spec, 2, s2)),
		    GradedDerivation::contraction(sd.conn, 0).left_mul(gen(sd, 2) * c1),
		    GradedDerivation::coordinate(sd.conn, 1).left_mul(gen(sd, 1) * gen(sd, 2)) +
		        GradedDerivation::contraction(sd.conn, 1).left_mul(Superfunction::scalar(sd.spec, 2, c1)),
		};
		std::vector<BerezinianVolume> volumes;
		volumes.emplace_back(RothsteinForm(sd));
		volumes.emplace_back(RothsteinForm(sd),
		                     Superfunction::one(sd.spec, 2) + gen(sd, 1) * gen(sd, 2) * s2);
		for (const BerezinianVolume& vol : volumes) {
			DivergenceOperator div = DivergenceOperator::symplectic(vol);
			for (const GradedDerivation& d : ops) {
				Superfunction divergence = div.apply(d);
				for (const Superfunction& s : sections) {
					TorusIntegral lhs = berezin_integral(vol, d.apply(s));
					TorusIntegral rhs = berezin_integral(vol, divergence * s);
					CHECK((lhs.value + rhs.value).is_zero());
					CHECK(lhs.two_pi_power == rhs.two_pi_power);
				}
			}
		}
	}
}

TEST_CASE("modular field") {
	SUBCASE("flat models are unimodular") {
		for (Mode mode : {Mode::Chart, Mode::Torus}) {
			SymplecticData sd = flat_model(mode, 2);
			DivergenceOperator div = DivergenceOperator::symplectic(BerezinianVolume{RothsteinForm(sd)});
			CHECK(modular_field(div).is_zero());
		}
	}
	SUBCASE("curvature rotates the frame directions") {
		SymplecticData sd = curved_model(Mode::Chart);
		DivergenceOperator div = DivergenceOperator::symplectic(BerezinianVolume{RothsteinForm(sd)});
		GradedDerivation z = modular_field(div);
		CHECK(z.parity() == std::optional<int>(0));
		CHECK(z.nabla_part(0).is_zero());
		CHECK(z.nabla_part(1).is_zero());
		CHECK(z.contra_part(0) == -gen(sd, 2));
		CHECK(z.contra_part(1) == gen(sd, 1));
		CHECK(z.apply(coord_fn(sd, 0)).is_zero());
		CHECK(z.apply(coord_fn(sd, 1)).is_zero());
	}
	SUBCASE("a coordinate-dependent rotation rate feeds the transport part") {
		SymplecticData sd = curved_model(Mode::Torus);
		DivergenceOperator div = DivergenceOperator::symplectic(BerezinianVolume{RothsteinForm(sd)});
		GradedDerivation z = modular_field(div);
		CoeffFn c2 = CoeffFn::trig_mode(sd.spec, {0, 1}, false);
		CHECK(z.nabla_part(0) == gen(sd, 1) * gen(sd, 2) * CoeffFn::trig_mode(sd.spec, {0, 1}, true));
		CHECK(z.nabla_part(1).is_zero());
		CHECK(z.contra_part(0) == -(gen(sd, 2) * c2));
		CHECK(z.contra_part(1) == gen(sd, 1) * c2);
		Superfunction zc = z.apply(trig_fn(sd, {1, 0}, false));
		CHECK(zc == -(gen(sd, 1) * gen(sd, 2) *
		              (CoeffFn::trig_mode(sd.spec, {1, 0}, true) * CoeffFn::trig_mode(sd.spec, {0, 1}, true))));
	}
	SUBCASE("base functions never acquire a degree-zero part") {
		for (Mode mode : {Mode::Chart, Mode::Torus}) {
			SymplecticData sd = curved_model(mode);
			DivergenceOperator div = DivergenceOperator::symplectic(BerezinianVolume{RothsteinForm(sd)});
			GradedDerivation z = modular_field(div);
			std::vector<Superfunction> fns =
			    mode == Mode::Chart
			        ? std::vector<Superfunction>{coord_fn(sd, 0), coord_fn(sd, 1),
			                                     coord_fn(sd, 0) * coord_fn(sd, 1)}
			        : std::vector<Superfunction>{trig_fn(sd, {1, 0}, false), trig_fn(sd, {0, 1}, true),
			                                     trig_fn(sd, {1, 1}, true)};
			for (const Superfunction& f : fns) CHECK(z.apply(f).body_coeff().is_zero());
		}
	}
	SUBCASE("the field acts by the product rule") {
		SymplecticData sd = curved_model(Mode::Torus);
		DivergenceOperator div = DivergenceOperator::symplectic(BerezinianVolume{RothsteinForm(sd)});
		GradedDerivation z = modular_field(div);
		std::vector<Superfunction> pool = {trig_fn(sd, {1, 0}, false), gen(sd, 1),
		                                   gen(sd, 2) * CoeffFn::trig_mode(sd.spec, {0, 1}, true),
		                                   gen(sd, 1) * gen(sd, 2)};
		for (const Superfunction& s : pool)
			for (const Superfunction& t : pool)
				CHECK(z.apply(s * t) == z.apply(s) * t + s * z.apply(t));
	}
}

TEST_CASE("modular class") {
	SUBCASE("every admissible model is trivial") {
		std::vector<SymplecticData> models = {flat_model(Mode::Chart, 2), curved_model(Mode::Chart),
		                                      flat_model(Mode::Torus, 2), curved_model(Mode::Torus)};
		for (const SymplecticData& sd : models) {
			DivergenceOperator div = DivergenceOperator::symplectic(BerezinianVolume{RothsteinForm(sd)});
			ModularClassReport report = modular_class_trivial(div);
			CHECK(report.trivial);
			for (const CoeffFn& c : report.certificate) CHECK(c.is_zero());
		}
	}
	SUBCASE("rescaling shifts the field by a hamiltonian derivation") {
		for (Mode mode : {Mode::Chart, Mode::Torus}) {
			SymplecticData sd = curved_model(mode);
			RothsteinForm th(sd);
			CoeffFn base = mode == Mode::Chart ? CoeffFn::coordinate(sd.spec, 0)
			                                   : CoeffFn::trig_mode(sd.spec, {1, 0}, false);
			Superfunction top = gen(sd, 1) * gen(sd, 2);
			DivergenceOperator plain = DivergenceOperator::symplectic(BerezinianVolume{th});
			GradedDerivation z = modular_field(plain);
			for (const Superfunction& r : {Superfunction::one(sd.spec, 2) + top,
			                               Superfunction::one(sd.spec, 2) + top * base}) {
				DivergenceOperator scaled = DivergenceOperator::symplectic(BerezinianVolume{th, r});
				GradedDerivation zr = modular_field(scaled);
				CHECK(zr - z == hamiltonian_field(th, -r.log_even()));
				CHECK(modular_class_trivial(scaled).trivial);
			}
		}
	}
	SUBCASE("a constant factor in the rescaling changes nothing") {
		SymplecticData sd = curved_model(Mode::Torus);
		RothsteinForm th(sd);
		Superfunction top = gen(sd, 1) * gen(sd, 2);
		Superfunction one = Superfunction::one(sd.spec, 2);
		DivergenceOperator a = DivergenceOperator::symplectic(BerezinianVolume{th, one + top});
		DivergenceOperator b =
		    DivergenceOperator::symplectic(BerezinianVolume{th, (one + top) * Q(2)});
		CHECK(modular_field(a) == modular_field(b));
		CHECK(modular_class_trivial(b).trivial);
	}
}

TEST_CASE("volume comparison") {
	SUBCASE("matching volumes give ratio one") {
		for (const SymplecticData& sd : {flat_model(Mode::Chart, 2), curved_model(Mode::Chart),
		                                 flat_model(Mode::Torus, 2), curved_model(Mode::Torus)}) {
			CHECK(canonical_comparison(RothsteinForm(sd), CoeffFn::one(sd.spec)) ==
			      CoeffFn::one(sd.spec));
		}
	}
	SUBCASE("constant mismatches scale the ratio") {
		SymplecticData sd = flat_model(Mode::Chart, 2);
		CHECK(canonical_comparison(RothsteinForm(sd), CoeffFn::constant(sd.spec, Q(2))) ==
		      CoeffFn::constant(sd.spec, Q(1, 2)));
	}
	SUBCASE("a nonconstant base volume is recovered") {
		RingSpec spec{Mode::Chart, 2};
		CoeffFn w = CoeffFn::one(spec) + CoeffFn::coordinate(spec, 0);
		CMatrix omega = cmat_zero(spec, 2, 2);
		omega[0][1] = w;
		omega[1][0] = -w;
		SymplecticData sd = make_symplectic_data(spec, 2, std::move(omega), cmat_identity(spec, 2),
		                                         {cmat_zero(spec, 2, 2), cmat_zero(spec, 2, 2)});
		CHECK(canonical_comparison(RothsteinForm(sd), CoeffFn::one(spec)) == w);
	}
	SUBCASE("a ratio outside the ring is rejected") {
		SymplecticData sd = flat_model(Mode::Torus, 2);
		CoeffFn bad = CoeffFn::constant(sd.spec, Q(2)) + CoeffFn::trig_mode(sd.spec, {1, 0}, false);
		CHECK(code_of([&] { canonical_comparison(RothsteinForm(sd), bad); }) ==
		      Errc::InexactQuotient);
	}
	SUBCASE("a traced connection breaks the comparison") {
		RingSpec spec{Mode::Chart, 2};
		CoeffFn x = CoeffFn::coordinate(spec, 0);
		CoeffFn bulge = CoeffFn::one(spec) + x * x;
		CMatrix g = cmat_identity(spec, 2);
		g[0][0] = bulge;
		CMatrix gx = cmat_zero(spec, 2, 2);
		gx[0][0] = -x * bulge.inverse();
		SymplecticData traced = make_symplectic_data(spec, 2, standard_omega(spec), std::move(g),
		                                             {std::move(gx), cmat_zero(spec, 2, 2)});
		CHECK(code_of([&] { canonical_comparison(RothsteinForm(traced), CoeffFn::one(spec)); }) ==
		      Errc::SemanticError);
	}
}
