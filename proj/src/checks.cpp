#include "evensym/checks.hpp"

#include <utility>

namespace evensym {

namespace {

struct ModelChoice {
	Mode mode;
	bool curved;
	int rank;
};

// Rotations through the desk-scale configurations.
ModelChoice model_cycle(int i) {
	static const ModelChoice table[] = {
	    {Mode::Chart, false, 2}, {Mode::Torus, false, 2}, {Mode::Chart, true, 2},
	    {Mode::Torus, true, 2},  {Mode::Chart, false, 4}, {Mode::Torus, false, 4},
	    {Mode::Chart, true, 4},  {Mode::Torus, true, 4},
	};
	return table[i % 8];
}

ModelChoice curved_cycle(int i) {
	static const ModelChoice table[] = {
	    {Mode::Chart, true, 2},
	    {Mode::Torus, true, 2},
	    {Mode::Chart, true, 4},
	    {Mode::Torus, true, 4},
	};
	return table[i % 4];
}

ModelChoice flat_cycle(int i) {
	static const ModelChoice table[] = {
	    {Mode::Chart, false, 2},
	    {Mode::Torus, false, 2},
	    {Mode::Chart, false, 4},
	    {Mode::Torus, false, 4},
	};
	return table[i % 4];
}

std::string describe(const ModelChoice& m, int i) {
	std::string s = "case " + std::to_string(i) + " (";
	s += m.mode == Mode::Chart ? "chart" : "torus";
	s += m.curved ? ", curved" : ", flat";
	s += ", rank " + std::to_string(m.rank) + ")";
	return s;
}

class Suite {
 public:
	Suite(std::string name, std::string law) {
		res_.name = std::move(name);
		res_.law = std::move(law);
	}

	template <typename F>
	void run(const std::string& what, F&& body) {
		++res_.cases;
		bool ok = false;
		std::string note = what;
		try {
			ok = body();
		} catch (const Error& e) {
			note += ": ";
			note += e.what();
		}
		if (!ok) {
			++res_.failures;
			if (res_.detail.size() < 5) res_.detail.push_back(note);
		}
	}

	SuiteResult take() { return std::move(res_); }

 private:
	SuiteResult res_;
};

DivergenceOperator plain_divergence(const SymplecticData& sd) {
	return DivergenceOperator::symplectic(BerezinianVolume(RothsteinForm(sd)));
}

Q koszul(int p, int q) { return (p % 2) && (q % 2) ? Q(-1) : Q(1); }

}  // namespace

SuiteResult check_divergence_axiom(uint64_t seed, int cases) {
	Suite suite("divergence_axiom", "div(s ^ D) = s ^ div(D) + (-1)^{|s||D|} D(s)");
	Rng rng(seed);
	for (int i = 0; i < cases; ++i) {
		ModelChoice mc = model_cycle(i);
		suite.run(describe(mc, i), [&] {
			SymplecticData sd = random_symplectic_data(rng, mc.mode, mc.rank, mc.curved);
			DivergenceOperator div = plain_divergence(sd);
			int ps = rng.range(0, 1);
			int pd = rng.range(0, 1);
			Superfunction s = random_homogeneous(rng, sd.spec, sd.rank, ps, true);
			GradedDerivation D = random_homogeneous_derivation(rng, sd, pd);
			Superfunction lhs = div.apply(D.left_mul(s));
			Superfunction rhs = s * div.apply(D) + D.apply(s) * koszul(ps, pd);
			return lhs == rhs;
		});
	}
	return suite.take();
}

SuiteResult check_integral_characterization(uint64_t seed, int cases) {
	Suite suite("integral_characterization",
	            "the integral of D(s) is minus the integral of div(D) ^ s");
	Rng rng(seed);
	for (int i = 0; i < cases; ++i) {
		ModelChoice mc = model_cycle(2 * i + 1);
		suite.run(describe(mc, i), [&] {
			SymplecticData sd = random_symplectic_data(rng, mc.mode, mc.rank, mc.curved);
			BerezinianVolume vol{RothsteinForm(sd)};
			DivergenceOperator div = DivergenceOperator::symplectic(vol);
			GradedDerivation D = random_derivation(rng, sd, true);
			Superfunction s = random_superfunction(rng, sd.spec, sd.rank, true);
			TorusIntegral lhs = berezin_integral(vol, D.apply(s));
			TorusIntegral rhs = berezin_integral(vol, div.apply(D) * s);
			return (lhs.value + rhs.value).is_zero();
		});
	}
	return suite.take();
}

SuiteResult check_product_rule_rescaled(uint64_t seed, int cases) {
	Suite suite("product_rule_rescaled",
	            "div(s ^ D) = s ^ div(D) + (-1)^{|s||D|} D(s) for rescaled volumes");
	Rng rng(seed);
	for (int i = 0; i < cases; ++i) {
		ModelChoice mc = model_cycle(i);
		suite.run(describe(mc, i), [&] {
			SymplecticData sd = random_symplectic_data(rng, mc.mode, mc.rank, mc.curved);
			Superfunction xi = random_unit_even(rng, sd.spec, sd.rank);
			DivergenceOperator div =
			    DivergenceOperator::symplectic(BerezinianVolume(RothsteinForm(sd), xi));
			int ps = rng.range(0, 1);
			int pd = rng.range(0, 1);
			Superfunction s = random_homogeneous(rng, sd.spec, sd.rank, ps, true);
			GradedDerivation D = random_homogeneous_derivation(rng, sd, pd);
			Superfunction lhs = div.apply(D.left_mul(s));
			Superfunction rhs = s * div.apply(D) + D.apply(s) * koszul(ps, pd);
			return lhs == rhs;
		});
	}
	return suite.take();
}

SuiteResult check_rescaling(uint64_t seed, int cases) {
	Suite suite("rescaling",
	            "rescaling the volume adds the logarithmic derivative of the rescaling, and the "
	            "rescaled integral law holds");
	Rng rng(seed);
	for (int i = 0; i < cases; ++i) {
		ModelChoice mc = model_cycle(i);
		suite.run(describe(mc, i), [&] {
			SymplecticData sd = random_symplectic_data(rng, mc.mode, mc.rank, mc.curved);
			RothsteinForm th(sd);
			DivergenceOperator div0 = DivergenceOperator::symplectic(BerezinianVolume(th));
			Superfunction sbar = random_body_one_even(rng, sd.spec, sd.rank);
			DivergenceOperator div1 = DivergenceOperator::symplectic(BerezinianVolume(th, sbar));
			GradedDerivation D = random_derivation(rng, sd, true);
			Superfunction gap = div1.apply(D) - div0.apply(D);
			if (!(gap == pair(D, d_graded(*sd.conn, sbar.log_even())))) return false;
			if (mc.mode == Mode::Torus) {
				Superfunction xi = random_unit_even(rng, sd.spec, sd.rank);
				BerezinianVolume scaled{th, xi};
				DivergenceOperator div2 = DivergenceOperator::symplectic(scaled);
				Superfunction s = random_superfunction(rng, sd.spec, sd.rank, true);
				TorusIntegral lhs = berezin_integral(scaled, D.apply(s));
				TorusIntegral rhs = berezin_integral(scaled, div2.apply(D) * s);
				if (!(lhs.value + rhs.value).is_zero()) return false;
			}
			return true;
		});
	}
	return suite.take();
}

SuiteResult check_basic_divergences(uint64_t seed, int cases) {
	Suite suite("basic_divergences",
	            "div(i_j) = 0, div(nabla_a) and lifted classical fields match the classical "
	            "divergence");
	Rng rng(seed);
	for (int i = 0; i < cases; ++i) {
		ModelChoice mc = model_cycle(i);
		suite.run(describe(mc, i), [&] {
			SymplecticData sd = random_symplectic_data(rng, mc.mode, mc.rank, mc.curved);
			DivergenceOperator div = plain_divergence(sd);
			for (int j = 0; j < sd.rank; ++j)
				if (!div.apply(GradedDerivation::contraction(sd.conn, j)).is_zero()) return false;
			for (int a = 0; a < sd.spec.dim; ++a) {
				std::vector<CoeffFn> unit(sd.spec.dim, CoeffFn::zero(sd.spec));
				unit[a] = CoeffFn::one(sd.spec);
				Superfunction expect =
				    Superfunction::scalar(sd.spec, sd.rank, classical_divergence(sd, unit));
				if (!(div.apply(GradedDerivation::coordinate(sd.conn, a)) == expect)) return false;
			}
			std::vector<CoeffFn> X;
			GradedDerivation DX(sd.conn);
			for (int a = 0; a < sd.spec.dim; ++a) {
				X.push_back(random_base_coeff(rng, sd.spec));
				DX.set_nabla_part(a, Superfunction::scalar(sd.spec, sd.rank, X[a]));
			}
			return div.apply(DX) ==
			       Superfunction::scalar(sd.spec, sd.rank, classical_divergence(sd, X));
		});
	}
	return suite.take();
}

SuiteResult check_bracket_laws(uint64_t seed, int cases) {
	Suite suite("bracket_laws", "antisymmetry, Leibniz rule, and Jacobi identity of the bracket");
	Rng rng(seed);
	for (int i = 0; i < cases; ++i) {
		ModelChoice mc = curved_cycle(i);
		suite.run(describe(mc, i), [&] {
			SymplecticData sd = random_symplectic_data(rng, mc.mode, mc.rank, true);
			RothsteinForm th(sd);
			int ps = rng.range(0, 1);
			int pt = rng.range(0, 1);
			int pu = rng.range(0, 1);
			Superfunction s = random_homogeneous(rng, sd.spec, sd.rank, ps, true);
			Superfunction t = random_homogeneous(rng, sd.spec, sd.rank, pt, true);
			Superfunction u = random_homogeneous(rng, sd.spec, sd.rank, pu, true);
			Superfunction st = poisson_bracket(th, s, t);
			if (!(st + poisson_bracket(th, t, s) * koszul(ps, pt)).is_zero()) return false;
			Superfunction su = poisson_bracket(th, s, u);
			Superfunction tu = poisson_bracket(th, t, u);
			if (!(poisson_bracket(th, s, t * u) == st * u + t * su * koszul(ps, pt)))
				return false;
			return poisson_bracket(th, s, tu) ==
			       poisson_bracket(th, st, u) + poisson_bracket(th, t, su) * koszul(ps, pt);
		});
	}
	return suite.take();
}

SuiteResult check_classical_restriction(uint64_t seed, int cases) {
	Suite suite("classical_restriction",
	            "brackets of base functions restrict to the classical Poisson bracket");
	Rng rng(seed);
	for (int i = 0; i < cases; ++i) {
		ModelChoice mc = model_cycle(i);
		suite.run(describe(mc, i), [&] {
			SymplecticData sd = random_symplectic_data(rng, mc.mode, mc.rank, mc.curved);
			RothsteinForm th(sd);
			CoeffFn f = random_base_coeff(rng, sd.spec);
			CoeffFn h = random_base_coeff(rng, sd.spec);
			Superfunction bracket =
			    poisson_bracket(th, Superfunction::scalar(sd.spec, sd.rank, f),
			                    Superfunction::scalar(sd.spec, sd.rank, h));
			CoeffFn classical = classical_poisson(sd, f, h);
			if (!(bracket.body_coeff() == classical)) return false;
			return mc.curved ||
			       bracket == Superfunction::scalar(sd.spec, sd.rank, classical);
		});
	}
	return suite.take();
}

SuiteResult check_unimodularity(uint64_t seed, int cases) {
	Suite suite("unimodularity",
	            "the modular class is trivial and modular fields of base functions have no body");
	Rng rng(seed);
	for (int i = 0; i < cases; ++i) {
		ModelChoice mc = model_cycle(i);
		suite.run(describe(mc, i), [&] {
			SymplecticData sd = random_symplectic_data(rng, mc.mode, mc.rank, mc.curved);
			DivergenceOperator div = plain_divergence(sd);
			ModularClassReport report = modular_class_trivial(div);
			if (!report.trivial) return false;
			GradedDerivation z = modular_field(div);
			for (int k = 0; k < 2; ++k) {
				CoeffFn f = random_base_coeff(rng, sd.spec);
				Superfunction zf = z.apply(Superfunction::scalar(sd.spec, sd.rank, f));
				if (!zf.body_coeff().is_zero()) return false;
			}
			return true;
		});
	}
	return suite.take();
}

SuiteResult check_class_invariance(uint64_t seed, int cases) {
	Suite suite("class_invariance",
	            "rescaling shifts the modular field by the hamiltonian derivation of minus the "
	            "logarithm and keeps the verdict");
	Rng rng(seed);
	for (int i = 0; i < cases; ++i) {
		ModelChoice mc = model_cycle(i);
		suite.run(describe(mc, i), [&] {
			SymplecticData sd = random_symplectic_data(rng, mc.mode, mc.rank, mc.curved);
			RothsteinForm th(sd);
			Q body = i % 2 == 0 ? Q(1) : rng.nonzero_rational();
			Superfunction sbar =
			    random_body_one_even(rng, sd.spec, sd.rank) * body;
			DivergenceOperator div0 = DivergenceOperator::symplectic(BerezinianVolume(th));
			DivergenceOperator div1 = DivergenceOperator::symplectic(BerezinianVolume(th, sbar));
			ModularClassReport r0 = modular_class_trivial(div0);
			ModularClassReport r1 = modular_class_trivial(div1);
			if (r0.trivial != r1.trivial) return false;
			GradedDerivation shift = modular_field(div1) - modular_field(div0);
			Superfunction normalized = sbar * (Q(1) / body);
			if (!(shift == hamiltonian_field(th, normalized.log_even() * Q(-1)))) return false;
			// The same shift written without the logarithm.
			GradedDerivation witness =
			    hamiltonian_field(th, sbar).left_mul(sbar.inverse_even() * Q(-1));
			return shift == witness;
		});
	}
	return suite.take();
}

SuiteResult check_continuity_forms(uint64_t seed, int cases) {
	Suite suite("continuity_forms",
	            "divergence and derivation transport residuals agree for divergence-free flows");
	Rng rng(seed);
	for (int i = 0; i < cases; ++i) {
		bool contraction_case = i % 3 == 2;
		ModelChoice mc = contraction_case ? curved_cycle(i) : flat_cycle(i);
		suite.run(describe(mc, i), [&] {
			SymplecticData sd = random_symplectic_data(rng, mc.mode, mc.rank, mc.curved);
			RothsteinForm th(sd);
			DivergenceOperator div = DivergenceOperator::symplectic(BerezinianVolume(th));
			GradedDerivation D =
			    contraction_case
			        ? GradedDerivation::contraction(sd.conn, rng.range(0, sd.rank - 1))
			              .left_mul(Superfunction::constant(sd.spec, sd.rank,
			                                                rng.nonzero_rational()))
			        : hamiltonian_field(
			              th, random_homogeneous(rng, sd.spec, sd.rank, rng.range(0, 1), true));
			if (!div.apply(D).is_zero()) return false;
			int pb = rng.range(0, 1);
			TimeDependentSection rho{
			    random_homogeneous(rng, sd.spec, sd.rank, pb, true),
			    rng.flip() ? random_homogeneous(rng, sd.spec, sd.rank, 1 - pb, true)
			               : Superfunction(sd.spec, sd.rank)};
			ContinuityResidual res = continuity_residual(rho, D, div);
			return res.divergence_form == res.lie_form;
		});
	}
	return suite.take();
}

SuiteResult check_classical_reduction(uint64_t seed, int cases) {
	Suite suite("classical_reduction",
	            "transport of top densities along lifted fields reproduces the classical residual");
	Rng rng(seed);
	for (int i = 0; i < cases; ++i) {
		ModelChoice mc{i % 2 == 0 ? Mode::Chart : Mode::Torus, false, 2};
		suite.run(describe(mc, i), [&] {
			SymplecticData sd = random_symplectic_data(rng, mc.mode, 2, false);
			DivergenceOperator div = plain_divergence(sd);
			CoeffFn f = random_coeff(rng, sd.spec, true);
			std::vector<CoeffFn> X{random_base_coeff(rng, sd.spec),
			                       random_base_coeff(rng, sd.spec)};
			return classical_reduction_demo(div, f, X).match;
		});
	}
	return suite.take();
}

SuiteResult check_conservation(uint64_t seed, int cases) {
	Suite suite("conservation",
	            "densities transported along hamiltonian flows on the torus keep their integral");
	Rng rng(seed);
	for (int i = 0; i < cases; ++i) {
		ModelChoice mc{Mode::Torus, false, 2};
		suite.run(describe(mc, i), [&] {
			SymplecticData sd = random_symplectic_data(rng, Mode::Torus, 2, false);
			RothsteinForm th(sd);
			BerezinianVolume vol{th};
			DivergenceOperator div = DivergenceOperator::symplectic(vol);
			Superfunction top =
			    Superfunction::basis_term(sd.spec, 2, 3u, random_base_coeff(rng, sd.spec));
			GradedDerivation D = hamiltonian_field(th, top);
			Superfunction u = random_homogeneous(rng, sd.spec, sd.rank, 0, false);
			Superfunction rho0 = u - D.apply(u) * CoeffFn::time(sd.spec);
			TimeDependentSection rho{rho0, Superfunction(sd.spec, sd.rank)};
			return conservation_check(rho, D, div).conserved;
		});
	}
	return suite.take();
}

SuiteResult check_curvature_commutator(uint64_t seed, int cases) {
	Suite suite("curvature_commutator",
	            "curvature blocks equal the commutator of coordinate derivations on generators");
	Rng rng(seed);
	for (int i = 0; i < cases; ++i) {
		ModelChoice mc = curved_cycle(i);
		suite.run(describe(mc, i), [&] {
			SymplecticData sd = random_symplectic_data(rng, mc.mode, mc.rank, true);
			CurvatureData cd = curvature(sd);
			for (int a = 0; a < sd.spec.dim; ++a)
				for (int b = 0; b < sd.spec.dim; ++b) {
					GradedDerivation cab =
					    commutator(GradedDerivation::coordinate(sd.conn, a),
					               GradedDerivation::coordinate(sd.conn, b));
					for (int j = 0; j < sd.rank; ++j) {
						Superfunction expect(sd.spec, sd.rank);
						for (int k = 0; k < sd.rank; ++k)
							expect += Superfunction::generator(sd.spec, sd.rank, k + 1) *
							          cd.R[a][b][k][j];
						if (!(cab.apply(Superfunction::generator(sd.spec, sd.rank, j + 1)) ==
						      expect))
							return false;
					}
				}
			return true;
		});
	}
	return suite.take();
}

std::vector<SuiteResult> run_all_suites(uint64_t seed, int cases) {
	std::vector<SuiteResult> out;
	out.push_back(check_divergence_axiom(seed + 1, cases));
	out.push_back(check_integral_characterization(seed + 2, cases));
	out.push_back(check_product_rule_rescaled(seed + 3, cases));
	out.push_back(check_rescaling(seed + 4, cases));
	out.push_back(check_basic_divergences(seed + 5, cases));
	out.push_back(check_bracket_laws(seed + 6, cases));
	out.push_back(check_classical_restriction(seed + 7, cases));
	out.push_back(check_unimodularity(seed + 8, cases));
	out.push_back(check_class_invariance(seed + 9, cases));
	out.push_back(check_continuity_forms(seed + 10, cases));
	out.push_back(check_classical_reduction(seed + 11, cases));
	out.push_back(check_conservation(seed + 12, cases));
	out.push_back(check_curvature_commutator(seed + 13, cases));
	return out;
}

}  // namespace evensym
