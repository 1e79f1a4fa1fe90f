#include "evensym/continuity.hpp"

#include <optional>
#include <utility>
#include <vector>

#include "evensym/geometry.hpp"

namespace evensym {

namespace {

// Combined parity of base + sigma-part, enforcing that the sigma coefficient
// sits one parity step above the base.
int density_parity(const TimeDependentSection& rho) {
	std::optional<int> pb = rho.base.parity();
	std::optional<int> ps = rho.sigma.parity();
	if (!rho.base.is_zero()) {
		require(pb.has_value(), Errc::InhomogeneousInput, "density base has mixed parity");
		if (!rho.sigma.is_zero()) {
			require(ps.has_value() && *ps == (*pb + 1) % 2, Errc::InhomogeneousInput,
			        "density sigma coefficient must have opposite parity to the base");
		}
		return *pb;
	}
	if (!rho.sigma.is_zero()) {
		require(ps.has_value(), Errc::InhomogeneousInput,
		        "density sigma coefficient has mixed parity");
		return (*ps + 1) % 2;
	}
	return 0;
}

}  // namespace

ContinuityResidual continuity_residual(const TimeDependentSection& rho,
                                       const GradedDerivation& D,
                                       const DivergenceOperator& div) {
	std::optional<int> pd = D.parity();
	require(D.is_zero() || pd.has_value(), Errc::InhomogeneousInput,
	        "transport derivation has mixed parity");
	int dpar = pd.value_or(0);
	int rpar = density_parity(rho);
	Q sign = (dpar == 1 && rpar == 1) ? Q(-1) : Q(1);

	ContinuityResidual res{
	    {rho.base.partial_t() + rho.sigma + div.apply(D.left_mul(rho.base)) * sign,
	     rho.sigma.partial_t() + div.apply(D.left_mul(rho.sigma)) * sign},
	    {rho.base.partial_t() + rho.sigma + D.apply(rho.base),
	     rho.sigma.partial_t() + D.apply(rho.sigma) * (dpar == 1 ? Q(-1) : Q(1))}};
	if (div.apply(D).is_zero()) {
		require(res.divergence_form == res.lie_form, Errc::Internal,
		        "transport residual forms disagree for a divergence-free flow");
	}
	return res;
}

ConservationReport conservation_check(const TimeDependentSection& rho,
                                      const GradedDerivation& D,
                                      const DivergenceOperator& div) {
	const SymplecticData& sd = div.volume().data();
	require(sd.spec.mode == Mode::Torus, Errc::ChartModeUnsupported,
	        "conservation needs a torus base");
	ContinuityResidual res = continuity_residual(rho, D, div);
	require(res.divergence_form.base.is_zero() && res.divergence_form.sigma.is_zero(),
	        Errc::NonzeroResidual, "density does not satisfy the transport equation");
	TorusIntegral ib = berezin_integral(div.volume(), rho.base);
	TorusIntegral is = berezin_integral(div.volume(), rho.sigma);
	ConservationReport report;
	report.base_rate = ib.value.derivative(0) + is.value;
	report.sigma_rate = is.value.derivative(0);
	report.conserved = report.base_rate.is_zero() && report.sigma_rate.is_zero();
	return report;
}

ClassicalReductionReport classical_reduction_demo(const DivergenceOperator& div,
                                                  const CoeffFn& f,
                                                  const std::vector<CoeffFn>& X) {
	const SymplecticData& sd = div.volume().data();
	require(sd.rank == 2 && sd.spec.dim == 2, Errc::RankMismatch,
	        "reduction needs two base coordinates and a rank-two frame");
	for (const CMatrix& block : sd.conn->gamma)
		for (const auto& row : block)
			for (const CoeffFn& entry : row)
				require(entry.is_zero(), Errc::SemanticError, "reduction needs a flat frame");
	require(static_cast<int>(X.size()) == sd.spec.dim, Errc::DimensionMismatch,
	        "vector field has the wrong number of components");

	// Lift of X: transport coefficients along X, rotate the frame by the
	// Jacobian so the top density transforms as a classical density.
	GradedDerivation lift(sd.conn);
	for (int a = 0; a < sd.spec.dim; ++a)
		lift.set_nabla_part(a, Superfunction::scalar(sd.spec, sd.rank, X[a]));
	for (int j = 0; j < sd.rank; ++j) {
		Superfunction beta(sd.spec, sd.rank);
		for (int a = 0; a < sd.spec.dim; ++a)
			beta += Superfunction::generator(sd.spec, sd.rank, a + 1) * X[j].partial(a);
		lift.set_contra_part(j, beta);
	}

	Superfunction top = Superfunction::generator(sd.spec, sd.rank, 1) *
	                    Superfunction::generator(sd.spec, sd.rank, 2);
	TimeDependentSection rho{top * f, Superfunction(sd.spec, sd.rank)};
	ContinuityResidual res = continuity_residual(rho, lift, div);

	std::vector<CoeffFn> fX;
	fX.reserve(X.size());
	for (const CoeffFn& c : X) fX.push_back(f * c);
	ClassicalReductionReport report{res.divergence_form.base,
	                                top * (f.partial_t() + classical_divergence(sd, fX)),
	                                false};
	report.match = report.residual == report.expected;
	return report;
}

}  // namespace evensym
