#include "evensym/berezin.hpp"

#include <cstdint>
#include <utility>
#include <vector>

#include "evensym/geometry.hpp"

namespace evensym {

BerezinianVolume::BerezinianVolume(RothsteinForm th)
    : th_(std::move(th)), rescale_(Superfunction::one(th_.data().spec, th_.data().rank)) {}

BerezinianVolume::BerezinianVolume(RothsteinForm th, Superfunction rescale)
    : th_(std::move(th)), rescale_(std::move(rescale)) {
	const SymplecticData& sd = th_.data();
	check_same_spec(rescale_.spec(), sd.spec);
	require(rescale_.rank() == sd.rank, Errc::RankMismatch, "rescaling has the wrong rank");
	require(rescale_.is_even(), Errc::OddElement, "rescaling must be even");
	require(rescale_.body_coeff().is_unit(), Errc::NonInvertibleBody,
	        "rescaling body must be a unit");
	rescaled_ = !(rescale_ == Superfunction::one(sd.spec, sd.rank));
}

TorusIntegral berezin_integral(const BerezinianVolume& vol, const Superfunction& s) {
	const SymplecticData& sd = vol.data();
	require(sd.spec.mode == Mode::Torus, Errc::ChartModeUnsupported,
	        "integration needs a torus base");
	CoeffFn contracted = metric_volume_contract(sd, vol.rescale() * s);
	return torus_integral(contracted * symplectic_volume_coefficient(sd));
}

DivergenceOperator::DivergenceOperator(BerezinianVolume vol, std::vector<CoeffFn> dir)
    : vol_(std::move(vol)), dir_(std::move(dir)) {}

DivergenceOperator DivergenceOperator::symplectic(BerezinianVolume vol) {
	const SymplecticData& sd = vol.data();
	CoeffFn w = symplectic_volume_coefficient(sd);
	require(w.is_unit(), Errc::NonUnitVolumeCoefficient,
	        "base volume coefficient is not a unit");
	CoeffFn winv = w.inverse();
	std::vector<CoeffFn> dir;
	dir.reserve(sd.spec.dim);
	for (int a = 0; a < sd.spec.dim; ++a) dir.push_back(w.partial(a) * winv);
	return DivergenceOperator(std::move(vol), std::move(dir));
}

DivergenceOperator DivergenceOperator::canonical(RothsteinForm th, CoeffFn w_hat) {
	const SymplecticData& sd = th.data();
	check_same_spec(w_hat.spec(), sd.spec);
	require(w_hat.is_unit(), Errc::NonUnitVolumeCoefficient,
	        "reference volume coefficient is not a unit");
	CoeffFn winv = w_hat.inverse();
	std::vector<CoeffFn> dir;
	dir.reserve(sd.spec.dim);
	for (int a = 0; a < sd.spec.dim; ++a) {
		CoeffFn trace = CoeffFn::zero(sd.spec);
		for (int k = 0; k < sd.rank; ++k) trace = trace + sd.conn->gamma[a][k][k];
		dir.push_back(w_hat.partial(a) * winv - trace);
	}
	return DivergenceOperator(BerezinianVolume(std::move(th)), std::move(dir));
}

Superfunction DivergenceOperator::apply(const GradedDerivation& D) const {
	const SymplecticData& sd = vol_.data();
	check_same_spec(D.spec(), sd.spec);
	require(D.rank() == sd.rank, Errc::RankMismatch, "derivation has the wrong rank");
	Superfunction out(sd.spec, sd.rank);
	for (int a = 0; a < sd.spec.dim; ++a) {
		const Superfunction& alpha = D.nabla_part(a);
		if (alpha.is_zero()) continue;
		out += alpha * dir_[a] + nabla_apply(*sd.conn, a, alpha);
	}
	for (int j = 0; j < sd.rank; ++j) {
		const Superfunction& beta = D.contra_part(j);
		if (beta.is_zero()) continue;
		out += contract_apply(j, grade_involution(beta));
	}
	if (vol_.is_rescaled()) out += vol_.rescale().inverse_even() * D.apply(vol_.rescale());
	return out;
}

namespace {

// Sections whose pairwise products exercise the derivation law of a
// reconstructed operator beyond the frame probes it was built from.
std::vector<Superfunction> composite_probe_pool(const SymplecticData& sd) {
	std::vector<Superfunction> pool;
	for (int a = 0; a < sd.spec.dim; ++a) {
		if (sd.spec.mode == Mode::Chart) {
			pool.push_back(
			    Superfunction::scalar(sd.spec, sd.rank, CoeffFn::coordinate(sd.spec, a)));
		} else {
			std::vector<int32_t> freq(sd.spec.dim, 0);
			freq[a] = 1;
			pool.push_back(
			    Superfunction::scalar(sd.spec, sd.rank, CoeffFn::trig_mode(sd.spec, freq, false)));
			pool.push_back(
			    Superfunction::scalar(sd.spec, sd.rank, CoeffFn::trig_mode(sd.spec, freq, true)));
		}
	}
	for (int j = 1; j <= sd.rank; ++j)
		pool.push_back(Superfunction::generator(sd.spec, sd.rank, j));
	return pool;
}

}  // namespace

GradedDerivation modular_field(const DivergenceOperator& div) {
	const RothsteinForm& th = div.volume().form();
	const SymplecticData& sd = th.data();
	auto action = [&](const Superfunction& u) { return div.apply(hamiltonian_field(th, u)); };
	GradedDerivation z = derivation_from_action(sd.conn, action);
	require(z.is_zero() || z.parity() == std::optional<int>(0), Errc::Internal,
	        "modular field is not even");

	// The frame reconstruction is only faithful when the action really is a
	// derivation; confirm on products of probe sections.
	std::vector<Superfunction> pool = composite_probe_pool(sd);
	for (size_t i = 0; i < pool.size(); ++i)
		for (size_t k = i; k < pool.size(); ++k) {
			Superfunction u = pool[i] * pool[k];
			require(z.apply(u) == action(u), Errc::Internal,
			        "modular field does not reproduce the divergence action");
		}
	return z;
}

ModularClassReport modular_class_trivial(const DivergenceOperator& div) {
	const SymplecticData& sd = div.volume().data();
	GradedDerivation z = modular_field(div);
	std::vector<CoeffFn> x;
	x.reserve(sd.spec.dim);
	for (int a = 0; a < sd.spec.dim; ++a) x.push_back(z.nabla_part(a).body_coeff());
	std::vector<CoeffFn> alpha(sd.spec.dim, CoeffFn::zero(sd.spec));
	for (int b = 0; b < sd.spec.dim; ++b)
		for (int a = 0; a < sd.spec.dim; ++a) alpha[b] = alpha[b] + x[a] * sd.omega[a][b];
	require(is_closed_classical(sd, alpha), Errc::NotLocallyHamiltonian,
	        "modular vector field is not locally hamiltonian");
	ModularClassReport report;
	report.trivial = is_exact_classical(sd, alpha);
	report.certificate = std::move(alpha);
	return report;
}

CoeffFn canonical_comparison(const RothsteinForm& th, const CoeffFn& w_hat) {
	const SymplecticData& sd = th.data();
	check_same_spec(w_hat.spec(), sd.spec);
	CoeffFn w = symplectic_volume_coefficient(sd);
	std::optional<CoeffFn> ratio = w.divided_exactly_by(w_hat);
	require(ratio.has_value(), Errc::InexactQuotient,
	        "volume ratio does not exist in the coefficient ring");
	DivergenceOperator symp = DivergenceOperator::symplectic(BerezinianVolume(th));
	DivergenceOperator canon = DivergenceOperator::canonical(th, w_hat);
	for (int a = 0; a < sd.spec.dim; ++a) {
		CoeffFn gap = symp.direction_divergence(a) - canon.direction_divergence(a);
		require(*ratio * gap == ratio->partial(a), Errc::SemanticError,
		        "volume ratio does not intertwine the divergences");
	}
	return *ratio;
}

}  // namespace evensym
