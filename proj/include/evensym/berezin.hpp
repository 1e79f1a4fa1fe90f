#pragma once

#include "evensym/symplectic.hpp"

namespace evensym {

// Integration volume: the pairing data plus an optional even rescaling with
// invertible body. Rescaled integrals weigh sections by the rescaling on the
// left.
class BerezinianVolume {
 public:
	explicit BerezinianVolume(RothsteinForm th);
	BerezinianVolume(RothsteinForm th, Superfunction rescale);

	const RothsteinForm& form() const { return th_; }
	const SymplecticData& data() const { return th_.data(); }
	const Superfunction& rescale() const { return rescale_; }
	bool is_rescaled() const { return rescaled_; }

 private:
	RothsteinForm th_;
	Superfunction rescale_;
	bool rescaled_ = false;
};

// Integral of a section: contract the fiber against the metric volume,
// weigh by the top coefficient of the base form's power, integrate over the
// torus.
TorusIntegral berezin_integral(const BerezinianVolume& vol, const Superfunction& s);

// Divergence of frame derivations against a volume, assembled per direction:
//   div(sum_a alpha^a ^ nabla_a + sum_j beta^j ^ i_j)
//     = sum_a [alpha^a ^ div(nabla_a) + nabla_a(alpha^a)]
//     + sum_j i_j(grade_involution(beta^j))
// plus the correction rescale^{-1} ^ D(rescale) for a rescaled volume.
class DivergenceOperator {
 public:
	// Volume built from the pairing data itself: div(nabla_a) is the
	// classical divergence of the coordinate direction against the base
	// form's top power, div(i_j) = 0.
	static DivergenceOperator symplectic(BerezinianVolume vol);
	// Coordinate volume with top coefficient w_hat: the connection trace
	// enters through the covariant derivative of the frame top element.
	static DivergenceOperator canonical(RothsteinForm th, CoeffFn w_hat);

	const BerezinianVolume& volume() const { return vol_; }
	const CoeffFn& direction_divergence(int a) const { return dir_[a]; }
	Superfunction apply(const GradedDerivation& D) const;

 private:
	DivergenceOperator(BerezinianVolume vol, std::vector<CoeffFn> dir);

	BerezinianVolume vol_;
	std::vector<CoeffFn> dir_;
};

// Even derivation measuring how far hamiltonian fields are from being
// divergence-free: Z(u) = div(D_u), reconstructed from frame probes and
// validated on composite sections.
GradedDerivation modular_field(const DivergenceOperator& div);

struct ModularClassReport {
	bool trivial = false;
	// Base one-form tested for exactness: the degree-0 vector field of the
	// modular field contracted into the base form.
	std::vector<CoeffFn> certificate;
};

// Decides whether the modular field is hamiltonian up to higher degree: its
// degree-0 vector field must be exact for the base form.
ModularClassReport modular_class_trivial(const DivergenceOperator& div);

// Ratio of the pairing volume coefficient to a reference coordinate volume
// coefficient, with the induced relation between the two divergences
// verified exactly on every frame direction.
CoeffFn canonical_comparison(const RothsteinForm& th, const CoeffFn& w_hat);

}  // namespace evensym
