#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "evensym/rationalfn.hpp"
#include "evensym/trigpoly.hpp"

namespace evensym {

enum class Mode { Chart, Torus };

inline const char* mode_name(Mode m) { return m == Mode::Chart ? "chart" : "torus"; }

// Base manifold descriptor shared by every object in a model. Chart mode
// works over rational functions in x1..xd and the external parameter t;
// torus mode over finite Fourier series in x1..xd with Q[t] coefficients.
struct RingSpec {
	Mode mode = Mode::Chart;
	int dim = 2;

	bool operator==(const RingSpec&) const = default;
	int chart_nvars() const { return dim + 1; }  // trailing slot is t
	std::vector<std::string> chart_names() const;
	std::vector<std::string> coord_names() const;
};

// Degree-zero coefficient function in the active mode. All arithmetic is
// exact and representations are canonical, so == is mathematical equality.
class CoeffFn {
 public:
	explicit CoeffFn(RingSpec spec);
	static CoeffFn zero(RingSpec spec) { return CoeffFn(spec); }
	static CoeffFn one(RingSpec spec) { return constant(spec, Q(1)); }
	static CoeffFn constant(RingSpec spec, const Q& c);
	static CoeffFn coordinate(RingSpec spec, int a);  // chart mode only
	static CoeffFn time(RingSpec spec);
	static CoeffFn trig_mode(RingSpec spec, std::vector<int32_t> freq, bool is_sin);
	static CoeffFn from_rational(RingSpec spec, RationalFn f);
	static CoeffFn from_trig(RingSpec spec, TrigPoly f);

	const RingSpec& spec() const { return spec_; }
	bool is_zero() const;
	bool is_one() const { return *this == one(spec_); }
	bool is_constant() const;
	Q constant_value() const;
	std::optional<Q> as_constant() const;
	bool depends_on_time() const;

	// Unit test per mode: chart units are nonzero rational functions, torus
	// units are nonzero rational constants.
	bool is_unit() const;
	CoeffFn inverse() const;
	std::optional<CoeffFn> divided_exactly_by(const CoeffFn& d) const;

	CoeffFn operator-() const;
	friend CoeffFn operator+(const CoeffFn& a, const CoeffFn& b);
	friend CoeffFn operator-(const CoeffFn& a, const CoeffFn& b);
	friend CoeffFn operator*(const CoeffFn& a, const CoeffFn& b);
	CoeffFn operator*(const Q& c) const;

	CoeffFn partial(int a) const;  // d/dx^a, a in 0..dim-1
	CoeffFn partial_t() const;

	const RationalFn& chart_rep() const;
	const TrigPoly& torus_rep() const;
	// Constant Fourier mode as an element of Q[t] (torus mode).
	Poly torus_constant_mode() const;

	bool operator==(const CoeffFn&) const = default;
	std::string str() const;

 private:
	RingSpec spec_;
	std::variant<RationalFn, TrigPoly> rep_;
};

void check_same_spec(const RingSpec& a, const RingSpec& b);

// Exact integral over the torus: value * (2*pi)^two_pi_power, with value the
// constant Fourier mode as a polynomial in t.
struct TorusIntegral {
	Poly value = Poly(1);
	int two_pi_power = 0;

	bool is_zero() const { return value.is_zero(); }
	bool operator==(const TorusIntegral&) const = default;
	std::string str() const;
};

TorusIntegral torus_integral(const CoeffFn& c);

}  // namespace evensym
