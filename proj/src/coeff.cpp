#include "evensym/coeff.hpp"

namespace evensym {

void check_same_spec(const RingSpec& a, const RingSpec& b) {
	require(a.mode == b.mode, Errc::ModeMismatch, "mixed chart/torus operands");
	require(a.dim == b.dim, Errc::DimensionMismatch, "mixed base dimensions");
}

std::vector<std::string> RingSpec::coord_names() const {
	std::vector<std::string> names;
	for (int i = 1; i <= dim; ++i) names.push_back("x" + std::to_string(i));
	return names;
}

std::vector<std::string> RingSpec::chart_names() const {
	auto names = coord_names();
	names.push_back("t");
	return names;
}

CoeffFn::CoeffFn(RingSpec spec) : spec_(spec) {
	require(spec.dim >= 1 && spec.dim + 1 <= kMaxVars, Errc::DimensionMismatch,
	        "base dimension out of range");
	if (spec_.mode == Mode::Chart)
		rep_ = RationalFn(spec_.chart_nvars());
	else
		rep_ = TrigPoly(spec_.dim);
}

CoeffFn CoeffFn::constant(RingSpec spec, const Q& c) {
	CoeffFn f(spec);
	if (spec.mode == Mode::Chart)
		f.rep_ = RationalFn::constant(spec.chart_nvars(), c);
	else
		f.rep_ = TrigPoly::constant(spec.dim, c);
	return f;
}

CoeffFn CoeffFn::coordinate(RingSpec spec, int a) {
	require(spec.mode == Mode::Chart, Errc::TorusModeUnsupported,
	        "bare coordinates are not periodic functions");
	require(a >= 0 && a < spec.dim, Errc::IndexOutOfRange, "coordinate index");
	CoeffFn f(spec);
	f.rep_ = RationalFn::from_poly(Poly::variable(spec.chart_nvars(), a));
	return f;
}

CoeffFn CoeffFn::time(RingSpec spec) {
	CoeffFn f(spec);
	if (spec.mode == Mode::Chart)
		f.rep_ = RationalFn::from_poly(Poly::variable(spec.chart_nvars(), spec.dim));
	else
		f.rep_ = TrigPoly::constant_poly(spec.dim, Poly::variable(1, 0));
	return f;
}

CoeffFn CoeffFn::trig_mode(RingSpec spec, std::vector<int32_t> freq, bool is_sin) {
	require(spec.mode == Mode::Torus, Errc::ChartModeUnsupported,
	        "trigonometric modes require torus mode");
	CoeffFn f(spec);
	f.rep_ = TrigPoly::mode(spec.dim, std::move(freq), is_sin);
	return f;
}

CoeffFn CoeffFn::from_rational(RingSpec spec, RationalFn f) {
	require(spec.mode == Mode::Chart, Errc::ModeMismatch, "chart representation in torus mode");
	require(f.nvars() == spec.chart_nvars(), Errc::DimensionMismatch, "variable count");
	CoeffFn c(spec);
	c.rep_ = std::move(f);
	return c;
}

CoeffFn CoeffFn::from_trig(RingSpec spec, TrigPoly f) {
	require(spec.mode == Mode::Torus, Errc::ModeMismatch, "torus representation in chart mode");
	require(f.dim() == spec.dim, Errc::DimensionMismatch, "torus dimension");
	CoeffFn c(spec);
	c.rep_ = std::move(f);
	return c;
}

const RationalFn& CoeffFn::chart_rep() const {
	require(spec_.mode == Mode::Chart, Errc::ModeMismatch, "chart representation requested");
	return std::get<RationalFn>(rep_);
}

const TrigPoly& CoeffFn::torus_rep() const {
	require(spec_.mode == Mode::Torus, Errc::ModeMismatch, "torus representation requested");
	return std::get<TrigPoly>(rep_);
}

bool CoeffFn::is_zero() const {
	return spec_.mode == Mode::Chart ? chart_rep().is_zero() : torus_rep().is_zero();
}

bool CoeffFn::is_constant() const {
	return spec_.mode == Mode::Chart ? chart_rep().is_constant() : torus_rep().is_constant();
}

Q CoeffFn::constant_value() const {
	return spec_.mode == Mode::Chart ? chart_rep().constant_value() : torus_rep().constant_value();
}

std::optional<Q> CoeffFn::as_constant() const {
	if (!is_constant()) return std::nullopt;
	return constant_value();
}

bool CoeffFn::depends_on_time() const {
	return spec_.mode == Mode::Chart ? chart_rep().depends_on(spec_.dim)
	                                 : torus_rep().depends_on_time();
}

bool CoeffFn::is_unit() const {
	if (spec_.mode == Mode::Chart) return !is_zero();
	return torus_rep().is_constant() && !is_zero();
}

CoeffFn CoeffFn::inverse() const {
	require(is_unit(), Errc::NonInvertibleBody,
	        spec_.mode == Mode::Chart ? "inverse of zero" : "torus units are nonzero constants");
	CoeffFn r(spec_);
	if (spec_.mode == Mode::Chart) {
		r.rep_ = RationalFn::constant(spec_.chart_nvars(), 1) / chart_rep();
	} else {
		r.rep_ = TrigPoly::constant(spec_.dim, Q(1) / torus_rep().constant_value());
	}
	return r;
}

std::optional<CoeffFn> CoeffFn::divided_exactly_by(const CoeffFn& d) const {
	check_same_spec(spec_, d.spec_);
	if (spec_.mode == Mode::Chart) {
		if (d.is_zero()) return std::nullopt;
		CoeffFn r(spec_);
		r.rep_ = chart_rep() / d.chart_rep();
		return r;
	}
	auto q = torus_rep().divided_exactly_by(d.torus_rep());
	if (!q) return std::nullopt;
	CoeffFn r(spec_);
	r.rep_ = std::move(*q);
	return r;
}

CoeffFn CoeffFn::operator-() const {
	CoeffFn r(spec_);
	if (spec_.mode == Mode::Chart)
		r.rep_ = -chart_rep();
	else
		r.rep_ = -torus_rep();
	return r;
}

CoeffFn operator+(const CoeffFn& a, const CoeffFn& b) {
	check_same_spec(a.spec_, b.spec_);
	CoeffFn r(a.spec_);
	if (a.spec_.mode == Mode::Chart)
		r.rep_ = a.chart_rep() + b.chart_rep();
	else
		r.rep_ = a.torus_rep() + b.torus_rep();
	return r;
}

CoeffFn operator-(const CoeffFn& a, const CoeffFn& b) {
	check_same_spec(a.spec_, b.spec_);
	CoeffFn r(a.spec_);
	if (a.spec_.mode == Mode::Chart)
		r.rep_ = a.chart_rep() - b.chart_rep();
	else
		r.rep_ = a.torus_rep() - b.torus_rep();
	return r;
}

CoeffFn operator*(const CoeffFn& a, const CoeffFn& b) {
	check_same_spec(a.spec_, b.spec_);
	CoeffFn r(a.spec_);
	if (a.spec_.mode == Mode::Chart)
		r.rep_ = a.chart_rep() * b.chart_rep();
	else
		r.rep_ = a.torus_rep() * b.torus_rep();
	return r;
}

CoeffFn CoeffFn::operator*(const Q& c) const {
	CoeffFn r(spec_);
	if (spec_.mode == Mode::Chart)
		r.rep_ = chart_rep() * RationalFn::constant(spec_.chart_nvars(), c);
	else
		r.rep_ = torus_rep() * c;
	return r;
}

CoeffFn CoeffFn::partial(int a) const {
	require(a >= 0 && a < spec_.dim, Errc::IndexOutOfRange, "coordinate index");
	CoeffFn r(spec_);
	if (spec_.mode == Mode::Chart)
		r.rep_ = chart_rep().derivative(a);
	else
		r.rep_ = torus_rep().derivative(a);
	return r;
}

CoeffFn CoeffFn::partial_t() const {
	CoeffFn r(spec_);
	if (spec_.mode == Mode::Chart)
		r.rep_ = chart_rep().derivative(spec_.dim);
	else
		r.rep_ = torus_rep().derivative_t();
	return r;
}

Poly CoeffFn::torus_constant_mode() const { return torus_rep().constant_mode(); }

std::string CoeffFn::str() const {
	if (spec_.mode == Mode::Chart) {
		auto names = spec_.chart_names();
		return chart_rep().str(names);
	}
	auto names = spec_.coord_names();
	return torus_rep().str(names);
}

std::string TorusIntegral::str() const {
	if (value.is_zero()) return "0";
	std::vector<std::string> names = {"t"};
	std::string v = value.str(names);
	std::string p = "(2pi)^" + std::to_string(two_pi_power);
	if (v == "1") return p;
	if (v == "-1") return "-" + p;
	if (v.find(' ') != std::string::npos) return "(" + v + ")*" + p;
	return v + "*" + p;
}

TorusIntegral torus_integral(const CoeffFn& c) {
	require(c.spec().mode == Mode::Torus, Errc::ChartModeUnsupported,
	        "torus integral requires torus mode");
	return TorusIntegral{c.torus_constant_mode(), c.spec().dim};
}

}  // namespace evensym
