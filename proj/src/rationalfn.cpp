#include "evensym/rationalfn.hpp"

namespace evensym {

namespace {

// Inputs are kept reduced, so binary operations cancel cross factors before
// multiplying instead of reducing one large product afterwards.
Poly cancel(Poly& a, Poly& b) {
	Poly g = Poly::gcd(a, b);
	if (!g.is_constant()) {
		a = *a.divided_exactly_by(g);
		b = *b.divided_exactly_by(g);
	}
	return g;
}

}  // namespace

RationalFn::RationalFn(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
	require(!den_.is_zero(), Errc::NonInvertibleBody, "zero denominator");
	normalize();
}

void RationalFn::normalize() {
	if (num_.is_zero()) {
		den_ = Poly::constant(num_.nvars(), 1);
		return;
	}
	if (!den_.is_constant()) {
		if (auto q = num_.divided_exactly_by(den_)) {
			num_ = std::move(*q);
			den_ = Poly::constant(num_.nvars(), 1);
			return;
		}
		Poly g = Poly::gcd(num_, den_);
		num_ = *num_.divided_exactly_by(g);
		den_ = *den_.divided_exactly_by(g);
	}
	Q lc = den_.terms().begin()->second;
	if (lc != 1) {
		Q inv = Q(1) / lc;
		num_ = num_ * inv;
		den_ = den_ * inv;
	}
}

RationalFn RationalFn::operator-() const {
	RationalFn r = *this;
	r.num_ = -r.num_;
	return r;
}

RationalFn RationalFn::reduced(Poly num, Poly den) {
	RationalFn r(num.nvars());
	if (num.is_zero()) return r;
	r.num_ = std::move(num);
	r.den_ = std::move(den);
	Q lc = r.den_.terms().begin()->second;
	if (lc != 1) {
		Q inv = Q(1) / lc;
		r.num_ = r.num_ * inv;
		r.den_ = r.den_ * inv;
	}
	return r;
}

RationalFn operator+(const RationalFn& a, const RationalFn& b) {
	if (a.den_ == b.den_) return RationalFn(a.num_ + b.num_, a.den_);
	Poly ad = a.den_, bd = b.den_;
	Poly d = cancel(ad, bd);  // ad, bd are now the cofactors of the common part
	Poly num = a.num_ * bd + b.num_ * ad;
	if (num.is_zero()) return RationalFn(a.nvars());
	// Only the common factor can still cancel against the new numerator.
	cancel(num, d);
	return RationalFn::reduced(std::move(num), ad * d * bd);
}

RationalFn operator-(const RationalFn& a, const RationalFn& b) {
	return a + (-b);
}

RationalFn operator*(const RationalFn& a, const RationalFn& b) {
	Poly an = a.num_, bd = b.den_;
	cancel(an, bd);
	Poly bn = b.num_, ad = a.den_;
	cancel(bn, ad);
	return RationalFn::reduced(an * bn, ad * bd);
}

RationalFn operator/(const RationalFn& a, const RationalFn& b) {
	require(!b.is_zero(), Errc::NonInvertibleBody, "division by zero rational function");
	Poly an = a.num_, bn = b.num_;
	cancel(an, bn);
	Poly ad = a.den_, bd = b.den_;
	cancel(bd, ad);
	return RationalFn::reduced(an * bd, ad * bn);
}

RationalFn RationalFn::derivative(int var) const {
	if (is_polynomial()) return from_poly(num_.derivative(var));
	Poly n = num_.derivative(var) * den_ - num_ * den_.derivative(var);
	return RationalFn(std::move(n), den_ * den_);
}

std::string RationalFn::str(std::span<const std::string> names) const {
	if (is_polynomial()) return num_.str(names);
	std::string n = num_.str(names);
	std::string d = den_.str(names);
	return "(" + n + ")/(" + d + ")";
}

}  // namespace evensym
