#include "evensym/poly.hpp"

#include <algorithm>
#include <climits>
#include <vector>

namespace evensym {

Poly::Poly(int nvars) : nvars_(nvars) {
	require(nvars >= 1 && nvars <= kMaxVars, Errc::DimensionMismatch,
	        "polynomial variable count out of range");
}

Poly Poly::constant(int nvars, const Q& c) {
	Poly p(nvars);
	if (c != 0) p.terms_.emplace(Mono{}, c);
	return p;
}

Poly Poly::variable(int nvars, int index) {
	Poly p(nvars);
	require(index >= 0 && index < nvars, Errc::IndexOutOfRange, "variable index");
	Mono m;
	m.exp[index] = 1;
	p.terms_.emplace(m, Q(1));
	return p;
}

bool Poly::is_constant() const {
	return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Mono{});
}

Q Poly::constant_value() const {
	require(is_constant(), Errc::Internal, "constant_value on non-constant polynomial");
	return terms_.empty() ? Q(0) : terms_.begin()->second;
}

int Poly::total_degree() const {
	int d = -1;
	for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
	return d;
}

int Poly::degree_in(int var) const {
	int d = -1;
	for (const auto& [m, c] : terms_) d = std::max(d, int(m.exp[var]));
	return d;
}

bool Poly::depends_on(int var) const {
	for (const auto& [m, c] : terms_)
		if (m.exp[var] > 0) return true;
	return false;
}

void Poly::add_term(const Mono& m, const Q& c) {
	if (c == 0) return;
	auto [it, inserted] = terms_.emplace(m, c);
	if (!inserted) {
		it->second += c;
		if (it->second == 0) terms_.erase(it);
	}
}

Poly Poly::operator-() const {
	Poly r(nvars_);
	for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
	return r;
}

Poly& Poly::operator+=(const Poly& o) {
	for (const auto& [m, c] : o.terms_) add_term(m, c);
	return *this;
}

Poly& Poly::operator-=(const Poly& o) {
	for (const auto& [m, c] : o.terms_) add_term(m, -c);
	return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
	Poly r(a.nvars_);
	for (const auto& [ma, ca] : a.terms_) {
		for (const auto& [mb, cb] : b.terms_) {
			Mono m;
			for (int i = 0; i < kMaxVars; ++i) m.exp[i] = uint16_t(ma.exp[i] + mb.exp[i]);
			r.add_term(m, ca * cb);
		}
	}
	return r;
}

Poly Poly::operator*(const Q& c) const {
	Poly r(nvars_);
	if (c == 0) return r;
	for (const auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
	return r;
}

Poly Poly::pow(unsigned k) const {
	Poly r = Poly::constant(nvars_, 1);
	Poly base = *this;
	while (k) {
		if (k & 1u) r = r * base;
		base = base * base;
		k >>= 1u;
	}
	return r;
}

Poly Poly::derivative(int var) const {
	Poly r(nvars_);
	for (const auto& [m, c] : terms_) {
		if (m.exp[var] == 0) continue;
		Mono d = m;
		d.exp[var] -= 1;
		r.add_term(d, c * int(m.exp[var]));
	}
	return r;
}

std::optional<Poly> Poly::divided_exactly_by(const Poly& d) const {
	require(d.nvars_ == nvars_, Errc::DimensionMismatch, "polynomial variable count");
	require(!d.is_zero(), Errc::Internal, "division by zero polynomial");
	Poly q(nvars_), r = *this;
	const auto& [dm, dc] = *d.terms_.begin();
	while (!r.is_zero()) {
		const auto& [rm, rc] = *r.terms_.begin();
		Mono qm;
		for (int i = 0; i < kMaxVars; ++i) {
			if (rm.exp[i] < dm.exp[i]) return std::nullopt;
			qm.exp[i] = uint16_t(rm.exp[i] - dm.exp[i]);
		}
		Q qc = rc / dc;
		Poly t(nvars_);
		t.terms_.emplace(qm, qc);
		q += t;
		r -= t * d;
	}
	return q;
}

namespace {

// Coefficient of v^k, as a polynomial with the v-exponent cleared.
Poly coeff_of(const Poly& p, int v, int k) {
	Poly r(p.nvars());
	for (const auto& [m, c] : p.terms()) {
		if (int(m.exp[v]) != k) continue;
		Mono n = m;
		n.exp[v] = 0;
		r.add_term(n, c);
	}
	return r;
}

Poly shift_by_power(const Poly& p, int v, int k) {
	Poly r(p.nvars());
	for (const auto& [m, c] : p.terms()) {
		Mono n = m;
		n.exp[v] = uint16_t(n.exp[v] + k);
		r.add_term(n, c);
	}
	return r;
}

int top_var(const Poly& a, const Poly& b) {
	for (int v = a.nvars() - 1; v >= 0; --v)
		if (a.depends_on(v) || b.depends_on(v)) return v;
	return -1;
}

// p normalized to coprime integer coefficients with positive leading coefficient.
Poly rational_normalize(const Poly& p) {
	if (p.is_zero()) return p;
	Int g = 0, l = 1;
	for (const auto& [m, c] : p.terms()) {
		g = boost::multiprecision::gcd(g, numerator(c));
		l = boost::multiprecision::lcm(l, denominator(c));
	}
	Q scale(l, g);
	if (p.terms().begin()->second < 0) scale = -scale;
	return p * scale;
}

// Content of p viewed as a univariate polynomial in v: gcd of its coefficients.
Poly content_in(const Poly& p, int v) {
	Poly c(p.nvars());
	for (int k = 0; k <= p.degree_in(v); ++k) {
		Poly ck = coeff_of(p, v, k);
		if (!ck.is_zero()) c = Poly::gcd(c, ck);
	}
	return c;
}

Poly pseudo_rem(Poly a, const Poly& b, int v) {
	int db = b.degree_in(v);
	Poly lcb = coeff_of(b, v, db);
	// Stripping the content after every elimination step only changes the
	// remainder by units of the coefficient fraction field, and keeps the
	// intermediate coefficients from swelling.
	bool strip = !lcb.is_constant();
	while (!a.is_zero()) {
		int da = a.degree_in(v);
		if (da < db) break;
		Poly lca = coeff_of(a, v, da);
		a = lcb * a - shift_by_power(lca, v, da - db) * b;
		if (a.is_zero()) break;
		a = rational_normalize(a);
		if (strip) a = *a.divided_exactly_by(content_in(a, v));
	}
	return a;
}

}  // namespace

Poly Poly::gcd(const Poly& a, const Poly& b) {
	require(a.nvars_ == b.nvars_, Errc::DimensionMismatch, "polynomial variable count");
	if (a.is_zero()) return rational_normalize(b);
	if (b.is_zero()) return rational_normalize(a);
	if (a.terms_.size() == 1 || b.terms_.size() == 1) {
		// One side is a monomial: the gcd is the common monomial part.
		Mono m{};
		for (int i = 0; i < a.nvars_; ++i) {
			int e = INT_MAX;
			for (const auto& [n, c] : a.terms_) e = std::min(e, int(n.exp[i]));
			for (const auto& [n, c] : b.terms_) e = std::min(e, int(n.exp[i]));
			m.exp[i] = uint16_t(e);
		}
		Poly g(a.nvars_);
		g.add_term(m, Q(1));
		return g;
	}
	int v = top_var(a, b);
	if (v < 0) return Poly::constant(a.nvars_, 1);
	if (!a.depends_on(v) || !b.depends_on(v)) {
		// One side is free of the main variable: gcd divides its content.
		const Poly& flat = a.depends_on(v) ? b : a;
		const Poly& tall = a.depends_on(v) ? a : b;
		return Poly::gcd(flat, content_in(tall, v));
	}
	Poly ca = content_in(a, v), cb = content_in(b, v);
	Poly c = Poly::gcd(ca, cb);
	Poly A = *a.divided_exactly_by(ca);
	Poly B = *b.divided_exactly_by(cb);
	if (A.degree_in(v) < B.degree_in(v)) std::swap(A, B);
	while (true) {
		Poly r = pseudo_rem(A, B, v);
		if (r.is_zero()) break;
		if (r.degree_in(v) <= 0) {
			B = Poly::constant(a.nvars_, 1);
			break;
		}
		A = B;
		B = *r.divided_exactly_by(content_in(r, v));
	}
	Poly g = *B.divided_exactly_by(content_in(B, v));
	return rational_normalize(c * g);
}

std::string Poly::str(std::span<const std::string> names) const {
	if (terms_.empty()) return "0";
	std::string out;
	bool first = true;
	for (const auto& [m, c] : terms_) {
		Q coeff = c;
		if (first) {
			if (coeff < 0) {
				out += "-";
				coeff = -coeff;
			}
			first = false;
		} else {
			out += (coeff < 0) ? " - " : " + ";
			if (coeff < 0) coeff = -coeff;
		}
		std::string mono;
		for (int i = 0; i < nvars_; ++i) {
			if (m.exp[i] == 0) continue;
			if (!mono.empty()) mono += "*";
			mono += names[size_t(i)];
			if (m.exp[i] > 1) mono += "^" + std::to_string(m.exp[i]);
		}
		if (mono.empty()) {
			out += q_str(coeff);
		} else if (coeff == 1) {
			out += mono;
		} else {
			out += q_str(coeff) + "*" + mono;
		}
	}
	return out;
}

}  // namespace evensym
