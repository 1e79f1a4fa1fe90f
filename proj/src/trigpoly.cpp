#include "evensym/trigpoly.hpp"

#include <algorithm>

namespace evensym {

bool TrigKey::is_constant() const {
	return std::all_of(freq.begin(), freq.end(), [](int32_t k) { return k == 0; });
}

TrigPoly TrigPoly::constant(int dim, const Q& c) {
	return constant_poly(dim, Poly::constant(1, c));
}

TrigPoly TrigPoly::constant_poly(int dim, Poly c) {
	TrigPoly p(dim);
	p.add_term(std::vector<int32_t>(size_t(dim), 0), false, c);
	return p;
}

TrigPoly TrigPoly::mode(int dim, std::vector<int32_t> freq, bool is_sin) {
	TrigPoly p(dim);
	require(int(freq.size()) == dim, Errc::DimensionMismatch, "frequency vector length");
	p.add_term(std::move(freq), is_sin, Poly::constant(1, 1));
	return p;
}

// Canonicalize a raw (freq, sin?) mode: returns the sign picked up, or 0 when
// the mode vanishes identically (sin of the zero frequency).
static int canonical_key(std::vector<int32_t>& freq, bool is_sin) {
	for (int32_t k : freq) {
		if (k > 0) return 1;
		if (k < 0) {
			for (auto& f : freq) f = -f;
			return is_sin ? -1 : 1;
		}
	}
	return is_sin ? 0 : 1;
}

void TrigPoly::add_term(std::vector<int32_t> freq, bool is_sin, const Poly& c) {
	require(int(freq.size()) == dim_, Errc::DimensionMismatch, "frequency vector length");
	require(c.nvars() == 1, Errc::DimensionMismatch, "mode coefficient ring");
	if (c.is_zero()) return;
	int sign = canonical_key(freq, is_sin);
	if (sign == 0) return;
	TrigKey key{std::move(freq), is_sin};
	Poly add = (sign < 0) ? -c : c;
	auto [it, inserted] = terms_.emplace(key, add);
	if (!inserted) {
		it->second += add;
		if (it->second.is_zero()) terms_.erase(it);
	}
}

bool TrigPoly::is_x_free() const {
	for (const auto& [k, c] : terms_)
		if (!k.is_constant()) return false;
	return true;
}

bool TrigPoly::is_constant() const {
	if (!is_x_free()) return false;
	return terms_.empty() || terms_.begin()->second.is_constant();
}

Q TrigPoly::constant_value() const {
	require(is_constant(), Errc::Internal, "constant_value on non-constant series");
	return terms_.empty() ? Q(0) : terms_.begin()->second.constant_value();
}

Poly TrigPoly::constant_mode() const {
	TrigKey key{std::vector<int32_t>(size_t(dim_), 0), false};
	auto it = terms_.find(key);
	return it == terms_.end() ? Poly(1) : it->second;
}

bool TrigPoly::depends_on_time() const {
	for (const auto& [k, c] : terms_)
		if (c.depends_on(0)) return true;
	return false;
}

TrigPoly TrigPoly::operator-() const {
	TrigPoly r(dim_);
	for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
	return r;
}

TrigPoly& TrigPoly::operator+=(const TrigPoly& o) {
	require(dim_ == o.dim_, Errc::DimensionMismatch, "torus dimension");
	for (const auto& [k, c] : o.terms_) add_term(k.freq, k.is_sin, c);
	return *this;
}

TrigPoly& TrigPoly::operator-=(const TrigPoly& o) {
	require(dim_ == o.dim_, Errc::DimensionMismatch, "torus dimension");
	for (const auto& [k, c] : o.terms_) add_term(k.freq, k.is_sin, -c);
	return *this;
}

TrigPoly operator*(const TrigPoly& a, const TrigPoly& b) {
	require(a.dim_ == b.dim_, Errc::DimensionMismatch, "torus dimension");
	TrigPoly r(a.dim_);
	const Q half(1, 2);
	for (const auto& [ka, ca] : a.terms_) {
		for (const auto& [kb, cb] : b.terms_) {
			Poly c = (ca * cb) * half;
			std::vector<int32_t> sum(ka.freq), diff(ka.freq);
			for (int i = 0; i < a.dim_; ++i) {
				sum[size_t(i)] += kb.freq[size_t(i)];
				diff[size_t(i)] -= kb.freq[size_t(i)];
			}
			if (!ka.is_sin && !kb.is_sin) {
				// cos*cos = (cos(A-B) + cos(A+B))/2
				r.add_term(diff, false, c);
				r.add_term(sum, false, c);
			} else if (ka.is_sin && kb.is_sin) {
				// sin*sin = (cos(A-B) - cos(A+B))/2
				r.add_term(diff, false, c);
				r.add_term(sum, false, -c);
			} else if (ka.is_sin && !kb.is_sin) {
				// sin*cos = (sin(A+B) + sin(A-B))/2
				r.add_term(sum, true, c);
				r.add_term(diff, true, c);
			} else {
				// cos*sin = (sin(A+B) - sin(A-B))/2
				r.add_term(sum, true, c);
				r.add_term(diff, true, -c);
			}
		}
	}
	return r;
}

TrigPoly TrigPoly::operator*(const Q& c) const {
	TrigPoly r(dim_);
	if (c == 0) return r;
	for (const auto& [k, v] : terms_) r.terms_.emplace(k, v * c);
	return r;
}

TrigPoly TrigPoly::derivative(int coord) const {
	require(coord >= 0 && coord < dim_, Errc::IndexOutOfRange, "coordinate index");
	TrigPoly r(dim_);
	for (const auto& [k, c] : terms_) {
		int32_t ka = k.freq[size_t(coord)];
		if (ka == 0) continue;
		// d/dx cos(kx) = -k sin(kx), d/dx sin(kx) = k cos(kx)
		if (k.is_sin)
			r.add_term(k.freq, false, c * Q(ka));
		else
			r.add_term(k.freq, true, c * Q(-ka));
	}
	return r;
}

TrigPoly TrigPoly::derivative_t() const {
	TrigPoly r(dim_);
	for (const auto& [k, c] : terms_) {
		Poly d = c.derivative(0);
		if (!d.is_zero()) r.terms_.emplace(k, d);
	}
	return r;
}

std::optional<TrigPoly> TrigPoly::divided_exactly_by(const TrigPoly& d) const {
	require(dim_ == d.dim_, Errc::DimensionMismatch, "torus dimension");
	if (d.is_zero()) return std::nullopt;
	if (!d.is_x_free()) return std::nullopt;
	Poly dc = d.constant_mode();
	TrigPoly r(dim_);
	for (const auto& [k, c] : terms_) {
		auto q = c.divided_exactly_by(dc);
		if (!q) return std::nullopt;
		if (!q->is_zero()) r.terms_.emplace(k, *q);
	}
	return r;
}

std::string TrigPoly::str(std::span<const std::string> coord_names) const {
	if (terms_.empty()) return "0";
	static const std::string t_name[] = {"t"};
	std::string out;
	bool first = true;
	for (const auto& [k, c] : terms_) {
		std::string coeff = c.str(t_name);
		bool negated = false;
		if (coeff.size() > 1 && coeff[0] == '-' && c.terms().size() == 1) {
			coeff = coeff.substr(1);
			negated = true;
		}
		if (first) {
			if (negated) out += "-";
			first = false;
		} else {
			out += negated ? " - " : " + ";
		}
		if (k.is_constant()) {
			if (c.terms().size() > 1 && !first)
				out += "(" + (negated ? "-" + coeff : coeff) + ")";
			else if (c.terms().size() > 1)
				out += negated ? "-" + coeff : coeff;
			else
				out += coeff;
			continue;
		}
		std::string arg;
		for (int i = 0; i < dim_; ++i) {
			int32_t f = k.freq[size_t(i)];
			if (f == 0) continue;
			if (!arg.empty()) arg += (f > 0) ? "+" : "-";
			else if (f < 0) arg += "-";
			int32_t af = (f > 0) ? f : -f;
			if (af != 1) arg += std::to_string(af) + "*";
			arg += coord_names[size_t(i)];
		}
		std::string mode = (k.is_sin ? "sin(" : "cos(") + arg + ")";
		if (coeff == "1") {
			out += mode;
		} else if (c.terms().size() == 1) {
			out += coeff + "*" + mode;
		} else {
			out += "(" + c.str(t_name) + ")*" + mode;
		}
	}
	return out;
}

}  // namespace evensym
