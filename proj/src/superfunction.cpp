#include "evensym/superfunction.hpp"

#include <bit>

namespace evensym {

int wedge_sign(uint32_t J, uint32_t K) {
	if (J & K) return 0;
	// Count the pairs (j in J, k in K) with k < j: each is one transposition
	// in the merge of the two ascending blocks.
	int inversions = 0;
	uint32_t j = J;
	while (j) {
		int bit = std::countr_zero(j);
		inversions += std::popcount(K & ((1u << bit) - 1u));
		j &= j - 1;
	}
	return (inversions & 1) ? -1 : 1;
}

int extraction_sign(uint32_t J, int j) {
	return (std::popcount(J & ((1u << j) - 1u)) & 1) ? -1 : 1;
}

Superfunction::Superfunction(RingSpec spec, int rank) : spec_(spec), rank_(rank) {
	require(rank >= 1 && rank <= 30, Errc::RankMismatch, "fiber rank out of range");
}

Superfunction Superfunction::scalar(RingSpec spec, int rank, CoeffFn c) {
	Superfunction s(spec, rank);
	s.add_term(0, c);
	return s;
}

Superfunction Superfunction::constant(RingSpec spec, int rank, const Q& c) {
	return scalar(spec, rank, CoeffFn::constant(spec, c));
}

Superfunction Superfunction::generator(RingSpec spec, int rank, int j) {
	Superfunction s(spec, rank);
	require(j >= 1 && j <= rank, Errc::IndexOutOfRange, "generator index");
	s.add_term(1u << (j - 1), CoeffFn::one(spec));
	return s;
}

Superfunction Superfunction::basis_term(RingSpec spec, int rank, uint32_t mask, CoeffFn c) {
	Superfunction s(spec, rank);
	require(mask < (1u << rank), Errc::IndexOutOfRange, "generator mask");
	s.add_term(mask, c);
	return s;
}

void Superfunction::add_term(uint32_t mask, const CoeffFn& c) {
	check_same_spec(spec_, c.spec());
	require(mask < (1u << rank_), Errc::IndexOutOfRange, "generator mask");
	if (c.is_zero()) return;
	auto [it, inserted] = terms_.emplace(mask, c);
	if (!inserted) {
		it->second = it->second + c;
		if (it->second.is_zero()) terms_.erase(it);
	}
}

CoeffFn Superfunction::coefficient(uint32_t mask) const {
	auto it = terms_.find(mask);
	return it == terms_.end() ? CoeffFn::zero(spec_) : it->second;
}

bool Superfunction::is_even() const {
	for (const auto& [m, c] : terms_)
		if (std::popcount(m) & 1) return false;
	return true;
}

bool Superfunction::is_odd() const {
	for (const auto& [m, c] : terms_)
		if (!(std::popcount(m) & 1)) return false;
	return true;
}

std::optional<int> Superfunction::parity() const {
	if (is_even()) return 0;
	if (is_odd()) return 1;
	return std::nullopt;
}

std::optional<int> Superfunction::homogeneous_degree() const {
	if (terms_.empty()) return std::nullopt;
	int d = std::popcount(terms_.begin()->first);
	for (const auto& [m, c] : terms_)
		if (std::popcount(m) != d) return std::nullopt;
	return d;
}

int Superfunction::max_degree() const {
	int d = -1;
	for (const auto& [m, c] : terms_) d = std::max(d, std::popcount(m));
	return d;
}

bool Superfunction::depends_on_time() const {
	for (const auto& [m, c] : terms_)
		if (c.depends_on_time()) return true;
	return false;
}

Superfunction Superfunction::grade(int k) const {
	Superfunction r(spec_, rank_);
	for (const auto& [m, c] : terms_)
		if (std::popcount(m) == k) r.terms_.emplace(m, c);
	return r;
}

CoeffFn Superfunction::body_coeff() const { return coefficient(0); }

Superfunction Superfunction::soul() const {
	Superfunction r = *this;
	r.terms_.erase(0);
	return r;
}

Superfunction Superfunction::operator-() const {
	Superfunction r(spec_, rank_);
	for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
	return r;
}

Superfunction& Superfunction::operator+=(const Superfunction& o) {
	check_same_shape(*this, o);
	for (const auto& [m, c] : o.terms_) add_term(m, c);
	return *this;
}

Superfunction& Superfunction::operator-=(const Superfunction& o) {
	check_same_shape(*this, o);
	for (const auto& [m, c] : o.terms_) add_term(m, -c);
	return *this;
}

Superfunction operator*(const Superfunction& a, const Superfunction& b) {
	check_same_shape(a, b);
	Superfunction r(a.spec_, a.rank_);
	for (const auto& [ma, ca] : a.terms_) {
		for (const auto& [mb, cb] : b.terms_) {
			int sign = wedge_sign(ma, mb);
			if (sign == 0) continue;
			CoeffFn c = ca * cb;
			if (sign < 0) c = -c;
			r.add_term(ma | mb, c);
		}
	}
	return r;
}

Superfunction Superfunction::operator*(const CoeffFn& c) const {
	Superfunction r(spec_, rank_);
	for (const auto& [m, v] : terms_) r.add_term(m, v * c);
	return r;
}

Superfunction Superfunction::operator*(const Q& c) const {
	Superfunction r(spec_, rank_);
	if (c == 0) return r;
	for (const auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
	return r;
}

Superfunction Superfunction::wedge_pow(unsigned k) const {
	Superfunction r = one(spec_, rank_);
	for (unsigned i = 0; i < k; ++i) r = r * (*this);
	return r;
}

Superfunction Superfunction::inverse_even() const {
	require(is_even(), Errc::OddElement, "inverse of a non-even element");
	CoeffFn b = body_coeff();
	require(b.is_unit(), Errc::NonInvertibleBody, "body is not a unit");
	CoeffFn binv = b.inverse();
	Superfunction nu = soul() * binv;  // body 1 decomposition: s = b(1 + nu)
	Superfunction acc = one(spec_, rank_);
	Superfunction power = one(spec_, rank_);
	int bound = rank_ / 2;
	for (int k = 1; k <= bound; ++k) {
		power = power * nu;
		if (power.is_zero()) break;
		acc += (k & 1) ? -power : power;
	}
	require((power * nu).is_zero(), Errc::Internal, "soul nilpotency bound violated");
	return acc * binv;
}

Superfunction Superfunction::log_even() const {
	require(is_even(), Errc::OddElement, "log of a non-even element");
	require(body_coeff().is_one(), Errc::BodyNotOne, "log requires body exactly 1");
	Superfunction nu = soul();
	Superfunction acc(spec_, rank_);
	Superfunction power = one(spec_, rank_);
	int bound = rank_ / 2;
	for (int k = 1; k <= bound; ++k) {
		power = power * nu;
		if (power.is_zero()) break;
		acc += power * Q((k & 1) ? 1 : -1, k);
	}
	return acc;
}

Superfunction Superfunction::exp_nilpotent() const {
	require(is_even(), Errc::OddElement, "exp of a non-even element");
	require(body_coeff().is_zero(), Errc::SemanticError, "exp requires zero body");
	Superfunction acc = one(spec_, rank_);
	Superfunction power = one(spec_, rank_);
	Q factorial(1);
	int bound = rank_ / 2;
	for (int k = 1; k <= bound; ++k) {
		power = power * (*this);
		if (power.is_zero()) break;
		factorial *= k;
		acc += power * (Q(1) / factorial);
	}
	return acc;
}

Superfunction Superfunction::partial_coeffs(int a) const {
	Superfunction r(spec_, rank_);
	for (const auto& [m, c] : terms_) r.add_term(m, c.partial(a));
	return r;
}

Superfunction Superfunction::partial_t() const {
	Superfunction r(spec_, rank_);
	for (const auto& [m, c] : terms_) r.add_term(m, c.partial_t());
	return r;
}

std::string Superfunction::str() const {
	if (terms_.empty()) return "0";
	// Order by fiber degree, then mask, for stable readable output.
	std::map<std::pair<int, uint32_t>, const CoeffFn*> ordered;
	for (const auto& [m, c] : terms_) ordered.emplace(std::make_pair(std::popcount(m), m), &c);
	std::string out;
	bool first = true;
	for (const auto& [key, cptr] : ordered) {
		uint32_t mask = key.second;
		std::string coeff = cptr->str();
		bool atomic = coeff.find_first_of("+-", 1) == std::string::npos;
		std::string piece;
		if (mask == 0) {
			piece = coeff;
		} else {
			std::string gens;
			for (int j = 0; j < 32; ++j) {
				if (!(mask & (1u << j))) continue;
				if (!gens.empty()) gens += "^";
				gens += "e[" + std::to_string(j + 1) + "]";
			}
			if (coeff == "1") piece = gens;
			else if (coeff == "-1") piece = "-" + gens;
			else piece = (atomic ? coeff : "(" + coeff + ")") + "*" + gens;
		}
		if (first) {
			out = piece;
			first = false;
		} else if (piece[0] == '-' && (mask != 0 || atomic)) {
			out += " - " + piece.substr(1);
		} else if (mask == 0 && !atomic) {
			out += " + (" + piece + ")";
		} else {
			out += " + " + piece;
		}
	}
	return out;
}

void check_same_shape(const Superfunction& a, const Superfunction& b) {
	check_same_spec(a.spec(), b.spec());
	require(a.rank() == b.rank(), Errc::RankMismatch, "mixed fiber ranks");
}

}  // namespace evensym
