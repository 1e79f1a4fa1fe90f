#include "evensym/derivation.hpp"

#include <bit>

namespace evensym {

ConnectionData ConnectionData::flat(RingSpec spec, int rank) {
	ConnectionData c{spec, rank, {}};
	c.gamma.assign(spec.dim, cmat_zero(spec, rank, rank));
	return c;
}

Superfunction nabla_apply(const ConnectionData& conn, int a, const Superfunction& s) {
	Superfunction r = s.partial_coeffs(a);
	const CMatrix& g = conn.gamma[a];
	for (const auto& [mask, c] : s.terms()) {
		uint32_t m = mask;
		while (m) {
			int j = std::countr_zero(m);
			m &= m - 1;
			int esign = extraction_sign(mask, j);
			uint32_t rest = mask & ~(1u << j);
			for (int k = 0; k < conn.rank; ++k) {
				const CoeffFn& gkj = g[k][j];
				if (gkj.is_zero()) continue;
				int wsign = wedge_sign(1u << k, rest);
				if (wsign == 0) continue;
				CoeffFn v = c * gkj;
				if (esign * wsign < 0) v = -v;
				r.add_term((1u << k) | rest, v);
			}
		}
	}
	return r;
}

Superfunction contract_apply(int j, const Superfunction& s) {
	Superfunction r(s.spec(), s.rank());
	for (const auto& [mask, c] : s.terms()) {
		if (!(mask & (1u << j))) continue;
		int sign = extraction_sign(mask, j);
		r.add_term(mask & ~(1u << j), sign < 0 ? -c : c);
	}
	return r;
}

GradedDerivation::GradedDerivation(ConnectionPtr conn) : conn_(std::move(conn)) {
	Superfunction zero(conn_->spec, conn_->rank);
	nabla_.assign(conn_->spec.dim, zero);
	contra_.assign(conn_->rank, zero);
}

GradedDerivation GradedDerivation::coordinate(ConnectionPtr conn, int a) {
	GradedDerivation d(std::move(conn));
	d.nabla_[a] = Superfunction::one(d.spec(), d.rank());
	return d;
}

GradedDerivation GradedDerivation::contraction(ConnectionPtr conn, int j) {
	GradedDerivation d(std::move(conn));
	d.contra_[j] = Superfunction::one(d.spec(), d.rank());
	return d;
}

void GradedDerivation::set_nabla_part(int a, Superfunction s) {
	check_same_spec(spec(), s.spec());
	require(s.rank() == rank(), Errc::RankMismatch, "component rank");
	nabla_[a] = std::move(s);
}

void GradedDerivation::set_contra_part(int j, Superfunction s) {
	check_same_spec(spec(), s.spec());
	require(s.rank() == rank(), Errc::RankMismatch, "component rank");
	contra_[j] = std::move(s);
}

Superfunction GradedDerivation::apply(const Superfunction& s) const {
	Superfunction r(spec(), rank());
	for (int a = 0; a < dim(); ++a)
		if (!nabla_[a].is_zero()) r += nabla_[a] * nabla_apply(*conn_, a, s);
	for (int j = 0; j < rank(); ++j)
		if (!contra_[j].is_zero()) r += contra_[j] * contract_apply(j, s);
	return r;
}

bool GradedDerivation::is_zero() const {
	for (const auto& s : nabla_)
		if (!s.is_zero()) return false;
	for (const auto& s : contra_)
		if (!s.is_zero()) return false;
	return true;
}

std::optional<int> GradedDerivation::parity() const {
	std::optional<int> p;
	auto merge = [&p](std::optional<int> q) {
		if (!q.has_value()) return false;
		if (p.has_value() && *p != *q) return false;
		p = q;
		return true;
	};
	for (const auto& s : nabla_) {
		if (s.is_zero()) continue;
		if (!merge(s.parity())) return std::nullopt;
	}
	for (const auto& s : contra_) {
		if (s.is_zero()) continue;
		auto q = s.parity();
		if (!q.has_value() || !merge((*q + 1) % 2)) return std::nullopt;
	}
	if (!p.has_value()) return 0;  // the zero derivation counts even
	return p;
}

int GradedDerivation::parity_required() const {
	auto p = parity();
	require(p.has_value(), Errc::InhomogeneousInput, "derivation has mixed parity");
	return *p;
}

std::optional<int> GradedDerivation::degree() const {
	std::optional<int> deg;
	auto merge = [&deg](std::optional<int> q) {
		if (!q.has_value()) return false;
		if (deg.has_value() && *deg != *q) return false;
		deg = q;
		return true;
	};
	for (const auto& s : nabla_) {
		if (s.is_zero()) continue;
		if (!merge(s.homogeneous_degree())) return std::nullopt;
	}
	for (const auto& s : contra_) {
		if (s.is_zero()) continue;
		auto q = s.homogeneous_degree();
		if (!q.has_value() || !merge(*q - 1)) return std::nullopt;
	}
	return deg;  // nullopt for the zero derivation: every degree fits
}

GradedDerivation GradedDerivation::operator-() const {
	GradedDerivation r(conn_);
	for (int a = 0; a < dim(); ++a) r.nabla_[a] = -nabla_[a];
	for (int j = 0; j < rank(); ++j) r.contra_[j] = -contra_[j];
	return r;
}

static void check_same_frame(const GradedDerivation& a, const GradedDerivation& b) {
	check_same_spec(a.spec(), b.spec());
	require(a.rank() == b.rank(), Errc::RankMismatch, "mixed fiber ranks");
	require(a.connection() == b.connection() || a.connection()->gamma == b.connection()->gamma,
	        Errc::SemanticError, "derivations use different connections");
}

GradedDerivation& GradedDerivation::operator+=(const GradedDerivation& o) {
	check_same_frame(*this, o);
	for (int a = 0; a < dim(); ++a) nabla_[a] += o.nabla_[a];
	for (int j = 0; j < rank(); ++j) contra_[j] += o.contra_[j];
	return *this;
}

GradedDerivation& GradedDerivation::operator-=(const GradedDerivation& o) {
	check_same_frame(*this, o);
	for (int a = 0; a < dim(); ++a) nabla_[a] -= o.nabla_[a];
	for (int j = 0; j < rank(); ++j) contra_[j] -= o.contra_[j];
	return *this;
}

GradedDerivation GradedDerivation::left_mul(const Superfunction& s) const {
	GradedDerivation r(conn_);
	for (int a = 0; a < dim(); ++a) r.nabla_[a] = s * nabla_[a];
	for (int j = 0; j < rank(); ++j) r.contra_[j] = s * contra_[j];
	return r;
}

GradedDerivation GradedDerivation::operator*(const Q& c) const {
	GradedDerivation r(conn_);
	for (int a = 0; a < dim(); ++a) r.nabla_[a] = nabla_[a] * c;
	for (int j = 0; j < rank(); ++j) r.contra_[j] = contra_[j] * c;
	return r;
}

bool GradedDerivation::operator==(const GradedDerivation& o) const {
	check_same_frame(*this, o);
	return nabla_ == o.nabla_ && contra_ == o.contra_;
}

std::string GradedDerivation::str() const {
	std::string out;
	auto append = [&out](const Superfunction& c, const std::string& op) {
		if (c.is_zero()) return;
		std::string cs = c.str();
		if (!out.empty()) out += " + ";
		if (cs == "1") {
			out += op;
		} else {
			bool atomic = cs.find_first_of("+-", 1) == std::string::npos && cs[0] != '-';
			out += (atomic ? cs : "(" + cs + ")") + "*" + op;
		}
	};
	for (int a = 0; a < dim(); ++a) append(nabla_[a], "nabla_" + std::to_string(a + 1));
	for (int j = 0; j < rank(); ++j) append(contra_[j], "i_" + std::to_string(j + 1));
	return out.empty() ? "0" : out;
}

GradedDerivation derivation_from_action(
		ConnectionPtr conn, const std::function<Superfunction(const Superfunction&)>& act) {
	const RingSpec& spec = conn->spec;
	int rank = conn->rank;
	GradedDerivation d(conn);
	if (spec.mode == Mode::Chart) {
		for (int a = 0; a < spec.dim; ++a)
			d.set_nabla_part(a, act(Superfunction::scalar(spec, rank, CoeffFn::coordinate(spec, a))));
	} else {
		for (int a = 0; a < spec.dim; ++a) {
			std::vector<int32_t> freq(spec.dim, 0);
			freq[a] = 1;
			Superfunction sa = Superfunction::scalar(spec, rank, CoeffFn::trig_mode(spec, freq, true));
			Superfunction ca = Superfunction::scalar(spec, rank, CoeffFn::trig_mode(spec, freq, false));
			d.set_nabla_part(a, act(sa) * ca - act(ca) * sa);
		}
	}
	for (int j = 0; j < rank; ++j) {
		Superfunction ej = Superfunction::generator(spec, rank, j + 1);
		Superfunction rest = act(ej);
		for (int a = 0; a < spec.dim; ++a)
			rest -= d.nabla_part(a) * nabla_apply(*conn, a, ej);
		d.set_contra_part(j, rest);
	}
	return d;
}

GradedDerivation commutator(const GradedDerivation& D, const GradedDerivation& E) {
	check_same_frame(D, E);
	int sign = (D.parity_required() * E.parity_required()) % 2 ? -1 : 1;
	auto act = [&](const Superfunction& s) {
		Superfunction r = D.apply(E.apply(s));
		Superfunction l = E.apply(D.apply(s));
		return sign < 0 ? r + l : r - l;
	};
	return derivation_from_action(D.connection(), act);
}

GradedOneForm d_graded(const ConnectionData& conn, const Superfunction& s) {
	GradedOneForm lam;
	lam.nabla_cov.reserve(conn.spec.dim);
	lam.contra_cov.reserve(conn.rank);
	for (int a = 0; a < conn.spec.dim; ++a) lam.nabla_cov.push_back(nabla_apply(conn, a, s));
	for (int j = 0; j < conn.rank; ++j) lam.contra_cov.push_back(contract_apply(j, s));
	return lam;
}

Superfunction pair(const GradedDerivation& D, const GradedOneForm& lambda) {
	Superfunction r(D.spec(), D.rank());
	for (int a = 0; a < D.dim(); ++a) r += D.nabla_part(a) * lambda.nabla_cov[a];
	for (int j = 0; j < D.rank(); ++j) r += D.contra_part(j) * lambda.contra_cov[j];
	return r;
}

}  // namespace evensym
