#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

namespace evensym {

using Int = boost::multiprecision::cpp_int;
using Q = boost::multiprecision::cpp_rational;

inline Int numerator(const Q& q) { return boost::multiprecision::numerator(q); }
inline Int denominator(const Q& q) { return boost::multiprecision::denominator(q); }

// Exact square root of a nonnegative rational, if it is a perfect square.
inline std::optional<Q> rational_sqrt(const Q& q) {
	if (q < 0) return std::nullopt;
	if (q == 0) return Q(0);
	Int n = numerator(q), d = denominator(q);
	Int sn = boost::multiprecision::sqrt(n), sd = boost::multiprecision::sqrt(d);
	if (sn * sn != n || sd * sd != d) return std::nullopt;
	return Q(sn, sd);
}

inline std::string q_str(const Q& q) { return q.str(); }

}  // namespace evensym
