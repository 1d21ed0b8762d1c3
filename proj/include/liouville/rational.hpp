#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace liouville {

/// Exact rational scalar used throughout the symbolic layers.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

inline bool is_zero(const Rational& r) { return r.is_zero(); }
inline int sign(const Rational& r) { return r.sign(); }
inline double to_double(const Rational& r) { return r.convert_to<double>(); }

/// "p/q", or "p" when the denominator is one. Never uses a decimal point.
std::string to_fraction_string(const Rational& r);

/// Accepts "p", "p/q", "-p/q" and finite decimals such as "0.25" or "-1.5".
/// Throws Error(InvalidArgument) on anything else.
Rational parse_rational(std::string_view text);

/// Exact real n-th root of r when it is rational. For even n only r >= 0
/// has one, and the non-negative root is returned.
std::optional<Rational> exact_root(const Rational& r, unsigned n);

}  // namespace liouville
