#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace ndisc {

/// Exact rational used for duty cycles and relative errors.
using Rational = boost::multiprecision::cpp_rational;

using u128 = unsigned __int128;
using i128 = __int128;

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
    return Rational(num, den);
}

inline Rational abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

double to_double(const Rational& r);

/// "p/q" in lowest terms, or "p" when q = 1.
std::string to_fraction_string(const Rational& r);

/// Decimal rendering with 12 significant digits (CSV contract).
std::string to_decimal_string(const Rational& r);

/// Parses "0.05", "5%", "1/20" or "1" exactly. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

std::string to_string(u128 value);

}  // namespace ndisc
