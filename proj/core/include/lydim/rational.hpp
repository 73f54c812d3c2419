#ifndef LYDIM_RATIONAL_HPP
#define LYDIM_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <string_view>

namespace lydim {

/// All sharp geometry (interval endpoints, slopes, weights) is computed in
/// arbitrary-precision rationals so that disjointness, nesting and the
/// cylinder-weight identities hold exactly, not up to rounding.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Parses "3", "-2/7", "0.45", "20/9". Decimal strings convert exactly
/// (0.45 -> 9/20). Throws UsageError on anything else.
Rational parse_rational(std::string_view text);

/// "p/q" for non-integers, plain integer text otherwise.
std::string to_string(const Rational& x);

double to_double(const Rational& x);

/// floor(x) as a big integer (works for negative x).
BigInt rational_floor(const Rational& x);

}  // namespace lydim

#endif  // LYDIM_RATIONAL_HPP
