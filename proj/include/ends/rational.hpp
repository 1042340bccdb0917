#ifndef ENDS_RATIONAL_HPP
#define ENDS_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace ends {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

/// Accepts "p", "-p", "p/q" and finite decimals such as "2.5".
Rational parse_rational(std::string_view text);

BigInt ceil(const Rational& q);
BigInt floor(const Rational& q);

}  // namespace ends

#endif  // ENDS_RATIONAL_HPP
