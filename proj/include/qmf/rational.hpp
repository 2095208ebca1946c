#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace qmf {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// num/den in any form; the result is reduced with a positive denominator.
inline Rational make_rational(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
    return Rational(num) / Rational(den);
}

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

// "p" or "p/q".
std::string to_string(const Rational& r);

// Accepts "p" or "p/q" with optional sign; rejects anything else.
Rational rational_from_string(std::string_view s);

}  // namespace qmf
