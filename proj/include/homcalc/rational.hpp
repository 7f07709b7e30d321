#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace homcalc {

using Integer = boost::multiprecision::cpp_int;

// Exact rational numbers, always stored in lowest terms with positive
// denominator (both guaranteed by the backend).
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(const Integer& num, const Integer& den) {
    return Rational(num) / Rational(den);
}

inline std::string to_string(const Rational& r) {
    return r.str();
}

// Crude size measure used by pivot selection: digit count of |num| + |den|.
inline std::size_t coefficient_size(const Rational& r) {
    return numerator(r).str().size() + denominator(r).str().size();
}

}  // namespace homcalc
