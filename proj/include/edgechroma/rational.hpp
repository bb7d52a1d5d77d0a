#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "edgechroma/graph.hpp"

namespace ec {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational, always in lowest terms with positive denominator.
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(long p, long q) {
    if (q <= 0) throw InputError("rational with nonpositive denominator");
    return Rational(p, q);
}

/// Formats as "p/q" in lowest terms (integers print as "p/1").
inline std::string to_fraction_string(const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

Rational parse_rational(const std::string& s);

}  // namespace ec
