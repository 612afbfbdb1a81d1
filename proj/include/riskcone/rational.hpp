#pragma once

#include <string>
#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

#include "riskcone/errors.hpp"

namespace riskcone {

/// Exact rational scalar used everywhere a verdict depends on the value.
using Rational = boost::multiprecision::mpq_rational;

using BigInt = boost::multiprecision::mpz_int;

inline BigInt numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

/// Canonical "p/q" text (lowest terms; integers print without the "/1").
inline std::string to_string(const Rational& q) { return q.str(); }

/// Parses "p", "p/q" or "-p/q". Whitespace is not accepted.
inline Rational parse_rational(const std::string& s) {
    if (s.empty()) throw SchemaError("empty rational literal");
    for (char c : s) {
        if (c != '-' && c != '/' && !(c >= '0' && c <= '9'))
            throw SchemaError("bad rational literal: " + s);
    }
    try {
        Rational r(s);
        return r;
    } catch (const std::exception&) {
        throw SchemaError("bad rational literal: " + s);
    }
}

}  // namespace riskcone
