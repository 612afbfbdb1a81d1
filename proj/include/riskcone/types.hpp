#pragma once

#include <Eigen/Dense>

#include "riskcone/rational.hpp"

namespace riskcone {

using Index = Eigen::Index;

using RVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using RMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;

/// Scales a nonzero rational vector to the unique primitive integer vector
/// with the same direction (coprime entries, same sign pattern).
/// The zero vector is returned unchanged.
RVector primitive(const RVector& x);

inline RVector primitive(const RVector& x) {
    BigInt den = 1, num = 0;
    for (Index i = 0; i < x.size(); ++i) {
        den = boost::multiprecision::lcm(den, denominator(x[i]));
        num = boost::multiprecision::gcd(num, numerator(x[i]));
    }
    if (num == 0) return x;
    Rational f(den, num);
    if (f < 0) f = -f;
    return x * f;
}

/// Lexicographic three-way compare, used to order generator lists canonically.
inline int lex_compare(const RVector& a, const RVector& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (Index i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

}  // namespace riskcone
