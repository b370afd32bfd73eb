#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "ppl/arith.hpp"

namespace ppl {

using BigInt = boost::multiprecision::cpp_int;
// Canonical (gcd 1, positive denominator) arbitrary-precision rational.
using Rational = boost::multiprecision::cpp_rational;

inline BigInt numer(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt denom(const Rational& q) { return boost::multiprecision::denominator(q); }

inline std::string to_string(const Rational& q) {
    if (denom(q) == 1) return numer(q).str();
    return numer(q).str() + "/" + denom(q).str();
}

inline Rational factorial(int n) {
    BigInt r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return Rational(r);
}

inline Rational binomial(int n, int k) {
    if (k < 0 || k > n) return Rational(0);
    return factorial(n) / (factorial(k) * factorial(n - k));
}

inline int vp(const BigInt& a, u64 p) {
    if (a == 0) return std::numeric_limits<int>::max() / 4;
    BigInt x = a < 0 ? BigInt(-a) : a;
    int v = 0;
    while (x % p == 0) {
        x /= p;
        ++v;
    }
    return v;
}

// Residue of a p-integral big integer modulo n.
inline u64 mod_u64(const BigInt& a, u64 n) {
    BigInt r = a % n;
    if (r < 0) r += n;
    return static_cast<u64>(r);
}

}  // namespace ppl
