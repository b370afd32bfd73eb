#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>

namespace ppl {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;
using i128 = __int128;

// Residues live in [0, N) with N < 2^63.
inline u64 mul_mod(u64 a, u64 b, u64 n) {
    if (n <= (u64{1} << 32)) return (a * b) % n;
    return static_cast<u64>((static_cast<u128>(a) * b) % n);
}

inline u64 add_mod(u64 a, u64 b, u64 n) {
    u64 s = a + b;
    return s >= n ? s - n : s;
}

inline u64 sub_mod(u64 a, u64 b, u64 n) { return a >= b ? a - b : a + n - b; }

inline u64 neg_mod(u64 a, u64 n) { return a == 0 ? 0 : n - a; }

inline u64 pow_mod(u64 base, u64 e, u64 n) {
    u64 r = 1 % n;
    base %= n;
    while (e) {
        if (e & 1) r = mul_mod(r, base, n);
        base = mul_mod(base, base, n);
        e >>= 1;
    }
    return r;
}

// Reduce a signed integer into [0, n).
inline u64 reduce_signed(i64 a, u64 n) {
    i128 r = static_cast<i128>(a) % static_cast<i128>(n);
    if (r < 0) r += n;
    return static_cast<u64>(r);
}

// Inverse of a modulo n via extended Euclid; throws if gcd(a, n) != 1.
inline u64 inv_mod(u64 a, u64 n) {
    i128 t = 0, new_t = 1;
    i128 r = n, new_r = a % n;
    while (new_r != 0) {
        i128 q = r / new_r;
        i128 tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (r != 1) throw std::domain_error("inv_mod: element is not invertible");
    if (t < 0) t += n;
    return static_cast<u64>(t);
}

inline bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// p-adic valuation of a nonzero integer; returns a large sentinel for 0.
inline int vp(i64 a, u64 p) {
    if (a == 0) return std::numeric_limits<int>::max() / 4;
    u64 x = a < 0 ? static_cast<u64>(-(a + 1)) + 1 : static_cast<u64>(a);
    int v = 0;
    while (x % p == 0) {
        x /= p;
        ++v;
    }
    return v;
}

// Valuation of a residue modulo p^cap (cap if the residue is 0).
inline int vp_residue(u64 a, u64 p, int cap) {
    if (a == 0) return cap;
    int v = 0;
    while (a % p == 0 && v < cap) {
        a /= p;
        ++v;
    }
    return v;
}

// v_p(j!) by Legendre's formula.
inline int vp_factorial(i64 j, u64 p) {
    int v = 0;
    for (i64 q = static_cast<i64>(p); q <= j; q *= static_cast<i64>(p)) v += static_cast<int>(j / q);
    return v;
}

// p^e, throwing when the result would not fit comfortably below 2^63.
inline u64 ipow_checked(u64 p, int e) {
    u64 r = 1;
    for (int i = 0; i < e; ++i) {
        if (r > (u64{1} << 62) / p) throw std::overflow_error("ipow_checked: p^e exceeds 2^62");
        r *= p;
    }
    return r;
}

inline i64 floor_div(i64 a, i64 b) {
    i64 q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

}  // namespace ppl
