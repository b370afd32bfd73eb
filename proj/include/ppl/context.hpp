#pragma once

#include <memory>
#include <string>
#include <vector>

#include "ppl/arith.hpp"

namespace ppl {

// Coefficient vector in ascending degree order.
using Poly = std::vector<u64>;

// Finite-level model of the unramified extension W(F_{p^k}) modulo p^A:
// the ring (Z/p^A)[x]/(h) with h a monic lift of an irreducible hbar over F_p.
class UnramifiedCtx {
public:
    UnramifiedCtx(u64 p, int k, int A, Poly hbar);

    u64 p() const noexcept { return p_; }
    int k() const noexcept { return k_; }
    int A() const noexcept { return A_; }

    // Monic modulus, k+1 coefficients with entries in [0, p). The integer
    // lift h uses the same coefficients, so h mod p = hbar.
    const Poly& hbar() const noexcept { return hbar_; }

    // p^e for 0 <= e <= A.
    u64 pow_p(int e) const { return ppow_.at(static_cast<std::size_t>(e)); }
    u64 modulus() const noexcept { return ppow_.back(); }

    // Number of elements of F_{p^k}.
    u64 field_size() const noexcept { return q_; }

    std::string hbar_string() const;

    // Ring kernels on length-k coefficient vectors modulo (n, h), where n is
    // a power of p not exceeding p^A.
    Poly add(const Poly& a, const Poly& b, u64 n) const;
    Poly sub(const Poly& a, const Poly& b, u64 n) const;
    Poly mul(const Poly& a, const Poly& b, u64 n) const;
    Poly scale(const Poly& a, u64 c, u64 n) const;
    Poly pow(const Poly& a, u64 e, u64 n) const;
    Poly one() const;
    // Inverse modulo (p^r, h) of an element that is a unit mod p.
    Poly inverse(const Poly& a, int r) const;

private:
    u64 p_;
    int k_;
    int A_;
    Poly hbar_;
    std::vector<u64> ppow_;
    u64 q_;
};

using CtxPtr = std::shared_ptr<const UnramifiedCtx>;

// Picks the lowest monic irreducible polynomial of degree k over F_p, where
// candidates are ordered lexicographically on (c_0, c_1, ..., c_{k-1}).
// For k = 1 this is the modulus x itself.
CtxPtr make_ctx(u64 p, int k, int A);

// Irreducibility test: x^{p^k} = x mod hbar and gcd(x^{p^j} - x, hbar) = 1
// for 1 <= j < k.
bool is_irreducible_mod_p(const Poly& hbar, u64 p);

}  // namespace ppl
