#include "ppl/context.hpp"

#include <sstream>
#include <stdexcept>

namespace ppl {

namespace {

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo b over F_p; b must be nonzero after trimming.
Poly poly_rem(Poly a, Poly b, u64 p) {
    trim(a);
    trim(b);
    if (b.empty()) throw std::domain_error("poly_rem: division by zero polynomial");
    u64 lead_inv = inv_mod(b.back(), p);
    while (a.size() >= b.size()) {
        u64 c = mul_mod(a.back(), lead_inv, p);
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i)
            a[shift + i] = sub_mod(a[shift + i], mul_mod(c, b[i], p), p);
        trim(a);
    }
    return a;
}

Poly poly_gcd(Poly a, Poly b, u64 p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = poly_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// Multiplication modulo (n, monic h) without a context object.
Poly mulmod_poly(const Poly& a, const Poly& b, const Poly& h, u64 n) {
    const std::size_t k = h.size() - 1;
    std::vector<u64> prod(2 * k - 1, 0);
    for (std::size_t i = 0; i < k; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < k; ++j) prod[i + j] = add_mod(prod[i + j], mul_mod(a[i], b[j], n), n);
    }
    for (std::size_t d = prod.size(); d-- > k;) {
        u64 c = prod[d];
        if (c == 0) continue;
        prod[d] = 0;
        for (std::size_t i = 0; i < k; ++i) prod[d - k + i] = sub_mod(prod[d - k + i], mul_mod(c, h[i] % n, n), n);
    }
    prod.resize(k);
    return prod;
}

Poly x_power(u64 e, const Poly& h, u64 p) {
    const std::size_t k = h.size() - 1;
    Poly base(k, 0), r(k, 0);
    r[0] = 1 % p;
    if (k == 1) {
        base[0] = sub_mod(0, h[0], p);  // x = -h_0 modulo a monic linear h
    } else {
        base[1] = 1;
    }
    while (e) {
        if (e & 1) r = mulmod_poly(r, base, h, p);
        base = mulmod_poly(base, base, h, p);
        e >>= 1;
    }
    return r;
}

Poly x_as_residue(const Poly& h, u64 p) { return x_power(1, h, p); }

}  // namespace

bool is_irreducible_mod_p(const Poly& hbar, u64 p) {
    if (hbar.size() < 2 || hbar.back() != 1) return false;
    const int k = static_cast<int>(hbar.size()) - 1;
    if (k == 1) return true;
    const Poly x = x_as_residue(hbar, p);
    u64 q = 1;
    for (int j = 1; j <= k; ++j) {
        q *= p;
        Poly xq = x_power(q, hbar, p);
        Poly diff(static_cast<std::size_t>(k), 0);
        for (int i = 0; i < k; ++i) diff[i] = sub_mod(xq[i], x[i], p);
        if (j == k) {
            trim(diff);
            return diff.empty();
        }
        Poly g = poly_gcd(hbar, diff, p);
        if (g.size() != 1) return false;
    }
    return false;
}

UnramifiedCtx::UnramifiedCtx(u64 p, int k, int A, Poly hbar)
    : p_(p), k_(k), A_(A), hbar_(std::move(hbar)) {
    if (p < 3 || !is_prime(p)) throw std::invalid_argument("UnramifiedCtx: p must be an odd prime");
    if (k < 1) throw std::invalid_argument("UnramifiedCtx: extension degree must be >= 1");
    if (A < 1) throw std::invalid_argument("UnramifiedCtx: precision must be >= 1");
    if (hbar_.size() != static_cast<std::size_t>(k) + 1 || hbar_.back() != 1)
        throw std::invalid_argument("UnramifiedCtx: hbar must be monic of degree k");
    for (u64 c : hbar_)
        if (c >= p) throw std::invalid_argument("UnramifiedCtx: hbar coefficients must lie in [0, p)");
    if (!is_irreducible_mod_p(hbar_, p)) throw std::invalid_argument("UnramifiedCtx: hbar is reducible over F_p");
    ppow_.push_back(1);
    for (int i = 0; i < A; ++i) ppow_.push_back(ipow_checked(p, i + 1));
    q_ = ipow_checked(p, k);
}

std::string UnramifiedCtx::hbar_string() const {
    std::ostringstream os;
    bool first = true;
    for (int d = k_; d >= 0; --d) {
        u64 c = hbar_[static_cast<std::size_t>(d)];
        if (c == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (d == 0 || c != 1) os << c;
        if (d >= 1) os << "x";
        if (d >= 2) os << "^" << d;
    }
    return os.str();
}

Poly UnramifiedCtx::add(const Poly& a, const Poly& b, u64 n) const {
    Poly r(static_cast<std::size_t>(k_));
    for (int i = 0; i < k_; ++i) r[i] = add_mod(a[i], b[i], n);
    return r;
}

Poly UnramifiedCtx::sub(const Poly& a, const Poly& b, u64 n) const {
    Poly r(static_cast<std::size_t>(k_));
    for (int i = 0; i < k_; ++i) r[i] = sub_mod(a[i], b[i], n);
    return r;
}

Poly UnramifiedCtx::mul(const Poly& a, const Poly& b, u64 n) const {
    if (k_ == 1) return Poly{mul_mod(a[0], b[0], n)};
    return mulmod_poly(a, b, hbar_, n);
}

Poly UnramifiedCtx::scale(const Poly& a, u64 c, u64 n) const {
    Poly r(static_cast<std::size_t>(k_));
    c %= n;
    for (int i = 0; i < k_; ++i) r[i] = mul_mod(a[i], c, n);
    return r;
}

Poly UnramifiedCtx::pow(const Poly& a, u64 e, u64 n) const {
    Poly r = one();
    r[0] %= n;
    Poly base = a;
    while (e) {
        if (e & 1) r = mul(r, base, n);
        e >>= 1;
        if (e) base = mul(base, base, n);
    }
    return r;
}

Poly UnramifiedCtx::one() const {
    Poly r(static_cast<std::size_t>(k_), 0);
    r[0] = 1;
    return r;
}

Poly UnramifiedCtx::inverse(const Poly& a, int r) const {
    const u64 n = pow_p(r);
    Poly abar(a);
    for (auto& c : abar) c %= p_;
    // a^{q-2} is the inverse in F_{p^k}; Newton x <- x(2 - a x) doubles the
    // number of correct p-adic digits each step.
    Poly x = pow(abar, q_ - 2, p_);
    {
        Poly check = mul(abar, x, p_);
        if (check != one()) throw std::domain_error("UnramifiedCtx::inverse: element is not a unit mod p");
    }
    Poly am(a);
    for (auto& c : am) c %= n;
    for (int digits = 1; digits < r; digits *= 2) {
        Poly ax = mul(am, x, n);
        Poly two_minus = sub(Poly(static_cast<std::size_t>(k_), 0), ax, n);
        two_minus[0] = add_mod(two_minus[0], 2 % n, n);
        x = mul(x, two_minus, n);
    }
    return x;
}

CtxPtr make_ctx(u64 p, int k, int A) {
    if (p < 3 || !is_prime(p)) throw std::invalid_argument("make_ctx: p must be an odd prime");
    if (k < 1) throw std::invalid_argument("make_ctx: extension degree must be >= 1");
    if (A < 1) throw std::invalid_argument("make_ctx: precision must be >= 1");
    const u64 count = ipow_checked(p, k);
    for (u64 idx = 0; idx < count; ++idx) {
        Poly h(static_cast<std::size_t>(k) + 1, 0);
        // c_0 is the most significant digit of the enumeration order.
        u64 t = idx;
        for (int i = k - 1; i >= 0; --i) {
            h[static_cast<std::size_t>(i)] = t % p;
            t /= p;
        }
        h[static_cast<std::size_t>(k)] = 1;
        if (is_irreducible_mod_p(h, p)) return std::make_shared<const UnramifiedCtx>(p, k, A, std::move(h));
    }
    throw std::logic_error("make_ctx: no irreducible polynomial found");
}

}  // namespace ppl
