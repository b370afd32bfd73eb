#include "ppl/padic.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ppl {

PadicApprox PadicApprox::exact_zero(u64 p, int r) {
    PadicApprox x;
    x.p_ = p;
    x.cap_ = r;
    return x;
}

PadicApprox PadicApprox::approx_zero(u64 p, int r, int abs_precision) {
    PadicApprox x = exact_zero(p, r);
    x.kind_ = Kind::approx_zero;
    x.v_ = abs_precision;
    return x;
}

PadicApprox PadicApprox::normalized(u64 p, int cap, int v, u64 y, int rel) {
    y %= ipow_checked(p, rel);
    int shift = vp_residue(y, p, rel);
    if (shift >= rel) return approx_zero(p, cap, v + rel);
    PadicApprox x = exact_zero(p, cap);
    x.kind_ = Kind::value;
    x.v_ = v + shift;
    x.rel_ = rel - shift;
    x.unit_ = (y / ipow_checked(p, shift)) % ipow_checked(p, x.rel_);
    return x;
}

PadicApprox PadicApprox::from_parts(u64 p, int r, int v, u64 unit, int rel) {
    if (rel < 1 || rel > r) throw std::invalid_argument("PadicApprox::from_parts: relative precision out of range");
    return normalized(p, r, v, unit, rel);
}

PadicApprox PadicApprox::from_int(u64 p, int r, i64 a) {
    if (a == 0) return exact_zero(p, r);
    int v = vp(a, p);
    i64 u = a;
    for (int i = 0; i < v; ++i) u /= static_cast<i64>(p);
    return normalized(p, r, v, reduce_signed(u, ipow_checked(p, r)), r);
}

PadicApprox PadicApprox::from_rational(u64 p, int r, const Rational& q) {
    if (q == 0) return exact_zero(p, r);
    BigInt num = numer(q), den = denom(q);
    int a = vp(num, p), b = vp(den, p);
    BigInt pa = 1, pb = 1;
    for (int i = 0; i < a; ++i) pa *= p;
    for (int i = 0; i < b; ++i) pb *= p;
    const u64 n = ipow_checked(p, r);
    u64 un = mod_u64(num / pa, n);
    u64 ud = mod_u64(den / pb, n);
    return normalized(p, r, a - b, mul_mod(un, inv_mod(ud, n), n), r);
}

int PadicApprox::valuation() const noexcept {
    switch (kind_) {
        case Kind::exact_zero: return kInfinite;
        default: return v_;
    }
}

int PadicApprox::abs_precision() const noexcept {
    switch (kind_) {
        case Kind::exact_zero: return kInfinite;
        case Kind::approx_zero: return v_;
        default: return v_ + rel_;
    }
}

PadicApprox PadicApprox::operator+(const PadicApprox& o) const {
    if (is_exact_zero()) return o;
    if (o.is_exact_zero()) return *this;
    const int n = std::min(abs_precision(), o.abs_precision());
    if (kind_ == Kind::approx_zero && o.kind_ == Kind::approx_zero) return approx_zero(p_, cap_, n);
    if (kind_ == Kind::approx_zero || o.kind_ == Kind::approx_zero) {
        const PadicApprox& val = kind_ == Kind::value ? *this : o;
        if (n <= val.v_) return approx_zero(p_, cap_, n);
        return normalized(p_, cap_, val.v_, val.unit_, n - val.v_);
    }
    const int s0 = std::min(v_, o.v_);
    const int rel = n - s0;
    const u64 mod = ipow_checked(p_, rel);
    auto lift = [&](const PadicApprox& x) -> u64 {
        int d = x.v_ - s0;
        if (d >= rel) return 0;
        return mul_mod(x.unit_ % mod, ipow_checked(p_, d), mod);
    };
    return normalized(p_, cap_, s0, add_mod(lift(*this), lift(o), mod), rel);
}

PadicApprox PadicApprox::operator-() const {
    if (kind_ != Kind::value) return *this;
    PadicApprox x = *this;
    x.unit_ = neg_mod(unit_, ipow_checked(p_, rel_));
    return x;
}

PadicApprox PadicApprox::operator-(const PadicApprox& o) const { return *this + (-o); }

PadicApprox PadicApprox::operator*(const PadicApprox& o) const {
    if (is_exact_zero() || o.is_exact_zero()) return exact_zero(p_, cap_);
    if (kind_ == Kind::approx_zero && o.kind_ == Kind::approx_zero) return approx_zero(p_, cap_, v_ + o.v_);
    if (kind_ == Kind::approx_zero) return approx_zero(p_, cap_, v_ + o.v_);
    if (o.kind_ == Kind::approx_zero) return approx_zero(p_, cap_, v_ + o.v_);
    const int rel = std::min(rel_, o.rel_);
    const u64 mod = ipow_checked(p_, rel);
    return normalized(p_, cap_, v_ + o.v_, mul_mod(unit_ % mod, o.unit_ % mod, mod), rel);
}

PadicApprox PadicApprox::inv() const {
    if (kind_ != Kind::value) throw std::domain_error("PadicApprox::inv: operand is indistinguishable from zero");
    const u64 mod = ipow_checked(p_, rel_);
    return normalized(p_, cap_, -v_, inv_mod(unit_, mod), rel_);
}

PadicApprox PadicApprox::operator/(const PadicApprox& o) const { return *this * o.inv(); }

u64 PadicApprox::residue_mod(int n) const {
    if (n <= 0) return 0;
    if (abs_precision() < n) throw std::domain_error("PadicApprox::residue_mod: insufficient precision");
    if (kind_ != Kind::value) return 0;
    if (v_ < 0) throw std::domain_error("PadicApprox::residue_mod: value is not integral");
    if (v_ >= n) return 0;
    const u64 mod = ipow_checked(p_, n);
    return mul_mod(unit_, ipow_checked(p_, v_), mod);
}

std::string PadicApprox::to_string() const {
    std::ostringstream os;
    switch (kind_) {
        case Kind::exact_zero: os << "0"; break;
        case Kind::approx_zero: os << "O(" << p_ << "^" << v_ << ")"; break;
        default: os << p_ << "^" << v_ << "*" << unit_ << " + O(" << p_ << "^" << (v_ + rel_) << ")";
    }
    return os.str();
}

}  // namespace ppl
