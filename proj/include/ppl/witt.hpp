#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "ppl/context.hpp"
#include "ppl/fpk.hpp"
#include "ppl/padic.hpp"
#include "ppl/rational.hpp"

namespace ppl {

// A computation could not certify the digits it was asked for.
class PrecisionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Element p^s * y of W(F_{p^k})[1/p] known modulo p^{s+r}, where y is a unit
// of (Z/p^r)[x]/(h) and 1 <= r <= A. Two further states exist: the exact
// zero, and an approximate zero O(p^N) that is only known to vanish to
// absolute precision N. Equality is always "equal to certified precision".
class WittApprox {
public:
    static constexpr int kInfinite = std::numeric_limits<int>::max() / 4;

    WittApprox() = default;

    static WittApprox zero(CtxPtr ctx);
    static WittApprox approx_zero(CtxPtr ctx, int abs_precision);
    static WittApprox one(CtxPtr ctx);
    static WittApprox from_int(CtxPtr ctx, i64 a);
    // p^scale * (sum c_i x^i) with c_i read modulo p^rel (rel defaults to A).
    static WittApprox from_coeffs(CtxPtr ctx, const Poly& coeffs, int scale = 0, int rel = -1);
    static WittApprox from_signed_coeffs(CtxPtr ctx, const std::vector<i64>& coeffs, int scale = 0);
    static WittApprox from_padic(CtxPtr ctx, const PadicApprox& a);
    // Rationals are embedded at full capped precision; any valuation is allowed.
    static WittApprox from_rational(CtxPtr ctx, const Rational& q);
    // Canonical lift of a residue class (coefficients in [0, p)).
    static WittApprox lift(CtxPtr ctx, const FpkElement& a);

    const CtxPtr& ctx() const noexcept { return ctx_; }
    bool is_exact_zero() const noexcept { return kind_ == Kind::exact_zero; }
    // Exact zero or indistinguishable from zero at its certified precision.
    bool is_zero() const noexcept { return kind_ != Kind::value; }

    // For a nonzero value this is the exact valuation s; for zeros it is the
    // certified lower bound (absolute precision, or kInfinite).
    int valuation() const noexcept;
    int abs_precision() const noexcept;
    int rel_precision() const noexcept { return kind_ == Kind::value ? rel_ : 0; }
    int scale() const noexcept { return kind_ == Kind::value ? scale_ : 0; }
    // Unit part y, coefficients reduced modulo p^rel.
    const Poly& unit_coeffs() const noexcept { return coeffs_; }

    // Certified: the true value has valuation >= v.
    bool valuation_at_least(int v) const noexcept { return valuation() >= v; }

    WittApprox operator+(const WittApprox& o) const;
    WittApprox operator-(const WittApprox& o) const;
    WittApprox operator-() const;
    WittApprox operator*(const WittApprox& o) const;
    WittApprox operator/(const WittApprox& o) const;
    WittApprox& operator+=(const WittApprox& o) { return *this = *this + o; }
    WittApprox& operator-=(const WittApprox& o) { return *this = *this - o; }
    WittApprox& operator*=(const WittApprox& o) { return *this = *this * o; }
    WittApprox inv() const;
    WittApprox pow(u64 e) const;
    WittApprox mul_int(i64 c) const;
    // Multiply by p^j (j may be negative).
    WittApprox shift(int j) const;
    // Drop digits beyond absolute precision n.
    WittApprox truncate_precision(int n) const;

    // Coefficientwise reduction mod p; requires the value to be integral and
    // certified to at least one digit.
    FpkElement residue() const;
    // Residue of p^{-v} * this mod p, given valuation >= v.
    FpkElement residue_at(int v) const;

    // Representative p^s * y with coefficients in [0, p^{abs}) when s >= 0.
    Poly integral_coeffs(int n) const;

    // Certified equality: the difference vanishes to its certified precision.
    bool agrees_with(const WittApprox& o) const { return (*this - o).is_zero(); }

    std::string to_string() const;
    // {p, k, A, scale, coeffs, absPrecision} record for reports.
    nlohmann::ordered_json to_json() const;

private:
    enum class Kind { exact_zero, approx_zero, value };
    static WittApprox normalized(CtxPtr ctx, int scale, int rel, Poly y);
    void require_same_ctx(const WittApprox& o) const;

    CtxPtr ctx_;
    Kind kind_ = Kind::exact_zero;
    int scale_ = 0;  // valuation, or absolute precision of an approximate zero
    int rel_ = 0;
    Poly coeffs_;
};

// Teichmüller lift of a nonzero residue: the root of unity congruent to a,
// obtained by iterating x -> x^{p^k} A times from the canonical lift.
WittApprox teichmuller(const CtxPtr& ctx, const FpkElement& a);

// p-adic logarithm on 1 + pW, summed through the smallest order M beyond
// which every term vanishes at the working precision.
WittApprox padic_log(const WittApprox& u);

// Series truncation order M = A + floor(log_p A) + 1.
int log_truncation_order(u64 p, int A);

// Residue map W -> F_{p^k}.
inline FpkElement residue(const WittApprox& z) { return z.residue(); }

}  // namespace ppl
