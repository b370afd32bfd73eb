#pragma once

#include <string>

#include "ppl/arith.hpp"
#include "ppl/rational.hpp"

namespace ppl {

// Element of Q_p with capped relative precision: p^v * unit + O(p^{v+r}).
// An approximate zero O(p^v) carries only its absolute precision v.
class PadicApprox {
public:
    static constexpr int kInfinite = std::numeric_limits<int>::max() / 4;

    PadicApprox() = default;

    static PadicApprox exact_zero(u64 p, int r);
    static PadicApprox approx_zero(u64 p, int r, int abs_precision);
    static PadicApprox from_int(u64 p, int r, i64 a);
    // Powers of p in the denominator give a negative valuation.
    static PadicApprox from_rational(u64 p, int r, const Rational& q);
    // p^v * unit with `rel` digits of relative precision (rel <= r).
    static PadicApprox from_parts(u64 p, int r, int v, u64 unit, int rel);

    u64 p() const noexcept { return p_; }
    int cap() const noexcept { return cap_; }
    bool is_exact_zero() const noexcept { return kind_ == Kind::exact_zero; }
    bool is_zero() const noexcept { return kind_ != Kind::value; }
    int valuation() const noexcept;  // certified lower bound for zeros
    int abs_precision() const noexcept;
    int rel_precision() const noexcept { return kind_ == Kind::value ? rel_ : 0; }
    u64 unit() const noexcept { return unit_; }

    PadicApprox operator+(const PadicApprox& o) const;
    PadicApprox operator-(const PadicApprox& o) const;
    PadicApprox operator-() const;
    PadicApprox operator*(const PadicApprox& o) const;
    PadicApprox operator/(const PadicApprox& o) const;
    PadicApprox inv() const;

    // Residue of the value modulo p^{n} (requires valuation >= 0 and enough precision).
    u64 residue_mod(int n) const;

    std::string to_string() const;

private:
    enum class Kind { exact_zero, approx_zero, value };
    static PadicApprox normalized(u64 p, int cap, int v, u64 y, int rel);

    Kind kind_ = Kind::exact_zero;
    u64 p_ = 0;
    int cap_ = 0;
    int v_ = 0;
    u64 unit_ = 0;
    int rel_ = 0;
};

}  // namespace ppl
