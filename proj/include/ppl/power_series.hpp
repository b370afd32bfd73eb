#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "ppl/witt.hpp"

namespace ppl {

// The tail of a truncated series cannot be bounded well enough to reach the
// requested precision; rebuild with a larger truncation order.
class CertificationError : public PrecisionError {
public:
    using PrecisionError::PrecisionError;
};

// Lower bound j -> floor(num*j/den) + offset on the valuation of the true
// coefficient of degree j, valid for every j beyond the truncation order.
// A vanishing tail means those coefficients are exactly zero.
struct TailBound {
    i64 num = 0;
    i64 den = 1;
    i64 offset = 0;
    bool vanishing = false;

    static TailBound zero_tail() { return TailBound{0, 1, 0, true}; }
    static TailBound affine(i64 num, i64 den, i64 offset);

    i64 at(i64 j) const { return floor_div(num * j, den) + offset; }
    bool slope_below(const TailBound& o) const { return num * o.den < o.num * den; }
    std::string slope_string() const;
};

enum class SeriesVar { w, u };

const char* to_string(SeriesVar v);

// c_0 + c_1 t + ... + c_M t^M + (tail bounded by `tail`), each coefficient
// carrying its own certified precision.
class TruncSeries {
public:
    TruncSeries(CtxPtr ctx, SeriesVar var, std::vector<WittApprox> coeffs, TailBound tail);

    // Polynomial with exactly vanishing tail.
    static TruncSeries polynomial(CtxPtr ctx, SeriesVar var, std::vector<WittApprox> coeffs);
    static TruncSeries constant(CtxPtr ctx, SeriesVar var, const WittApprox& c);
    // sum_{j>=0} (r t)^j truncated at M; tail slope v(r).
    static TruncSeries geometric(CtxPtr ctx, SeriesVar var, const WittApprox& r, int M);

    const CtxPtr& ctx() const noexcept { return ctx_; }
    SeriesVar var() const noexcept { return var_; }
    int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    const WittApprox& coeff(int j) const { return coeffs_.at(static_cast<std::size_t>(j)); }
    const std::vector<WittApprox>& coeffs() const noexcept { return coeffs_; }
    const TailBound& tail() const noexcept { return tail_; }

    // Replace the tail bound by one proved elsewhere.
    TruncSeries with_tail(const TailBound& t) const;
    // Drop coefficients above M, folding them into the tail bound.
    TruncSeries truncate(int M) const;
    // Smallest offset b such that floor(num*j/den) + b bounds every
    // coefficient, known or not.
    i64 global_offset(i64 num, i64 den) const;

    TruncSeries operator+(const TruncSeries& o) const;
    TruncSeries operator-(const TruncSeries& o) const;
    TruncSeries operator-() const;
    TruncSeries operator*(const TruncSeries& o) const;
    TruncSeries scalar_mul(const WittApprox& c) const;
    TruncSeries derivative() const;
    // Antiderivative with zero constant term.
    TruncSeries integrate() const;
    // Antiderivative with the given constant term.
    TruncSeries integrate(const WittApprox& constant) const;

    // Horner evaluation at x with |x| <= 1. Throws CertificationError when
    // the tail cannot be certified to `target` absolute digits; the result
    // precision is the lesser of the tail bound and the propagated one.
    WittApprox eval_at(const WittApprox& x, int target) const;
    // Absolute precision the tail guarantees at a point of valuation vx.
    int tail_precision(int vx) const;

    // Orders, per-coefficient valuation and precision, tail slope.
    nlohmann::ordered_json trace() const;

private:
    void require_compatible(const TruncSeries& o) const;
    TruncSeries padded(int M) const;

    CtxPtr ctx_;
    SeriesVar var_;
    std::vector<WittApprox> coeffs_;
    TailBound tail_;
};

}  // namespace ppl
