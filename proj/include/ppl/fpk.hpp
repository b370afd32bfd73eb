#pragma once

#include <string>
#include <vector>

#include "ppl/context.hpp"

namespace ppl {

// Element of F_{p^k} = F_p[x]/(hbar), sharing hbar with the context.
class FpkElement {
public:
    FpkElement() = default;
    FpkElement(CtxPtr ctx, Poly coeffs);

    static FpkElement zero(CtxPtr ctx);
    static FpkElement one(CtxPtr ctx);
    static FpkElement from_int(CtxPtr ctx, i64 a);
    // Elements enumerated by the base-p digits of index (coefficient c_i is
    // digit i); index runs over [0, p^k).
    static FpkElement from_index(CtxPtr ctx, u64 index);

    u64 index() const;
    const Poly& coeffs() const noexcept { return coeffs_; }
    const CtxPtr& ctx() const noexcept { return ctx_; }

    bool is_zero() const;
    bool is_one() const;

    FpkElement operator+(const FpkElement& o) const;
    FpkElement operator-(const FpkElement& o) const;
    FpkElement operator-() const;
    FpkElement operator*(const FpkElement& o) const;
    FpkElement operator/(const FpkElement& o) const;
    FpkElement inv() const;
    FpkElement pow(u64 e) const;

    bool operator==(const FpkElement& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const FpkElement& o) const { return !(*this == o); }

    // "[c0,c1,...]"
    std::string to_string() const;

private:
    CtxPtr ctx_;
    Poly coeffs_;
};

}  // namespace ppl
