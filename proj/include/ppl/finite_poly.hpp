#pragma once

#include <vector>

#include "ppl/fpk.hpp"
#include "ppl/report.hpp"

namespace ppl::finite {

// Coefficients j^{-n} mod p of li_n(z) = sum_{j=1}^{p-1} z^j / j^n,
// precomputed once per (p, n).
class LiTable {
public:
    LiTable(u64 p, int n);

    u64 p() const noexcept { return p_; }
    int n() const noexcept { return n_; }
    // Coefficient of z^j for 1 <= j <= p-1.
    u64 coeff(u64 j) const { return coeffs_.at(j); }
    const std::vector<u64>& coeffs() const noexcept { return coeffs_; }

private:
    u64 p_;
    int n_;
    std::vector<u64> coeffs_;  // index 0 unused (always 0)
};

// Finite polylogarithm li_n(x), summed with incremental powers of x.
FpkElement li_finite(int n, const FpkElement& x);
FpkElement li_finite(const LiTable& table, const FpkElement& x);

// Inverse Frobenius x -> x^{p^{k-1}}.
FpkElement sigma(const FpkElement& x);

// z li_{n-1}(1/z) + (-1)^n li_{n-1}(z) = 0 over all of F_{p^k}^x. Per-sample
// records list only the counterexamples; params.checked counts the points.
// Substituting j -> p-j shows the left side equals
// (-1)^{n-1} (z^{1-p} - 1) li_{n-1}(z), so this form holds on F_p^x but not
// on the rest of F_{p^k} when k > 1.
Report check_inversion_identity(int n, const CtxPtr& ctx);

// Frobenius-twisted form z^p li_{n-1}(1/z) + (-1)^n li_{n-1}(z) = 0, which is
// what z DF_n(1/z) + (-1)^n DF_n(z) = 0 reduces to once p^{1-n} DF_n(z) is
// replaced by li_{n-1}(sigma(zbar)). Holds on all of F_{p^k}^x.
Report check_inversion_identity_twisted(int n, const CtxPtr& ctx);

}  // namespace ppl::finite
