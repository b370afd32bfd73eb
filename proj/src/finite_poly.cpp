#include "ppl/finite_poly.hpp"

#include <stdexcept>

namespace ppl::finite {

LiTable::LiTable(u64 p, int n) : p_(p), n_(n), coeffs_(p, 0) {
    if (n < 0) throw std::invalid_argument("LiTable: weight must be >= 0");
    for (u64 j = 1; j < p; ++j) coeffs_[j] = pow_mod(inv_mod(j, p), static_cast<u64>(n), p);
}

FpkElement li_finite(const LiTable& table, const FpkElement& x) {
    const CtxPtr& ctx = x.ctx();
    if (table.p() != ctx->p()) throw std::invalid_argument("li_finite: table prime does not match context");
    FpkElement sum = FpkElement::zero(ctx);
    if (x.is_zero()) return sum;
    FpkElement power = x;
    const u64 p = ctx->p();
    for (u64 j = 1; j < p; ++j) {
        sum = sum + FpkElement(ctx, ctx->scale(power.coeffs(), table.coeff(j), p));
        power = power * x;
    }
    return sum;
}

FpkElement li_finite(int n, const FpkElement& x) { return li_finite(LiTable(x.ctx()->p(), n), x); }

FpkElement sigma(const FpkElement& x) {
    const CtxPtr& ctx = x.ctx();
    return x.pow(ipow_checked(ctx->p(), ctx->k() - 1));
}

namespace {

Report inversion_sweep(int n, const CtxPtr& ctx, bool twisted) {
    if (n < 2) throw std::invalid_argument("check_inversion_identity: n must be >= 2");
    Report report;
    report.check = twisted ? "inversion-identity-twisted" : "inversion-identity";
    report.params["p"] = ctx->p();
    report.params["k"] = ctx->k();
    report.params["n"] = n;
    report.params["hbar"] = ctx->hbar_string();
    const LiTable table(ctx->p(), n - 1);
    const bool even = n % 2 == 0;
    u64 checked = 0;
    for (u64 idx = 1; idx < ctx->field_size(); ++idx) {
        const FpkElement z = FpkElement::from_index(ctx, idx);
        const FpkElement a = (twisted ? z.pow(ctx->p()) : z) * li_finite(table, z.inv());
        const FpkElement b = li_finite(table, z);
        const FpkElement total = even ? a + b : a - b;
        ++checked;
        if (!total.is_zero()) {
            nlohmann::ordered_json rec;
            rec["z"] = z.coeffs();
            rec["residual"] = total.coeffs();
            rec["pass"] = false;
            report.add_sample(std::move(rec));
        }
    }
    report.params["checked"] = checked;
    return report;
}

}  // namespace

Report check_inversion_identity(int n, const CtxPtr& ctx) { return inversion_sweep(n, ctx, false); }

Report check_inversion_identity_twisted(int n, const CtxPtr& ctx) { return inversion_sweep(n, ctx, true); }

}  // namespace ppl::finite
