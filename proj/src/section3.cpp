#include "ppl/section3.hpp"

#include <algorithm>
#include <stdexcept>

#include "ppl/identities.hpp"

namespace ppl::section3 {

using coleman::XPoint;

namespace {

WittApprox one(const CtxPtr& ctx) { return WittApprox::one(ctx); }

WittApprox rational(const CtxPtr& ctx, const Rational& q) { return WittApprox::from_rational(ctx, q); }

TruncSeries clipped(const TruncSeries& s, int M, const TailBound& t) { return s.truncate(M).with_tail(t); }

nlohmann::ordered_json base_record(const SampleTask& t) {
    nlohmann::ordered_json rec;
    rec["index"] = t.index;
    rec["sampleSeed"] = t.seed;
    return rec;
}

void require_p(const CheckParams& cp, int margin, const char* who) {
    if (cp.p <= static_cast<u64>(cp.n + margin))
        throw std::invalid_argument(std::string(who) + ": requires p > n + " + std::to_string(margin));
}

}  // namespace

TailBound f_tail(u64 p) { return TailBound::affine(-1, static_cast<i64>(p) - 1, 0); }

int f_series_order(u64 p, int A, int n, int target) {
    const TailBound t = f_tail(p);
    int M = 1;
    // At |u| <= 1/p the effective slope is 1 - 1/(p-1).
    const TailBound at_u = TailBound::affine(t.num + t.den, t.den, t.offset);
    while (at_u.at(M + 1) < target) ++M;
    return std::max(A + n + 5, M);
}

std::vector<FSeriesPair> f_series(const WittApprox& z, int kmax, int M) {
    if (!coleman::in_X(z)) throw std::invalid_argument("f_series: base point is not in X");
    if (kmax < 0 || M < 1) throw std::invalid_argument("f_series: need kmax >= 0 and M >= 1");
    const CtxPtr& ctx = z.ctx();
    const u64 p = ctx->p();
    const WittApprox d = (one(ctx) - z).inv();
    const WittApprox zi = z.inv();
    const TruncSeries f0 = TruncSeries::constant(ctx, SeriesVar::u, -one(ctx)) +
                           TruncSeries::geometric(ctx, SeriesVar::u, d, M).scalar_mul(d);
    const TruncSeries kernel = TruncSeries::geometric(ctx, SeriesVar::u, -zi, M).scalar_mul(zi);
    std::vector<FSeriesPair> out;
    out.push_back({z, 0, f0, TruncSeries::constant(ctx, SeriesVar::u, WittApprox::zero(ctx))});
    for (int k = 1; k <= kmax; ++k) {
        const FSeriesPair& prev = out.back();
        TruncSeries f = clipped((prev.series * kernel).integrate(), M, f_tail(p));
        TruncSeries dz = k == 1 ? TruncSeries::constant(ctx, SeriesVar::u, -d)
                                : clipped((prev.dz_series * kernel).integrate(), M, f_tail(p));
        out.push_back({z, k, std::move(f), std::move(dz)});
    }
    return out;
}

Report delprop_check(const CheckParams& cp) {
    if (cp.n < 0) throw std::invalid_argument("delprop: n must be >= 0");
    require_p(cp, 2, "delprop");
    const int n = cp.n;
    const Precision prec = resolve_precision(cp, n + 1);
    const auto ctx = make_ctx(cp.p, cp.k, prec.A);
    const coleman::Engine engine(ctx, n + 1, prec.m, prec.M);
    const int target = prec.A + n + 1;
    const int M = prec.M > 0 ? prec.M : f_series_order(cp.p, prec.A, n, target);
    Report report;
    report.check = "delprop";
    record_params(report, cp, ctx, prec);
    report.params["seriesM"] = M;
    run_into(report, cp, [&](const SampleTask& t) {
        SampleRng rng(t.seed);
        const FpkElement abar = random_point(rng, ctx);
        const WittApprox w = random_w(rng, ctx);
        const XPoint base = XPoint::from_parts(abar, WittApprox::zero(ctx));
        const XPoint S = XPoint::from_parts(abar, w);
        const WittApprox u = S.z - base.z;
        const auto fs = f_series(base.z, n + 1, M);
        const WittApprox logS = coleman::log_at(S);
        WittApprox lhs = WittApprox::zero(ctx);
        for (int k = 0; k <= n; ++k) {
            const Rational c = Rational(k % 2 == 0 ? 1 : -1) * factorial(k) * binomial(n, k);
            const WittApprox fk = fs[static_cast<std::size_t>(k + 1)].series.eval_at(u, target);
            lhs -= rational(ctx, c) * fk * logS.pow(static_cast<u64>(n - k));
        }
        const WittApprox lz = coleman::big_l(engine.jet(base, n + 1), n + 1);
        const WittApprox lS = coleman::big_l(engine.jet(S, n + 1), n + 1);
        const WittApprox rhs = rational(ctx, Rational(n % 2 == 0 ? 1 : -1) * factorial(n)) * (lz - lS);
        const WittApprox diff = lhs - rhs;
        const int digits = coleman::certified_digits(diff, n + 1);
        auto rec = base_record(t);
        rec["alphabar"] = to_json(abar);
        rec["w"] = w.integral_coeffs(ctx->A());
        rec["lhsPrecision"] = lhs.abs_precision();
        rec["rhsPrecision"] = rhs.abs_precision();
        rec["zero"] = diff.is_zero();
        rec["digits"] = digits;
        if (cp.trace) {
            auto tr = nlohmann::ordered_json::array();
            for (const auto& f : fs) tr.push_back(f.series.trace());
            rec["trace"] = tr;
        }
        rec["pass"] = diff.is_zero() && digits >= 3;
        return rec;
    });
    return report;
}

Report f_congruence_check(const CheckParams& cp) {
    if (cp.n < 0) throw std::invalid_argument("f-congruence: n must be >= 0");
    require_p(cp, 1, "f-congruence");
    const int n = cp.n;
    const Precision prec = resolve_precision(cp, n);
    const auto ctx = make_ctx(cp.p, cp.k, prec.A);
    const int target = prec.A + n;
    const int M = prec.M > 0 ? prec.M : f_series_order(cp.p, prec.A, n, target);
    Report report;
    report.check = "f-congruence";
    record_params(report, cp, ctx, prec);
    report.params["seriesM"] = M;
    run_into(report, cp, [&](const SampleTask& t) {
        SampleRng rng(t.seed);
        const FpkElement zbar = random_point(rng, ctx);
        const WittApprox z = XPoint::from_parts(zbar, random_w(rng, ctx)).z;
        const WittApprox w = random_w(rng, ctx);
        const WittApprox u = (z * w).shift(1);
        const auto fs = f_series(z, n, M);
        const WittApprox fn = fs[static_cast<std::size_t>(n)].series.eval_at(u, target);
        auto rec = base_record(t);
        rec["zbar"] = to_json(zbar);
        rec["z"] = z.integral_coeffs(ctx->A());
        rec["w"] = w.integral_coeffs(ctx->A());
        rec["valuationOk"] = fn.valuation_at_least(n);
        const FpkElement wbar = w.residue();
        const u64 fact = mod_u64(numer(factorial(n)), cp.p);
        const FpkElement rhs = zbar / (FpkElement::one(ctx) - zbar) * wbar.pow(static_cast<u64>(n)) /
                               FpkElement::from_int(ctx, static_cast<i64>(fact));
        rec["rhsResidue"] = to_json(rhs);
        if (!fn.valuation_at_least(n)) {
            rec["pass"] = false;
            return rec;
        }
        const FpkElement lhs = fn.residue_at(n);
        rec["lhsResidue"] = to_json(lhs);
        rec["pass"] = lhs == rhs;
        return rec;
    });
    return report;
}

Report df_lemma_check(const CheckParams& cp) {
    const int k = cp.n;
    if (k < 1) throw std::invalid_argument("df-lemma: k must be >= 1");
    const Precision prec = resolve_precision(cp, k);
    const auto ctx = make_ctx(cp.p, cp.k, prec.A);
    const int target = prec.A + k;
    const int M = prec.M > 0 ? prec.M : f_series_order(cp.p, prec.A, k, target);
    Report report;
    report.check = "df-lemma";
    record_params(report, cp, ctx, prec);
    report.params["seriesM"] = M;
    run_into(report, cp, [&](const SampleTask& t) {
        SampleRng rng(t.seed);
        const FpkElement zbar = random_point(rng, ctx);
        const WittApprox z = XPoint::from_parts(zbar, random_w(rng, ctx)).z;
        const WittApprox w = random_w(rng, ctx);
        const WittApprox u = (z * w).shift(1);
        const WittApprox S = z + u;
        const auto fs = f_series(z, k, M);
        const WittApprox f_prev = fs[static_cast<std::size_t>(k - 1)].series.eval_at(u, target);
        const WittApprox dz = fs[static_cast<std::size_t>(k)].dz_series.eval_at(u, target);
        const WittApprox Df = (one(ctx) - S) * f_prev + z * (one(ctx) - z) * dz;
        auto rec = base_record(t);
        rec["zbar"] = to_json(zbar);
        rec["z"] = z.integral_coeffs(ctx->A());
        rec["w"] = w.integral_coeffs(ctx->A());
        rec["valuation"] = Df.is_exact_zero() ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(Df.valuation());
        rec["certifiedPrecision"] = Df.abs_precision();
        rec["pass"] = Df.valuation_at_least(k);
        return rec;
    });
    return report;
}

Report e_recover_check(const CheckParams& cp) {
    if (cp.n < 2) throw std::invalid_argument("e-route: n must be >= 2");
    require_p(cp, 1, "e-route");
    const int n = cp.n;
    const Precision prec = resolve_precision(cp, n);
    const auto ctx = make_ctx(cp.p, cp.k, prec.A);
    const coleman::Engine engine(ctx, n, prec.m, prec.M);
    const auto e = identities::e_coeffs(n);
    Report report;
    report.check = "e-route";
    record_params(report, cp, ctx, prec);
    run_into(report, cp, [&](const SampleTask& t) {
        SampleRng rng(t.seed);
        const FpkElement zbar = random_point(rng, ctx);
        const WittApprox w = random_w(rng, ctx);
        const XPoint x = XPoint::from_parts(zbar, w);
        const coleman::PolylogJet jet = engine.jet(x, n);
        WittApprox sum = WittApprox::zero(ctx);
        for (int m = 1; m <= n; ++m) {
            const Rational& em = e[static_cast<std::size_t>(m)];
            if (em == 0) continue;
            sum += rational(ctx, em) * coleman::big_l(jet, m) * jet.log.pow(static_cast<u64>(n - m));
        }
        const WittApprox diff = sum - coleman::f_n(jet, n);
        const int digits = coleman::certified_digits(diff, n);
        auto rec = base_record(t);
        rec["zbar"] = to_json(zbar);
        rec["w"] = w.integral_coeffs(ctx->A());
        rec["zero"] = diff.is_zero();
        rec["digits"] = digits;
        rec["pass"] = diff.is_zero() && digits >= 3;
        return rec;
    });
    return report;
}

}  // namespace ppl::section3
