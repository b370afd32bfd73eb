#include "ppl/selftest.hpp"

#include <random>

#include "ppl/power_series.hpp"

namespace ppl::selftest {

namespace {

struct Cfg {
    u64 p;
    int k, A;
};

Poly rep(const WittApprox& x) { return x.integral_coeffs(x.ctx()->A()); }

Poly random_unit(std::mt19937_64& rng, const UnramifiedCtx& ctx) {
    for (;;) {
        Poly c(static_cast<std::size_t>(ctx.k()));
        bool unit = false;
        for (auto& e : c) {
            e = rng() % ctx.modulus();
            if (e % ctx.p() != 0) unit = true;
        }
        if (unit) return c;
    }
}

WittApprox random_integral(std::mt19937_64& rng, const CtxPtr& ctx, int max_scale) {
    Poly c(static_cast<std::size_t>(ctx->k()));
    for (auto& e : c) e = rng() % ctx->modulus();
    const int s = static_cast<int>(rng() % static_cast<u64>(max_scale + 1));
    return WittApprox::from_coeffs(ctx, c, s);
}

TruncSeries random_series(std::mt19937_64& rng, const CtxPtr& ctx, int M, bool poly) {
    std::vector<WittApprox> c;
    for (int j = 0; j <= M; ++j) c.push_back(random_integral(rng, ctx, 2));
    if (poly) return TruncSeries::polynomial(ctx, SeriesVar::w, std::move(c));
    return TruncSeries(ctx, SeriesVar::w, std::move(c), TailBound::affine(0, 1, 0));
}

nlohmann::ordered_json config_record(const Cfg& cfg, int cases, int mismatches) {
    nlohmann::ordered_json rec;
    rec["p"] = cfg.p;
    rec["k"] = cfg.k;
    rec["A"] = cfg.A;
    rec["cases"] = cases;
    rec["mismatches"] = mismatches;
    rec["pass"] = mismatches == 0;
    return rec;
}

}  // namespace

Poly oracle_mul(const Poly& a, const Poly& b, const Poly& h, u64 n) {
    const std::size_t k = h.size() - 1;
    std::vector<BigInt> prod(2 * k - 1, 0);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) prod[i + j] += BigInt(a[i]) * BigInt(b[j]);
    for (std::size_t d = prod.size(); d-- > k;) {
        BigInt c = prod[d];
        prod[d] = 0;
        for (std::size_t i = 0; i < k; ++i) prod[d - k + i] -= c * BigInt(h[i]);
    }
    Poly r(k);
    for (std::size_t i = 0; i < k; ++i) r[i] = mod_u64(prod[i], n);
    return r;
}

Poly oracle_add(const Poly& a, const Poly& b, u64 n) {
    Poly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = static_cast<u64>((BigInt(a[i]) + b[i]) % n);
    return r;
}

Report padic_oracle_suite(int cases, u64 seed) {
    Report report;
    report.check = "padic-oracle";
    report.params["cases"] = cases;
    report.params["seed"] = seed;
    std::mt19937_64 rng(seed);
    for (Cfg cfg : {Cfg{5, 1, 4}, Cfg{5, 2, 6}, Cfg{7, 2, 5}, Cfg{11, 3, 4}, Cfg{13, 2, 8}, Cfg{3, 4, 10}}) {
        auto ctx = make_ctx(cfg.p, cfg.k, cfg.A);
        const u64 n = ctx->modulus();
        int bad = 0;
        for (int t = 0; t < cases; ++t) {
            const Poly a = random_unit(rng, *ctx), b = random_unit(rng, *ctx);
            const auto x = WittApprox::from_coeffs(ctx, a), y = WittApprox::from_coeffs(ctx, b);
            Poly sum(a.size()), diff(a.size());
            for (std::size_t i = 0; i < a.size(); ++i) {
                sum[i] = (a[i] + b[i]) % n;
                diff[i] = (a[i] + n - b[i]) % n;
            }
            bool ok = (x + y).agrees_with(WittApprox::from_coeffs(ctx, sum)) &&
                      (x - y).agrees_with(WittApprox::from_coeffs(ctx, diff)) &&
                      rep(x * y) == oracle_mul(a, b, ctx->hbar(), n) &&
                      oracle_mul(rep(x.inv()), a, ctx->hbar(), n) == ctx->one() &&
                      oracle_mul(rep(x / y), b, ctx->hbar(), n) == a;
            if (!ok) ++bad;
        }
        report.add_sample(config_record(cfg, cases, bad));
    }
    return report;
}

Report series_oracle_suite(int cases, u64 seed) {
    Report report;
    report.check = "series-oracle";
    report.params["cases"] = cases;
    report.params["seed"] = seed;
    std::mt19937_64 rng(seed);
    for (Cfg cfg : {Cfg{5, 1, 5}, Cfg{7, 2, 4}, Cfg{3, 3, 6}, Cfg{11, 2, 3}}) {
        auto ctx = make_ctx(cfg.p, cfg.k, cfg.A);
        const u64 n = ctx->modulus();
        int bad = 0;
        for (int t = 0; t < cases; ++t) {
            bool ok = true;
            const int M = 1 + static_cast<int>(rng() % 7);
            const auto s = random_series(rng, ctx, M, t % 3 == 0);
            const auto u = random_series(rng, ctx, M + static_cast<int>(rng() % 3), t % 5 == 0);
            const auto prod = s * u;
            const auto sum = s + u;
            for (int j = 0; j <= std::min(prod.order(), M); ++j) {
                Poly expect(static_cast<std::size_t>(cfg.k), 0);
                for (int i = 0; i <= j; ++i) {
                    if (i > s.order() || j - i > u.order()) continue;
                    expect = oracle_add(expect, oracle_mul(rep(s.coeff(i)), rep(u.coeff(j - i)), ctx->hbar(), n), n);
                }
                ok = ok && prod.coeff(j).abs_precision() >= cfg.A && rep(prod.coeff(j)) == expect;
            }
            for (int j = 0; j <= std::min(sum.order(), M); ++j)
                ok = ok && rep(sum.coeff(j)) == oracle_add(rep(s.coeff(j)), rep(u.coeff(j)), n);
            const auto is = s.integrate();
            for (int j = 0; j <= s.order(); ++j) ok = ok && is.coeff(j + 1).mul_int(j + 1).agrees_with(s.coeff(j));
            const auto poly = TruncSeries::polynomial(ctx, SeriesVar::w, s.coeffs());
            const WittApprox x = random_integral(rng, ctx, 1);
            const WittApprox val = poly.eval_at(x, cfg.A);
            Poly acc(static_cast<std::size_t>(cfg.k), 0), xp = rep(WittApprox::one(ctx));
            for (int j = 0; j <= poly.order(); ++j) {
                acc = oracle_add(acc, oracle_mul(rep(poly.coeff(j)), xp, ctx->hbar(), n), n);
                xp = oracle_mul(xp, rep(x), ctx->hbar(), n);
            }
            ok = ok && val.abs_precision() >= cfg.A && rep(val) == acc;
            if (!ok) ++bad;
        }
        report.add_sample(config_record(cfg, cases, bad));
    }
    return report;
}

}  // namespace ppl::selftest
