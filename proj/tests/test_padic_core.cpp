#include <random>

#include "doctest.h"
#include "ppl/witt.hpp"

using namespace ppl;

namespace {

// Brute-force root search: a monic quadratic or cubic is irreducible over F_p
// iff it has no root.
bool has_root(const Poly& h, u64 p) {
    for (u64 x = 0; x < p; ++x) {
        u64 acc = 0;
        for (std::size_t i = h.size(); i-- > 0;) acc = (acc * x + h[i]) % p;
        if (acc == 0) return true;
    }
    return false;
}

// Exact-integer oracle: multiply two coefficient vectors as integer
// polynomials, reduce by the monic integer modulus, then reduce mod n.
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

Poly as_full(const WittApprox& x) { return x.integral_coeffs(x.ctx()->A()); }

}  // namespace

TEST_CASE("make_ctx picks the lowest irreducible modulus") {
    auto c1 = make_ctx(5, 1, 4);
    CHECK(c1->hbar() == Poly{0, 1});
    CHECK(c1->modulus() == 625);

    // Enumerate monic quadratics over F_5 in (c0, c1) order; take the first
    // without a root.
    Poly expected;
    for (u64 c0 = 0; c0 < 5 && expected.empty(); ++c0)
        for (u64 c1v = 0; c1v < 5; ++c1v) {
            Poly h{c0, c1v, 1};
            if (!has_root(h, 5)) {
                expected = h;
                break;
            }
        }
    CHECK(expected == Poly{1, 1, 1});
    CHECK(make_ctx(5, 2, 4)->hbar() == expected);
    CHECK(make_ctx(7, 2, 3)->hbar() == Poly{1, 0, 1});

    CHECK_THROWS_AS(make_ctx(4, 1, 4), std::invalid_argument);
    CHECK_THROWS_AS(make_ctx(2, 1, 4), std::invalid_argument);
    CHECK_THROWS_AS(make_ctx(9, 1, 4), std::invalid_argument);
    CHECK_THROWS_AS(make_ctx(5, 0, 4), std::invalid_argument);
    CHECK_THROWS_AS(make_ctx(5, 1, 0), std::invalid_argument);
}

TEST_CASE("irreducibility test agrees with root search for degrees 2 and 3") {
    for (u64 p : {3u, 5u, 7u}) {
        for (int k : {2, 3}) {
            u64 count = ipow_checked(p, k);
            for (u64 idx = 0; idx < count; ++idx) {
                Poly h(static_cast<std::size_t>(k) + 1, 0);
                u64 t = idx;
                for (int i = 0; i < k; ++i) {
                    h[i] = t % p;
                    t /= p;
                }
                h[k] = 1;
                CHECK(is_irreducible_mod_p(h, p) == !has_root(h, p));
            }
        }
    }
}

TEST_CASE("basic arithmetic examples") {
    auto ctx = make_ctx(5, 1, 4);
    auto one = WittApprox::one(ctx);
    CHECK(one.inv().agrees_with(one));

    // Extended Euclid oracle mod 625.
    auto inv2 = WittApprox::from_int(ctx, 2).inv();
    CHECK(as_full(inv2) == Poly{313});
    CHECK((2 * 313) % 625 == 1);

    auto pu = WittApprox::from_int(ctx, 5 * 3);
    auto v = WittApprox::from_int(ctx, 7).shift(-1);
    auto prod = pu * v;
    CHECK(prod.valuation() == 0);
    CHECK(as_full(prod) == Poly{21});

    // Division by p^j lowers the scale by j and keeps relative precision.
    auto q = WittApprox::from_int(ctx, 3) / WittApprox::from_int(ctx, 25);
    CHECK(q.valuation() == -2);
    CHECK(q.abs_precision() == 2);

    CHECK_THROWS_AS(WittApprox::zero(ctx).inv(), PrecisionError);
    auto almost = WittApprox::from_int(ctx, 1) - WittApprox::from_int(ctx, 1 + 625);
    CHECK(almost.is_zero());
    CHECK_FALSE(almost.is_exact_zero());
    CHECK_THROWS_AS(almost.inv(), PrecisionError);
}

TEST_CASE("arithmetic matches the exact-integer oracle") {
    std::mt19937_64 rng(20240611);
    struct Cfg {
        u64 p;
        int k, A;
    };
    for (Cfg cfg : {Cfg{5, 1, 4}, Cfg{5, 2, 6}, Cfg{7, 2, 5}, Cfg{11, 3, 4}, Cfg{13, 2, 8}, Cfg{3, 4, 10}}) {
        auto ctx = make_ctx(cfg.p, cfg.k, cfg.A);
        const u64 n = ctx->modulus();
        for (int trial = 0; trial < 1000; ++trial) {
            Poly a = random_unit(rng, *ctx), b = random_unit(rng, *ctx);
            auto x = WittApprox::from_coeffs(ctx, a), y = WittApprox::from_coeffs(ctx, b);
            Poly sum(a.size()), diff(a.size());
            for (std::size_t i = 0; i < a.size(); ++i) {
                sum[i] = (a[i] + b[i]) % n;
                diff[i] = (a[i] + n - b[i]) % n;
            }
            auto s = x + y;
            auto d = x - y;
            // Sums of units may gain valuation; compare at the certified precision.
            CHECK(s.abs_precision() == cfg.A);
            CHECK(s.agrees_with(WittApprox::from_coeffs(ctx, sum)));
            CHECK(d.agrees_with(WittApprox::from_coeffs(ctx, diff)));
            CHECK(as_full(x * y) == oracle_mul(a, b, ctx->hbar(), n));
            auto xi = x.inv();
            CHECK(oracle_mul(as_full(xi), a, ctx->hbar(), n) == ctx->one());
            auto quot = x / y;
            CHECK(oracle_mul(as_full(quot), b, ctx->hbar(), n) == a);
        }
    }
}

TEST_CASE("precision contract: results never claim more than their inputs certify") {
    std::mt19937_64 rng(7);
    auto ctx = make_ctx(7, 2, 6);
    for (int trial = 0; trial < 500; ++trial) {
        auto x = WittApprox::from_coeffs(ctx, random_unit(rng, *ctx), static_cast<int>(rng() % 5) - 2,
                                         1 + static_cast<int>(rng() % 6));
        auto y = WittApprox::from_coeffs(ctx, random_unit(rng, *ctx), static_cast<int>(rng() % 5) - 2,
                                         1 + static_cast<int>(rng() % 6));
        CHECK((x + y).abs_precision() <= std::min(x.abs_precision(), y.abs_precision()));
        CHECK((x * y).abs_precision() ==
              std::min(x.valuation() + y.abs_precision(), y.valuation() + x.abs_precision()));
        CHECK((x / y).rel_precision() == std::min(x.rel_precision(), y.rel_precision()));
        CHECK(x.truncate_precision(x.abs_precision() - 1).abs_precision() == x.abs_precision() - 1);
    }
}

TEST_CASE("degree-one PadicApprox agrees with WittApprox at k = 1") {
    std::mt19937_64 rng(99);
    auto ctx = make_ctx(11, 1, 5);
    for (int trial = 0; trial < 1000; ++trial) {
        i64 a = static_cast<i64>(rng() % 200000) - 100000;
        i64 b = static_cast<i64>(rng() % 200000) - 100000;
        if (b == 0 || a == 0) continue;
        auto pa = PadicApprox::from_int(11, 5, a), pb = PadicApprox::from_int(11, 5, b);
        auto wa = WittApprox::from_int(ctx, a), wb = WittApprox::from_int(ctx, b);
        CHECK(WittApprox::from_padic(ctx, pa * pb).agrees_with(wa * wb));
        CHECK(WittApprox::from_padic(ctx, pa + pb).agrees_with(wa + wb));
        CHECK(WittApprox::from_padic(ctx, pa / pb).agrees_with(wa / wb));
        CHECK((pa / pb).abs_precision() == (wa / wb).abs_precision());
    }
    auto q = PadicApprox::from_rational(5, 4, Rational(-1, 2));
    CHECK(q.residue_mod(4) == 312);  // -1/2 = 312 mod 625
    CHECK(PadicApprox::from_rational(5, 4, Rational(3, 25)).valuation() == -2);
}

TEST_CASE("teichmuller lifts") {
    auto ctx5 = make_ctx(5, 1, 2);
    CHECK(as_full(teichmuller(ctx5, FpkElement::from_int(ctx5, 2))) == Poly{7});

    // Iterate x -> x^5 mod 625 to its fixed point.
    auto ctx = make_ctx(5, 1, 4);
    u64 x = 2;
    for (int i = 0; i < 10; ++i) x = pow_mod(x, 5, 625);
    CHECK(pow_mod(x, 5, 625) == x);
    CHECK(as_full(teichmuller(ctx, FpkElement::from_int(ctx, 2))) == Poly{x});

    CHECK(teichmuller(ctx, FpkElement::one(ctx)).agrees_with(WittApprox::one(ctx)));
    CHECK(teichmuller(ctx, FpkElement::from_int(ctx, 4)).agrees_with(WittApprox::from_int(ctx, -1)));
    CHECK_THROWS_AS(teichmuller(ctx, FpkElement::zero(ctx)), std::invalid_argument);
}

TEST_CASE("teichmuller lifts are roots of unity with the right residue (exhaustive)") {
    for (auto [p, k] : {std::pair<u64, int>{3, 1}, {5, 1}, {7, 1}, {11, 1}, {3, 2}, {5, 2}, {7, 2}, {11, 2}, {3, 3},
                        {3, 4}}) {
        auto ctx = make_ctx(p, k, 6);
        const u64 q = ctx->field_size();
        if (q > 121) continue;
        for (u64 idx = 1; idx < q; ++idx) {
            auto a = FpkElement::from_index(ctx, idx);
            auto t = teichmuller(ctx, a);
            CHECK(t.pow(q - 1).agrees_with(WittApprox::one(ctx)));
            CHECK(t.abs_precision() == 6);
            CHECK(residue(t) == a);
        }
    }
}

TEST_CASE("residue map") {
    auto ctx = make_ctx(7, 2, 4);
    CHECK(residue(WittApprox::one(ctx)).is_one());
    CHECK(residue(WittApprox::from_int(ctx, 7 * 3)).is_zero());
    CHECK_THROWS_AS(residue(WittApprox::from_int(ctx, 3).shift(-1)), std::domain_error);
    CHECK(residue(WittApprox::approx_zero(ctx, 2)).is_zero());
    CHECK_THROWS_AS(residue(WittApprox::approx_zero(ctx, 0)), PrecisionError);
}

TEST_CASE("p-adic logarithm examples") {
    auto ctx = make_ctx(5, 1, 4);
    auto l1 = padic_log(WittApprox::one(ctx));
    CHECK(l1.is_zero());
    CHECK(l1.abs_precision() >= 4);

    auto l = padic_log(WittApprox::from_int(ctx, 6));
    CHECK(l.valuation() == 1);
    CHECK(l.abs_precision() >= 4);
    // Exact rational partial sum oracle, reduced mod 625.
    Rational partial = 0;
    BigInt pw = 1;
    for (int m = 1; m <= 30; ++m) {
        pw *= 5;
        Rational term = Rational(pw) / m;
        partial += (m % 2 == 1) ? term : -term;
    }
    const u64 expected = mod_u64(numer(partial) * BigInt(inv_mod(mod_u64(denom(partial), 625), 625)), 625);
    CHECK(expected == 555);
    CHECK(l.integral_coeffs(4) == Poly{555});

    auto ctx7 = make_ctx(7, 2, 5);
    auto l7 = padic_log(WittApprox::from_int(ctx7, 8));
    CHECK(l7.residue_at(1) == FpkElement::one(ctx7));

    CHECK_THROWS_AS(padic_log(WittApprox::from_int(ctx, 2)), std::domain_error);
    CHECK(log_truncation_order(5, 4) == 5);
    CHECK(log_truncation_order(5, 5) == 7);
}

TEST_CASE("logarithm is a homomorphism on 1 + pW") {
    std::mt19937_64 rng(31337);
    for (auto [p, k] : {std::pair<u64, int>{5, 1}, {7, 2}, {3, 2}}) {
        auto ctx = make_ctx(p, k, 7);
        auto one = WittApprox::one(ctx);
        for (int trial = 0; trial < 200; ++trial) {
            Poly a(static_cast<std::size_t>(k)), b(static_cast<std::size_t>(k));
            for (auto& e : a) e = rng() % ctx->modulus();
            for (auto& e : b) e = rng() % ctx->modulus();
            auto u = one + WittApprox::from_coeffs(ctx, a, 1);
            auto v = one + WittApprox::from_coeffs(ctx, b, 1);
            auto lhs = padic_log(u * v);
            auto rhs = padic_log(u) + padic_log(v);
            CHECK(lhs.agrees_with(rhs));
            CHECK(std::min(lhs.abs_precision(), rhs.abs_precision()) >= 6);

            // The Teichmuller factor is invisible to the logarithm:
            // (q-1) log(alpha(1+pw)) = log((alpha(1+pw))^{q-1}).
            auto alpha = teichmuller(ctx, FpkElement::from_index(ctx, 1 + rng() % (ctx->field_size() - 1)));
            auto z = alpha * u;
            auto lz = padic_log(z.pow(ctx->field_size() - 1));
            CHECK(lz.agrees_with(padic_log(u).mul_int(static_cast<i64>(ctx->field_size()) - 1)));
        }
    }
}

TEST_CASE("json record") {
    auto ctx = make_ctx(5, 2, 4);
    auto x = WittApprox::from_signed_coeffs(ctx, {3, -1}, 2);
    auto j = x.to_json();
    CHECK(j["p"] == 5);
    CHECK(j["k"] == 2);
    CHECK(j["A"] == 4);
    CHECK(j["scale"] == 2);
    CHECK(j["coeffs"] == nlohmann::json::array({3, 624}));
    CHECK(j["absPrecision"] == 6);
}
