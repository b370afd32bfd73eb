#include <doctest.h>

#include "ppl/section3.hpp"

using namespace ppl;
using ppl::coleman::XPoint;

namespace {

WittApprox sample_z(const CtxPtr& ctx, u64 seed) {
    SampleRng rng(seed);
    const FpkElement zbar = random_point(rng, ctx);
    return XPoint::from_parts(zbar, random_w(rng, ctx)).z;
}

int vp_factorial(int j, u64 p) {
    int v = 0;
    for (int i = 1; i <= j; ++i) v += vp(BigInt(i), p);
    return v;
}

}  // namespace

TEST_CASE("f_0 coefficients") {
    const auto ctx = make_ctx(7, 2, 8);
    const WittApprox z = sample_z(ctx, 3);
    const WittApprox one = WittApprox::one(ctx);
    const auto fs = section3::f_series(z, 0, 12);
    const TruncSeries& f0 = fs[0].series;
    CHECK((f0.coeff(0) - z / (one - z)).is_zero());
    for (int j = 1; j <= 12; ++j) CHECK((f0.coeff(j) - (one - z).inv().pow(static_cast<u64>(j + 1))).is_zero());
}

TEST_CASE("f_1 is -log(1 - u/(1-z))") {
    for (u64 seed = 0; seed < 10; ++seed) {
        const auto ctx = make_ctx(5, 2, 10);
        SampleRng rng(seed + 100);
        const WittApprox z = sample_z(ctx, seed);
        const WittApprox u = (z * random_w(rng, ctx)).shift(1);
        const int M = section3::f_series_order(5, 10, 1, 11);
        const auto fs = section3::f_series(z, 1, M);
        const WittApprox lhs = fs[1].series.eval_at(u, 11);
        const WittApprox rhs = -padic_log(WittApprox::one(ctx) - u / (WittApprox::one(ctx) - z));
        CHECK((lhs - rhs).is_zero());
    }
}

TEST_CASE("series recursion and tail bound") {
    for (u64 p : {3ULL, 5ULL, 7ULL}) {
        const auto ctx = make_ctx(p, 2, 8);
        const WittApprox z = sample_z(ctx, p);
        const int M = 15;
        const auto fs = section3::f_series(z, 4, M);
        const TruncSeries zu = TruncSeries::polynomial(ctx, SeriesVar::u, {z, WittApprox::one(ctx)});
        for (int k = 0; k < 4; ++k) {
            const TruncSeries lhs = fs[static_cast<std::size_t>(k + 1)].series.derivative() * zu;
            const TruncSeries rhs_dz = fs[static_cast<std::size_t>(k + 1)].dz_series.derivative() * zu;
            for (int j = 0; j < M - 1; ++j) {
                CHECK((lhs.coeff(j) - fs[static_cast<std::size_t>(k)].series.coeff(j)).is_zero());
                const TruncSeries& dz = fs[static_cast<std::size_t>(k)].dz_series;
                if (k >= 1) CHECK((j <= dz.order() ? rhs_dz.coeff(j) - dz.coeff(j) : rhs_dz.coeff(j)).is_zero());
            }
        }
        for (const auto& f : fs)
            for (int j = 1; j <= M; ++j) {
                const WittApprox& c = f.series.coeff(j);
                if (!c.is_zero()) CHECK(c.valuation() >= -vp_factorial(j, p));
                if (f.k >= 1) CHECK(f.series.tail().at(j) <= -vp_factorial(j, p));
            }
    }
}

TEST_CASE("dz agrees with a finite difference in z") {
    // f_2(z + p^r h, S) - f_2(z, S) = p^r h d/dz f_2(z, S) mod p^{2r - c}
    const auto ctx = make_ctx(5, 1, 14);
    const WittApprox z = sample_z(ctx, 8);
    const WittApprox S = z + WittApprox::from_int(ctx, 5 * 3);
    const int r = 6;
    const WittApprox h = WittApprox::from_int(ctx, 2).shift(r);
    const WittApprox z2 = z + h;
    const int M = 40;
    const auto a = section3::f_series(z, 2, M);
    const auto b = section3::f_series(z2, 2, M);
    const WittApprox fa = a[2].series.eval_at(S - z, 14);
    const WittApprox fb = b[2].series.eval_at(S - z2, 14);
    const WittApprox d = a[2].dz_series.eval_at(S - z, 14);
    const WittApprox diff = fb - fa - h * d;
    CHECK(diff.valuation_at_least(2 * r - 2));
}

TEST_CASE("df lemma at k = 1 is exactly S - z") {
    const auto ctx = make_ctx(7, 2, 8);
    const WittApprox z = sample_z(ctx, 11);
    SampleRng rng(5);
    const WittApprox u = (z * random_w(rng, ctx)).shift(1);
    const auto fs = section3::f_series(z, 1, 20);
    const WittApprox one = WittApprox::one(ctx);
    const WittApprox Df = (one - z - u) * fs[0].series.eval_at(u, 9) + z * (one - z) * fs[1].dz_series.eval_at(u, 9);
    CHECK((Df - u).is_zero());
}

TEST_CASE("delprop") {
    for (const auto& [p, n, k] : {std::tuple{5ULL, 0, 1}, {5ULL, 1, 1}, {5ULL, 2, 2}, {7ULL, 3, 1}, {7ULL, 4, 2}}) {
        const Report r = section3::delprop_check({.p = p, .n = n, .k = k, .samples = 6, .seed = 9});
        CHECK_MESSAGE(r.pass, r.to_json().dump());
    }
    CHECK_THROWS_AS(section3::delprop_check({.p = 5, .n = 3}), std::invalid_argument);
}

TEST_CASE("f congruence and df lemma") {
    for (const auto& [p, n, k] : {std::tuple{5ULL, 1, 1}, {5ULL, 3, 2}, {7ULL, 4, 1}, {11ULL, 5, 2}}) {
        const Report r = section3::f_congruence_check({.p = p, .n = n, .k = k, .samples = 6, .seed = 2});
        CHECK_MESSAGE(r.pass, r.to_json().dump());
    }
    for (const auto& [p, n, k] : {std::tuple{3ULL, 2, 2}, {5ULL, 1, 1}, {5ULL, 4, 2}, {7ULL, 6, 1}}) {
        const Report r = section3::df_lemma_check({.p = p, .n = n, .k = k, .samples = 6, .seed = 4});
        CHECK_MESSAGE(r.pass, r.to_json().dump());
    }
}

TEST_CASE("df lemma loses v_p(k!) once k >= p") {
    for (const auto& [p, n] : {std::pair{3ULL, 3}, {5ULL, 5}}) {
        const Report r = section3::df_lemma_check({.p = p, .n = n, .samples = 10, .seed = 1});
        CHECK_FALSE(r.pass);
        for (const auto& s : r.per_sample)
            if (!s["valuation"].is_null()) CHECK(s["valuation"].get<int>() >= n - 1);
    }
}

TEST_CASE("f congruence detects a shifted index") {
    const auto ctx = make_ctx(5, 1, 8);
    const WittApprox z = sample_z(ctx, 1);
    const WittApprox u = (z * WittApprox::one(ctx)).shift(1);
    const auto fs = section3::f_series(z, 3, 20);
    // f_3 has valuation >= 3, so its p^2 digit vanishes, unlike z w^2/(2(1-z)).
    CHECK(fs[3].series.eval_at(u, 10).residue_at(2).is_zero());
    CHECK_FALSE(fs[2].series.eval_at(u, 10).residue_at(2).is_zero());
}

TEST_CASE("e route") {
    for (const auto& [p, n, k] : {std::tuple{5ULL, 2, 1}, {7ULL, 3, 2}, {11ULL, 5, 1}}) {
        const Report r = section3::e_recover_check({.p = p, .n = n, .k = k, .samples = 5, .seed = 1});
        CHECK_MESSAGE(r.pass, r.to_json().dump());
    }
}

TEST_CASE("f tail bound is sound against a longer truncation") {
    for (u64 seed = 0; seed < 8; ++seed) {
        const u64 p = seed % 2 == 0 ? 5 : 7;
        const auto ctx = make_ctx(p, 2, 9);
        SampleRng rng(seed + 50);
        const WittApprox z = sample_z(ctx, seed);
        const WittApprox u = (z * random_w(rng, ctx)).shift(1);
        const int M = 8;
        const auto shortf = section3::f_series(z, 3, M);
        const auto longf = section3::f_series(z, 3, M + 10);
        for (int k = 1; k <= 3; ++k) {
            const TruncSeries& s = shortf[static_cast<std::size_t>(k)].series;
            const int bound = s.tail_precision(1);
            const WittApprox a = s.eval_at(u, bound);
            const WittApprox b = longf[static_cast<std::size_t>(k)].series.eval_at(u, bound);
            CHECK((a - b).valuation_at_least(std::min(bound, 9)));
        }
    }
}
