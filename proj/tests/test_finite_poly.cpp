#include "doctest.h"
#include "ppl/finite_poly.hpp"

using namespace ppl;
using namespace ppl::finite;

namespace {

// Naive exact-integer oracle over F_p: sum_{j=1}^{p-1} x^j * (j^{-1})^n.
u64 naive_li(int n, u64 x, u64 p) {
    u64 sum = 0;
    for (u64 j = 1; j < p; ++j) {
        u64 xj = 1;
        for (u64 t = 0; t < j; ++t) xj = xj * x % p;
        u64 jinv = 1;
        for (u64 c = 1; c < p; ++c)
            if (j * c % p == 1) jinv = c;
        u64 w = 1;
        for (int t = 0; t < n; ++t) w = w * jinv % p;
        sum = (sum + xj * w) % p;
    }
    return sum;
}

}  // namespace

TEST_CASE("li_finite examples") {
    auto ctx = make_ctx(5, 1, 1);
    auto el = [&](i64 a) { return FpkElement::from_int(ctx, a); };
    for (int n = 0; n <= 6; ++n) CHECK(li_finite(n, el(0)).is_zero());
    CHECK(naive_li(1, 2, 5) == 4);
    CHECK(naive_li(1, 3, 5) == 3);
    CHECK(naive_li(1, 4, 5) == 4);
    CHECK(li_finite(1, el(2)) == el(4));
    CHECK(li_finite(1, el(3)) == el(3));
    CHECK(li_finite(1, el(4)) == el(4));
    for (u64 p : {3u, 5u, 7u, 11u, 13u}) {
        auto c = make_ctx(p, 2, 1);
        CHECK(li_finite(1, FpkElement::one(c)).is_zero());
        CHECK(li_finite(2, FpkElement::from_int(c, -1)).is_zero());
        CHECK(li_finite(4, FpkElement::from_int(c, -1)).is_zero());
    }
}

TEST_CASE("li_finite agrees with the naive oracle on F_p (exhaustive)") {
    for (u64 p : {3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u}) {
        auto ctx = make_ctx(p, 1, 1);
        for (int n = 0; n <= 6; ++n) {
            LiTable table(p, n);
            for (u64 x = 0; x < p; ++x)
                CHECK(li_finite(table, FpkElement::from_int(ctx, static_cast<i64>(x))).coeffs()[0] ==
                      naive_li(n, x, p));
        }
    }
}

TEST_CASE("expanded polynomial evaluated by Horner matches pointwise evaluation") {
    for (u64 p : {5u, 7u, 11u}) {
        auto ctx = make_ctx(p, 2, 1);
        for (int n : {1, 2, 3}) {
            LiTable table(p, n);
            for (u64 idx = 0; idx < ctx->field_size(); ++idx) {
                auto x = FpkElement::from_index(ctx, idx);
                FpkElement acc = FpkElement::zero(ctx);
                for (u64 j = p - 1; j >= 1; --j) acc = acc * x + FpkElement::from_int(ctx, static_cast<i64>(table.coeff(j)));
                acc = acc * x;
                CHECK(acc == li_finite(table, x));
            }
        }
    }
}

TEST_CASE("sigma is the inverse Frobenius automorphism") {
    auto c1 = make_ctx(7, 1, 1);
    for (i64 a = 0; a < 7; ++a) CHECK(sigma(FpkElement::from_int(c1, a)) == FpkElement::from_int(c1, a));
    for (auto [p, k] : {std::pair<u64, int>{3, 2}, {5, 2}, {7, 2}, {11, 2}, {3, 3}, {3, 4}}) {
        auto ctx = make_ctx(p, k, 1);
        const u64 q = ctx->field_size();
        CHECK(sigma(FpkElement::zero(ctx)).is_zero());
        CHECK(sigma(FpkElement::one(ctx)).is_one());
        for (u64 i = 0; i < q; ++i) {
            auto x = FpkElement::from_index(ctx, i);
            CHECK(sigma(x).pow(p) == x);
            for (u64 j = 0; j < q; j += 3) {
                auto y = FpkElement::from_index(ctx, j);
                CHECK(sigma(x + y) == sigma(x) + sigma(y));
                CHECK(sigma(x * y) == sigma(x) * sigma(y));
            }
        }
    }
}

TEST_CASE("inversion identity examples") {
    auto ctx = make_ctx(5, 1, 1);
    auto el = [&](i64 a) { return FpkElement::from_int(ctx, a); };
    // p = 5, n = 2, z = 2: 2 li_1(3) + li_1(2) = 2*3 + 4 = 10 = 0.
    CHECK(el(2) * li_finite(1, el(2).inv()) + li_finite(1, el(2)) == el(0));
    CHECK(el(4) * li_finite(1, el(4).inv()) + li_finite(1, el(4)) == el(0));
    // Power sums vanish unless (p-1) | exponent.
    for (int e = 1; e <= 8; ++e) {
        u64 s = 0;
        for (u64 j = 1; j < 5; ++j) s = (s + pow_mod(inv_mod(j, 5), static_cast<u64>(e), 5)) % 5;
        CHECK((s == 0) == (e % 4 != 0));
        CHECK(li_finite(e, el(1)).coeffs()[0] == s);
    }
}

TEST_CASE("inversion identity holds exhaustively over F_p") {
    for (u64 p : {5u, 7u, 11u, 13u}) {
        auto ctx = make_ctx(p, 1, 1);
        for (int n = 2; n <= 6; ++n) {
            Report r = check_inversion_identity(n, ctx);
            CHECK(r.pass);
            CHECK(r.params["checked"] == p - 1);
        }
    }
    CHECK_THROWS_AS(check_inversion_identity(1, make_ctx(5, 1, 1)), std::invalid_argument);
}

TEST_CASE("untwisted inversion identity fails exactly off F_p inside F_{p^2}") {
    // Residual is (-1)^{n-1} (z^{1-p} - 1) li_{n-1}(z): it vanishes on F_p and
    // wherever li_{n-1}(z) = 0, and nowhere else.
    for (u64 p : {5u, 7u}) {
        auto ctx = make_ctx(p, 2, 1);
        for (int n = 2; n <= 4; ++n) {
            LiTable table(p, n - 1);
            std::size_t predicted = 0;
            for (u64 idx = 1; idx < ctx->field_size(); ++idx) {
                auto z = FpkElement::from_index(ctx, idx);
                if (!z.pow(p - 1).is_one() && !li_finite(table, z).is_zero()) ++predicted;
            }
            Report r = check_inversion_identity(n, ctx);
            CHECK(r.failures() == predicted);
            CHECK(predicted > 0);
        }
    }
    // p = 5, k = 2, z = x: residual is x + 1 (independently computed by hand
    // in F_5[x]/(x^2+x+1)).
    auto ctx = make_ctx(5, 2, 1);
    Report r = check_inversion_identity(2, ctx);
    bool found = false;
    for (const auto& rec : r.per_sample)
        if (rec["z"] == nlohmann::json::array({0, 1})) {
            CHECK(rec["residual"] == nlohmann::json::array({1, 1}));
            found = true;
        }
    CHECK(found);
}

TEST_CASE("Frobenius-twisted inversion identity holds exhaustively") {
    for (u64 p : {5u, 7u, 11u, 13u})
        for (int k : {1, 2}) {
            auto ctx = make_ctx(p, k, 1);
            for (int n = 2; n <= 6; ++n) {
                Report r = check_inversion_identity_twisted(n, ctx);
                CHECK(r.pass);
                CHECK(r.params["checked"] == ctx->field_size() - 1);
            }
        }
}
