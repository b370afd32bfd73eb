#include "doctest.h"
#include "ppl/identities.hpp"

using namespace ppl;
using namespace ppl::identities;

namespace {

std::vector<Rational> R(std::initializer_list<Rational> xs) { return xs; }

// Plain Gauss-Jordan over Q with division, as an oracle for the fraction-free
// solver.
std::vector<Rational> gauss_jordan(RationalMatrix m, std::vector<Rational> b) {
    const std::size_t n = m.size();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (m[piv][c] == 0) ++piv;
        std::swap(m[piv], m[c]);
        std::swap(b[piv], b[c]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || m[r][c] == 0) continue;
            Rational f = m[r][c] / m[c][c];
            for (std::size_t j = c; j < n; ++j) m[r][j] -= f * m[c][j];
            b[r] -= f * b[c];
        }
    }
    for (std::size_t i = 0; i < n; ++i) b[i] /= m[i][i];
    return b;
}

}  // namespace

TEST_CASE("closed-form coefficients") {
    CHECK(a_coeffs(2) == R({-2, 1}));
    CHECK(a_coeffs(3) == R({-3, 2, Rational(-1, 2)}));
    CHECK_THROWS_AS(a_coeffs(1), std::invalid_argument);
}

TEST_CASE("conds system solved by hand for small n") {
    CHECK(solve_conds(2) == R({-2, 1}));
    const auto a3 = solve_conds(3);
    CHECK(a3 == R({-3, 2, Rational(-1, 2)}));
    // a_1 + 2 a_2 = 1; l = 1: -1 + 1 = 0; l = 2: -1/2 + 1 - 1/2 = 0.
    CHECK(a3[1] + 2 * a3[2] == 1);
    for (const auto& r : conds_residuals(3, a3)) CHECK(r == 0);
}

TEST_CASE("fraction-free solver agrees with Gauss-Jordan") {
    for (int n = 2; n <= 12; ++n) {
        RationalMatrix m = conds_matrix(n);
        std::vector<Rational> rhs(m.size(), 0);
        std::vector<Rational> norm(static_cast<std::size_t>(n), 0);
        norm[0] = norm[1] = 1;
        m.insert(m.begin(), norm);
        rhs.insert(rhs.begin(), -1);
        CHECK(solve(m, rhs) == gauss_jordan(m, rhs));
    }
    RationalMatrix sing{{1, 2}, {2, 4}};
    CHECK(rank(sing) == 1);
    CHECK_THROWS_AS(solve(sing, {1, 1}), std::domain_error);
    CHECK(rank({{Rational(1, 2), Rational(1, 3)}, {1, 0}}) == 2);
}

TEST_CASE("uniqueness over Q for n <= 12") {
    for (int n = 2; n <= 12; ++n) {
        CHECK(solve_conds(n) == a_coeffs(n));
        CHECK(homogeneous_nullity(n) == 1);
    }
    Report r = uniqueness_check(2, 12);
    CHECK(r.pass);
    CHECK(r.per_sample.size() == 11);
    for (const auto& rec : r.per_sample) CHECK(rec["perturbationDetected"] == true);
}

TEST_CASE("generating function") {
    // n = 3, t^2: -(3/2 - 1) = -1/2.
    Report r3 = gen_function_check(3);
    CHECK(r3.pass);
    CHECK(r3.per_sample[2]["series"] == "-1/2");
    CHECK(r3.per_sample[0]["series"] == "-3");
    for (int n = 2; n <= 12; ++n) CHECK(gen_function_check(n).pass);
}

TEST_CASE("c and d sums") {
    CHECK(c_sum(2) == Rational(1, 3));
    CHECK(d_sum(2) == 1);
    CHECK(c_sum(0) == 1);
    CHECK(d_sum(0) == 0);
    for (int n = 1; n <= 20; ++n) {
        CHECK(c_sum(n) == Rational(1, n + 1));
        CHECK(d_sum(n) == 1);
    }
    CHECK(constants_check(1, 20).pass);
    CHECK_FALSE(constants_check(0, 0).pass);
}

TEST_CASE("e coefficients") {
    CHECK(e_coeffs(2) == R({0, -1, -2}));
    const auto e5 = e_coeffs(5);
    CHECK(e5[5] == -5);
    CHECK(e5[4] == -1);
    for (int m = 0; m < 4; ++m) CHECK(e5[static_cast<std::size_t>(m)] == 0);
}
