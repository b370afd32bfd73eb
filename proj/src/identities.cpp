#include "ppl/identities.hpp"

#include <stdexcept>

namespace ppl::identities {

namespace {

void require_n(int n, const char* who) {
    if (n < 2) throw std::invalid_argument(std::string(who) + ": n must be >= 2");
}

Rational sign(int k) { return k % 2 == 0 ? Rational(1) : Rational(-1); }

// Scale each row by the lcm of its denominators.
std::vector<std::vector<BigInt>> integer_rows(const RationalMatrix& m) {
    std::vector<std::vector<BigInt>> out;
    for (const auto& row : m) {
        BigInt l = 1;
        for (const auto& q : row) l = boost::multiprecision::lcm(l, denom(q));
        std::vector<BigInt> r;
        for (const auto& q : row) r.push_back(numer(q) * (l / denom(q)));
        out.push_back(std::move(r));
    }
    return out;
}

// In-place Bareiss elimination to row-echelon form; returns pivot columns.
std::vector<std::size_t> bareiss(std::vector<std::vector<BigInt>>& a, std::size_t cols) {
    std::vector<std::size_t> pivots;
    BigInt prev = 1;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < a.size(); ++col) {
        std::size_t piv = row;
        while (piv < a.size() && a[piv][col] == 0) ++piv;
        if (piv == a.size()) continue;
        std::swap(a[piv], a[row]);
        for (std::size_t i = row + 1; i < a.size(); ++i) {
            for (std::size_t j = col + 1; j < a[i].size(); ++j)
                a[i][j] = (a[row][col] * a[i][j] - a[i][col] * a[row][j]) / prev;
            a[i][col] = 0;
        }
        prev = a[row][col];
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

std::vector<Rational> a_coeffs(int n) {
    require_n(n, "a_coeffs");
    std::vector<Rational> a{Rational(-n)};
    for (int k = 1; k < n; ++k) a.push_back(sign(k) / factorial(k - 1) + sign(k + 1) * Rational(n) / factorial(k));
    return a;
}

RationalMatrix conds_matrix(int n) {
    require_n(n, "conds_matrix");
    RationalMatrix m;
    for (int l = 1; l <= n - 1; ++l) {
        std::vector<Rational> row(static_cast<std::size_t>(n), Rational(0));
        for (int k = 0; k <= l; ++k) {
            const Rational w = Rational(1) / factorial(l - k);
            if (k < n) row[static_cast<std::size_t>(k)] += w;
            if (k + 1 < n) row[static_cast<std::size_t>(k + 1)] += Rational(k + 1) * w;
        }
        m.push_back(std::move(row));
    }
    return m;
}

int rank(const RationalMatrix& m) {
    if (m.empty()) return 0;
    auto a = integer_rows(m);
    return static_cast<int>(bareiss(a, m.front().size()).size());
}

std::vector<Rational> solve(const RationalMatrix& m, const std::vector<Rational>& rhs) {
    const std::size_t n = m.size();
    if (rhs.size() != n) throw std::invalid_argument("solve: dimension mismatch");
    RationalMatrix aug = m;
    for (std::size_t i = 0; i < n; ++i) {
        if (aug[i].size() != n) throw std::invalid_argument("solve: matrix is not square");
        aug[i].push_back(rhs[i]);
    }
    auto a = integer_rows(aug);
    auto pivots = bareiss(a, n);
    if (pivots.size() != n) throw std::domain_error("solve: singular system");
    std::vector<Rational> x(n);
    for (std::size_t i = n; i-- > 0;) {
        Rational acc(a[i][n]);
        for (std::size_t j = i + 1; j < n; ++j) acc -= Rational(a[i][j]) * x[j];
        x[i] = acc / Rational(a[i][i]);
    }
    return x;
}

std::vector<Rational> solve_conds(int n) {
    RationalMatrix m = conds_matrix(n);
    std::vector<Rational> rhs(m.size(), Rational(0));
    std::vector<Rational> norm(static_cast<std::size_t>(n), Rational(0));
    norm[0] = 1;
    norm[1] = 1;
    m.insert(m.begin(), norm);
    rhs.insert(rhs.begin(), Rational(-1));
    return solve(m, rhs);
}

int homogeneous_nullity(int n) { return n - rank(conds_matrix(n)); }

std::vector<Rational> conds_residuals(int n, const std::vector<Rational>& a) {
    const RationalMatrix m = conds_matrix(n);
    std::vector<Rational> r;
    for (const auto& row : m) {
        Rational acc = 0;
        for (std::size_t j = 0; j < row.size(); ++j) acc += row[j] * a.at(j);
        r.push_back(acc);
    }
    return r;
}

Report uniqueness_check(int n_lo, int n_hi) {
    Report report;
    report.check = "uniqueness";
    report.params["nMin"] = n_lo;
    report.params["nMax"] = n_hi;
    for (int n = n_lo; n <= n_hi; ++n) {
        const auto solved = solve_conds(n);
        const auto closed = a_coeffs(n);
        const int nullity = homogeneous_nullity(n);
        bool perturb_ok = true;
        for (int k = 0; k < n; ++k) {
            auto a = closed;
            a[static_cast<std::size_t>(k)] += 1;
            bool nonzero = false;
            for (const auto& r : conds_residuals(n, a))
                if (r != 0) nonzero = true;
            perturb_ok = perturb_ok && nonzero;
        }
        bool residual_zero = true;
        for (const auto& r : conds_residuals(n, closed))
            if (r != 0) residual_zero = false;
        nlohmann::ordered_json rec;
        rec["n"] = n;
        auto sj = nlohmann::ordered_json::array();
        for (const auto& q : solved) sj.push_back(to_string(q));
        rec["solved"] = sj;
        rec["matchesClosedForm"] = solved == closed;
        rec["closedFormResidualZero"] = residual_zero;
        rec["nullity"] = nullity;
        rec["perturbationDetected"] = perturb_ok;
        rec["pass"] = solved == closed && residual_zero && nullity == 1 && perturb_ok;
        report.add_sample(std::move(rec));
    }
    return report;
}

Report gen_function_check(int n) {
    const auto a = a_coeffs(n);
    Report report;
    report.check = "generating-function";
    report.params["n"] = n;
    for (int k = 0; k < n; ++k) {
        // Coefficient of t^k in -(n + t) e^{-t}.
        Rational c = -Rational(n) * sign(k) / factorial(k);
        if (k >= 1) c -= sign(k - 1) / factorial(k - 1);
        nlohmann::ordered_json rec;
        rec["degree"] = k;
        rec["a"] = to_string(a[static_cast<std::size_t>(k)]);
        rec["series"] = to_string(c);
        rec["pass"] = c == a[static_cast<std::size_t>(k)];
        report.add_sample(std::move(rec));
    }
    return report;
}

Rational c_sum(int n) {
    if (n < 0) throw std::invalid_argument("c_sum: n must be >= 0");
    Rational s = 0;
    for (int k = 0; k <= n; ++k) s += sign(k) * factorial(k) / factorial(k + 1) * binomial(n, k);
    return s;
}

Rational d_sum(int n) {
    if (n < 0) throw std::invalid_argument("d_sum: n must be >= 0");
    Rational s = 0;
    for (int k = 0; k <= n; ++k) s += sign(k) * factorial(k) / factorial(k + 1) * binomial(n, k) * Rational(n - k);
    return s;
}

Report constants_check(int n_lo, int n_hi) {
    Report report;
    report.check = "constants";
    report.params["nMin"] = n_lo;
    report.params["nMax"] = n_hi;
    for (int n = n_lo; n <= n_hi; ++n) {
        const Rational c = c_sum(n), d = d_sum(n);
        nlohmann::ordered_json rec;
        rec["n"] = n;
        rec["c"] = to_string(c);
        rec["d"] = to_string(d);
        rec["pass"] = c == Rational(1, n + 1) && d == Rational(1);
        report.add_sample(std::move(rec));
    }
    return report;
}

std::vector<Rational> e_coeffs(int n) {
    require_n(n, "e_coeffs");
    std::vector<Rational> e(static_cast<std::size_t>(n) + 1, Rational(0));
    e[static_cast<std::size_t>(n)] = -n;
    e[static_cast<std::size_t>(n) - 1] = -1;
    return e;
}

}  // namespace ppl::identities
