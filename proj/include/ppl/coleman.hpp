#pragma once

#include <vector>

#include "ppl/harness.hpp"
#include "ppl/power_series.hpp"
#include "ppl/rational.hpp"
#include "ppl/report.hpp"
#include "ppl/witt.hpp"

namespace ppl::coleman {

// z in W with |z| = |z - 1| = 1, split as z = alpha (1 + p w) with alpha the
// Teichmüller representative of zbar and w integral.
struct XPoint {
    WittApprox z;
    WittApprox alpha;
    WittApprox w;
    FpkElement zbar;

    static XPoint from_parts(const FpkElement& zbar, const WittApprox& w);
    static XPoint from_z(const WittApprox& z);
    // 1/z = alpha^{-1} (1 + p w') with w' = -w / (1 + p w).
    XPoint inverse() const;
    XPoint one_minus() const;
};

bool in_X(const WittApprox& z);

struct PolylogValue {
    int n = 0;
    WittApprox value;
    int certified_precision() const { return value.abs_precision(); }
};

// mu_z(a + p^m Z_p) = z^a / (1 - z^{p^m}).
WittApprox measure_value(const WittApprox& z, u64 a, int m);

// Riemann sum of x^{-n} against mu_z over the cells a + p^m Z_p, p not | a;
// certified to m absolute digits.
PolylogValue li_p_riemann(const WittApprox& z, int n, int m);

// Cell sums bins[j][r] = sum_{a < p^m, p not | a, a = r mod (q-1)} a^{-j}
// mod p^m for j <= max_weight. At a Teichmüller point alpha the Riemann sum
// collapses to sum_r bins[j][r] alpha^r / (1 - alpha^{p^m}).
class RiemannTable {
public:
    RiemannTable(CtxPtr ctx, int m, int max_weight);

    const CtxPtr& ctx() const noexcept { return ctx_; }
    int m() const noexcept { return m_; }
    int max_weight() const noexcept { return static_cast<int>(bins_.size()) - 1; }
    u64 bin(int j, u64 r) const { return bins_.at(static_cast<std::size_t>(j)).at(r); }

    // Li^(p)_n(alpha) for a Teichmüller alpha with residue not in {0, 1}.
    PolylogValue li_p(const WittApprox& alpha, int n) const;

private:
    CtxPtr ctx_;
    int m_;
    std::vector<std::vector<u64>> bins_;
};

// Li_n(alpha) = p^n/(p^{kn}-1) sum_{i<k} p^{(k-1-i)n} Li^(p)_n(alpha^{p^i});
// Li_0(alpha) = alpha/(1-alpha). Throws std::logic_error if the result is not
// certified to lie in p^n W.
PolylogValue li_n_teich(const RiemannTable& table, const WittApprox& alpha, int n);

// Li~_n(alpha) = p^{-n} Li_n(alpha).
WittApprox li_tilde(const RiemannTable& table, const WittApprox& alpha, int n);

// Tail bound j - n - v_p(j!) >= floor((p-2) j/(p-1)) - n on the degree-j
// coefficient of g_n.
TailBound g_tail(u64 p, int n);

// Smallest order M at which g_n certifies `target` digits on |w| <= 1.
int g_series_order(u64 p, int n, int target);

// g_0..g_n in w with p^j g_j(w) = Li_j(alpha(1+pw)); each g_j has order M and
// constant term Li~_j(alpha).
std::vector<TruncSeries> g_series(const RiemannTable& table, const WittApprox& alpha, int n, int M);

// Li_0..Li_n and log at one point.
struct PolylogJet {
    XPoint x;
    std::vector<WittApprox> li;
    WittApprox log;
    nlohmann::ordered_json trace;  // series dumps when requested
};

// Shared read-only state for a run: context, Riemann table, precisions.
class Engine {
public:
    Engine(CtxPtr ctx, int max_weight, int m, int M = 0);

    const CtxPtr& ctx() const noexcept { return ctx_; }
    const RiemannTable& table() const noexcept { return table_; }
    int max_weight() const noexcept { return max_weight_; }
    int m() const noexcept { return table_.m(); }
    // Series order used for weight n.
    int order(int n) const;

    PolylogJet jet(const XPoint& x, int nmax, bool trace = false) const;

private:
    CtxPtr ctx_;
    int max_weight_;
    int M_;
    RiemannTable table_;
};

// p-adic logarithm with the Teichmüller factor dropped: log(1 + p w).
WittApprox log_at(const XPoint& x);

std::vector<Rational> a_coeffs(int n);

// sum_{m<n} (-1)^m/m! Li_{n-m} log^m.
WittApprox big_l(const PolylogJet& jet, int n);
// sum_{k<n} a_k log^k Li_{n-k}.
WittApprox f_n(const PolylogJet& jet, int n);
// (1-z) sum_{k<n} log^k Li_{n-k-1} (a_k + (k+1) a_{k+1}), a_n = 0.
WittApprox df_n(const PolylogJet& jet, int n);

PolylogValue li_n_at(const Engine& e, const XPoint& x, int n);
PolylogValue big_l_at(const Engine& e, const XPoint& x, int n);
PolylogValue f_n_at(const Engine& e, const XPoint& x, int n);
PolylogValue df_n_at(const Engine& e, const XPoint& x, int n);

// Valuation bound and mod-p reduction of DF_n against li_{n-1}(sigma(zbar)),
// each sample paired with a second w over the same zbar.
Report verify_theorem(const CheckParams& cp);
// li_p_riemann(z, n, m) mod p against li_n(zbar)/(1 - zbar^p).
Report check_proposition(const CheckParams& cp);
// Every Teichmüller alpha with residue not in {0, 1}: v(Li_n) >= n and
// p^{-n} Li_n(alpha) = -li_n(sigma(alphabar))/(1 - alphabar) mod p.
Report check_corollary(const CheckParams& cp);
// p^{-n} Li_n(alpha(1+pw)) mod p against sum_j Li~_{n-j}(alpha) w^j/j!.
Report check_maincong(const CheckParams& cp);
// Built g_n coefficients satisfy v >= j - n - v_p(j!) for all j <= M.
Report check_valuation_lemma(const CheckParams& cp);
// F_n(z) + (-1)^n F_n(1/z) = 0 and F_n = -n L_n - L_{n-1} log, to at least
// three digits beyond valuation n.
Report check_remark(const CheckParams& cp);
// Li_1(z) = -log(1 - z).
Report check_li1_log(const CheckParams& cp);

// Digits certified beyond `guaranteed`, for a quantity that should vanish.
int certified_digits(const WittApprox& diff, int guaranteed);

}  // namespace ppl::coleman
