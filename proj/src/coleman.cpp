#include "ppl/coleman.hpp"

#include <algorithm>
#include <stdexcept>

#include "ppl/finite_poly.hpp"
#include "ppl/identities.hpp"

namespace ppl::coleman {

namespace {

WittApprox one(const CtxPtr& ctx) { return WittApprox::one(ctx); }

WittApprox sign(const CtxPtr& ctx, int k) { return WittApprox::from_int(ctx, k % 2 == 0 ? 1 : -1); }

void require_X(const WittApprox& z, const char* who) {
    if (!in_X(z)) throw std::invalid_argument(std::string(who) + ": point is not in X");
}

// Coefficients mod p^mm of an integral element.
Poly mod_coeffs(const WittApprox& x, int mm) { return x.integral_coeffs(mm); }

WittApprox rational(const CtxPtr& ctx, const Rational& q) { return WittApprox::from_rational(ctx, q); }

nlohmann::ordered_json base_record(const SampleTask& t) {
    nlohmann::ordered_json rec;
    rec["index"] = t.index;
    rec["sampleSeed"] = t.seed;
    return rec;
}

void require_samples(const CheckParams& cp) {
    if (cp.samples < 1 && cp.replay.empty()) throw std::invalid_argument("at least one sample is required");
}

}  // namespace

bool in_X(const WittApprox& z) {
    if (z.is_zero() || z.scale() != 0) return false;
    return !z.residue().is_one();
}

XPoint XPoint::from_parts(const FpkElement& zbar, const WittApprox& w) {
    const CtxPtr& ctx = w.ctx();
    if (zbar.is_zero() || zbar.is_one()) throw std::invalid_argument("XPoint: residue must avoid 0 and 1");
    if (!w.is_exact_zero() && w.valuation() < 0) throw std::invalid_argument("XPoint: w must be integral");
    XPoint x;
    x.zbar = zbar;
    x.alpha = teichmuller(ctx, zbar);
    x.w = w;
    x.z = x.alpha * (one(ctx) + w.shift(1));
    return x;
}

XPoint XPoint::from_z(const WittApprox& z) {
    require_X(z, "XPoint::from_z");
    XPoint x;
    x.z = z;
    x.zbar = z.residue();
    x.alpha = teichmuller(z.ctx(), x.zbar);
    x.w = (z / x.alpha - one(z.ctx())).shift(-1);
    return x;
}

XPoint XPoint::inverse() const {
    const CtxPtr& ctx = z.ctx();
    XPoint x;
    x.zbar = zbar.inv();
    x.alpha = alpha.inv();
    x.w = -(w / (one(ctx) + w.shift(1)));
    x.z = z.inv();
    return x;
}

XPoint XPoint::one_minus() const { return from_z(one(z.ctx()) - z); }

WittApprox measure_value(const WittApprox& z, u64 a, int m) {
    require_X(z, "measure_value");
    if (m < 0) throw std::invalid_argument("measure_value: m must be >= 0");
    const u64 pm = ipow_checked(z.ctx()->p(), m);
    if (a >= pm) throw std::invalid_argument("measure_value: a must lie in [0, p^m)");
    return z.pow(a) / (one(z.ctx()) - z.pow(pm));
}

PolylogValue li_p_riemann(const WittApprox& z, int n, int m) {
    require_X(z, "li_p_riemann");
    if (m < 1) throw std::invalid_argument("li_p_riemann: m must be >= 1");
    if (n < 0) throw std::invalid_argument("li_p_riemann: n must be >= 0");
    const CtxPtr& ctx = z.ctx();
    const int mm = std::min({m, z.abs_precision(), ctx->A()});
    const u64 p = ctx->p();
    const u64 N = ctx->pow_p(mm);
    const Poly zc = mod_coeffs(z, mm);
    Poly acc(static_cast<std::size_t>(ctx->k()), 0);
    Poly zp = zc;
    for (u64 a = 1; a < N; ++a) {
        if (a % p != 0) {
            const u64 c = pow_mod(inv_mod(a, N), static_cast<u64>(n), N);
            acc = ctx->add(acc, ctx->scale(zp, c, N), N);
        }
        zp = ctx->mul(zp, zc, N);
    }
    // zp = z^{p^mm}
    Poly den = ctx->sub(Poly(static_cast<std::size_t>(ctx->k()), 0), zp, N);
    den[0] = add_mod(den[0], 1 % N, N);
    const WittApprox num = WittApprox::from_coeffs(ctx, acc, 0, mm);
    const WittApprox d = WittApprox::from_coeffs(ctx, den, 0, mm);
    return {n, (num / d).truncate_precision(mm)};
}

RiemannTable::RiemannTable(CtxPtr ctx, int m, int max_weight) : ctx_(std::move(ctx)), m_(m) {
    if (m < 1 || m > ctx_->A()) throw std::invalid_argument("RiemannTable: m must lie in [1, A]");
    if (max_weight < 0) throw std::invalid_argument("RiemannTable: negative weight");
    const u64 p = ctx_->p();
    const u64 N = ctx_->pow_p(m);
    const u64 period = ctx_->field_size() - 1;
    bins_.assign(static_cast<std::size_t>(max_weight) + 1, std::vector<u64>(period, 0));
    // Batch inversion over blocks of units: one extended Euclid per block.
    constexpr std::size_t kBlock = 4096;
    std::vector<u64> units, prefix;
    units.reserve(kBlock);
    prefix.reserve(kBlock);
    auto flush = [&] {
        if (units.empty()) return;
        u64 inv_all = inv_mod(prefix.back(), N);
        for (std::size_t i = units.size(); i-- > 0;) {
            const u64 inv_a = i == 0 ? inv_all : mul_mod(inv_all, prefix[i - 1], N);
            inv_all = mul_mod(inv_all, units[i], N);
            const u64 r = units[i] % period;
            u64 pw = 1 % N;
            for (auto& bin : bins_) {
                bin[r] = add_mod(bin[r], pw, N);
                pw = mul_mod(pw, inv_a, N);
            }
        }
        units.clear();
        prefix.clear();
    };
    for (u64 a = 1; a < N; ++a) {
        if (a % p == 0) continue;
        prefix.push_back(prefix.empty() ? a : mul_mod(prefix.back(), a, N));
        units.push_back(a);
        if (units.size() == kBlock) flush();
    }
    flush();
}

PolylogValue RiemannTable::li_p(const WittApprox& alpha, int n) const {
    if (n < 0 || n > max_weight()) throw std::out_of_range("RiemannTable::li_p: weight not tabulated");
    require_X(alpha, "RiemannTable::li_p");
    const int mm = std::min(m_, alpha.abs_precision());
    const u64 N = ctx_->pow_p(mm);
    const u64 period = ctx_->field_size() - 1;
    const Poly ac = mod_coeffs(alpha, mm);
    const auto& bin = bins_[static_cast<std::size_t>(n)];
    Poly acc(static_cast<std::size_t>(ctx_->k()), 0);
    Poly pw = ctx_->one();
    for (u64 r = 0; r < period; ++r) {
        if (bin[r] % N != 0) acc = ctx_->add(acc, ctx_->scale(pw, bin[r] % N, N), N);
        pw = ctx_->mul(pw, ac, N);
    }
    // alpha^{p^m} = alpha^{p^m mod (q-1)}.
    const u64 e = pow_mod(ctx_->p() % period, static_cast<u64>(m_), period);
    Poly den = ctx_->sub(Poly(static_cast<std::size_t>(ctx_->k()), 0), ctx_->pow(ac, e, N), N);
    den[0] = add_mod(den[0], 1 % N, N);
    const WittApprox num = WittApprox::from_coeffs(ctx_, acc, 0, mm);
    return {n, (num / WittApprox::from_coeffs(ctx_, den, 0, mm)).truncate_precision(mm)};
}

PolylogValue li_n_teich(const RiemannTable& table, const WittApprox& alpha, int n) {
    const CtxPtr& ctx = table.ctx();
    require_X(alpha, "li_n_teich");
    if (n < 0) throw std::invalid_argument("li_n_teich: n must be >= 0");
    if (n == 0) return {0, alpha / (one(ctx) - alpha)};
    const int k = ctx->k();
    WittApprox sum = WittApprox::zero(ctx);
    WittApprox ai = alpha;
    for (int i = 0; i < k; ++i) {
        sum += table.li_p(ai, n).value.shift((k - 1 - i) * n);
        ai = ai.pow(ctx->p());
    }
    const WittApprox denom = WittApprox::from_int(ctx, static_cast<i64>(ctx->p())).pow(static_cast<u64>(k * n)) - one(ctx);
    const WittApprox value = sum.shift(n) / denom;
    if (!value.valuation_at_least(n))
        throw std::logic_error("li_n_teich: Li_n(alpha) is not certified to lie in p^n W");
    return {n, value};
}

WittApprox li_tilde(const RiemannTable& table, const WittApprox& alpha, int n) {
    const PolylogValue v = li_n_teich(table, alpha, n);
    return v.value.shift(-n);
}

TailBound g_tail(u64 p, int n) {
    const i64 pm1 = static_cast<i64>(p) - 1;
    return TailBound::affine(pm1 - 1, pm1, -n);
}

int g_series_order(u64 p, int n, int target) {
    const TailBound t = g_tail(p, n);
    int M = 0;
    while (t.at(M + 1) < target) ++M;
    return M;
}

std::vector<TruncSeries> g_series(const RiemannTable& table, const WittApprox& alpha, int n, int M) {
    const CtxPtr& ctx = table.ctx();
    require_X(alpha, "g_series");
    if (n < 0 || M < 1) throw std::invalid_argument("g_series: need n >= 0 and M >= 1");
    const u64 p = ctx->p();
    const WittApprox P = WittApprox::from_int(ctx, static_cast<i64>(p));
    const WittApprox d = (one(ctx) - alpha).inv();
    // alpha(1+pw)/(1 - alpha(1+pw)) = -1 + d / (1 - alpha p d w).
    TruncSeries g0 = TruncSeries::constant(ctx, SeriesVar::w, -one(ctx)) +
                     TruncSeries::geometric(ctx, SeriesVar::w, alpha * P * d, M).scalar_mul(d);
    std::vector<TruncSeries> out{g0.with_tail(g_tail(p, 0))};
    const TruncSeries kernel = TruncSeries::geometric(ctx, SeriesVar::w, -P, M);
    for (int j = 1; j <= n; ++j) {
        const TruncSeries next = (out.back() * kernel).integrate(li_tilde(table, alpha, j));
        std::vector<WittApprox> c(next.coeffs().begin(), next.coeffs().begin() + M + 1);
        out.emplace_back(ctx, SeriesVar::w, std::move(c), g_tail(p, j));
    }
    return out;
}

Engine::Engine(CtxPtr ctx, int max_weight, int m, int M)
    : ctx_(std::move(ctx)), max_weight_(max_weight), M_(M), table_(ctx_, m, std::max(max_weight, 0)) {}

int Engine::order(int n) const { return M_ > 0 ? M_ : std::max(1, g_series_order(ctx_->p(), n, m())); }

PolylogJet Engine::jet(const XPoint& x, int nmax, bool trace) const {
    if (nmax > max_weight_) throw std::out_of_range("Engine::jet: weight exceeds the table");
    PolylogJet j;
    j.x = x;
    j.li.push_back(x.z / (one(ctx_) - x.z));
    if (nmax >= 1) {
        const auto gs = g_series(table_, x.alpha, nmax, order(nmax));
        for (int i = 1; i <= nmax; ++i) j.li.push_back(gs[static_cast<std::size_t>(i)].eval_at(x.w, m()).shift(i));
        if (trace) {
            j.trace = nlohmann::ordered_json::array();
            for (const auto& g : gs) j.trace.push_back(g.trace());
        }
    }
    j.log = log_at(x);
    return j;
}

WittApprox log_at(const XPoint& x) { return padic_log(one(x.w.ctx()) + x.w.shift(1)); }

std::vector<Rational> a_coeffs(int n) { return identities::a_coeffs(n); }

WittApprox big_l(const PolylogJet& jet, int n) {
    const CtxPtr& ctx = jet.x.z.ctx();
    if (n < 1 || n >= static_cast<int>(jet.li.size())) throw std::out_of_range("big_l: weight not in jet");
    if (ctx->p() <= static_cast<u64>(n)) throw std::invalid_argument("big_l: requires p > n");
    WittApprox sum = WittApprox::zero(ctx);
    for (int m = 0; m < n; ++m) {
        const WittApprox c = rational(ctx, Rational(m % 2 == 0 ? 1 : -1) / factorial(m));
        sum += c * jet.li[static_cast<std::size_t>(n - m)] * jet.log.pow(static_cast<u64>(m));
    }
    return sum;
}

WittApprox f_n(const PolylogJet& jet, int n) {
    const CtxPtr& ctx = jet.x.z.ctx();
    if (n < 2 || n >= static_cast<int>(jet.li.size())) throw std::out_of_range("f_n: weight not in jet");
    if (ctx->p() <= static_cast<u64>(n + 1)) throw std::invalid_argument("f_n: requires p > n + 1");
    const auto a = a_coeffs(n);
    WittApprox sum = WittApprox::zero(ctx);
    for (int k = 0; k < n; ++k)
        sum += rational(ctx, a[static_cast<std::size_t>(k)]) * jet.log.pow(static_cast<u64>(k)) *
               jet.li[static_cast<std::size_t>(n - k)];
    return sum;
}

WittApprox df_n(const PolylogJet& jet, int n) {
    const CtxPtr& ctx = jet.x.z.ctx();
    if (n < 2 || n > static_cast<int>(jet.li.size())) throw std::out_of_range("df_n: weight not in jet");
    if (ctx->p() <= static_cast<u64>(n + 1)) throw std::invalid_argument("df_n: requires p > n + 1");
    auto a = a_coeffs(n);
    a.push_back(Rational(0));
    WittApprox sum = WittApprox::zero(ctx);
    for (int k = 0; k < n; ++k) {
        const Rational c = a[static_cast<std::size_t>(k)] + Rational(k + 1) * a[static_cast<std::size_t>(k + 1)];
        if (c == 0) continue;
        sum += rational(ctx, c) * jet.log.pow(static_cast<u64>(k)) * jet.li[static_cast<std::size_t>(n - k - 1)];
    }
    return (one(ctx) - jet.x.z) * sum;
}

PolylogValue li_n_at(const Engine& e, const XPoint& x, int n) {
    if (n < 0) throw std::invalid_argument("li_n_at: n must be >= 0");
    return {n, e.jet(x, n).li[static_cast<std::size_t>(n)]};
}

PolylogValue big_l_at(const Engine& e, const XPoint& x, int n) { return {n, big_l(e.jet(x, n), n)}; }

PolylogValue f_n_at(const Engine& e, const XPoint& x, int n) { return {n, f_n(e.jet(x, n), n)}; }

PolylogValue df_n_at(const Engine& e, const XPoint& x, int n) { return {n, df_n(e.jet(x, n - 1), n)}; }

int certified_digits(const WittApprox& diff, int guaranteed) {
    if (diff.is_exact_zero()) return WittApprox::kInfinite;
    if (!diff.is_zero()) return diff.valuation() - guaranteed;
    return diff.abs_precision() - guaranteed;
}

Report verify_theorem(const CheckParams& cp) {
    if (cp.n < 2) throw std::invalid_argument("theorem: n must be >= 2");
    if (cp.p <= static_cast<u64>(cp.n) + 1) throw std::invalid_argument("theorem: requires p > n + 1");
    require_samples(cp);
    const Precision prec = resolve_precision(cp, cp.n);
    const auto ctx = make_ctx(cp.p, cp.k, prec.A);
    const Engine engine(ctx, cp.n - 1, prec.m, prec.M);
    const finite::LiTable table(cp.p, cp.n - 1);
    Report report;
    report.check = "theorem";
    record_params(report, cp, ctx, prec);
    const int n = cp.n;
    run_into(report, cp, [&](const SampleTask& t) {
        SampleRng rng(t.seed);
        const FpkElement zbar = random_point(rng, ctx);
        const WittApprox w = random_w(rng, ctx);
        const WittApprox w2 = random_w(rng, ctx);
        const FpkElement rhs = finite::li_finite(table, finite::sigma(zbar));
        auto rec = base_record(t);
        rec["zbar"] = to_json(zbar);
        rec["w"] = w.integral_coeffs(ctx->A());
        bool pass = true;
        FpkElement first;
        for (int side = 0; side < 2; ++side) {
            const XPoint x = XPoint::from_parts(zbar, side == 0 ? w : w2);
            const PolylogJet jet = engine.jet(x, n - 1, cp.trace && side == 0);
            const WittApprox df = df_n(jet, n);
            const bool val_ok = df.valuation_at_least(n - 1);
            const std::string tag = side == 0 ? "" : "partner";
            auto key = [&](const char* s) {
                if (tag.empty()) return std::string(s);
                std::string k = s;
                k[0] = static_cast<char>(std::toupper(k[0]));
                return tag + k;
            };
            if (side == 1) rec["partnerW"] = w2.integral_coeffs(ctx->A());
            rec[key("valuation")] = df.is_exact_zero() ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(df.valuation());
            rec[key("valuationOk")] = val_ok;
            rec[key("certifiedPrecision")] = df.abs_precision();
            if (!val_ok) {
                pass = false;
                continue;
            }
            const FpkElement lhs = df.residue_at(n - 1);
            rec[key("lhsResidue")] = to_json(lhs);
            pass = pass && lhs == rhs;
            if (side == 0)
                first = lhs;
            else
                rec["wIndependent"] = lhs == first;
            if (side == 0 && cp.trace) rec["trace"] = jet.trace;
        }
        rec["rhsResidue"] = to_json(rhs);
        rec["pass"] = pass && rec.value("wIndependent", false);
        return rec;
    });
    return report;
}

Report check_proposition(const CheckParams& cp) {
    if (cp.n < 0) throw std::invalid_argument("proposition1: n must be >= 0");
    require_samples(cp);
    const Precision prec = resolve_precision(cp, cp.n);
    const auto ctx = make_ctx(cp.p, cp.k, prec.A);
    const finite::LiTable table(cp.p, cp.n);
    Report report;
    report.check = "proposition1";
    record_params(report, cp, ctx, prec);
    run_into(report, cp, [&](const SampleTask& t) {
        SampleRng rng(t.seed);
        const FpkElement zbar = random_point(rng, ctx);
        const WittApprox w = random_w(rng, ctx);
        const XPoint x = XPoint::from_parts(zbar, w);
        const PolylogValue v = li_p_riemann(x.z, cp.n, prec.m);
        const FpkElement lhs = v.value.residue();
        const FpkElement rhs = finite::li_finite(table, zbar) / (FpkElement::one(ctx) - zbar.pow(cp.p));
        auto rec = base_record(t);
        rec["zbar"] = to_json(zbar);
        rec["w"] = w.integral_coeffs(ctx->A());
        rec["certifiedPrecision"] = v.certified_precision();
        rec["lhsResidue"] = to_json(lhs);
        rec["rhsResidue"] = to_json(rhs);
        rec["pass"] = lhs == rhs;
        return rec;
    });
    return report;
}

Report check_corollary(const CheckParams& cp) {
    if (cp.n < 1) throw std::invalid_argument("corollary: n must be >= 1");
    const Precision prec = resolve_precision(cp, cp.n);
    const auto ctx = make_ctx(cp.p, cp.k, prec.A);
    const RiemannTable table(ctx, prec.m, cp.n);
    const finite::LiTable lt(cp.p, cp.n);
    Report report;
    report.check = "corollary";
    record_params(report, cp, ctx, prec);
    report.params["samples"] = "exhaustive";
    CheckParams all = cp;
    all.replay.clear();
    for (u64 idx = 2; idx < ctx->field_size(); ++idx) all.replay.push_back({static_cast<int>(idx), idx});
    if (!cp.replay.empty()) all.replay = cp.replay;
    run_into(report, all, [&](const SampleTask& t) {
        const FpkElement abar = FpkElement::from_index(ctx, t.seed);
        const WittApprox alpha = teichmuller(ctx, abar);
        nlohmann::ordered_json rec;
        rec["index"] = t.index;
        rec["sampleSeed"] = t.seed;
        rec["alphabar"] = to_json(abar);
        const FpkElement rhs = -finite::li_finite(lt, finite::sigma(abar)) / (FpkElement::one(ctx) - abar);
        rec["rhsResidue"] = to_json(rhs);
        try {
            const PolylogValue v = li_n_teich(table, alpha, cp.n);
            const FpkElement lhs = v.value.residue_at(cp.n);
            rec["valuation"] = v.value.is_exact_zero() ? nlohmann::ordered_json(nullptr)
                                                       : nlohmann::ordered_json(v.value.valuation());
            rec["valuationOk"] = true;
            rec["lhsResidue"] = to_json(lhs);
            rec["pass"] = lhs == rhs;
        } catch (const std::logic_error& e) {
            rec["valuationOk"] = false;
            rec["message"] = e.what();
            rec["pass"] = false;
        }
        return rec;
    });
    return report;
}

Report check_maincong(const CheckParams& cp) {
    if (cp.n < 1) throw std::invalid_argument("maincong: n must be >= 1");
    if (cp.p <= static_cast<u64>(cp.n) + 1) throw std::invalid_argument("maincong: requires p > n + 1");
    require_samples(cp);
    const Precision prec = resolve_precision(cp, cp.n);
    const auto ctx = make_ctx(cp.p, cp.k, prec.A);
    const Engine engine(ctx, cp.n, prec.m, prec.M);
    Report report;
    report.check = "maincong";
    record_params(report, cp, ctx, prec);
    run_into(report, cp, [&](const SampleTask& t) {
        SampleRng rng(t.seed);
        const FpkElement abar = random_point(rng, ctx);
        const WittApprox w = random_w(rng, ctx);
        const XPoint x = XPoint::from_parts(abar, w);
        const PolylogJet jet = engine.jet(x, cp.n, cp.trace);
        const FpkElement lhs = jet.li[static_cast<std::size_t>(cp.n)].residue_at(cp.n);
        // Right side from the root-of-unity formula and residue-field arithmetic.
        const FpkElement wbar = w.residue();
        FpkElement rhs = FpkElement::zero(ctx), wj = FpkElement::one(ctx);
        u64 fact = 1;
        for (int j = 0; j <= cp.n; ++j) {
            if (j > 0) {
                wj = wj * wbar;
                fact = fact * static_cast<u64>(j) % cp.p;
            }
            const FpkElement lt = li_tilde(engine.table(), x.alpha, cp.n - j).residue();
            rhs = rhs + lt * wj / FpkElement::from_int(ctx, static_cast<i64>(fact));
        }
        auto rec = base_record(t);
        rec["alphabar"] = to_json(abar);
        rec["w"] = w.integral_coeffs(ctx->A());
        rec["lhsResidue"] = to_json(lhs);
        rec["rhsResidue"] = to_json(rhs);
        if (cp.trace) rec["trace"] = jet.trace;
        rec["pass"] = lhs == rhs;
        return rec;
    });
    return report;
}

Report check_valuation_lemma(const CheckParams& cp) {
    if (cp.n < 0) throw std::invalid_argument("valuation-lemma: n must be >= 0");
    require_samples(cp);
    const Precision prec = resolve_precision(cp, cp.n);
    const auto ctx = make_ctx(cp.p, cp.k, prec.A);
    const Engine engine(ctx, cp.n, prec.m, prec.M);
    const int M = engine.order(cp.n);
    Report report;
    report.check = "valuation-lemma";
    record_params(report, cp, ctx, prec);
    report.params["M"] = M;
    run_into(report, cp, [&](const SampleTask& t) {
        SampleRng rng(t.seed);
        const FpkElement abar = random_point(rng, ctx);
        const WittApprox alpha = teichmuller(ctx, abar);
        const auto gs = g_series(engine.table(), alpha, cp.n, M);
        int min_slack = WittApprox::kInfinite;
        int checked = 0;
        for (int i = 0; i <= cp.n; ++i) {
            const TruncSeries& g = gs[static_cast<std::size_t>(i)];
            for (int j = 0; j <= g.order(); ++j) {
                const WittApprox& c = g.coeff(j);
                ++checked;
                if (c.is_exact_zero()) continue;
                const int bound = j - i - vp_factorial(j, cp.p);
                min_slack = std::min(min_slack, c.valuation() - bound);
            }
        }
        auto rec = base_record(t);
        rec["alphabar"] = to_json(abar);
        rec["coefficients"] = checked;
        rec["minSlack"] = min_slack;
        if (cp.trace) {
            auto tr = nlohmann::ordered_json::array();
            for (const auto& g : gs) tr.push_back(g.trace());
            rec["trace"] = tr;
        }
        rec["pass"] = min_slack >= 0;
        return rec;
    });
    return report;
}

Report check_remark(const CheckParams& cp) {
    if (cp.n < 2) throw std::invalid_argument("remark: n must be >= 2");
    if (cp.p <= static_cast<u64>(cp.n) + 1) throw std::invalid_argument("remark: requires p > n + 1");
    require_samples(cp);
    const Precision prec = resolve_precision(cp, cp.n);
    const auto ctx = make_ctx(cp.p, cp.k, prec.A);
    const Engine engine(ctx, cp.n, prec.m, prec.M);
    Report report;
    report.check = "remark";
    record_params(report, cp, ctx, prec);
    const int n = cp.n;
    run_into(report, cp, [&](const SampleTask& t) {
        SampleRng rng(t.seed);
        const FpkElement zbar = random_point(rng, ctx);
        const WittApprox w = random_w(rng, ctx);
        const XPoint x = XPoint::from_parts(zbar, w);
        const PolylogJet j1 = engine.jet(x, n);
        const PolylogJet j2 = engine.jet(x.inverse(), n);
        const WittApprox fz = f_n(j1, n);
        const WittApprox inv_diff = fz + sign(ctx, n) * f_n(j2, n);
        const WittApprox l_diff = fz + big_l(j1, n).mul_int(n) + big_l(j1, n - 1) * j1.log;
        const int d1 = certified_digits(inv_diff, n);
        const int d2 = certified_digits(l_diff, n);
        auto rec = base_record(t);
        rec["zbar"] = to_json(zbar);
        rec["w"] = w.integral_coeffs(ctx->A());
        rec["inversionZero"] = inv_diff.is_zero();
        rec["inversionDigits"] = d1;
        rec["lIdentityZero"] = l_diff.is_zero();
        rec["lIdentityDigits"] = d2;
        rec["pass"] = inv_diff.is_zero() && l_diff.is_zero() && d1 >= 3 && d2 >= 3;
        return rec;
    });
    return report;
}

Report check_li1_log(const CheckParams& cp) {
    require_samples(cp);
    const Precision prec = resolve_precision(cp, 1);
    const auto ctx = make_ctx(cp.p, cp.k, prec.A);
    const Engine engine(ctx, 1, prec.m, prec.M);
    Report report;
    report.check = "li1-log";
    record_params(report, cp, ctx, prec);
    run_into(report, cp, [&](const SampleTask& t) {
        SampleRng rng(t.seed);
        const FpkElement zbar = random_point(rng, ctx);
        const WittApprox w = random_w(rng, ctx);
        const XPoint x = XPoint::from_parts(zbar, w);
        const WittApprox li1 = engine.jet(x, 1).li[1];
        const WittApprox diff = li1 + log_at(x.one_minus());
        const int d = certified_digits(diff, 1);
        auto rec = base_record(t);
        rec["zbar"] = to_json(zbar);
        rec["w"] = w.integral_coeffs(ctx->A());
        rec["zero"] = diff.is_zero();
        rec["digits"] = d;
        rec["pass"] = diff.is_zero() && d >= 3;
        return rec;
    });
    return report;
}

}  // namespace ppl::coleman
