#include "ppl/witt.hpp"

#include <algorithm>
#include <sstream>

namespace ppl {

WittApprox WittApprox::zero(CtxPtr ctx) {
    WittApprox x;
    x.ctx_ = std::move(ctx);
    return x;
}

WittApprox WittApprox::approx_zero(CtxPtr ctx, int abs_precision) {
    WittApprox x = zero(std::move(ctx));
    x.kind_ = Kind::approx_zero;
    x.scale_ = abs_precision;
    return x;
}

WittApprox WittApprox::normalized(CtxPtr ctx, int scale, int rel, Poly y) {
    const u64 p = ctx->p();
    const u64 mod = ctx->pow_p(rel);
    int v = rel;
    for (auto& c : y) {
        c %= mod;
        v = std::min(v, vp_residue(c, p, rel));
    }
    if (v >= rel) return approx_zero(std::move(ctx), scale + rel);
    WittApprox x = zero(std::move(ctx));
    x.kind_ = Kind::value;
    x.scale_ = scale + v;
    x.rel_ = rel - v;
    const u64 div = x.ctx_->pow_p(v);
    const u64 newmod = x.ctx_->pow_p(x.rel_);
    for (auto& c : y) c = (c / div) % newmod;
    x.coeffs_ = std::move(y);
    return x;
}

WittApprox WittApprox::one(CtxPtr ctx) { return from_int(std::move(ctx), 1); }

WittApprox WittApprox::from_int(CtxPtr ctx, i64 a) {
    if (a == 0) return zero(std::move(ctx));
    Poly y(static_cast<std::size_t>(ctx->k()), 0);
    const int v = vp(a, ctx->p());
    i64 u = a;
    for (int i = 0; i < v; ++i) u /= static_cast<i64>(ctx->p());
    y[0] = reduce_signed(u, ctx->modulus());
    return normalized(ctx, v, ctx->A(), std::move(y));
}

WittApprox WittApprox::from_coeffs(CtxPtr ctx, const Poly& coeffs, int scale, int rel) {
    if (coeffs.size() != static_cast<std::size_t>(ctx->k()))
        throw std::invalid_argument("WittApprox::from_coeffs: expected k coefficients");
    if (rel < 0) rel = ctx->A();
    if (rel < 1 || rel > ctx->A()) throw std::invalid_argument("WittApprox::from_coeffs: relative precision out of range");
    bool all_zero = std::all_of(coeffs.begin(), coeffs.end(), [](u64 c) { return c == 0; });
    if (all_zero) return approx_zero(ctx, scale + rel);
    return normalized(ctx, scale, rel, coeffs);
}

WittApprox WittApprox::from_signed_coeffs(CtxPtr ctx, const std::vector<i64>& coeffs, int scale) {
    Poly y;
    y.reserve(coeffs.size());
    for (i64 c : coeffs) y.push_back(reduce_signed(c, ctx->modulus()));
    return from_coeffs(std::move(ctx), y, scale);
}

WittApprox WittApprox::from_padic(CtxPtr ctx, const PadicApprox& a) {
    if (a.p() != ctx->p()) throw std::invalid_argument("WittApprox::from_padic: prime mismatch");
    if (a.is_exact_zero()) return zero(std::move(ctx));
    if (a.is_zero()) return approx_zero(std::move(ctx), a.abs_precision());
    Poly y(static_cast<std::size_t>(ctx->k()), 0);
    const int rel = std::min(a.rel_precision(), ctx->A());
    y[0] = a.unit() % ctx->pow_p(rel);
    return normalized(ctx, a.valuation(), rel, std::move(y));
}

WittApprox WittApprox::from_rational(CtxPtr ctx, const Rational& q) {
    return from_padic(ctx, PadicApprox::from_rational(ctx->p(), ctx->A(), q));
}

WittApprox WittApprox::lift(CtxPtr ctx, const FpkElement& a) {
    if (a.is_zero()) return zero(std::move(ctx));
    return normalized(ctx, 0, ctx->A(), a.coeffs());
}

int WittApprox::valuation() const noexcept {
    if (kind_ == Kind::exact_zero) return kInfinite;
    return scale_;
}

int WittApprox::abs_precision() const noexcept {
    switch (kind_) {
        case Kind::exact_zero: return kInfinite;
        case Kind::approx_zero: return scale_;
        default: return scale_ + rel_;
    }
}

void WittApprox::require_same_ctx(const WittApprox& o) const {
    if (ctx_ != o.ctx_ && (ctx_->p() != o.ctx_->p() || ctx_->k() != o.ctx_->k() || ctx_->A() != o.ctx_->A() ||
                           ctx_->hbar() != o.ctx_->hbar()))
        throw std::invalid_argument("WittApprox: operands belong to different contexts");
}

WittApprox WittApprox::operator+(const WittApprox& o) const {
    require_same_ctx(o);
    if (is_exact_zero()) return o;
    if (o.is_exact_zero()) return *this;
    const int n = std::min(abs_precision(), o.abs_precision());
    if (kind_ == Kind::approx_zero && o.kind_ == Kind::approx_zero) return approx_zero(ctx_, n);
    if (kind_ == Kind::approx_zero || o.kind_ == Kind::approx_zero) {
        const WittApprox& val = kind_ == Kind::value ? *this : o;
        if (n >= val.abs_precision()) return val;
        if (n <= val.scale_) return approx_zero(ctx_, n);
        return normalized(ctx_, val.scale_, n - val.scale_, val.coeffs_);
    }
    const int s0 = std::min(scale_, o.scale_);
    const int rel = n - s0;
    const u64 mod = ctx_->pow_p(rel);
    auto lifted = [&](const WittApprox& x) {
        const int d = x.scale_ - s0;
        if (d >= rel) return Poly(static_cast<std::size_t>(ctx_->k()), 0);
        Poly c = x.coeffs_;
        for (auto& e : c) e %= mod;
        return ctx_->scale(c, ctx_->pow_p(d), mod);
    };
    return normalized(ctx_, s0, rel, ctx_->add(lifted(*this), lifted(o), mod));
}

WittApprox WittApprox::operator-() const {
    if (kind_ != Kind::value) return *this;
    WittApprox x = *this;
    const u64 mod = ctx_->pow_p(rel_);
    for (auto& c : x.coeffs_) c = neg_mod(c, mod);
    return x;
}

WittApprox WittApprox::operator-(const WittApprox& o) const { return *this + (-o); }

WittApprox WittApprox::operator*(const WittApprox& o) const {
    require_same_ctx(o);
    if (is_exact_zero() || o.is_exact_zero()) return zero(ctx_);
    if (kind_ == Kind::approx_zero || o.kind_ == Kind::approx_zero) return approx_zero(ctx_, scale_ + o.scale_);
    const int rel = std::min(rel_, o.rel_);
    const u64 mod = ctx_->pow_p(rel);
    Poly a = coeffs_, b = o.coeffs_;
    for (auto& c : a) c %= mod;
    for (auto& c : b) c %= mod;
    return normalized(ctx_, scale_ + o.scale_, rel, ctx_->mul(a, b, mod));
}

WittApprox WittApprox::inv() const {
    if (kind_ != Kind::value) throw PrecisionError("WittApprox::inv: operand is indistinguishable from zero");
    return normalized(ctx_, -scale_, rel_, ctx_->inverse(coeffs_, rel_));
}

WittApprox WittApprox::operator/(const WittApprox& o) const { return *this * o.inv(); }

WittApprox WittApprox::pow(u64 e) const {
    if (e == 0) return one(ctx_);
    if (kind_ == Kind::exact_zero) return *this;
    auto scaled = [&](int s) {
        i128 t = static_cast<i128>(e) * s;
        return static_cast<int>(std::clamp<i128>(t, -kInfinite, kInfinite));
    };
    if (kind_ == Kind::approx_zero) return approx_zero(ctx_, scaled(scale_));
    const u64 mod = ctx_->pow_p(rel_);
    return normalized(ctx_, scaled(scale_), rel_, ctx_->pow(coeffs_, e, mod));
}

WittApprox WittApprox::mul_int(i64 c) const { return *this * from_int(ctx_, c); }

WittApprox WittApprox::shift(int j) const {
    if (kind_ == Kind::exact_zero) return *this;
    WittApprox x = *this;
    x.scale_ += j;
    return x;
}

WittApprox WittApprox::truncate_precision(int n) const {
    if (n >= abs_precision()) return *this;
    if (kind_ != Kind::value || n <= scale_) return approx_zero(ctx_, n);
    return normalized(ctx_, scale_, n - scale_, coeffs_);
}

FpkElement WittApprox::residue() const {
    if (kind_ == Kind::exact_zero) return FpkElement::zero(ctx_);
    if (abs_precision() < 1) throw PrecisionError("WittApprox::residue: fewer than one certified digit");
    if (kind_ == Kind::approx_zero) return FpkElement::zero(ctx_);
    if (scale_ < 0) throw std::domain_error("WittApprox::residue: element is not integral");
    if (scale_ > 0) return FpkElement::zero(ctx_);
    Poly c = coeffs_;
    for (auto& e : c) e %= ctx_->p();
    return FpkElement(ctx_, std::move(c));
}

FpkElement WittApprox::residue_at(int v) const {
    if (!valuation_at_least(v)) throw std::domain_error("WittApprox::residue_at: valuation below requested level");
    return shift(-v).residue();
}

Poly WittApprox::integral_coeffs(int n) const {
    Poly r(static_cast<std::size_t>(ctx_->k()), 0);
    if (kind_ != Kind::value || scale_ >= n) return r;
    if (scale_ < 0) throw std::domain_error("WittApprox::integral_coeffs: element is not integral");
    if (n > abs_precision()) throw PrecisionError("WittApprox::integral_coeffs: insufficient precision");
    const u64 mod = ipow_checked(ctx_->p(), n);
    return ctx_->scale(coeffs_, ipow_checked(ctx_->p(), scale_), mod);
}

std::string WittApprox::to_string() const {
    std::ostringstream os;
    const u64 p = ctx_ ? ctx_->p() : 0;
    switch (kind_) {
        case Kind::exact_zero: os << "0"; break;
        case Kind::approx_zero: os << "O(" << p << "^" << scale_ << ")"; break;
        default: {
            os << p << "^" << scale_ << "*[";
            for (std::size_t i = 0; i < coeffs_.size(); ++i) os << (i ? "," : "") << coeffs_[i];
            os << "] + O(" << p << "^" << abs_precision() << ")";
        }
    }
    return os.str();
}

nlohmann::ordered_json WittApprox::to_json() const {
    nlohmann::ordered_json j;
    j["p"] = ctx_->p();
    j["k"] = ctx_->k();
    j["A"] = ctx_->A();
    switch (kind_) {
        case Kind::exact_zero:
            j["zero"] = "exact";
            j["scale"] = nullptr;
            j["coeffs"] = Poly(static_cast<std::size_t>(ctx_->k()), 0);
            j["absPrecision"] = nullptr;
            break;
        case Kind::approx_zero:
            j["zero"] = "approx";
            j["scale"] = scale_;
            j["coeffs"] = Poly(static_cast<std::size_t>(ctx_->k()), 0);
            j["absPrecision"] = scale_;
            break;
        default:
            j["scale"] = scale_;
            j["coeffs"] = coeffs_;
            j["absPrecision"] = abs_precision();
    }
    return j;
}

WittApprox teichmuller(const CtxPtr& ctx, const FpkElement& a) {
    if (a.is_zero()) throw std::invalid_argument("teichmuller: zero has no Teichmuller lift");
    WittApprox x = WittApprox::lift(ctx, a);
    const u64 q = ctx->field_size();
    for (int i = 0; i < ctx->A(); ++i) x = x.pow(q);
    return x;
}

int log_truncation_order(u64 p, int A) {
    int lg = 0;
    for (u64 t = p; t <= static_cast<u64>(A); t *= p) ++lg;
    return A + lg + 1;
}

WittApprox padic_log(const WittApprox& u) {
    const CtxPtr& ctx = u.ctx();
    const WittApprox t = u - WittApprox::one(ctx);
    if (!t.valuation_at_least(1)) throw std::domain_error("padic_log: argument is not congruent to 1 mod p");
    if (t.is_exact_zero()) return t;
    const u64 p = ctx->p();
    const int v = std::min(t.valuation(), ctx->A() + 1);
    const int M = log_truncation_order(p, ctx->A());
    WittApprox sum = WittApprox::zero(ctx);
    WittApprox power = t;
    for (int m = 1; m <= M; ++m) {
        WittApprox term = power / WittApprox::from_int(ctx, m);
        sum = (m % 2 == 1) ? sum + term : sum - term;
        power = power * t;
    }
    // Terms m > M have valuation >= m*v - v_p(m) >= (M+1)*v - floor(log_p(M+1)).
    int lg = 0;
    for (u64 q = p; q <= static_cast<u64>(M + 1); q *= p) ++lg;
    return sum.truncate_precision((M + 1) * v - lg);
}

}  // namespace ppl
