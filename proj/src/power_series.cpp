#include "ppl/power_series.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ppl {

namespace {

constexpr i64 kNoBound = WittApprox::kInfinite;

int clamp_int(i64 v) { return static_cast<int>(std::clamp<i64>(v, -kNoBound, kNoBound)); }

i64 ceil_div(i64 a, i64 b) { return -floor_div(-a, b); }

}  // namespace

TailBound TailBound::affine(i64 num, i64 den, i64 offset) {
    if (den == 0) throw std::invalid_argument("TailBound: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const i64 g = std::gcd(num < 0 ? -num : num, den);
    return TailBound{num / g, den / g, offset, false};
}

std::string TailBound::slope_string() const {
    if (vanishing) return "inf";
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

const char* to_string(SeriesVar v) { return v == SeriesVar::w ? "w" : "u"; }

TruncSeries::TruncSeries(CtxPtr ctx, SeriesVar var, std::vector<WittApprox> coeffs, TailBound tail)
    : ctx_(std::move(ctx)), var_(var), coeffs_(std::move(coeffs)), tail_(tail) {
    if (coeffs_.empty()) throw std::invalid_argument("TruncSeries: at least one coefficient is required");
    if (tail_.den <= 0) throw std::invalid_argument("TruncSeries: tail slope denominator must be positive");
    for (const auto& c : coeffs_)
        if (c.ctx() != ctx_ && (c.ctx()->p() != ctx_->p() || c.ctx()->k() != ctx_->k() || c.ctx()->A() != ctx_->A()))
            throw std::invalid_argument("TruncSeries: coefficient from a different context");
}

TruncSeries TruncSeries::polynomial(CtxPtr ctx, SeriesVar var, std::vector<WittApprox> coeffs) {
    return TruncSeries(std::move(ctx), var, std::move(coeffs), TailBound::zero_tail());
}

TruncSeries TruncSeries::constant(CtxPtr ctx, SeriesVar var, const WittApprox& c) {
    return polynomial(std::move(ctx), var, {c});
}

TruncSeries TruncSeries::geometric(CtxPtr ctx, SeriesVar var, const WittApprox& r, int M) {
    if (M < 0) throw std::invalid_argument("TruncSeries::geometric: negative order");
    if (r.is_exact_zero()) return constant(ctx, var, WittApprox::one(ctx));
    const int v = r.valuation();
    if (v < 0) throw std::invalid_argument("TruncSeries::geometric: ratio must be integral");
    std::vector<WittApprox> c;
    c.reserve(static_cast<std::size_t>(M) + 1);
    c.push_back(WittApprox::one(ctx));
    for (int j = 1; j <= M; ++j) c.push_back(c.back() * r);
    return TruncSeries(std::move(ctx), var, std::move(c), TailBound::affine(v, 1, 0));
}

void TruncSeries::require_compatible(const TruncSeries& o) const {
    if (var_ != o.var_) throw std::invalid_argument("TruncSeries: variable mismatch");
    if (ctx_ != o.ctx_ && (ctx_->p() != o.ctx_->p() || ctx_->k() != o.ctx_->k() || ctx_->A() != o.ctx_->A() ||
                           ctx_->hbar() != o.ctx_->hbar()))
        throw std::invalid_argument("TruncSeries: context mismatch");
}

TruncSeries TruncSeries::with_tail(const TailBound& t) const {
    TruncSeries s = *this;
    s.tail_ = t;
    return s;
}

i64 TruncSeries::global_offset(i64 num, i64 den) const {
    i64 b = kNoBound;
    if (!tail_.vanishing) {
        if (tail_.num * den < num * tail_.den)
            throw std::invalid_argument("TruncSeries::global_offset: requested slope exceeds the tail slope");
        b = tail_.offset;
    }
    for (int j = 0; j <= order(); ++j) {
        const WittApprox& c = coeffs_[static_cast<std::size_t>(j)];
        if (c.is_exact_zero()) continue;
        b = std::min<i64>(b, c.valuation() - floor_div(num * j, den));
    }
    return b;
}

TruncSeries TruncSeries::truncate(int M) const {
    if (M < 0) throw std::invalid_argument("TruncSeries::truncate: negative order");
    if (M >= order()) return padded(M);
    std::vector<WittApprox> c(coeffs_.begin(), coeffs_.begin() + M + 1);
    TailBound t = tail_;
    if (t.vanishing) {
        // Slope 0 over the dropped coefficients is always available.
        t = TailBound::affine(0, 1, kNoBound);
    }
    for (int j = M + 1; j <= order(); ++j) {
        const WittApprox& cj = coeffs_[static_cast<std::size_t>(j)];
        if (cj.is_exact_zero()) continue;
        t.offset = std::min<i64>(t.offset, cj.valuation() - floor_div(t.num * j, t.den));
    }
    if (t.offset == kNoBound) t = TailBound::zero_tail();
    return TruncSeries(ctx_, var_, std::move(c), t);
}

TruncSeries TruncSeries::padded(int M) const {
    if (M <= order()) return *this;
    if (!tail_.vanishing) throw std::logic_error("TruncSeries: cannot extend a series with unknown tail");
    std::vector<WittApprox> c = coeffs_;
    c.resize(static_cast<std::size_t>(M) + 1, WittApprox::zero(ctx_));
    return TruncSeries(ctx_, var_, std::move(c), tail_);
}

TruncSeries TruncSeries::operator+(const TruncSeries& o) const {
    require_compatible(o);
    if (tail_.vanishing && o.tail_.vanishing) {
        const int M = std::max(order(), o.order());
        TruncSeries a = padded(M), b = o.padded(M);
        for (int j = 0; j <= M; ++j) a.coeffs_[static_cast<std::size_t>(j)] += b.coeffs_[static_cast<std::size_t>(j)];
        return a;
    }
    TailBound t;
    int M;
    if (tail_.vanishing) {
        t = o.tail_;
        M = o.order();
    } else if (o.tail_.vanishing) {
        t = tail_;
        M = order();
    } else {
        t = tail_.slope_below(o.tail_) ? tail_ : o.tail_;
        M = std::min(order(), o.order());
    }
    const TruncSeries a = tail_.vanishing ? padded(M) : *this;
    const TruncSeries b = o.tail_.vanishing ? o.padded(M) : o;
    t.offset = std::min(a.global_offset(t.num, t.den), b.global_offset(t.num, t.den));
    std::vector<WittApprox> c;
    c.reserve(static_cast<std::size_t>(M) + 1);
    for (int j = 0; j <= M; ++j) c.push_back(a.coeff(j) + b.coeff(j));
    return TruncSeries(ctx_, var_, std::move(c), t);
}

TruncSeries TruncSeries::operator-() const {
    TruncSeries s = *this;
    for (auto& c : s.coeffs_) c = -c;
    return s;
}

TruncSeries TruncSeries::operator-(const TruncSeries& o) const { return *this + (-o); }

TruncSeries TruncSeries::operator*(const TruncSeries& o) const {
    require_compatible(o);
    TailBound t;
    int M;
    if (tail_.vanishing && o.tail_.vanishing) {
        t = TailBound::zero_tail();
        M = order() + o.order();
    } else if (tail_.vanishing || o.tail_.vanishing) {
        const TruncSeries& poly = tail_.vanishing ? *this : o;
        const TruncSeries& ser = tail_.vanishing ? o : *this;
        M = ser.order();
        t = ser.tail_;
        // c_j = sum_i s_i t_{j-i} with floor(a(j-i)) >= floor(aj) - ceil(ai).
        i64 shift = kNoBound;
        for (int i = 0; i <= poly.order(); ++i) {
            const WittApprox& si = poly.coeff(i);
            if (si.is_exact_zero()) continue;
            shift = std::min<i64>(shift, si.valuation() - ceil_div(t.num * i, t.den));
        }
        if (shift == kNoBound) return polynomial(ctx_, var_, {WittApprox::zero(ctx_)});
        t.offset = ser.global_offset(t.num, t.den) + shift;
    } else {
        t = tail_.slope_below(o.tail_) ? tail_ : o.tail_;
        M = std::min(order(), o.order());
        // floor(ai) + floor(a(j-i)) >= floor(aj) - 1.
        t.offset = global_offset(t.num, t.den) + o.global_offset(t.num, t.den) - 1;
    }
    std::vector<WittApprox> c(static_cast<std::size_t>(M) + 1, WittApprox::zero(ctx_));
    for (int i = 0; i <= std::min(M, order()); ++i) {
        const WittApprox& si = coeff(i);
        if (si.is_exact_zero()) continue;
        for (int j = 0; j <= std::min(M - i, o.order()); ++j) {
            const WittApprox& tj = o.coeff(j);
            if (tj.is_exact_zero()) continue;
            c[static_cast<std::size_t>(i + j)] += si * tj;
        }
    }
    return TruncSeries(ctx_, var_, std::move(c), t);
}

TruncSeries TruncSeries::scalar_mul(const WittApprox& k) const {
    if (k.is_exact_zero()) return polynomial(ctx_, var_, {WittApprox::zero(ctx_)});
    TruncSeries s = *this;
    for (auto& c : s.coeffs_) c *= k;
    if (!s.tail_.vanishing) s.tail_.offset += k.valuation();
    return s;
}

TruncSeries TruncSeries::derivative() const {
    std::vector<WittApprox> c;
    for (int j = 1; j <= order(); ++j) c.push_back(coeff(j).mul_int(j));
    if (c.empty()) c.push_back(WittApprox::zero(ctx_));
    TailBound t = tail_;
    // v((j+1) c_{j+1}) >= floor(a(j+1)) + b >= floor(aj) + floor(a) + b.
    if (!t.vanishing) t.offset += floor_div(t.num, t.den);
    return TruncSeries(ctx_, var_, std::move(c), t);
}

TruncSeries TruncSeries::integrate() const { return integrate(WittApprox::zero(ctx_)); }

TruncSeries TruncSeries::integrate(const WittApprox& constant) const {
    std::vector<WittApprox> c;
    c.reserve(coeffs_.size() + 1);
    c.push_back(constant);
    for (int j = 0; j <= order(); ++j) {
        const WittApprox& cj = coeff(j);
        c.push_back(cj.is_exact_zero() ? cj : cj / WittApprox::from_int(ctx_, j + 1));
    }
    TailBound t = tail_;
    if (!t.vanishing) {
        // v_p(j) <= (j-1)/(p-1), so the slope drops by 1/(p-1):
        // v(c_{j-1}/j) >= floor(a'(j-1)) + b >= floor(a'j) + floor(-a') + b.
        const i64 pm1 = static_cast<i64>(ctx_->p()) - 1;
        t = TailBound::affine(t.num * pm1 - t.den, t.den * pm1, t.offset);
        t.offset += floor_div(-t.num, t.den);
    }
    return TruncSeries(ctx_, var_, std::move(c), t);
}

int TruncSeries::tail_precision(int vx) const {
    if (tail_.vanishing) return WittApprox::kInfinite;
    const i64 num = tail_.num + static_cast<i64>(vx) * tail_.den;
    if (num <= 0) throw CertificationError("TruncSeries: tail does not converge at this point");
    // Nondecreasing in j, so the first omitted degree is the worst.
    return clamp_int(floor_div(num * (order() + 1), tail_.den) + tail_.offset);
}

WittApprox TruncSeries::eval_at(const WittApprox& x, int target) const {
    if (x.is_exact_zero()) return coeff(0);
    const int vx = x.valuation();
    if (vx < 0) throw std::invalid_argument("TruncSeries::eval_at: point lies outside the closed unit disc");
    const int tp = tail_precision(vx);
    if (tp < target)
        throw CertificationError("TruncSeries::eval_at: order " + std::to_string(order()) + " certifies only " +
                                 std::to_string(tp) + " digits, " + std::to_string(target) + " requested");
    WittApprox r = coeff(order());
    for (int j = order() - 1; j >= 0; --j) r = r * x + coeff(j);
    return r.truncate_precision(tp);
}

nlohmann::ordered_json TruncSeries::trace() const {
    nlohmann::ordered_json j;
    j["var"] = to_string(var_);
    j["order"] = order();
    j["tailSlope"] = tail_.slope_string();
    if (tail_.vanishing)
        j["tailOffset"] = nullptr;
    else
        j["tailOffset"] = tail_.offset;
    auto arr = nlohmann::ordered_json::array();
    for (int i = 0; i <= order(); ++i) {
        const WittApprox& c = coeff(i);
        nlohmann::ordered_json e;
        e["degree"] = i;
        if (c.is_exact_zero()) {
            e["valuation"] = nullptr;
            e["absPrecision"] = nullptr;
        } else {
            e["valuation"] = c.is_zero() ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(c.valuation());
            e["absPrecision"] = c.abs_precision();
        }
        arr.push_back(std::move(e));
    }
    j["coeffs"] = std::move(arr);
    return j;
}

}  // namespace ppl
