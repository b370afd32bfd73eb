#include "ppl/fpk.hpp"

#include <sstream>
#include <stdexcept>

namespace ppl {

FpkElement::FpkElement(CtxPtr ctx, Poly coeffs) : ctx_(std::move(ctx)), coeffs_(std::move(coeffs)) {
    if (!ctx_) throw std::invalid_argument("FpkElement: null context");
    if (coeffs_.size() != static_cast<std::size_t>(ctx_->k()))
        throw std::invalid_argument("FpkElement: expected k coefficients");
    for (auto& c : coeffs_) c %= ctx_->p();
}

FpkElement FpkElement::zero(CtxPtr ctx) {
    Poly c(static_cast<std::size_t>(ctx->k()), 0);
    return FpkElement(std::move(ctx), std::move(c));
}

FpkElement FpkElement::one(CtxPtr ctx) { return from_int(std::move(ctx), 1); }

FpkElement FpkElement::from_int(CtxPtr ctx, i64 a) {
    Poly c(static_cast<std::size_t>(ctx->k()), 0);
    c[0] = reduce_signed(a, ctx->p());
    return FpkElement(std::move(ctx), std::move(c));
}

FpkElement FpkElement::from_index(CtxPtr ctx, u64 index) {
    if (index >= ctx->field_size()) throw std::out_of_range("FpkElement::from_index: index out of range");
    Poly c(static_cast<std::size_t>(ctx->k()), 0);
    for (auto& d : c) {
        d = index % ctx->p();
        index /= ctx->p();
    }
    return FpkElement(std::move(ctx), std::move(c));
}

u64 FpkElement::index() const {
    u64 r = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) r = r * ctx_->p() + coeffs_[i];
    return r;
}

bool FpkElement::is_zero() const {
    for (u64 c : coeffs_)
        if (c != 0) return false;
    return true;
}

bool FpkElement::is_one() const {
    if (coeffs_[0] != 1) return false;
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

FpkElement FpkElement::operator+(const FpkElement& o) const {
    return FpkElement(ctx_, ctx_->add(coeffs_, o.coeffs_, ctx_->p()));
}

FpkElement FpkElement::operator-(const FpkElement& o) const {
    return FpkElement(ctx_, ctx_->sub(coeffs_, o.coeffs_, ctx_->p()));
}

FpkElement FpkElement::operator-() const { return zero(ctx_) - *this; }

FpkElement FpkElement::operator*(const FpkElement& o) const {
    return FpkElement(ctx_, ctx_->mul(coeffs_, o.coeffs_, ctx_->p()));
}

FpkElement FpkElement::inv() const {
    if (is_zero()) throw std::domain_error("FpkElement::inv: zero has no inverse");
    return pow(ctx_->field_size() - 2);
}

FpkElement FpkElement::operator/(const FpkElement& o) const { return *this * o.inv(); }

FpkElement FpkElement::pow(u64 e) const { return FpkElement(ctx_, ctx_->pow(coeffs_, e, ctx_->p())); }

std::string FpkElement::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) os << ',';
        os << coeffs_[i];
    }
    os << ']';
    return os.str();
}

}  // namespace ppl
