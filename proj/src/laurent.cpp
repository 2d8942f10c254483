#include "mzv/laurent.hpp"

#include <algorithm>
#include <stdexcept>

namespace mzv {

LaurentTail::LaurentTail(FieldCtx ctx, std::int64_t precision)
    : ctx_(std::move(ctx)), valuation_(precision + 1), precision_(precision) {}

LaurentTail::LaurentTail(FieldCtx ctx, std::int64_t valuation, std::vector<Code> coeffs,
                         std::int64_t precision)
    : ctx_(std::move(ctx)), valuation_(valuation), coeffs_(std::move(coeffs)), precision_(precision) {
  normalize();
}

void LaurentTail::normalize() {
  const std::int64_t keep = precision_ - valuation_ + 1;
  if (keep <= 0) {
    coeffs_.clear();
  } else if (static_cast<std::int64_t>(coeffs_.size()) > keep) {
    coeffs_.resize(static_cast<std::size_t>(keep));
  }
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](Code c) { return c != 0; });
  valuation_ += first - coeffs_.begin();
  coeffs_.erase(coeffs_.begin(), first);
  // Trailing zeros inside the precision window carry no information.
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  if (coeffs_.empty()) valuation_ = precision_ + 1;
}

LaurentTail LaurentTail::from_ratfunc(const RatFunc& x, std::int64_t precision) {
  const FieldCtx& ctx = x.field();
  if (x.is_zero()) return LaurentTail(ctx, precision);
  const std::int64_t v = x.valuation();
  if (v > precision) return LaurentTail(ctx, precision);
  // x = u^v * nhat(u) / dhat(u) with nhat, dhat the reversed polynomials and
  // dhat(0) = 1 (monic denominator).  Only the top coefficients matter.
  const std::size_t count = static_cast<std::size_t>(precision - v + 1);
  const auto n = x.num().coeffs();
  const auto d = x.den().coeffs();
  auto rev = [](std::span<const Code> c, std::size_t i) -> Code {
    return i < c.size() ? c[c.size() - 1 - i] : 0;
  };
  const std::size_t dlen = std::min(d.size(), count);
  std::vector<Code> dhat(dlen);
  for (std::size_t i = 0; i < dlen; ++i) dhat[i] = rev(d, i);
  std::vector<Code> out(count);
  for (std::size_t j = 0; j < count; ++j) {
    Code acc = rev(n, j);
    for (std::size_t i = 1; i < dlen && i <= j; ++i) {
      if (dhat[i] != 0 && out[j - i] != 0) acc = ctx.sub(acc, ctx.mul(dhat[i], out[j - i]));
    }
    out[j] = acc;
  }
  return LaurentTail(ctx, v, std::move(out), precision);
}

Code LaurentTail::coeff(std::int64_t e) const {
  if (e > precision_) throw std::out_of_range("coefficient beyond tracked precision");
  if (e < valuation_ || e - valuation_ >= static_cast<std::int64_t>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(e - valuation_)];
}

LaurentTail LaurentTail::operator+(const LaurentTail& o) const {
  if (!(ctx_ == o.ctx_)) throw std::invalid_argument("Laurent tails over different fields");
  const std::int64_t prec = std::min(precision_, o.precision_);
  const std::int64_t v = std::min(valuation_, o.valuation_);
  if (v > prec) return LaurentTail(ctx_, prec);
  std::vector<Code> out(static_cast<std::size_t>(prec - v + 1), 0);
  for (std::int64_t e = v; e <= prec; ++e) {
    out[static_cast<std::size_t>(e - v)] = ctx_.add(coeff(e), o.coeff(e));
  }
  return LaurentTail(ctx_, v, std::move(out), prec);
}

LaurentTail LaurentTail::operator-() const {
  LaurentTail out = *this;
  for (auto& c : out.coeffs_) c = ctx_.neg(c);
  return out;
}

LaurentTail LaurentTail::operator*(const LaurentTail& o) const {
  if (!(ctx_ == o.ctx_)) throw std::invalid_argument("Laurent tails over different fields");
  // (a + O(u^{Na+1})) (b + O(u^{Nb+1})) is known through min(Na + vb, Nb + va).
  const std::int64_t prec = std::min(precision_ + o.valuation_, o.precision_ + valuation_);
  if (is_zero() || o.is_zero()) return LaurentTail(ctx_, prec);
  const std::int64_t v = valuation_ + o.valuation_;
  if (v > prec) return LaurentTail(ctx_, prec);
  const std::size_t count = static_cast<std::size_t>(prec - v + 1);
  auto clip = [count](const std::vector<Code>& c) {
    return std::vector<Code>(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(std::min(c.size(), count)));
  };
  FqPoly prod = FqPoly(ctx_, clip(coeffs_)) * FqPoly(ctx_, clip(o.coeffs_));
  std::vector<Code> out(prod.coeffs().begin(), prod.coeffs().end());
  return LaurentTail(ctx_, v, std::move(out), prec);
}

LaurentTail LaurentTail::scaled(Code c) const {
  if (c == 0) return LaurentTail(ctx_, precision_);
  LaurentTail out = *this;
  for (auto& x : out.coeffs_) x = ctx_.mul(x, c);
  return out;
}

LaurentTail LaurentTail::pow(std::int64_t k) const {
  if (k < 1) throw std::invalid_argument("LaurentTail::pow requires k >= 1");
  LaurentTail result = *this;
  for (std::int64_t i = 1; i < k; ++i) result = result * *this;
  return result;
}

LaurentTail LaurentTail::truncated(std::int64_t n) const {
  if (n > precision_) throw std::invalid_argument("cannot raise precision by truncation");
  return LaurentTail(ctx_, valuation_, coeffs_, n);
}

bool LaurentTail::operator==(const LaurentTail& o) const {
  return ctx_ == o.ctx_ && precision_ == o.precision_ && valuation_ == o.valuation_ &&
         coeffs_ == o.coeffs_;
}

std::string LaurentTail::to_string() const {
  std::vector<std::pair<std::int64_t, Code>> terms;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) terms.emplace_back(valuation_ + static_cast<std::int64_t>(i), coeffs_[i]);
  }
  const std::string tail = "O(u^" + std::to_string(precision_ + 1) + ")";
  if (terms.empty()) return tail;
  return format_terms(ctx_, terms, 'u') + " + " + tail;
}

std::optional<std::int64_t> first_mismatch(const LaurentTail& a, const LaurentTail& b) {
  const std::int64_t prec = std::min(a.precision(), b.precision());
  const std::int64_t start = std::min(a.valuation(), b.valuation());
  for (std::int64_t e = start; e <= prec; ++e) {
    if (a.coeff(e) != b.coeff(e)) return e;
  }
  return std::nullopt;
}

}  // namespace mzv
