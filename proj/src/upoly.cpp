#include "mzv/upoly.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace mzv {

std::uint32_t UPoly::coeff(std::int64_t e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? 0 : it->second;
}

std::int64_t UPoly::top() const {
  if (terms_.empty()) throw std::logic_error("top() of the zero U-polynomial");
  return terms_.rbegin()->first;
}

void UPoly::add_term(std::int64_t e, std::int64_t c) {
  if (e < 0) throw std::invalid_argument("negative U exponent");
  const std::uint32_t r = mod_p(c, p_);
  if (r == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, r);
  if (inserted) return;
  it->second = (it->second + r) % p_;
  if (it->second == 0) terms_.erase(it);
}

UPoly& UPoly::operator+=(const UPoly& o) {
  if (o.p_ != p_) throw std::invalid_argument("U-polynomials over different primes");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
  if (o.p_ != p_) throw std::invalid_argument("U-polynomials over different primes");
  for (const auto& [e, c] : o.terms_) add_term(e, p_ - c);
  return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.p_ != b.p_) throw std::invalid_argument("U-polynomials over different primes");
  UPoly out(a.p_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      out.add_term(ea + eb, static_cast<std::int64_t>(std::uint64_t{ca} * cb % a.p_));
    }
  }
  return out;
}

UPoly UPoly::scaled(std::int64_t c) const {
  UPoly out(p_);
  const std::uint32_t r = mod_p(c, p_);
  if (r == 0) return out;
  for (const auto& [e, x] : terms_) out.terms_.emplace(e, static_cast<std::uint32_t>(std::uint64_t{x} * r % p_));
  return out;
}

std::string UPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!out.empty()) out += " + ";
    const auto [e, c] = *it;
    if (e == 0) {
      out += std::to_string(c);
      continue;
    }
    if (c != 1) out += std::to_string(c) + "*";
    out += "U";
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

UPoly S1Form::to_upoly() const {
  UPoly out(p);
  for (const auto& t : terms) out.add_term(t.exponent, t.coeff);
  return out;
}

S1Form s1_closed_form(const FieldCtx& ctx, std::int64_t a) {
  if (a < 1) throw std::invalid_argument("s1_closed_form requires a >= 1");
  S1Form f;
  f.q = ctx.q();
  f.p = ctx.p();
  f.a = a;
  const std::int64_t q1 = static_cast<std::int64_t>(f.q) - 1;
  const std::int64_t n_a = (a - 1) / static_cast<std::int64_t>(f.q);
  auto sign = [&](std::int64_t e) -> std::uint32_t { return e % 2 == 0 ? 1 : f.p - 1; };
  f.terms.push_back({0, a, sign(a) % f.p});
  for (std::int64_t i = 1; i <= n_a; ++i) {
    const std::uint64_t top = static_cast<std::uint64_t>(a - 1 - i * q1);
    const std::uint32_t b = lucas_binom(top, static_cast<std::uint64_t>(i), f.p);
    if (b == 0) continue;
    const std::uint32_t c = static_cast<std::uint32_t>(std::uint64_t{b} * sign(a + i) % f.p);
    f.terms.push_back({i, a - i * q1, c});
  }
  return f;
}

const UPoly& s1_upoly(const FieldCtx& ctx, std::int64_t a) {
  static std::mutex mu;
  static std::map<std::pair<std::uint32_t, std::int64_t>, UPoly> memo;
  const auto key = std::make_pair(ctx.q(), a);
  {
    std::lock_guard lock(mu);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
  }
  UPoly value = s1_closed_form(ctx, a).to_upoly();
  std::lock_guard lock(mu);
  return memo.try_emplace(key, std::move(value)).first->second;
}

RatFunc upoly_eval(const UPoly& x, const FieldCtx& ctx) {
  if (x.p() != ctx.p()) throw std::invalid_argument("U-polynomial characteristic does not match the field");
  if (x.is_zero()) return RatFunc(ctx);
  // sum theta_e U^e = (sum theta_e [1]^{E-e}) / [1]^E, evaluated by Horner in [1].
  const FqPoly b1 = FqPoly::monomial(ctx, 1, ctx.q()) - FqPoly::variable(ctx);
  const std::int64_t top = x.top();
  FqPoly num(ctx);
  for (std::int64_t e = 0; e <= top; ++e) {
    if (e != 0) num = num * b1;
    if (const std::uint32_t c = x.coeff(e); c != 0) num += FqPoly::constant(ctx, ctx.from_int(c));
  }
  return RatFunc(std::move(num), b1.pow(static_cast<std::uint64_t>(top)));
}

LaurentTail upoly_eval(const UPoly& x, const FieldCtx& ctx, std::int64_t precision) {
  return LaurentTail::from_ratfunc(upoly_eval(x, ctx), precision);
}

}  // namespace mzv
