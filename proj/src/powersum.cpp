#include "mzv/powersum.hpp"

#include <stdexcept>

namespace mzv {

PowerSums::PowerSums(FieldCtx ctx, Budget budget)
    : ctx_(ctx), budget_(budget), brackets_(std::move(ctx)) {}

const std::vector<FqPoly>& PowerSums::quotients(std::int64_t d) {
  {
    std::lock_guard lock(mu_);
    if (auto it = quotients_.find(d); it != quotients_.end()) return it->second;
  }
  const FqPoly& l = brackets_.lfact(d);
  std::vector<FqPoly> out;
  for (const FqPoly& a : monic_polys(ctx_, d, budget_)) out.push_back(exact_div(l, a));
  std::lock_guard lock(mu_);
  return quotients_.try_emplace(d, std::move(out)).first->second;
}

const FqPoly& PowerSums::scaled_numerator(std::int64_t d, std::int64_t k) {
  if (k < 0) throw std::invalid_argument("scaled_numerator requires k >= 0");
  {
    std::lock_guard lock(mu_);
    if (auto it = numerators_.find({d, k}); it != numerators_.end()) return it->second;
  }
  FqPoly sum(ctx_);
  for (const FqPoly& m : quotients(d)) sum += m.pow(static_cast<std::uint64_t>(k));
  std::lock_guard lock(mu_);
  return numerators_.try_emplace({d, k}, std::move(sum)).first->second;
}

const FqPoly& PowerSums::negative(std::int64_t d, std::int64_t m) {
  if (d < 0 || m < 0) throw std::invalid_argument("negative power sum needs d, m >= 0");
  {
    std::lock_guard lock(mu_);
    if (auto it = negatives_.find({d, m}); it != negatives_.end()) return it->second;
  }
  FqPoly sum(ctx_);
  if (d == 0) {
    sum = FqPoly::one(ctx_);
  } else {
    budget_.check_degree(d * m, "negative power sum");
    // sum_{c in F_q} c^e is -1 when e > 0 and (q-1) | e, and 0 otherwise.
    const std::int64_t q1 = ctx_.q() - 1;
    for (std::int64_t j = m - q1; j >= 0; j -= q1) {
      const std::uint32_t c = lucas_binom(static_cast<std::uint64_t>(m), static_cast<std::uint64_t>(j), ctx_.p());
      if (c == 0) continue;
      const FqPoly& inner = negative(d - 1, j);
      if (inner.is_zero()) continue;
      sum -= inner.shifted(static_cast<std::size_t>(j)).scaled(c);
    }
  }
  std::lock_guard lock(mu_);
  return negatives_.try_emplace({d, m}, std::move(sum)).first->second;
}

const RatFunc& PowerSums::value(std::int64_t d, std::int64_t k) {
  if (d < 0) throw std::invalid_argument("degree must be non-negative");
  {
    std::lock_guard lock(mu_);
    if (auto it = values_.find({d, k}); it != values_.end()) return it->second;
  }
  RatFunc v = k <= 0 ? RatFunc(negative(d, -k))
                     : RatFunc(scaled_numerator(d, k), brackets_.lfact(d).pow(static_cast<std::uint64_t>(k)));
  std::lock_guard lock(mu_);
  return values_.try_emplace({d, k}, std::move(v)).first->second;
}

PowerSums& power_sums(const FieldCtx& ctx) {
  static std::mutex mu;
  static std::map<std::uint32_t, std::unique_ptr<PowerSums>> engines;
  std::lock_guard lock(mu);
  auto& slot = engines[ctx.q()];
  if (!slot) slot = std::make_unique<PowerSums>(ctx);
  return *slot;
}

RatFunc s_d_bruteforce(const FieldCtx& ctx, std::int64_t d, std::int64_t k, const Budget& budget) {
  if (d < 0) throw std::invalid_argument("degree must be non-negative");
  MonicPolys polys(ctx, d, budget);
  if (k <= 0) {
    FqPoly sum(ctx);
    for (const FqPoly& a : polys) sum += a.pow(static_cast<std::uint64_t>(-k));
    return RatFunc(std::move(sum));
  }
  // Common denominator: the product of all monic polynomials of degree d is
  // too large, their lcm L_d is not, and every a divides it.
  BracketCache brackets(ctx);
  const FqPoly& l = brackets.lfact(d);
  FqPoly sum(ctx);
  for (const FqPoly& a : polys) sum += exact_div(l, a).pow(static_cast<std::uint64_t>(k));
  return RatFunc(std::move(sum), l.pow(static_cast<std::uint64_t>(k)));
}

namespace {

// e with q^e == n, if any.
std::optional<std::int64_t> log_q(std::uint64_t n, std::uint64_t q) {
  std::int64_t e = 0;
  while (n > 1 && n % q == 0) {
    n /= q;
    ++e;
  }
  if (n != 1) return std::nullopt;
  return e;
}

}  // namespace

std::optional<RatFunc> s_d_special(BracketCache& br, std::int64_t d, std::int64_t k) {
  if (d < 0) throw std::invalid_argument("degree must be non-negative");
  const FieldCtx& ctx = br.field();
  const std::uint64_t q = ctx.q();
  const std::uint32_t p = ctx.p();
  const FqPoly one = FqPoly::one(ctx);
  if (k >= 1) {
    const auto uk = static_cast<std::uint64_t>(k);
    std::uint64_t a = uk;
    while (a % p == 0) a /= p;
    if (a <= q) return RatFunc(one, br.ell(d).pow(uk));
    if (auto i = log_q(uk + 1, q); i && *i >= 1) {
      return RatFunc(br.ell(d + *i - 1), br.ell(*i - 1) * br.ell(d).pow(uk + 1));
    }
    if (d == 1 && (uk + 1) % 2 == 0) {
      if (auto n = log_q((uk + 1) / 2, q); n && *n >= 1) {
        return RatFunc(-br.bracket(*n + 1), br.bracket(1).pow(uk + 1));
      }
    }
    return std::nullopt;
  }
  const auto m = static_cast<std::uint64_t>(-k);
  if (static_cast<std::uint64_t>(d) * (q - 1) > digit_sum(m, q)) return RatFunc(ctx);
  if (auto e = log_q(m + 1, q); e && *e >= d) {
    const FqPoly den = br.lfact(d) * br.dfact(*e - d).pow(checked_qpow(q, d));
    RatFunc v(br.dfact(*e), den);
    return d % 2 == 0 ? v : -v;
  }
  return std::nullopt;
}

namespace {

// sum over e > d_2 > ... > d_r >= 0 of S_{d_2}(s_2) ... S_{d_r}(s_r), with
// `rest` = (s_2, ..., s_r) and `below` = e.
RatFunc nested_tail(PowerSums& sums, std::int64_t below, std::span<const std::int64_t> rest) {
  if (rest.empty()) return RatFunc::constant(sums.field(), 1);
  RatFunc acc(sums.field());
  const auto n = static_cast<std::int64_t>(rest.size());
  for (std::int64_t e = n - 1; e < below; ++e) {
    acc += sums.value(e, rest[0]) * nested_tail(sums, e, rest.subspan(1));
  }
  return acc;
}

}  // namespace

RatFunc s_d_nested(PowerSums& sums, std::int64_t d, std::span<const std::int64_t> s) {
  if (s.empty()) throw std::invalid_argument("nested power sum needs at least one index");
  return sums.value(d, s[0]) * nested_tail(sums, d, s.subspan(1));
}

std::int64_t valuation_lower_bound(std::uint64_t q, std::int64_t d, std::int64_t k) {
  return d * k + static_cast<std::int64_t>(q - 1) * d * (d + 1) / 2;
}

}  // namespace mzv
