#include "mzv/relations.hpp"

#include <stdexcept>

namespace mzv {

bool RelationSet::parity_ok() const {
  for (const auto& pr : pairs) {
    if ((a + b - pr.index) % static_cast<std::int64_t>(q - 1) != 0) return false;
  }
  return true;
}

bool RelationSet::well_formed() const {
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (pairs[i].f == 0 || pairs[i].f >= p) return false;
    if (pairs[i].index < 1 || pairs[i].index >= a + b) return false;
    if (i > 0 && pairs[i].index >= pairs[i - 1].index) return false;
  }
  return true;
}

RelationSet RelationSet::from_terms(const FieldCtx& ctx, std::int64_t a, std::int64_t b,
                                    const std::map<std::int64_t, std::int64_t>& terms) {
  RelationSet rel{ctx.q(), ctx.p(), a, b, {}};
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const std::uint32_t f = mod_p(it->second, ctx.p());
    if (f != 0) rel.pairs.push_back({f, it->first});
  }
  return rel;
}

UPoly delta_upoly(const FieldCtx& ctx, std::int64_t a, std::int64_t b) {
  return s1_upoly(ctx, a) * s1_upoly(ctx, b) - s1_upoly(ctx, a + b);
}

UPoly relation_upoly(const FieldCtx& ctx, const RelationSet& rel) {
  UPoly out(ctx.p());
  for (const auto& pr : rel.pairs) out += s1_upoly(ctx, pr.index).scaled(pr.f);
  return out;
}

RatFunc delta_d(PowerSums& sums, std::int64_t d, std::int64_t a, std::int64_t b) {
  return sums.value(d, a) * sums.value(d, b) - sums.value(d, a + b);
}

RelationSet derive_relation(const FieldCtx& ctx, std::int64_t a, std::int64_t b) {
  if (a < 1 || b < 1) throw std::invalid_argument("derive_relation requires a, b >= 1");
  const std::uint32_t p = ctx.p();
  const std::int64_t q1 = ctx.q() - 1;
  RelationSet rel{ctx.q(), p, a, b, {}};
  UPoly work = delta_upoly(ctx, a, b);
  while (!work.is_zero()) {
    const std::int64_t n = work.top();
    // S_1(n) leads with (-1)^n U^n, so this coefficient clears U^n.
    const std::uint32_t theta = work.coeff(n);
    const std::uint32_t f = n % 2 == 0 ? theta : (p - theta) % p;
    if ((a + b - n) % q1 != 0) throw std::logic_error("parity violated in relation derivation");
    if (!rel.pairs.empty() && n >= rel.pairs.back().index) {
      throw std::logic_error("relation derivation failed to lower the top exponent");
    }
    rel.pairs.push_back({f, n});
    work -= s1_upoly(ctx, n).scaled(f);
  }
  return rel;
}

VerifyResult verify_relation_exact(PowerSums& sums, const RelationSet& rel, std::int64_t d) {
  if (d < 0) throw std::invalid_argument("depth must be non-negative");
  const FieldCtx& ctx = sums.field();
  if (rel.q != ctx.q()) throw std::invalid_argument("relation set belongs to another field");
  const std::int64_t w = rel.weight();
  const FqPoly& big = sums.brackets().lfact(d);
  // Both sides are multiplied by L_d^w.  Since L_e divides L_d for e < d,
  // L_d^k * sum_{e<d} S_e(k) is the polynomial sum_{e<d} N_e(k) (L_d/L_e)^k.
  auto tail = [&](std::int64_t k) {
    FqPoly acc(ctx);
    for (std::int64_t e = 0; e < d; ++e) {
      const FqPoly& n = sums.scaled_numerator(e, k);
      if (n.is_zero()) continue;
      acc += n * exact_div(big, sums.brackets().lfact(e)).pow(static_cast<std::uint64_t>(k));
    }
    return acc;
  };
  FqPoly diff = sums.scaled_numerator(d, rel.a) * sums.scaled_numerator(d, rel.b) - sums.scaled_numerator(d, w);
  for (const auto& pr : rel.pairs) {
    const FqPoly& n = sums.scaled_numerator(d, pr.index);
    if (n.is_zero()) continue;
    diff -= (n * tail(w - pr.index)).scaled(pr.f);
  }
  VerifyResult out{diff.is_zero(), d, std::nullopt};
  if (!out.ok) out.witness = RatFunc(std::move(diff), big.pow(static_cast<std::uint64_t>(w)));
  return out;
}

std::int64_t MZIndex::weight() const {
  std::int64_t w = 0;
  for (auto x : s) w += x;
  return w;
}

void MZIndex::validate() const {
  if (s.empty()) throw std::invalid_argument("multizeta index must have depth >= 1");
  for (auto x : s) {
    if (x < 1) throw std::invalid_argument("multizeta index entries must be positive");
  }
}

std::string MZIndex::to_string() const {
  std::string out = "zeta(";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  return out + ")";
}

void MZExpression::add(const MZIndex& index, std::int64_t c) {
  const std::uint32_t r = mod_p(c, p_);
  if (r == 0) return;
  auto [it, inserted] = terms_.try_emplace(index, r);
  if (inserted) return;
  it->second = (it->second + r) % p_;
  if (it->second == 0) terms_.erase(it);
}

bool MZExpression::homogeneous(std::int64_t w) const {
  for (const auto& [idx, c] : terms_) {
    if (idx.weight() != w) return false;
  }
  return true;
}

std::string MZExpression::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [idx, c] : terms_) {
    if (!out.empty()) out += " + ";
    if (c != 1) out += std::to_string(c) + "*";
    out += idx.to_string();
  }
  return out;
}

MZExpression shuffle_expand(const FieldCtx& ctx, std::int64_t a, std::int64_t b) {
  MZExpression e(ctx.p());
  e.add(MZIndex{{a + b}}, 1);
  e.add(MZIndex{{a, b}}, 1);
  e.add(MZIndex{{b, a}}, 1);
  const std::int64_t w = a + b;
  for (const auto& pr : derive_relation(ctx, a, b).pairs) e.add(MZIndex{{pr.index, w - pr.index}}, pr.f);
  return e;
}

}  // namespace mzv
