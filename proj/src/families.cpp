#include "mzv/families.hpp"

#include <map>
#include <stdexcept>

#include "mzv/powersum.hpp"

namespace mzv {

namespace {

using Terms = std::map<std::int64_t, std::int64_t>;

void add_s1(Terms& terms, std::int64_t index, std::int64_t c) {
  if (index < 1) throw std::logic_error("family produced a non-positive index");
  terms[index] += c;
}

std::int64_t ipow(std::int64_t base, std::int64_t e) {
  return static_cast<std::int64_t>(checked_qpow(static_cast<std::uint64_t>(base), e));
}

}  // namespace

std::int64_t floor_div(std::int64_t n, std::int64_t d) {
  std::int64_t r = n / d;
  if ((n % d != 0) && (n < 0)) --r;
  return r;
}

FamilyParams FamilyParams::make(const FieldCtx& ctx, std::int64_t a) {
  if (a < 1) throw std::invalid_argument("family parameter a must be >= 1");
  FamilyParams fp;
  fp.q = ctx.q();
  fp.p = ctx.p();
  fp.a = a;
  std::int64_t pm = 1;
  while (pm < a) {
    pm *= fp.p;
    ++fp.m;
  }
  fp.r_a = static_cast<std::int64_t>(fp.q - 1) * pm;
  return fp;
}

std::int64_t FamilyParams::phi(std::int64_t i, std::int64_t j) const {
  return r_a - a - j * static_cast<std::int64_t>(q - 1) + i * r_a;
}

std::int64_t FamilyParams::j_max() const { return floor_div(r_a - a, static_cast<std::int64_t>(q - 1)); }

std::int64_t n_bj(const FieldCtx& ctx, std::int64_t b, std::int64_t j) {
  const auto q1 = static_cast<std::int64_t>(ctx.q() - 1);
  return floor_div(b - 1 - (1 + j) * q1, FamilyParams::make(ctx, 2).r_a);
}

RelationSet family_a1(const FieldCtx& ctx, std::int64_t b) {
  if (b < 1) throw std::invalid_argument("b must be >= 1");
  const FamilyParams fp = FamilyParams::make(ctx, 1);
  Terms terms;
  for (std::int64_t i = 0; i < fp.sigma(b); ++i) add_s1(terms, b - fp.phi(i), 1);
  return RelationSet::from_terms(ctx, 1, b, terms);
}

RelationSet recursion_increment(const FieldCtx& ctx, std::int64_t a, std::int64_t b) {
  const std::int64_t p = ctx.p();
  if (a < 2 || a > p) throw std::invalid_argument("recursion needs 2 <= a <= p");
  const FamilyParams fp = FamilyParams::make(ctx, a);
  if (b <= fp.r_a) throw std::invalid_argument("increment needs b > r_a");
  const std::int64_t prev = b - fp.r_a;
  const auto q1 = static_cast<std::int64_t>(ctx.q() - 1);
  Terms terms;
  add_s1(terms, a + prev, 1);
  for (std::int64_t j = 1; j <= p - a; ++j) {
    const std::uint32_t f = lucas_binom(static_cast<std::uint64_t>(a + j - 1), static_cast<std::uint64_t>(j), ctx.p());
    add_s1(terms, a + prev + (p - j) * q1, f);
  }
  return RelationSet::from_terms(ctx, a, b, terms);
}

RelationSet recursion_small_a(const FieldCtx& ctx, std::int64_t a, std::int64_t b) {
  const std::int64_t p = ctx.p();
  if (a < 2 || a > p) throw std::invalid_argument("recursion needs 2 <= a <= p");
  if (b < 1) throw std::invalid_argument("b must be >= 1");
  const FamilyParams fp = FamilyParams::make(ctx, a);
  const std::int64_t beta = fp.beta(b);
  Terms terms;
  for (const auto& pr : derive_relation(ctx, a, beta).pairs) terms[pr.index] += pr.f;
  for (std::int64_t step = beta + fp.r_a; step <= b; step += fp.r_a) {
    for (const auto& pr : recursion_increment(ctx, a, step).pairs) terms[pr.index] += pr.f;
  }
  return RelationSet::from_terms(ctx, a, b, terms);
}

RelationSet family_a2(const FieldCtx& ctx, std::int64_t b) {
  if (b < 1) throw std::invalid_argument("b must be >= 1");
  const std::int64_t p = ctx.p();
  const auto q1 = static_cast<std::int64_t>(ctx.q() - 1);
  Terms terms;
  for (std::int64_t j = 0; j < p; ++j) {
    for (std::int64_t i = 0; i <= n_bj(ctx, b, j); ++i) add_s1(terms, b + 2 - (p * i + 1 + j) * q1, j + 2);
  }
  if (indicator(b, q1)) add_s1(terms, 2, b / q1);
  return RelationSet::from_terms(ctx, 2, b, terms);
}

RelationSet family_a3_q2(const FieldCtx& ctx, std::int64_t b) {
  if (ctx.q() != 2) throw std::invalid_argument("family a3 is stated for q = 2 only");
  if (b < 1) throw std::invalid_argument("b must be >= 1");
  const std::int64_t r3 = FamilyParams::make(ctx, 3).r_a;
  Terms terms;
  for (std::int64_t i = 0; i <= floor_div(b - 5, 4); ++i) add_s1(terms, b - 1 - 4 * i, 1);
  for (std::int64_t i = 0; i <= floor_div(b - 4, 4); ++i) add_s1(terms, b - 4 * i, 1);
  for (std::int64_t i = 1; i <= 2; ++i) {
    if (indicator(b - i, r3)) {
      add_s1(terms, 2, 1);
      add_s1(terms, 3, 1);
    }
  }
  return RelationSet::from_terms(ctx, 3, b, terms);
}

bool check_prop1(const FieldCtx& ctx, std::int64_t n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  const std::int64_t k = 2 * ipow(ctx.q(), n) - 1;
  BracketCache& br = power_sums(ctx).brackets();
  const RatFunc expected(-br.bracket(n + 1), br.bracket(1).pow(static_cast<std::uint64_t>(k + 1)));
  const RatFunc closed = upoly_eval(s1_upoly(ctx, k), ctx);
  const RatFunc brute = s_d_bruteforce(ctx, 1, k);
  return closed == expected && brute == expected;
}

bool check_large_indices(const FieldCtx& ctx, std::int64_t n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  const std::int64_t qn = ipow(ctx.q(), n);
  PowerSums& sums = power_sums(ctx);
  BracketCache& br = sums.brackets();

  const RatFunc& s_qn = sums.value(1, qn);
  const RatFunc& s_qn1 = sums.value(1, qn - 1);
  const RatFunc& s_2qn1 = sums.value(1, 2 * qn - 1);
  const bool brute = s_qn * s_qn1 == s_2qn1 - s_qn;

  const auto uq = static_cast<std::uint64_t>(qn);
  const FqPoly& l1 = br.ell(1);
  const RatFunc f_qn(FqPoly::one(ctx), l1.pow(uq));
  const RatFunc f_qn1(br.ell(n), br.ell(n - 1) * l1.pow(uq));
  const RatFunc f_2qn1(-br.bracket(n + 1), br.bracket(1).pow(2 * uq));
  const bool formulas = f_qn == s_qn && f_qn1 == s_qn1 && f_2qn1 == s_2qn1 && f_qn * f_qn1 == f_2qn1 - f_qn;
  const bool brackets = br.bracket(n + 1) - br.bracket(n) == br.bracket(1).pow(uq);

  const RelationSet rel = derive_relation(ctx, qn, qn - 1);
  const bool derived = rel.pairs.size() == 1 && rel.pairs[0] == RelationPair{ctx.p() - 1, qn};
  return brute && formulas && brackets && derived;
}

bool check_s1_negN(const FieldCtx& ctx, std::int64_t n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  const std::int64_t big = ipow(ctx.q(), n + 1) - 2 * ipow(ctx.q(), n) + 1;
  const auto q1 = static_cast<std::int64_t>(ctx.q() - 1);
  for (std::int64_t l = 1; l * q1 < big; ++l) {
    if (lucas_binom(static_cast<std::uint64_t>(big), static_cast<std::uint64_t>(l * q1), ctx.p()) != 0) return false;
  }
  return s_d_bruteforce(ctx, 1, -big) == RatFunc::constant(ctx, ctx.from_int(-1));
}

}  // namespace mzv
