#include "mzv/multizeta.hpp"

#include <limits>
#include <stdexcept>

#include "mzv/powersum.hpp"

namespace mzv {

namespace {

void extend_chains(std::uint64_t q, const std::vector<std::int64_t>& s, std::int64_t budget,
                   std::vector<std::int64_t>& prefix, std::vector<std::vector<std::int64_t>>& out) {
  const std::size_t pos = prefix.size();
  if (pos == s.size()) {
    out.push_back(prefix);
    return;
  }
  const auto remaining = static_cast<std::int64_t>(s.size() - pos);
  // Cheapest completion of the positions after this one: d = remaining-2, ..., 0.
  std::int64_t rest_min = 0;
  for (std::int64_t j = 1; j < remaining; ++j) {
    rest_min += valuation_lower_bound(q, remaining - 1 - j, s[pos + static_cast<std::size_t>(j)]);
  }
  const std::int64_t upper = pos == 0 ? std::numeric_limits<std::int64_t>::max() : prefix.back();
  for (std::int64_t d = remaining - 1; d < upper; ++d) {
    const std::int64_t cost = valuation_lower_bound(q, d, s[pos]);
    if (cost + rest_min > budget) break;
    prefix.push_back(d);
    extend_chains(q, s, budget - cost, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<std::vector<std::int64_t>> zeta_chains(std::uint64_t q, const MZIndex& index, std::int64_t precision) {
  index.validate();
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> prefix;
  extend_chains(q, index.s, precision, prefix, out);
  return out;
}

LaurentTail zeta_trunc(const FieldCtx& ctx, const ZetaRequest& req) {
  req.index.validate();
  if (req.precision < 1) throw std::invalid_argument("precision must be >= 1");
  PowerSums& sums = power_sums(ctx);
  sums.budget().check_precision(req.precision);
  LaurentTail acc(ctx, req.precision);
  for (const auto& chain : zeta_chains(ctx.q(), req.index, req.precision)) {
    RatFunc term = RatFunc::constant(ctx, 1);
    for (std::size_t i = 0; i < chain.size(); ++i) term *= sums.value(chain[i], req.index.s[i]);
    acc += LaurentTail::from_ratfunc(term, req.precision);
  }
  return acc;
}

ShuffleCheck verify_shuffle_numeric(const FieldCtx& ctx, std::int64_t a, std::int64_t b, std::int64_t precision) {
  ShuffleCheck out{false, std::nullopt, shuffle_expand(ctx, a, b)};
  const LaurentTail lhs = zeta_trunc(ctx, {MZIndex{{a}}, precision}) * zeta_trunc(ctx, {MZIndex{{b}}, precision});
  LaurentTail rhs(ctx, precision);
  for (const auto& [idx, c] : out.expansion.terms()) {
    rhs += zeta_trunc(ctx, {idx, precision}).scaled(ctx.from_int(c));
  }
  out.first_mismatch = first_mismatch(lhs, rhs);
  out.ok = !out.first_mismatch.has_value();
  return out;
}

}  // namespace mzv
