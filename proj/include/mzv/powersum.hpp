#pragma once

// Power sums S_d(k) = sum over monic a of degree d of a^{-k}, their nested
// versions, and the closed forms the identities are checked against.

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <vector>

#include "mzv/brackets.hpp"
#include "mzv/budget.hpp"
#include "mzv/ratfunc.hpp"

namespace mzv {

/// Memoising evaluator for S_d(k) over one field.  Safe to share between
/// threads; cached entries are immutable once inserted.
///
/// Positive k goes through the common denominator L_d (the lcm of all monic
/// polynomials of degree d):  S_d(k) = N_d(k) / L_d^k with
/// N_d(k) = sum_a (L_d / a)^k.  Non-positive k uses
///   S_d(-k) = - sum_{j < k, (q-1) | k-j} C(k, j) t^j S_{d-1}(-j),
/// which is the direct sum with the constant coefficient summed out first.
class PowerSums {
 public:
  explicit PowerSums(FieldCtx ctx, Budget budget = Budget::from_env());
  PowerSums(const PowerSums&) = delete;
  PowerSums& operator=(const PowerSums&) = delete;

  const FieldCtx& field() const { return ctx_; }
  const Budget& budget() const { return budget_; }
  BracketCache& brackets() { return brackets_; }

  /// S_d(k) for any integer k.
  const RatFunc& value(std::int64_t d, std::int64_t k);
  /// N_d(k) for k >= 0.
  const FqPoly& scaled_numerator(std::int64_t d, std::int64_t k);
  /// S_d(-m) for m >= 0 (a polynomial).
  const FqPoly& negative(std::int64_t d, std::int64_t m);
  /// The q^d quotients L_d / a, in monic_polys order.
  const std::vector<FqPoly>& quotients(std::int64_t d);

 private:
  FieldCtx ctx_;
  Budget budget_;
  BracketCache brackets_;
  std::mutex mu_;
  std::map<std::int64_t, std::vector<FqPoly>> quotients_;
  std::map<std::pair<std::int64_t, std::int64_t>, FqPoly> numerators_;
  std::map<std::pair<std::int64_t, std::int64_t>, FqPoly> negatives_;
  std::map<std::pair<std::int64_t, std::int64_t>, RatFunc> values_;
};

/// Process-wide engine for the field of order q (fields are deterministic in q).
PowerSums& power_sums(const FieldCtx& ctx);

/// S_d(k) by enumerating every monic polynomial of degree d.
RatFunc s_d_bruteforce(const FieldCtx& ctx, std::int64_t d, std::int64_t k,
                       const Budget& budget = Budget::from_env());

/// Closed-form value when (d, k) matches one of the known special shapes:
///   k = a p^n with a <= q          1 / l_d^k
///   k = q^i - 1, i >= 1            l_{d+i-1} / (l_{i-1} l_d^{q^i})
///   d = 1, k = 2q^n - 1, n >= 1    -[n+1] / [1]^{2q^n}
///   k = -m, d(q-1) > l(m)          0     (l(m) = base-q digit sum)
///   k = -(q^e - 1), e >= d         (-1)^d D_e / (L_d D_{e-d}^{q^d})
/// and nullopt otherwise.
std::optional<RatFunc> s_d_special(BracketCache& brackets, std::int64_t d, std::int64_t k);

/// S_d(s_1, ..., s_r) = S_d(s_1) * sum over d > d_2 > ... > d_r >= 0 of
/// S_{d_2}(s_2) ... S_{d_r}(s_r).  Throws std::invalid_argument on an empty index.
RatFunc s_d_nested(PowerSums& sums, std::int64_t d, std::span<const std::int64_t> s);

/// Lower bound for the u-adic valuation of S_d(k), k >= 1:
/// d k + (q-1) d (d+1) / 2.
std::int64_t valuation_lower_bound(std::uint64_t q, std::int64_t d, std::int64_t k);

}  // namespace mzv
