#pragma once

// Closed-form generators for the relation sets S(a, b) of the known families,
// and the standalone identity checks for the large-index cases.

#include <cstdint>

#include "mzv/relations.hpp"

namespace mzv {

/// floor(n / d) for d > 0, rounding toward negative infinity.
std::int64_t floor_div(std::int64_t n, std::int64_t d);

struct FamilyParams {
  std::uint64_t q = 2;
  std::uint32_t p = 2;
  std::int64_t a = 1;
  std::int64_t m = 0;    // smallest m with a <= p^m
  std::int64_t r_a = 1;  // (q-1) p^m

  /// Throws std::invalid_argument for a < 1.
  static FamilyParams make(const FieldCtx& ctx, std::int64_t a);

  /// r_a - a - j(q-1) + i r_a
  std::int64_t phi(std::int64_t i, std::int64_t j = 0) const;
  std::int64_t j_max() const;
  /// b = r_a sigma + beta with 0 < beta <= r_a.
  std::int64_t sigma(std::int64_t b) const { return (b - 1) / r_a; }
  std::int64_t beta(std::int64_t b) const { return b - r_a * sigma(b); }
};

/// [[x / y]]: 1 when y divides x, else 0.
inline std::int64_t indicator(std::int64_t x, std::int64_t y) { return x % y == 0 ? 1 : 0; }

/// n(b, j) = floor((b - 1 - (1+j)(q-1)) / r_2).
std::int64_t n_bj(const FieldCtx& ctx, std::int64_t b, std::int64_t j);

/// S(1, b) = { (1, b - phi(i)) : 0 <= i < sigma }.
RelationSet family_a1(const FieldCtx& ctx, std::int64_t b);

/// T(a, b): the pairs added when going from S(a, b - r_a) to S(a, b), for
/// 2 <= a <= p and b > r_a.
RelationSet recursion_increment(const FieldCtx& ctx, std::int64_t a, std::int64_t b);

/// S(a, b) for 2 <= a <= p: derived base case at beta, then sigma increments.
/// Throws std::invalid_argument when a is outside [2, p].
RelationSet recursion_small_a(const FieldCtx& ctx, std::int64_t a, std::int64_t b);

/// S(2, b) from the j-indexed double sum plus the [[b/(q-1)]] term on a_i = 2.
RelationSet family_a2(const FieldCtx& ctx, std::int64_t b);

/// S(3, b) at q = 2; throws std::invalid_argument for other q.
RelationSet family_a3_q2(const FieldCtx& ctx, std::int64_t b);

/// S_1(2q^n - 1) = -[n+1] / [1]^{2q^n}, via both the closed form and brute force.
bool check_prop1(const FieldCtx& ctx, std::int64_t n);

/// S_1(q^n) S_1(q^n - 1) = S_1(2q^n - 1) - S_1(q^n), checked by brute force and
/// by the special-value formulas, plus [n+1] - [n] = [1]^{q^n} and the derived
/// relation set {(-1, q^n)}.
bool check_large_indices(const FieldCtx& ctx, std::int64_t n);

/// S_1(-N) = -1 for N = q^{n+1} - 2q^n + 1, by expansion, together with the
/// vanishing of C(N, l(q-1)) mod p for 0 < l < N/(q-1).
bool check_s1_negN(const FieldCtx& ctx, std::int64_t n);

}  // namespace mzv
