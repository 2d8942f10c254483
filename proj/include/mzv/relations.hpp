#pragma once

// Shuffle-relation sets S(a, b): derivation by U-polynomial reduction, exact
// verification at any depth d, and the multizeta expressions they produce.

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mzv/powersum.hpp"
#include "mzv/upoly.hpp"

namespace mzv {

struct RelationPair {
  std::uint32_t f = 1;     // nonzero residue mod p
  std::int64_t index = 1;  // a_i
  bool operator==(const RelationPair&) const = default;
};

/// Delta_d(a, b) = sum_i f_i S_d(a_i, a + b - a_i), with a_i strictly decreasing.
struct RelationSet {
  std::uint64_t q = 2;
  std::uint32_t p = 2;
  std::int64_t a = 1;
  std::int64_t b = 1;
  std::vector<RelationPair> pairs;

  std::int64_t weight() const { return a + b; }
  /// (q - 1) divides a + b - a_i for every pair.
  bool parity_ok() const;
  /// Strictly decreasing indices, all in [1, a + b), coefficients in [1, p).
  bool well_formed() const;
  bool operator==(const RelationSet&) const = default;

  /// Builds the canonical set from index -> coefficient contributions,
  /// merging mod p and dropping zeros.
  static RelationSet from_terms(const FieldCtx& ctx, std::int64_t a, std::int64_t b,
                                const std::map<std::int64_t, std::int64_t>& terms);
};

/// S_1(a) S_1(b) - S_1(a + b) as a U-polynomial.
UPoly delta_upoly(const FieldCtx& ctx, std::int64_t a, std::int64_t b);
/// sum_i f_i S_1(a_i) as a U-polynomial.
UPoly relation_upoly(const FieldCtx& ctx, const RelationSet& rel);

/// Delta_d(a, b) = S_d(a) S_d(b) - S_d(a + b), exactly.
RatFunc delta_d(PowerSums& sums, std::int64_t d, std::int64_t a, std::int64_t b);

/// Greedy top-down reduction of Delta(a, b) against the S_1 closed forms.
RelationSet derive_relation(const FieldCtx& ctx, std::int64_t a, std::int64_t b);

struct VerifyResult {
  bool ok = false;
  std::int64_t d = 0;
  /// LHS - RHS in K when the check fails.
  std::optional<RatFunc> witness;
};

/// Checks S_d(a) S_d(b) - S_d(a+b) = sum f_i S_d(a_i, a+b-a_i) in K.
VerifyResult verify_relation_exact(PowerSums& sums, const RelationSet& rel, std::int64_t d);

struct MZIndex {
  std::vector<std::int64_t> s;

  std::int64_t weight() const;
  std::int64_t depth() const { return static_cast<std::int64_t>(s.size()); }
  /// Throws std::invalid_argument when empty or some s_i < 1.
  void validate() const;
  auto operator<=>(const MZIndex&) const = default;
  bool operator==(const MZIndex&) const = default;
  /// "zeta(1,2)"
  std::string to_string() const;
};

/// Z/pZ-linear combination of multizeta symbols.
class MZExpression {
 public:
  explicit MZExpression(std::uint32_t p) : p_(p) {}

  std::uint32_t p() const { return p_; }
  void add(const MZIndex& index, std::int64_t c);
  const std::map<MZIndex, std::uint32_t>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// True when every term has weight w.
  bool homogeneous(std::int64_t w) const;
  bool operator==(const MZExpression&) const = default;
  /// "zeta(3) + zeta(1,2)", ordered by index.
  std::string to_string() const;

 private:
  std::uint32_t p_;
  std::map<MZIndex, std::uint32_t> terms_;
};

/// zeta(a+b) + zeta(a,b) + zeta(b,a) + sum f_i zeta(a_i, a+b-a_i): the
/// expansion of zeta(a) zeta(b).
MZExpression shuffle_expand(const FieldCtx& ctx, std::int64_t a, std::int64_t b);

}  // namespace mzv
