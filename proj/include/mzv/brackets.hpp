#pragma once

// The Carlitz building blocks
//   [n]  = t^{q^n} - t
//   l_n  = prod_{i=1}^{n} (t - t^{q^i})        (= (-1)^n [n][n-1]...[1])
//   D_n  = [n][n-1]^q ... [1]^{q^{n-1}}
//   L_n  = [n][n-1] ... [1]
// memoised per field.  L_d is also the lcm of all monic polynomials of
// degree d, which the power-sum engine relies on.

#include <cstdint>
#include <map>
#include <mutex>

#include "mzv/poly.hpp"

namespace mzv {

class BracketCache {
 public:
  explicit BracketCache(FieldCtx ctx) : ctx_(std::move(ctx)) {}
  BracketCache(const BracketCache&) = delete;
  BracketCache& operator=(const BracketCache&) = delete;

  const FieldCtx& field() const { return ctx_; }

  /// [n], n >= 0 ([0] = 0).  Throws BudgetExceeded if q^n is too large.
  const FqPoly& bracket(std::int64_t n);
  /// l_n by its product definition, l_0 = 1.
  const FqPoly& ell(std::int64_t n);
  /// D_n, D_0 = 1.
  const FqPoly& dfact(std::int64_t n);
  /// L_n, L_0 = 1.
  const FqPoly& lfact(std::int64_t n);

 private:
  enum class Kind { bracket, ell, dfact, lfact };
  const FqPoly& lookup(Kind kind, std::int64_t n);
  FqPoly compute(Kind kind, std::int64_t n);

  FieldCtx ctx_;
  std::mutex mu_;
  std::map<std::pair<Kind, std::int64_t>, FqPoly> memo_;
};

/// q^n with overflow and degree-cap checks.
std::uint64_t checked_qpow(std::uint64_t q, std::int64_t n);

}  // namespace mzv
