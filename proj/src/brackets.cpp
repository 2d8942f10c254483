#include "mzv/brackets.hpp"

#include <stdexcept>

namespace mzv {

std::uint64_t checked_qpow(std::uint64_t q, std::int64_t n) {
  if (n < 0) throw std::invalid_argument("negative exponent");
  static const Budget budget = Budget::from_env();
  std::uint64_t r = 1;
  for (std::int64_t i = 0; i < n; ++i) {
    if (r > static_cast<std::uint64_t>(budget.max_degree) / q) {
      throw BudgetExceeded("q^" + std::to_string(n) + " exceeds degree cap");
    }
    r *= q;
  }
  return r;
}

const FqPoly& BracketCache::bracket(std::int64_t n) { return lookup(Kind::bracket, n); }
const FqPoly& BracketCache::ell(std::int64_t n) { return lookup(Kind::ell, n); }
const FqPoly& BracketCache::dfact(std::int64_t n) { return lookup(Kind::dfact, n); }
const FqPoly& BracketCache::lfact(std::int64_t n) { return lookup(Kind::lfact, n); }

const FqPoly& BracketCache::lookup(Kind kind, std::int64_t n) {
  if (n < 0) throw std::invalid_argument("bracket index must be non-negative");
  {
    std::lock_guard lock(mu_);
    auto it = memo_.find({kind, n});
    if (it != memo_.end()) return it->second;
  }
  // Computed outside the lock; a racing thread may duplicate the work but the
  // first insertion wins and entries are never replaced.
  FqPoly value = compute(kind, n);
  std::lock_guard lock(mu_);
  return memo_.try_emplace({kind, n}, std::move(value)).first->second;
}

FqPoly BracketCache::compute(Kind kind, std::int64_t n) {
  const FqPoly t = FqPoly::variable(ctx_);
  switch (kind) {
    case Kind::bracket: {
      if (n == 0) return FqPoly(ctx_);
      return FqPoly::monomial(ctx_, 1, checked_qpow(ctx_.q(), n)) - t;
    }
    case Kind::ell: {
      FqPoly acc = FqPoly::one(ctx_);
      for (std::int64_t i = 1; i <= n; ++i) {
        acc *= t - FqPoly::monomial(ctx_, 1, checked_qpow(ctx_.q(), i));
      }
      return acc;
    }
    case Kind::dfact: {
      if (n == 0) return FqPoly::one(ctx_);
      // D_n = [n] * D_{n-1}^q
      return bracket(n) * dfact(n - 1).pow(ctx_.q());
    }
    case Kind::lfact: {
      if (n == 0) return FqPoly::one(ctx_);
      return bracket(n) * lfact(n - 1);
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace mzv
