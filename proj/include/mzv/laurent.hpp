#pragma once

// Truncated Laurent series in u = 1/t over F_q: elements of K_inf known
// through an absolute order u^N.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mzv/ratfunc.hpp"

namespace mzv {

class LaurentTail {
 public:
  /// O(u^{precision+1}), i.e. zero to the given precision.
  LaurentTail(FieldCtx ctx, std::int64_t precision);
  /// coeffs[i] is the coefficient of u^{valuation+i}; anything past
  /// `precision` is dropped and leading zeros move the valuation up.
  LaurentTail(FieldCtx ctx, std::int64_t valuation, std::vector<Code> coeffs, std::int64_t precision);

  /// Expansion of x in powers of 1/t through u^precision.
  static LaurentTail from_ratfunc(const RatFunc& x, std::int64_t precision);

  const FieldCtx& field() const { return ctx_; }
  /// Exponent of the first nonzero coefficient; precision + 1 when empty.
  std::int64_t valuation() const { return valuation_; }
  std::int64_t precision() const { return precision_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Coefficient of u^e; throws std::out_of_range for e > precision.
  Code coeff(std::int64_t e) const;
  const std::vector<Code>& coeffs() const { return coeffs_; }

  LaurentTail operator+(const LaurentTail& o) const;
  LaurentTail operator-(const LaurentTail& o) const { return *this + (-o); }
  LaurentTail operator*(const LaurentTail& o) const;
  LaurentTail operator-() const;
  LaurentTail& operator+=(const LaurentTail& o) { return *this = *this + o; }
  LaurentTail scaled(Code c) const;
  /// k >= 1
  LaurentTail pow(std::int64_t k) const;
  /// Drops everything beyond u^n (n may not exceed the current precision).
  LaurentTail truncated(std::int64_t n) const;

  /// Structural equality (same precision, same coefficients).
  bool operator==(const LaurentTail& o) const;

  /// "u^2 + u^3 + O(u^41)"
  std::string to_string() const;

 private:
  void normalize();

  FieldCtx ctx_;
  std::int64_t valuation_;
  std::vector<Code> coeffs_;
  std::int64_t precision_;
};

/// First u-order through min(a.precision, b.precision) where the two tails
/// differ, or nullopt if they agree there.
std::optional<std::int64_t> first_mismatch(const LaurentTail& a, const LaurentTail& b);

}  // namespace mzv
