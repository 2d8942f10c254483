#pragma once

// Elements of K = F_q(t), always stored in lowest terms with a monic
// denominator, so structural equality is value equality.

#include <cstdint>
#include <string>
#include <string_view>

#include "mzv/poly.hpp"

namespace mzv {

class RatFunc {
 public:
  explicit RatFunc(const FieldCtx& ctx);  // zero
  explicit RatFunc(FqPoly num);
  /// Throws DivisionByZero when den is zero.
  RatFunc(FqPoly num, FqPoly den);

  static RatFunc constant(const FieldCtx& ctx, Code c) { return RatFunc(FqPoly::constant(ctx, c)); }
  static RatFunc from_int(const FieldCtx& ctx, std::int64_t n) { return constant(ctx, ctx.from_int(n)); }

  const FieldCtx& field() const { return num_.field(); }
  const FqPoly& num() const { return num_; }
  const FqPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_one(); }
  /// Order of vanishing at infinity, deg den - deg num.  Meaningless for zero.
  std::int64_t valuation() const { return den_.degree() - num_.degree(); }

  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inv(); }
  RatFunc operator-() const;
  bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }

  RatFunc scaled(Code c) const;
  /// Throws DivisionByZero for zero.
  RatFunc inv() const;
  /// Integer power; negative k requires a nonzero value.
  RatFunc pow(std::int64_t k) const;

  /// "num" when the denominator is 1, otherwise "(num)/(den)" with the
  /// parentheses dropped around single terms.
  std::string to_string() const;
  static RatFunc parse(const FieldCtx& ctx, std::string_view text);

 private:
  struct Reduced {};
  RatFunc(Reduced, FqPoly num, FqPoly den) : num_(std::move(num)), den_(std::move(den)) {}

  FqPoly num_;
  FqPoly den_;
};

}  // namespace mzv
