#pragma once

// Dense univariate polynomials in t over F_q.

#include <cstdint>
#include <iterator>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mzv/budget.hpp"
#include "mzv/field.hpp"

namespace mzv {

class FqPoly {
 public:
  /// Degree reported for the zero polynomial.
  static constexpr std::int64_t kZeroDegree = std::numeric_limits<std::int64_t>::min();

  explicit FqPoly(FieldCtx ctx) : ctx_(std::move(ctx)) {}
  /// Coefficients low degree first; trailing zeros are dropped.
  FqPoly(FieldCtx ctx, std::vector<Code> coeffs);

  static FqPoly constant(const FieldCtx& ctx, Code c);
  static FqPoly one(const FieldCtx& ctx) { return constant(ctx, 1); }
  /// c * t^e
  static FqPoly monomial(const FieldCtx& ctx, Code c, std::size_t e);
  /// The indeterminate t.
  static FqPoly variable(const FieldCtx& ctx) { return monomial(ctx, 1, 1); }

  const FieldCtx& field() const { return ctx_; }
  std::int64_t degree() const {
    return c_.empty() ? kZeroDegree : static_cast<std::int64_t>(c_.size()) - 1;
  }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  Code coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  FqElem coeff_elem(std::size_t i) const { return FqElem(ctx_, coeff(i)); }
  Code leading() const { return c_.empty() ? 0 : c_.back(); }
  std::span<const Code> coeffs() const { return c_; }
  std::size_t nonzeros() const;

  FqPoly& operator+=(const FqPoly& o);
  FqPoly& operator-=(const FqPoly& o);
  FqPoly& operator*=(const FqPoly& o) { return *this = *this * o; }
  friend FqPoly operator+(FqPoly a, const FqPoly& b) { return a += b; }
  friend FqPoly operator-(FqPoly a, const FqPoly& b) { return a -= b; }
  friend FqPoly operator*(const FqPoly& a, const FqPoly& b);
  FqPoly operator-() const;
  bool operator==(const FqPoly& o) const { return ctx_ == o.ctx_ && c_ == o.c_; }

  FqPoly scaled(Code c) const;
  /// this * t^e
  FqPoly shifted(std::size_t e) const;
  /// Divides by the leading coefficient; zero stays zero.
  FqPoly monic() const;
  /// this^(p^e): coefficients go through the Frobenius, exponents scale by p^e.
  FqPoly frobenius(std::uint32_t e) const;
  /// this^k, computed from the base-p digits of k via the Frobenius.
  FqPoly pow(std::uint64_t k) const;
  /// Value at an element of F_q.
  Code eval(Code x) const;

  /// Inverse of text(): "t^3 + 2*t + 1"; coefficients may be integers
  /// (prime-field embedding) or polynomial-basis tuples "(c0,c1,...)".
  static FqPoly parse(const FieldCtx& ctx, std::string_view text);
  std::string to_string() const;

 private:
  void trim();

  FieldCtx ctx_;
  std::vector<Code> c_;
};

struct PolyDivMod {
  FqPoly quotient;
  FqPoly remainder;
};

/// Euclidean division; throws DivisionByZero when b is zero.
PolyDivMod divmod(const FqPoly& a, const FqPoly& b);
FqPoly rem(const FqPoly& a, const FqPoly& b);
/// Quotient of a division known to be exact; throws std::logic_error otherwise.
FqPoly exact_div(const FqPoly& a, const FqPoly& b);
/// Monic gcd (zero iff both inputs are zero).
FqPoly gcd(const FqPoly& a, const FqPoly& b);
/// Monic lcm of nonzero polynomials.
FqPoly lcm(const FqPoly& a, const FqPoly& b);

/// Deterministic stream of the q^d monic polynomials of degree d, ordered
/// lexicographically on (c_0, ..., c_{d-1}) with c_0 most significant.
class MonicPolys {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = FqPoly;
    using difference_type = std::ptrdiff_t;
    using pointer = const FqPoly*;
    using reference = const FqPoly&;

    iterator() = default;
    reference operator*() const { return *current_; }
    pointer operator->() const { return &*current_; }
    iterator& operator++();
    void operator++(int) { ++*this; }
    bool operator==(const iterator& o) const { return index_ == o.index_; }

   private:
    friend class MonicPolys;
    iterator(const MonicPolys* owner, std::uint64_t index);
    const MonicPolys* owner_ = nullptr;
    std::uint64_t index_ = 0;
    std::vector<Code> digits_;
    std::optional<FqPoly> current_;
  };

  /// Throws BudgetExceeded when q^d exceeds the enumeration cap.
  MonicPolys(FieldCtx ctx, std::int64_t d, const Budget& budget = Budget{});

  iterator begin() const { return iterator(this, 0); }
  iterator end() const { return iterator(this, count_); }
  std::uint64_t size() const { return count_; }
  std::int64_t degree() const { return d_; }

 private:
  FieldCtx ctx_;
  std::int64_t d_;
  std::uint64_t count_;
};

/// Text of one F_q element: the residue for s = 1, "(c0,c1,...)" otherwise.
std::string format_coefficient(const FieldCtx& ctx, Code c);

/// Joins "c*x^e" terms with " + " in the order given; "0" when empty.
std::string format_terms(const FieldCtx& ctx, const std::vector<std::pair<std::int64_t, Code>>& terms,
                         char var);

/// Parses a sum of terms in `var` (integer exponents, possibly negative) into
/// (exponent, coefficient) pairs with like terms merged.  Throws
/// std::invalid_argument on malformed input.
std::vector<std::pair<std::int64_t, Code>> parse_terms(const FieldCtx& ctx, std::string_view text,
                                                       char var);

inline MonicPolys monic_polys(const FieldCtx& ctx, std::int64_t d, const Budget& budget = Budget{}) {
  return MonicPolys(ctx, d, budget);
}

}  // namespace mzv
