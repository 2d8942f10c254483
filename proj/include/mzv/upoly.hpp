#pragma once

// F_p-linear combinations of powers of the formal symbol U = 1/[1], the form
// in which every S_1-identity is reduced.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "mzv/laurent.hpp"
#include "mzv/ratfunc.hpp"

namespace mzv {

class UPoly {
 public:
  explicit UPoly(std::uint32_t p) : p_(p) {}

  std::uint32_t p() const { return p_; }
  bool is_zero() const { return terms_.empty(); }
  /// exponent -> nonzero residue, ascending
  const std::map<std::int64_t, std::uint32_t>& terms() const { return terms_; }
  std::uint32_t coeff(std::int64_t e) const;
  /// Highest exponent with a nonzero coefficient; throws std::logic_error on zero.
  std::int64_t top() const;

  /// Adds c * U^e (c taken mod p).  Exponents must be nonnegative.
  void add_term(std::int64_t e, std::int64_t c);

  UPoly& operator+=(const UPoly& o);
  UPoly& operator-=(const UPoly& o);
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  UPoly scaled(std::int64_t c) const;
  bool operator==(const UPoly& o) const { return p_ == o.p_ && terms_ == o.terms_; }

  /// "2*U^5 + U^3"
  std::string to_string() const;

 private:
  std::uint32_t p_;
  std::map<std::int64_t, std::uint32_t> terms_;
};

/// The closed form of S_1(a) as a U-polynomial.
struct S1Form {
  struct Term {
    std::int64_t i;
    std::int64_t exponent;  // a - i(q-1)
    std::uint32_t coeff;    // alpha_{a,i} mod p, nonzero
  };
  std::uint64_t q = 2;
  std::uint32_t p = 2;
  std::int64_t a = 1;
  std::vector<Term> terms;  // increasing i, so decreasing exponent

  UPoly to_upoly() const;
};

/// Throws std::invalid_argument for a < 1.
S1Form s1_closed_form(const FieldCtx& ctx, std::int64_t a);
/// s1_closed_form(ctx, a).to_upoly(), memoised per (q, a).
const UPoly& s1_upoly(const FieldCtx& ctx, std::int64_t a);

/// Substitutes U = 1/[1] exactly; coefficients enter F_q through F_p.
RatFunc upoly_eval(const UPoly& x, const FieldCtx& ctx);
LaurentTail upoly_eval(const UPoly& x, const FieldCtx& ctx, std::int64_t precision);

}  // namespace mzv
