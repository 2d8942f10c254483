#pragma once

// Finite fields F_q, q = p^s, in a polynomial basis over F_p, plus the base-p
// digit machinery (Lucas binomials, digit sums) the closed forms are built on.

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace mzv {

/// Packed F_q element: the polynomial-basis coordinates c_0..c_{s-1} read as
/// base-p digits, code = sum c_i p^i.  For s = 1 the code is the residue.
using Code = std::uint32_t;

inline constexpr std::uint64_t kMaxFieldOrder = std::uint64_t{1} << 16;

namespace detail {
struct FieldTables;
}

/// Shared, immutable description of F_q.  Copies are cheap handles.
class FieldCtx {
 public:
  /// Throws std::invalid_argument for non-prime p or s == 0 and
  /// std::overflow_error when p^s exceeds kMaxFieldOrder.
  FieldCtx(std::uint64_t p, std::uint64_t s);

  std::uint32_t p() const;
  std::uint32_t s() const;
  std::uint32_t q() const;
  bool is_prime_field() const { return s() == 1; }

  /// Monic modulus over F_p, coefficients low degree first (length s + 1).
  /// For s == 1 this is the placeholder {0, 1}.
  const std::vector<std::uint32_t>& modulus() const;

  Code zero() const { return 0; }
  Code one() const { return 1; }
  Code add(Code a, Code b) const;
  Code sub(Code a, Code b) const;
  Code neg(Code a) const;
  Code mul(Code a, Code b) const;
  /// Throws DivisionByZero for a == 0.
  Code inv(Code a) const;
  Code pow(Code a, std::uint64_t e) const;
  /// a^(p^e)
  Code frobenius(Code a, std::uint32_t e) const;
  /// Prime-field embedding of an integer.
  Code from_int(std::int64_t n) const;
  /// True when the element lies in F_p; then `to_prime` gives the residue.
  bool in_prime_field(Code a) const { return a < p(); }

  std::vector<std::uint32_t> coords(Code a) const;
  /// Throws std::invalid_argument if there are more than s coordinates or a
  /// coordinate is >= p.
  Code from_coords(std::span<const std::uint32_t> c) const;

  /// dst[i] += c * src[i] over F_q, for i < min(dst.size(), src.size()).
  void axpy(std::span<Code> dst, std::span<const Code> src, Code c) const;

  bool operator==(const FieldCtx& other) const;
  bool operator!=(const FieldCtx& other) const { return !(*this == other); }

  std::string name() const;

 private:
  std::shared_ptr<const detail::FieldTables> t_;
};

FieldCtx make_field(std::uint64_t p, std::uint64_t s);

/// Factor q as p^s and build the field; throws std::invalid_argument when q is
/// not a prime power.
FieldCtx make_field_for_order(std::uint64_t q);

/// An element of F_q together with its field.
class FqElem {
 public:
  FqElem(FieldCtx ctx, Code code);
  static FqElem from_coords(const FieldCtx& ctx, std::span<const std::uint32_t> c);

  const FieldCtx& field() const { return ctx_; }
  Code code() const { return code_; }
  std::vector<std::uint32_t> coords() const { return ctx_.coords(code_); }
  bool is_zero() const { return code_ == 0; }

  FqElem operator+(const FqElem& o) const;
  FqElem operator-(const FqElem& o) const;
  FqElem operator*(const FqElem& o) const;
  FqElem operator/(const FqElem& o) const;
  FqElem operator-() const;
  FqElem inv() const;
  FqElem pow(std::uint64_t e) const;
  bool operator==(const FqElem& o) const { return ctx_ == o.ctx_ && code_ == o.code_; }

 private:
  FieldCtx ctx_;
  Code code_;
};

/// Little-endian base-`base` digits; zero is represented by the single digit 0.
struct DigitVec {
  std::uint64_t base = 2;
  std::vector<std::uint64_t> digits;

  std::uint64_t value() const;
  bool operator==(const DigitVec&) const = default;
};

/// Throws std::invalid_argument for base < 2.
DigitVec digits(std::uint64_t n, std::uint64_t base);

/// Sum of the base-`base` digits of n.
std::uint64_t digit_sum(std::uint64_t n, std::uint64_t base);

/// C(m, n) mod p by Lucas' theorem.  Returns 0 when n > m.
std::uint32_t lucas_binom(std::uint64_t m, std::uint64_t n, std::uint32_t p);

/// True iff (q - 1) divides n ("even" in the function-field sense).
bool is_even_mult(std::int64_t n, std::uint64_t q);

bool is_prime(std::uint64_t n);

/// Non-negative residue of n modulo m.
inline std::uint32_t mod_p(std::int64_t n, std::uint32_t m) {
  std::int64_t r = n % static_cast<std::int64_t>(m);
  return static_cast<std::uint32_t>(r < 0 ? r + m : r);
}

}  // namespace mzv
