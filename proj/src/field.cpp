#include "mzv/field.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "mzv/budget.hpp"
#include "mzv/kernels.hpp"

namespace mzv {

namespace detail {

struct FieldTables {
  std::uint32_t p = 2;
  std::uint32_t s = 1;
  std::uint32_t q = 2;
  std::vector<std::uint32_t> modulus;
  std::vector<std::uint32_t> pw;       // p^i, i <= s
  std::vector<Code> exp;               // 2(q-1) entries, s > 1 only
  std::vector<std::uint32_t> log;      // q entries, s > 1 only
  std::vector<Code> inv;               // q entries
};

}  // namespace detail

namespace {

using Coeffs = std::vector<std::uint32_t>;

// Remainder of f modulo monic g over F_p (both low degree first).
Coeffs rem_fp(Coeffs f, const Coeffs& g, std::uint32_t p) {
  const std::size_t dg = g.size() - 1;
  while (!f.empty() && f.back() == 0) f.pop_back();
  while (f.size() > dg) {
    const std::uint32_t lead = f.back();
    const std::size_t shift = f.size() - 1 - dg;
    for (std::size_t i = 0; i <= dg; ++i) {
      f[shift + i] = (f[shift + i] + (p - lead) * g[i]) % p;
    }
    while (!f.empty() && f.back() == 0) f.pop_back();
  }
  return f;
}

bool irreducible_fp(const Coeffs& f, std::uint32_t p) {
  const std::size_t deg = f.size() - 1;
  if (deg <= 1) return true;
  for (std::size_t e = 1; e <= deg / 2; ++e) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < e; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      Coeffs g(e + 1, 0);
      g[e] = 1;
      std::uint64_t x = idx;
      for (std::size_t i = 0; i < e; ++i) {
        g[i] = static_cast<std::uint32_t>(x % p);
        x /= p;
      }
      if (rem_fp(f, g, p).empty()) return false;
    }
  }
  return true;
}

// Smallest monic irreducible of degree s, comparing (c_0, c_1, ..., c_{s-1})
// lexicographically with c_0 most significant.
Coeffs smallest_irreducible(std::uint32_t p, std::uint32_t s) {
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < s; ++i) count *= p;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    Coeffs f(s + 1, 0);
    f[s] = 1;
    std::uint64_t x = idx;
    for (std::uint32_t i = s; i-- > 0;) {
      f[i] = static_cast<std::uint32_t>(x % p);
      x /= p;
    }
    if (irreducible_fp(f, p)) return f;
  }
  throw std::logic_error("no irreducible polynomial found");  // unreachable
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

Code slow_mul(const detail::FieldTables& t, Code a, Code b) {
  Coeffs ca(t.s), cb(t.s);
  for (std::uint32_t i = 0; i < t.s; ++i) {
    ca[i] = a % t.p;
    a /= t.p;
    cb[i] = b % t.p;
    b /= t.p;
  }
  Coeffs prod(2 * t.s - 1, 0);
  for (std::uint32_t i = 0; i < t.s; ++i)
    for (std::uint32_t j = 0; j < t.s; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % t.p;
  Coeffs r = rem_fp(std::move(prod), t.modulus, t.p);
  Code out = 0;
  for (std::size_t i = r.size(); i-- > 0;) out = out * t.p + r[i];
  return out;
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::int64_t t0 = 0, t1 = 1, r0 = p, r1 = a;
  while (r1 != 0) {
    std::int64_t qt = r0 / r1;
    std::tie(t0, t1) = std::make_pair(t1, t0 - qt * t1);
    std::tie(r0, r1) = std::make_pair(r1, r0 - qt * r1);
  }
  return mod_p(t0, p);
}

std::shared_ptr<const detail::FieldTables> build_tables(std::uint64_t p, std::uint64_t s) {
  if (s == 0) throw std::invalid_argument("field degree s must be positive");
  if (!is_prime(p)) throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
  std::uint64_t q = 1;
  for (std::uint64_t i = 0; i < s; ++i) {
    if (q > kMaxFieldOrder / p) {
      throw std::overflow_error("field order " + std::to_string(p) + "^" + std::to_string(s) +
                                " exceeds 2^16");
    }
    q *= p;
  }
  if (p > kernels::kMaxPrime) {
    throw std::overflow_error("characteristic " + std::to_string(p) + " exceeds kernel lane bound " +
                              std::to_string(kernels::kMaxPrime));
  }
  auto t = std::make_shared<detail::FieldTables>();
  t->p = static_cast<std::uint32_t>(p);
  t->s = static_cast<std::uint32_t>(s);
  t->q = static_cast<std::uint32_t>(q);
  t->pw.resize(s + 1);
  t->pw[0] = 1;
  for (std::uint64_t i = 1; i <= s; ++i) t->pw[i] = t->pw[i - 1] * t->p;
  t->inv.assign(q, 0);
  if (s == 1) {
    t->modulus = {0, 1};
    for (std::uint32_t a = 1; a < q; ++a) t->inv[a] = inv_mod(a, t->p);
    return t;
  }
  t->modulus = smallest_irreducible(t->p, t->s);

  const auto factors = prime_factors(q - 1);
  Code gen = 0;
  for (Code g = 2; g < q && gen == 0; ++g) {
    bool primitive = true;
    for (auto r : factors) {
      Code x = 1;
      for (std::uint64_t k = 0; k < (q - 1) / r; ++k) x = slow_mul(*t, x, g);
      if (x == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) gen = g;
  }
  t->exp.resize(2 * (q - 1));
  t->log.assign(q, 0);
  Code x = 1;
  for (std::uint64_t k = 0; k < q - 1; ++k) {
    t->exp[k] = x;
    t->exp[k + q - 1] = x;
    t->log[x] = static_cast<std::uint32_t>(k);
    x = slow_mul(*t, x, gen);
  }
  for (Code a = 1; a < q; ++a) t->inv[a] = t->exp[(q - 1 - t->log[a]) % (q - 1)];
  return t;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldCtx::FieldCtx(std::uint64_t p, std::uint64_t s) : t_(build_tables(p, s)) {}

std::uint32_t FieldCtx::p() const { return t_->p; }
std::uint32_t FieldCtx::s() const { return t_->s; }
std::uint32_t FieldCtx::q() const { return t_->q; }
const std::vector<std::uint32_t>& FieldCtx::modulus() const { return t_->modulus; }

Code FieldCtx::add(Code a, Code b) const {
  const auto& t = *t_;
  if (t.s == 1) {
    Code r = a + b;
    return r >= t.p ? r - t.p : r;
  }
  if (t.p == 2) return a ^ b;
  Code out = 0;
  for (std::uint32_t i = 0; i < t.s; ++i) {
    std::uint32_t d = (a % t.p + b % t.p) % t.p;
    out += d * t.pw[i];
    a /= t.p;
    b /= t.p;
  }
  return out;
}

Code FieldCtx::neg(Code a) const {
  const auto& t = *t_;
  if (t.s == 1) return a == 0 ? 0 : t.p - a;
  if (t.p == 2) return a;
  Code out = 0;
  for (std::uint32_t i = 0; i < t.s; ++i) {
    std::uint32_t d = a % t.p;
    out += (d == 0 ? 0 : t.p - d) * t.pw[i];
    a /= t.p;
  }
  return out;
}

Code FieldCtx::sub(Code a, Code b) const { return add(a, neg(b)); }

Code FieldCtx::mul(Code a, Code b) const {
  const auto& t = *t_;
  if (t.s == 1) return static_cast<Code>((std::uint64_t{a} * b) % t.p);
  if (a == 0 || b == 0) return 0;
  return t.exp[t.log[a] + t.log[b]];
}

Code FieldCtx::inv(Code a) const {
  if (a == 0) throw DivisionByZero("inverse of zero in " + name());
  return t_->inv[a];
}

Code FieldCtx::pow(Code a, std::uint64_t e) const {
  Code result = 1, base = a;
  while (e != 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

Code FieldCtx::frobenius(Code a, std::uint32_t e) const {
  const auto& t = *t_;
  if (t.s == 1 || a == 0 || e % t.s == 0) return a;
  std::uint64_t k = 1;
  for (std::uint32_t i = 0; i < e % t.s; ++i) k = (k * t.p) % (t.q - 1);
  return t.exp[(std::uint64_t{t.log[a]} * k) % (t.q - 1)];
}

Code FieldCtx::from_int(std::int64_t n) const { return mod_p(n, t_->p); }

std::vector<std::uint32_t> FieldCtx::coords(Code a) const {
  std::vector<std::uint32_t> out(t_->s);
  for (auto& c : out) {
    c = a % t_->p;
    a /= t_->p;
  }
  return out;
}

Code FieldCtx::from_coords(std::span<const std::uint32_t> c) const {
  if (c.size() > t_->s) throw std::invalid_argument("too many coordinates for " + name());
  Code out = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] >= t_->p) throw std::invalid_argument("coordinate out of range for " + name());
    out += c[i] * t_->pw[i];
  }
  return out;
}

void FieldCtx::axpy(std::span<Code> dst, std::span<const Code> src, Code c) const {
  if (c == 0) return;
  const auto& t = *t_;
  const std::size_t n = std::min(dst.size(), src.size());
  if (t.s == 1) {
    kernels::axpy_mod(dst.first(n), src.first(n), c, t.p);
    return;
  }
  const std::uint32_t lc = t.log[c];
  for (std::size_t i = 0; i < n; ++i) {
    if (src[i] == 0) continue;
    dst[i] = add(dst[i], t.exp[lc + t.log[src[i]]]);
  }
}

bool FieldCtx::operator==(const FieldCtx& other) const {
  return t_ == other.t_ || (t_->p == other.t_->p && t_->s == other.t_->s);
}

std::string FieldCtx::name() const {
  std::ostringstream os;
  os << "F_" << t_->q;
  return os.str();
}

FieldCtx make_field(std::uint64_t p, std::uint64_t s) { return FieldCtx(p, s); }

FieldCtx make_field_for_order(std::uint64_t q) {
  if (q < 2) throw std::invalid_argument("field order must be at least 2");
  std::uint64_t p = 0;
  for (std::uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) p = q;
  std::uint64_t s = 0, r = q;
  while (r % p == 0) {
    r /= p;
    ++s;
  }
  if (r != 1) throw std::invalid_argument(std::to_string(q) + " is not a prime power");
  return FieldCtx(p, s);
}

FqElem::FqElem(FieldCtx ctx, Code code) : ctx_(std::move(ctx)), code_(code) {
  if (code_ >= ctx_.q()) throw std::invalid_argument("element code out of range for " + ctx_.name());
}

FqElem FqElem::from_coords(const FieldCtx& ctx, std::span<const std::uint32_t> c) {
  return FqElem(ctx, ctx.from_coords(c));
}

FqElem FqElem::operator+(const FqElem& o) const { return FqElem(ctx_, ctx_.add(code_, o.code_)); }
FqElem FqElem::operator-(const FqElem& o) const { return FqElem(ctx_, ctx_.sub(code_, o.code_)); }
FqElem FqElem::operator*(const FqElem& o) const { return FqElem(ctx_, ctx_.mul(code_, o.code_)); }
FqElem FqElem::operator/(const FqElem& o) const {
  return FqElem(ctx_, ctx_.mul(code_, ctx_.inv(o.code_)));
}
FqElem FqElem::operator-() const { return FqElem(ctx_, ctx_.neg(code_)); }
FqElem FqElem::inv() const { return FqElem(ctx_, ctx_.inv(code_)); }
FqElem FqElem::pow(std::uint64_t e) const { return FqElem(ctx_, ctx_.pow(code_, e)); }

std::uint64_t DigitVec::value() const {
  std::uint64_t v = 0;
  for (std::size_t i = digits.size(); i-- > 0;) v = v * base + digits[i];
  return v;
}

DigitVec digits(std::uint64_t n, std::uint64_t base) {
  if (base < 2) throw std::invalid_argument("digit base must be at least 2");
  DigitVec out{base, {}};
  do {
    out.digits.push_back(n % base);
    n /= base;
  } while (n != 0);
  return out;
}

std::uint64_t digit_sum(std::uint64_t n, std::uint64_t base) {
  std::uint64_t sum = 0;
  for (auto d : digits(n, base).digits) sum += d;
  return sum;
}

std::uint32_t lucas_binom(std::uint64_t m, std::uint64_t n, std::uint32_t p) {
  std::uint64_t result = 1;
  while (n != 0 || m != 0) {
    const std::uint64_t mi = m % p, ni = n % p;
    if (ni > mi) return 0;
    // C(mi, ni) mod p with mi < p: numerator and denominator are units.
    std::uint64_t num = 1, den = 1;
    for (std::uint64_t j = 0; j < ni; ++j) {
      num = num * (mi - j) % p;
      den = den * (j + 1) % p;
    }
    result = result * num % p * inv_mod(static_cast<std::uint32_t>(den), p) % p;
    m /= p;
    n /= p;
  }
  return static_cast<std::uint32_t>(result % p);
}

bool is_even_mult(std::int64_t n, std::uint64_t q) {
  const auto m = static_cast<std::int64_t>(q - 1);
  return m <= 1 || n % m == 0;
}

}  // namespace mzv
