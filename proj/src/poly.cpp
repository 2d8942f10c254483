#include "mzv/poly.hpp"

#include <algorithm>
#include <stdexcept>

#include "mzv/kernels.hpp"

namespace mzv {

namespace {

void check_degree(std::uint64_t deg) {
  static const Budget budget = Budget::from_env();
  if (deg > static_cast<std::uint64_t>(budget.max_degree)) {
    throw BudgetExceeded("polynomial degree " + std::to_string(deg) + " exceeds cap " +
                         std::to_string(budget.max_degree));
  }
}

std::vector<std::vector<std::uint32_t>> split_planes(const FieldCtx& ctx, std::span<const Code> c) {
  const std::uint32_t p = ctx.p();
  std::vector<std::vector<std::uint32_t>> planes(ctx.s(), std::vector<std::uint32_t>(c.size()));
  for (std::size_t k = 0; k < c.size(); ++k) {
    Code x = c[k];
    for (auto& plane : planes) {
      plane[k] = x % p;
      x /= p;
    }
  }
  return planes;
}

bool all_zero(const std::vector<std::uint32_t>& v) {
  return std::all_of(v.begin(), v.end(), [](std::uint32_t x) { return x == 0; });
}

// Product over F_{p^s}, s > 1: s^2 convolutions over F_p on the coordinate
// planes, then theta^m for m >= s folded back through the modulus.
std::vector<Code> mul_extension(const FieldCtx& ctx, std::span<const Code> a,
                                std::span<const Code> b) {
  const std::uint32_t p = ctx.p(), s = ctx.s();
  const std::size_t n = a.size() + b.size() - 1;
  auto pa = split_planes(ctx, a);
  auto pb = split_planes(ctx, b);
  std::vector<std::vector<std::uint32_t>> acc(2 * s - 1, std::vector<std::uint32_t>(n, 0));
  std::vector<std::uint32_t> tmp(n);
  for (std::uint32_t i = 0; i < s; ++i) {
    if (all_zero(pa[i])) continue;
    for (std::uint32_t j = 0; j < s; ++j) {
      if (all_zero(pb[j])) continue;
      kernels::convolve_mod(pa[i], pb[j], tmp, p);
      kernels::add_mod(acc[i + j], tmp, p);
    }
  }
  const auto& mod = ctx.modulus();
  for (std::uint32_t m = 2 * s - 2; m >= s; --m) {
    for (std::uint32_t c = 0; c < s; ++c) {
      const std::uint32_t f = (p - mod[c]) % p;
      if (f != 0) kernels::axpy_mod(acc[m - s + c], acc[m], f, p);
    }
  }
  std::vector<Code> out(n, 0);
  for (std::size_t k = 0; k < n; ++k) {
    Code x = 0;
    for (std::uint32_t c = s; c-- > 0;) x = x * p + acc[c][k];
    out[k] = x;
  }
  return out;
}

FqPoly small_pow(const FqPoly& x, std::uint64_t k) {
  FqPoly result = FqPoly::one(x.field());
  FqPoly base = x;
  while (k != 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k != 0) base *= base;
  }
  return result;
}

}  // namespace

FqPoly::FqPoly(FieldCtx ctx, std::vector<Code> coeffs) : ctx_(std::move(ctx)), c_(std::move(coeffs)) {
  for (auto c : c_) {
    if (c >= ctx_.q()) throw std::invalid_argument("coefficient code out of range for " + ctx_.name());
  }
  trim();
}

FqPoly FqPoly::constant(const FieldCtx& ctx, Code c) { return FqPoly(ctx, std::vector<Code>{c}); }

FqPoly FqPoly::monomial(const FieldCtx& ctx, Code c, std::size_t e) {
  if (c == 0) return FqPoly(ctx);
  check_degree(e);
  std::vector<Code> v(e + 1, 0);
  v[e] = c;
  return FqPoly(ctx, std::move(v));
}

void FqPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::size_t FqPoly::nonzeros() const {
  return static_cast<std::size_t>(std::count_if(c_.begin(), c_.end(), [](Code c) { return c != 0; }));
}

FqPoly& FqPoly::operator+=(const FqPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), 0);
  if (ctx_.is_prime_field()) {
    kernels::add_mod(c_, o.c_, ctx_.p());
  } else {
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = ctx_.add(c_[i], o.c_[i]);
  }
  trim();
  return *this;
}

FqPoly& FqPoly::operator-=(const FqPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = ctx_.sub(c_[i], o.c_[i]);
  trim();
  return *this;
}

FqPoly FqPoly::operator-() const {
  FqPoly out = *this;
  for (auto& c : out.c_) c = ctx_.neg(c);
  return out;
}

FqPoly operator*(const FqPoly& a, const FqPoly& b) {
  if (a.is_zero() || b.is_zero()) return FqPoly(a.ctx_);
  const std::size_t n = a.c_.size() + b.c_.size() - 1;
  check_degree(n - 1);
  if (a.ctx_.is_prime_field()) {
    std::vector<Code> out(n);
    kernels::convolve_mod(a.c_, b.c_, out, a.ctx_.p());
    return FqPoly(a.ctx_, std::move(out));
  }
  return FqPoly(a.ctx_, mul_extension(a.ctx_, a.c_, b.c_));
}

FqPoly FqPoly::scaled(Code c) const {
  if (c == 0) return FqPoly(ctx_);
  FqPoly out = *this;
  for (auto& x : out.c_) x = ctx_.mul(x, c);
  return out;
}

FqPoly FqPoly::shifted(std::size_t e) const {
  if (is_zero() || e == 0) return *this;
  check_degree(c_.size() - 1 + e);
  std::vector<Code> v(e, 0);
  v.insert(v.end(), c_.begin(), c_.end());
  return FqPoly(ctx_, std::move(v));
}

FqPoly FqPoly::monic() const {
  if (is_zero() || leading() == 1) return *this;
  return scaled(ctx_.inv(leading()));
}

FqPoly FqPoly::frobenius(std::uint32_t e) const {
  if (e == 0 || is_zero()) return *this;
  std::uint64_t pe = 1;
  for (std::uint32_t i = 0; i < e; ++i) {
    if (pe > (std::uint64_t{1} << 40) / ctx_.p()) throw BudgetExceeded("Frobenius exponent too large");
    pe *= ctx_.p();
  }
  const std::uint64_t deg = static_cast<std::uint64_t>(degree());
  if (deg != 0 && pe > (std::uint64_t{1} << 62) / deg) throw BudgetExceeded("Frobenius degree overflow");
  check_degree(deg * pe);
  std::vector<Code> v(deg * pe + 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] != 0) v[i * pe] = ctx_.frobenius(c_[i], e);
  }
  return FqPoly(ctx_, std::move(v));
}

FqPoly FqPoly::pow(std::uint64_t k) const {
  if (k == 0) return one(ctx_);
  if (is_zero()) return *this;
  if (degree() > 0) {
    const std::uint64_t deg = static_cast<std::uint64_t>(degree());
    if (k > (std::uint64_t{1} << 62) / deg) throw BudgetExceeded("power degree overflow");
    check_degree(deg * k);
  }
  FqPoly result = one(ctx_);
  std::uint32_t e = 0;
  const std::uint32_t p = ctx_.p();
  while (k != 0) {
    const std::uint64_t digit = k % p;
    if (digit != 0) result *= small_pow(*this, digit).frobenius(e);
    k /= p;
    ++e;
  }
  return result;
}

Code FqPoly::eval(Code x) const {
  Code acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = ctx_.add(ctx_.mul(acc, x), c_[i]);
  return acc;
}

PolyDivMod divmod(const FqPoly& a, const FqPoly& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  const FieldCtx& ctx = a.field();
  if (a.degree() < b.degree()) return {FqPoly(ctx), a};
  std::vector<Code> r(a.coeffs().begin(), a.coeffs().end());
  const auto bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  std::vector<Code> quo(r.size() - db, 0);
  const Code inv_lead = ctx.inv(b.leading());
  for (std::size_t k = r.size(); k-- > db;) {
    const Code c = r[k];
    if (c == 0) continue;
    const Code qc = ctx.mul(c, inv_lead);
    quo[k - db] = qc;
    ctx.axpy(std::span<Code>(r).subspan(k - db, db + 1), bc, ctx.neg(qc));
  }
  r.resize(db);
  return {FqPoly(ctx, std::move(quo)), FqPoly(ctx, std::move(r))};
}

FqPoly rem(const FqPoly& a, const FqPoly& b) { return divmod(a, b).remainder; }

FqPoly exact_div(const FqPoly& a, const FqPoly& b) {
  auto qr = divmod(a, b);
  if (!qr.remainder.is_zero()) throw std::logic_error("exact_div: nonzero remainder");
  return std::move(qr.quotient);
}

FqPoly gcd(const FqPoly& a, const FqPoly& b) {
  FqPoly x = a, y = b;
  while (!y.is_zero()) {
    FqPoly r = rem(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

FqPoly lcm(const FqPoly& a, const FqPoly& b) {
  if (a.is_zero() || b.is_zero()) throw std::invalid_argument("lcm of zero polynomial");
  return (exact_div(a, gcd(a, b)) * b).monic();
}

MonicPolys::MonicPolys(FieldCtx ctx, std::int64_t d, const Budget& budget)
    : ctx_(std::move(ctx)), d_(d), count_(1) {
  if (d < 0) throw std::invalid_argument("monic_polys: negative degree");
  budget.check_enumeration(ctx_.q(), d);
  for (std::int64_t i = 0; i < d; ++i) count_ *= ctx_.q();
}

MonicPolys::iterator::iterator(const MonicPolys* owner, std::uint64_t index)
    : owner_(owner), index_(index) {
  if (index_ < owner_->count_) {
    digits_.assign(static_cast<std::size_t>(owner_->d_) + 1, 0);
    digits_.back() = 1;
    current_.emplace(owner_->ctx_, digits_);
  }
}

MonicPolys::iterator& MonicPolys::iterator::operator++() {
  ++index_;
  if (index_ >= owner_->count_) {
    current_.reset();
    return *this;
  }
  // c_{d-1} varies fastest, c_0 slowest.
  const Code q = owner_->ctx_.q();
  for (std::size_t i = static_cast<std::size_t>(owner_->d_); i-- > 0;) {
    if (++digits_[i] < q) break;
    digits_[i] = 0;
  }
  current_.emplace(owner_->ctx_, digits_);
  return *this;
}

}  // namespace mzv
