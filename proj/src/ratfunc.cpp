#include "mzv/ratfunc.hpp"

#include <stdexcept>

namespace mzv {

RatFunc::RatFunc(const FieldCtx& ctx) : num_(ctx), den_(FqPoly::one(ctx)) {}

RatFunc::RatFunc(FqPoly num) : num_(std::move(num)), den_(FqPoly::one(num_.field())) {}

RatFunc::RatFunc(FqPoly num, FqPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
  if (!(num_.field() == den_.field())) throw std::invalid_argument("mixed fields in rational function");
  if (num_.is_zero()) {
    den_ = FqPoly::one(num_.field());
    return;
  }
  FqPoly g = gcd(num_, den_);
  if (!g.is_one()) {
    num_ = exact_div(num_, g);
    den_ = exact_div(den_, g);
  }
  const Code lead = den_.leading();
  if (lead != 1) {
    const Code inv = num_.field().inv(lead);
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_.is_one() && b.den_.is_one()) return RatFunc(a.num_ + b.num_);
  // Henrici: only the common factor of the denominators can survive.
  FqPoly g = gcd(a.den_, b.den_);
  if (g.is_one()) {
    FqPoly num = a.num_ * b.den_ + b.num_ * a.den_;
    if (num.is_zero()) return RatFunc(a.field());
    return RatFunc(RatFunc::Reduced{}, std::move(num), a.den_ * b.den_);
  }
  FqPoly ad = exact_div(a.den_, g);
  FqPoly bd = exact_div(b.den_, g);
  FqPoly num = a.num_ * bd + b.num_ * ad;
  if (num.is_zero()) return RatFunc(a.field());
  FqPoly den = ad * b.den_;
  FqPoly g2 = gcd(num, g);
  if (!g2.is_one()) {
    num = exact_div(num, g2);
    den = exact_div(den, g2);
  }
  return RatFunc(RatFunc::Reduced{}, std::move(num), std::move(den));
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return RatFunc(a.field());
  FqPoly g1 = gcd(a.num_, b.den_);
  FqPoly g2 = gcd(b.num_, a.den_);
  FqPoly n1 = g1.is_one() ? a.num_ : exact_div(a.num_, g1);
  FqPoly d2 = g1.is_one() ? b.den_ : exact_div(b.den_, g1);
  FqPoly n2 = g2.is_one() ? b.num_ : exact_div(b.num_, g2);
  FqPoly d1 = g2.is_one() ? a.den_ : exact_div(a.den_, g2);
  // Reduced pieces with monic denominators give a reduced, monic product.
  return RatFunc(RatFunc::Reduced{}, n1 * n2, d1 * d2);
}

RatFunc RatFunc::operator-() const { return RatFunc(Reduced{}, -num_, den_); }

RatFunc RatFunc::scaled(Code c) const {
  if (c == 0) return RatFunc(field());
  return RatFunc(Reduced{}, num_.scaled(c), den_);
}

RatFunc RatFunc::inv() const {
  if (is_zero()) throw DivisionByZero("inverse of zero rational function");
  const Code inv_lead = field().inv(num_.leading());
  return RatFunc(Reduced{}, den_.scaled(inv_lead), num_.scaled(inv_lead));
}

RatFunc RatFunc::pow(std::int64_t k) const {
  if (k == 0) return RatFunc(FqPoly::one(field()));
  if (k < 0) return inv().pow(-k);
  const auto e = static_cast<std::uint64_t>(k);
  return RatFunc(Reduced{}, num_.pow(e), den_.pow(e));
}

namespace {

std::string wrap(const FqPoly& p) {
  std::string s = p.to_string();
  return p.nonzeros() > 1 ? "(" + s + ")" : s;
}

// Strips one pair of parentheses enclosing the whole string, unless they
// form a coefficient tuple.
std::string_view strip_group(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  if (s.size() < 2 || s.front() != '(' || s.back() != ')') return s;
  int depth = 0;
  bool comma = false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
    if (s[i] == ',' && depth == 1) comma = true;
    if (depth == 0 && i + 1 < s.size()) return s;  // closes early
  }
  return comma ? s : s.substr(1, s.size() - 2);
}

}  // namespace

std::string RatFunc::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return wrap(num_) + "/" + wrap(den_);
}

RatFunc RatFunc::parse(const FieldCtx& ctx, std::string_view text) {
  int depth = 0;
  std::size_t slash = std::string_view::npos;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '(') ++depth;
    if (text[i] == ')') --depth;
    if (text[i] == '/' && depth == 0) {
      if (slash != std::string_view::npos) throw std::invalid_argument("more than one '/' in rational function");
      slash = i;
    }
  }
  if (slash == std::string_view::npos) return RatFunc(FqPoly::parse(ctx, strip_group(text)));
  return RatFunc(FqPoly::parse(ctx, strip_group(text.substr(0, slash))),
                 FqPoly::parse(ctx, strip_group(text.substr(slash + 1))));
}

}  // namespace mzv
