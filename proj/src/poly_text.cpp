#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>

#include "mzv/poly.hpp"

namespace mzv {

std::string format_coefficient(const FieldCtx& ctx, Code c) {
  if (ctx.is_prime_field()) return std::to_string(c);
  std::string out = "(";
  const auto co = ctx.coords(c);
  for (std::size_t i = 0; i < co.size(); ++i) {
    if (i != 0) out += ',';
    out += std::to_string(co[i]);
  }
  return out + ")";
}

std::string format_terms(const FieldCtx& ctx, const std::vector<std::pair<std::int64_t, Code>>& terms,
                         char var) {
  std::string out;
  for (const auto& [e, c] : terms) {
    if (c == 0) continue;
    if (!out.empty()) out += " + ";
    if (e == 0) {
      out += format_coefficient(ctx, c);
      continue;
    }
    if (c != 1) out += format_coefficient(ctx, c) + "*";
    out += var;
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out.empty() ? "0" : out;
}

namespace {

class TermParser {
 public:
  TermParser(const FieldCtx& ctx, std::string_view text, char var) : ctx_(ctx), s_(text), var_(var) {}

  std::vector<std::pair<std::int64_t, Code>> run() {
    std::map<std::int64_t, Code> acc;
    skip();
    if (pos_ == s_.size()) fail("empty expression");
    bool negative = false;
    if (peek() == '-' || peek() == '+') {
      negative = get() == '-';
      skip();
    }
    while (true) {
      auto [e, c] = term();
      if (negative) c = ctx_.neg(c);
      acc[e] = ctx_.add(acc[e], c);
      skip();
      if (pos_ == s_.size()) break;
      const char op = get();
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      negative = op == '-';
      skip();
    }
    std::vector<std::pair<std::int64_t, Code>> out;
    for (auto& [e, c] : acc)
      if (c != 0) out.emplace_back(e, c);
    return out;
  }

 private:
  std::pair<std::int64_t, Code> term() {
    Code c = 1;
    bool have_coeff = false;
    if (peek() == '(' || std::isdigit(static_cast<unsigned char>(peek()))) {
      c = coefficient();
      have_coeff = true;
      skip();
      if (peek() != '*') return {0, c};
      get();
      skip();
    }
    if (peek() != var_) fail(have_coeff ? "expected variable after '*'" : "expected term");
    get();
    skip();
    std::int64_t e = 1;
    if (peek() == '^') {
      get();
      skip();
      bool neg = false;
      if (peek() == '-') {
        neg = true;
        get();
      }
      e = static_cast<std::int64_t>(number());
      if (neg) e = -e;
    }
    return {e, c};
  }

  Code coefficient() {
    if (peek() != '(') return ctx_.from_int(static_cast<std::int64_t>(number() % ctx_.p()));
    get();
    std::vector<std::uint32_t> co;
    while (true) {
      skip();
      const auto v = number();
      if (v >= ctx_.p()) fail("coordinate out of range");
      co.push_back(static_cast<std::uint32_t>(v));
      skip();
      const char ch = get();
      if (ch == ')') break;
      if (ch != ',') fail("expected ',' or ')' in coefficient tuple");
    }
    if (co.size() > ctx_.s()) fail("coefficient tuple longer than field degree");
    return ctx_.from_coords(co);
  }

  std::uint64_t number() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected digit");
    std::uint64_t v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      if (v > (std::uint64_t{1} << 58)) fail("number too large");
      v = v * 10 + static_cast<std::uint64_t>(get() - '0');
    }
    return v;
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  char get() {
    if (pos_ >= s_.size()) fail("unexpected end of input");
    return s_[pos_++];
  }
  [[noreturn]] void fail(const char* msg) const {
    std::ostringstream os;
    os << "parse error at offset " << pos_ << " in \"" << s_ << "\": " << msg;
    throw std::invalid_argument(os.str());
  }

  const FieldCtx& ctx_;
  std::string_view s_;
  char var_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<std::pair<std::int64_t, Code>> parse_terms(const FieldCtx& ctx, std::string_view text,
                                                       char var) {
  return TermParser(ctx, text, var).run();
}

std::string FqPoly::to_string() const {
  std::vector<std::pair<std::int64_t, Code>> terms;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i] != 0) terms.emplace_back(static_cast<std::int64_t>(i), c_[i]);
  }
  return format_terms(ctx_, terms, 't');
}

FqPoly FqPoly::parse(const FieldCtx& ctx, std::string_view text) {
  const auto terms = parse_terms(ctx, text, 't');
  if (terms.empty()) return FqPoly(ctx);
  if (terms.front().first < 0) throw std::invalid_argument("negative exponent in polynomial");
  std::vector<Code> v(static_cast<std::size_t>(terms.back().first) + 1, 0);
  for (auto [e, c] : terms) v[static_cast<std::size_t>(e)] = c;
  return FqPoly(ctx, std::move(v));
}

}  // namespace mzv
