#include <doctest.h>

#include <vector>

#include "mzv/laurent.hpp"
#include "mzv/powersum.hpp"
#include "mzv/upoly.hpp"

using namespace mzv;

namespace {

FqPoly P(const FieldCtx& ctx, const char* text) { return FqPoly::parse(ctx, text); }

// S_d(k) for k > 0 as a plain sum of fractions, without the common
// denominator trick.
RatFunc fraction_sum(const FieldCtx& f, std::int64_t d, std::int64_t k) {
  RatFunc acc(f);
  for (const auto& a : monic_polys(f, d)) acc += RatFunc(FqPoly::one(f), a.pow(static_cast<std::uint64_t>(k)));
  return acc;
}

}  // namespace

TEST_CASE("brute-force power sums: small values") {
  for (std::uint64_t q : {2, 3, 4, 5}) {
    const FieldCtx f = make_field_for_order(q);
    for (std::int64_t k = -5; k <= 7; ++k) CHECK(s_d_bruteforce(f, 0, k) == RatFunc::constant(f, 1));
    // [1] S_1(1) = -1
    CHECK(RatFunc(power_sums(f).brackets().bracket(1)) * s_d_bruteforce(f, 1, 1) == RatFunc::from_int(f, -1));
  }
  const FieldCtx f2 = make_field(2, 1), f3 = make_field(3, 1);
  CHECK(s_d_bruteforce(f2, 1, 1) == RatFunc(FqPoly::one(f2), P(f2, "t^2 + t")));
  // t^2 + (t+1)^2 + (t+2)^2 = 3t^2 + 6t + 5 = 2 over F_3.
  CHECK(s_d_bruteforce(f3, 1, -2) == RatFunc::constant(f3, 2));
  CHECK(s_d_bruteforce(f3, 2, 0).is_zero());
  CHECK(s_d_bruteforce(f2, 1, 2) == RatFunc(FqPoly::one(f2), P(f2, "t^2 + t").pow(2)));
}

TEST_CASE("common-denominator brute force matches a plain sum of fractions") {
  for (auto [q, dmax] : {std::pair{2u, 3}, std::pair{3u, 2}, std::pair{4u, 2}, std::pair{9u, 1}}) {
    const FieldCtx f = make_field_for_order(q);
    for (std::int64_t d = 0; d <= dmax; ++d) {
      for (std::int64_t k = 1; k <= 9; ++k) CHECK(s_d_bruteforce(f, d, k) == fraction_sum(f, d, k));
    }
  }
}

TEST_CASE("the cached engine agrees with enumeration for every sign of k") {
  for (auto [q, dmax] : {std::pair{2u, 4}, std::pair{3u, 3}, std::pair{4u, 2}, std::pair{5u, 2}}) {
    const FieldCtx f = make_field_for_order(q);
    PowerSums& sums = power_sums(f);
    for (std::int64_t d = 0; d <= dmax; ++d) {
      for (std::int64_t k = -40; k <= 25; ++k) {
        CAPTURE(q);
        CAPTURE(d);
        CAPTURE(k);
        CHECK(sums.value(d, k) == s_d_bruteforce(f, d, k));
      }
    }
  }
}

TEST_CASE("S_1 closed form") {
  const FieldCtx f2 = make_field(2, 1);
  const S1Form one = s1_closed_form(f2, 1);
  REQUIRE(one.terms.size() == 1);
  CHECK(one.terms[0].exponent == 1);
  CHECK(one.terms[0].coeff == 1);  // -1 in characteristic 2

  UPoly s3(2);
  s3.add_term(3, 1);
  s3.add_term(2, 1);
  CHECK(s1_closed_form(f2, 3).to_upoly() == s3);
  CHECK(s3.to_string() == "U^3 + U^2");
  CHECK(upoly_eval(s3, f2) == RatFunc(P(f2, "t^2 + t + 1"), P(f2, "t^2 + t").pow(3)));

  const FieldCtx f3 = make_field(3, 1);
  CHECK(upoly_eval(s1_closed_form(f3, 200).to_upoly(), f3) == s_d_bruteforce(f3, 1, 200));
  CHECK_THROWS_AS(s1_closed_form(f3, 0), std::invalid_argument);

  for (std::uint64_t q : {2, 3, 4, 5, 8, 9}) {
    const FieldCtx f = make_field_for_order(q);
    for (std::int64_t a = 1; a <= 50; ++a) {
      const S1Form form = s1_closed_form(f, a);
      CHECK(form.terms.size() <= static_cast<std::size_t>((a - 1) / static_cast<std::int64_t>(q) + 1));
      CHECK(form.terms.front().coeff == (a % 2 == 0 ? 1u : f.p() - 1) % f.p());
      for (const auto& t : form.terms) {
        CHECK(t.exponent > 0);
        CHECK(t.exponent <= a);
        CHECK(is_even_mult(a - t.exponent, q));
      }
      CHECK(upoly_eval(form.to_upoly(), f) == s_d_bruteforce(f, 1, a));
    }
  }
}

TEST_CASE("U-polynomial evaluation") {
  const FieldCtx f2 = make_field(2, 1), f5 = make_field(5, 1);
  CHECK(upoly_eval(UPoly(2), f2).is_zero());
  UPoly u(2);
  u.add_term(1, 1);
  CHECK(upoly_eval(u, f2) == RatFunc(FqPoly::one(f2), P(f2, "t^2 + t")));
  UPoly c(5);
  c.add_term(0, 3);
  c.add_term(2, -1);
  CHECK(upoly_eval(c, f5) == RatFunc::constant(f5, 3) - RatFunc(FqPoly::one(f5), P(f5, "t^5 - t").pow(2)));
  CHECK(upoly_eval(c, f5, 30) == LaurentTail::from_ratfunc(upoly_eval(c, f5), 30));
  CHECK_THROWS_AS(upoly_eval(c, f2), std::invalid_argument);

  UPoly x(3);
  x.add_term(4, 2);
  x.add_term(4, 1);
  CHECK(x.is_zero());
  CHECK_THROWS_AS(x.add_term(-1, 1), std::invalid_argument);
  CHECK_THROWS_AS(x.top(), std::logic_error);
}

TEST_CASE("special values match brute force wherever a pattern applies") {
  struct Grid {
    std::uint64_t q;
    std::int64_t dmax;
  };
  for (const Grid g : {Grid{2, 3}, Grid{3, 3}, Grid{4, 2}, Grid{5, 2}}) {
    const FieldCtx f = make_field_for_order(g.q);
    PowerSums& sums = power_sums(f);
    int matched = 0;
    for (std::int64_t d = 0; d <= g.dmax; ++d) {
      for (std::int64_t k = -200; k <= 200; ++k) {
        const auto special = s_d_special(sums.brackets(), d, k);
        if (!special) continue;
        ++matched;
        CAPTURE(g.q);
        CAPTURE(d);
        CAPTURE(k);
        CHECK(*special == s_d_bruteforce(f, d, k));
      }
    }
    CHECK(matched > 50);
  }
}

TEST_CASE("special values: documented instances") {
  const FieldCtx f2 = make_field(2, 1), f3 = make_field(3, 1);
  BracketCache b2(f2), b3(f3);
  CHECK(s_d_special(b3, 1, 2) == RatFunc(FqPoly::one(f3), b3.bracket(1).pow(2)));
  for (std::uint64_t q : {2, 3, 4, 5}) {
    const FieldCtx f = make_field_for_order(q);
    BracketCache br(f);
    CHECK(s_d_special(br, 1, -static_cast<std::int64_t>(q - 1)) == RatFunc::from_int(f, -1));
  }
  const RatFunc prop = *s_d_special(b2, 1, 3);
  CHECK(prop == RatFunc(-b2.bracket(2), b2.bracket(1).pow(4)));
  CHECK(prop == RatFunc(P(f2, "t^2 + t + 1"), b2.bracket(1).pow(3)));
  CHECK_FALSE(s_d_special(b3, 1, 7).has_value());
  CHECK(s_d_special(b3, 2, -1) == RatFunc(f3));
}

TEST_CASE("negative power sums vanish past the digit-sum threshold") {
  for (std::uint64_t q : {2, 3, 4, 5}) {
    const FieldCtx f = make_field_for_order(q);
    PowerSums& sums = power_sums(f);
    for (std::int64_t k = 1; k <= 500; ++k) {
      const auto threshold = static_cast<std::int64_t>(digit_sum(static_cast<std::uint64_t>(k), q) / (q - 1));
      for (std::int64_t d = threshold + 1; d <= threshold + 3; ++d) CHECK(sums.negative(d, k).is_zero());
      // Spot-check the recursion against enumeration.
      if (k % 37 == 0 && checked_qpow(q, threshold + 1) <= 4096) {
        CHECK(s_d_bruteforce(f, threshold + 1, -k).is_zero());
      }
    }
  }
}

TEST_CASE("nested power sums") {
  const FieldCtx f2 = make_field(2, 1), f3 = make_field(3, 1);
  PowerSums& s2 = power_sums(f2);
  const std::vector<std::int64_t> one{3};
  CHECK(s_d_nested(s2, 2, one) == s2.value(2, 3));
  const std::vector<std::int64_t> pair{1, 1};
  CHECK(s_d_nested(s2, 0, pair).is_zero());
  CHECK(s_d_nested(s2, 2, pair) == s_d_bruteforce(f2, 2, 1) * (s_d_bruteforce(f2, 0, 1) + s_d_bruteforce(f2, 1, 1)));
  const std::vector<std::int64_t> triple{1, 2, 3};
  CHECK(s_d_nested(power_sums(f3), 1, triple).is_zero());
  CHECK(s_d_nested(power_sums(f3), 2, triple) ==
        power_sums(f3).value(2, 1) * power_sums(f3).value(1, 2) * power_sums(f3).value(0, 3));
  CHECK_THROWS_AS(s_d_nested(s2, 1, std::vector<std::int64_t>{}), std::invalid_argument);
}

TEST_CASE("valuation lower bound") {
  for (auto [q, dmax] : {std::pair{2u, 4}, std::pair{3u, 3}, std::pair{4u, 2}}) {
    const FieldCtx f = make_field_for_order(q);
    for (std::int64_t d = 0; d <= dmax; ++d) {
      for (std::int64_t k = 1; k <= 14; ++k) {
        const RatFunc& v = power_sums(f).value(d, k);
        REQUIRE_FALSE(v.is_zero());
        CHECK(v.valuation() >= valuation_lower_bound(q, d, k));
        CHECK(valuation_lower_bound(q, d, k) >= d * k);
      }
    }
  }
  // Sharp for k = 1 at d = 1: S_1(1) = -1/[1] has valuation q.
  CHECK(valuation_lower_bound(5, 1, 1) == 5);
}
