#include <doctest.h>

#include "mzv/multizeta.hpp"

using namespace mzv;

namespace {

// zeta(s) through u^N from single fractions, keeping every degree with
// d * s <= N (each 1/a^s has valuation exactly d * s).
LaurentTail zeta_by_terms(const FieldCtx& f, std::int64_t s, std::int64_t n) {
  LaurentTail acc(f, n);
  for (std::int64_t d = 0; d * s <= n; ++d) {
    for (const auto& a : monic_polys(f, d)) {
      acc += LaurentTail::from_ratfunc(RatFunc(FqPoly::one(f), a.pow(static_cast<std::uint64_t>(s))), n);
    }
  }
  return acc;
}

// Depth-two value with the same conservative cut on d_1.
LaurentTail zeta2_by_chains(const FieldCtx& f, std::int64_t s1, std::int64_t s2, std::int64_t n) {
  LaurentTail acc(f, n), inner(f, n);
  for (std::int64_t d1 = 1; d1 * s1 <= n; ++d1) {
    inner += LaurentTail::from_ratfunc(s_d_bruteforce(f, d1 - 1, s2), n);
    acc += LaurentTail::from_ratfunc(s_d_bruteforce(f, d1, s1), n) * inner;
  }
  return acc;
}

LaurentTail Z(const FieldCtx& f, std::vector<std::int64_t> s, std::int64_t n) { return zeta_trunc(f, {MZIndex{s}, n}); }

}  // namespace

TEST_CASE("zeta values start with the constant 1") {
  for (std::uint64_t q : {2, 3, 4, 5}) {
    const FieldCtx f = make_field_for_order(q);
    for (std::int64_t s = 1; s <= 6; ++s) {
      const LaurentTail z = Z(f, {s}, 20);
      CHECK(z.valuation() == 0);
      CHECK(z.coeff(0) == 1);
    }
  }
}

TEST_CASE("pruned chains reproduce the plain degree cut") {
  const FieldCtx f2 = make_field(2, 1), f3 = make_field(3, 1);
  for (std::int64_t s = 1; s <= 4; ++s) CHECK(Z(f2, {s}, 12) == zeta_by_terms(f2, s, 12));
  for (std::int64_t s = 1; s <= 3; ++s) CHECK(Z(f3, {s}, 9) == zeta_by_terms(f3, s, 9));
  CHECK(Z(make_field(2, 2), {2}, 8) == zeta_by_terms(make_field(2, 2), 2, 8));
  for (std::int64_t s1 = 1; s1 <= 3; ++s1) {
    for (std::int64_t s2 = 1; s2 <= 3; ++s2) {
      CHECK(Z(f2, {s1, s2}, 10) == zeta2_by_chains(f2, s1, s2, 10));
      CHECK(Z(f3, {s1, s2}, 8) == zeta2_by_chains(f3, s1, s2, 8));
    }
  }
}

TEST_CASE("partial sums of exact power sums agree with zeta_trunc") {
  const FieldCtx f3 = make_field(3, 1);
  PowerSums& sums = power_sums(f3);
  const std::int64_t n = 30;
  for (std::int64_t s = 1; s <= 4; ++s) {
    LaurentTail partial(f3, n);
    for (std::int64_t d = 0; d <= 6; ++d) partial += LaurentTail::from_ratfunc(sums.value(d, s), n);
    CHECK(partial == Z(f3, {s}, n));
  }
}

TEST_CASE("raising the precision never changes known coefficients") {
  for (std::uint64_t q : {2, 3}) {
    const FieldCtx f = make_field_for_order(q);
    for (const std::vector<std::int64_t>& s : {std::vector<std::int64_t>{1}, {2, 1}, {1, 2, 1}, {3, 2}}) {
      const LaurentTail lo = Z(f, s, 15), hi = Z(f, s, 35);
      CHECK(hi.truncated(15) == lo);
    }
  }
}

TEST_CASE("depth r values start no earlier than the smallest chain allows") {
  int nonzero = 0;
  for (std::uint64_t q : {2, 3}) {
    const FieldCtx f = make_field_for_order(q);
    for (const std::vector<std::int64_t>& s : {std::vector<std::int64_t>{1, 1}, {2, 3}, {1, 1, 1}, {3, 1, 2}}) {
      std::int64_t bound = 0;
      for (std::size_t i = 0; i < s.size(); ++i) bound += static_cast<std::int64_t>(s.size() - 1 - i) * s[i];
      const LaurentTail z = Z(f, s, 30);
      nonzero += z.is_zero() ? 0 : 1;
      CHECK(z.valuation() >= bound);
    }
  }
  // q = 3, (3,1,2) starts near u^36.
  CHECK(nonzero == 7);
}

TEST_CASE("product identities through u^40") {
  const FieldCtx f2 = make_field(2, 1);
  CHECK(Z(f2, {1}, 40) * Z(f2, {1}, 40) == Z(f2, {2}, 40));
  CHECK(Z(f2, {2}, 40) * Z(f2, {1}, 40) == Z(f2, {3}, 40) + Z(f2, {1, 2}, 40));
}

TEST_CASE("numeric shuffle checks") {
  const FieldCtx f2 = make_field(2, 1), f3 = make_field(3, 1);
  CHECK(verify_shuffle_numeric(f2, 1, 1, 40).ok);
  const ShuffleCheck large = verify_shuffle_numeric(f3, 2, 3, 40);
  CHECK(large.ok);
  CHECK(large.expansion.to_string() == "zeta(2,3) + zeta(5)");
  CHECK(verify_shuffle_numeric(f3, 2, 5, 30).ok);
  CHECK(verify_shuffle_numeric(make_field(2, 2), 3, 2, 20).ok);
  CHECK(verify_shuffle_numeric(make_field(5, 1), 4, 5, 25).ok);
}

TEST_CASE("a wrong expansion is caught with its first bad order") {
  const FieldCtx f2 = make_field(2, 1);
  // zeta(1) zeta(2) without its zeta(1,2) term differs from zeta(3).
  const LaurentTail lhs = Z(f2, {1}, 30) * Z(f2, {2}, 30);
  const auto miss = first_mismatch(lhs, Z(f2, {3}, 30));
  REQUIRE(miss.has_value());
  CHECK(*miss == Z(f2, {1, 2}, 30).valuation());
}

TEST_CASE("request validation") {
  const FieldCtx f2 = make_field(2, 1);
  CHECK_THROWS_AS(Z(f2, {}, 10), std::invalid_argument);
  CHECK_THROWS_AS(Z(f2, {1}, 0), std::invalid_argument);
  CHECK_THROWS_AS(Z(f2, {1}, 1 << 20), BudgetExceeded);
  CHECK(zeta_chains(2, MZIndex{{1, 1}}, 0).empty());
}
