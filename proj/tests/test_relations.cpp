#include <doctest.h>

#include <vector>

#include "mzv/relations.hpp"

using namespace mzv;

namespace {

std::int64_t ipow(std::int64_t b, std::int64_t e) {
  std::int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// S_d(a) S_d(b) - S_d(a+b) - sum f_i S_d(a_i, a+b-a_i), straight from the nested power sums in K.
RatFunc relation_defect(PowerSums& sums, const RelationSet& rel, std::int64_t d) {
  RatFunc rhs(sums.field());
  for (const auto& pr : rel.pairs) {
    const std::vector<std::int64_t> idx{pr.index, rel.weight() - pr.index};
    rhs += s_d_nested(sums, d, idx).scaled(sums.field().from_int(pr.f));
  }
  return delta_d(sums, d, rel.a, rel.b) - rhs;
}

}  // namespace

TEST_CASE("delta_d examples") {
  const FieldCtx f2 = make_field(2, 1);
  PowerSums& s2 = power_sums(f2);
  CHECK(delta_d(s2, 1, 1, 1).is_zero());
  CHECK(delta_d(s2, 1, 1, 2) == s2.value(1, 2));
  for (std::uint64_t q : {2, 3, 4, 5}) {
    const FieldCtx f = make_field_for_order(q);
    PowerSums& sums = power_sums(f);
    for (std::int64_t b = 1; b <= static_cast<std::int64_t>(q) - 1; ++b) CHECK(delta_d(sums, 1, 1, b).is_zero());
    for (std::int64_t a = 1; a <= 4; ++a) {
      for (std::int64_t b = 1; b <= 4; ++b) CHECK(delta_d(sums, 2, a, b) == delta_d(sums, 2, b, a));
    }
  }
}

TEST_CASE("derived relation sets: documented instances") {
  const FieldCtx f2 = make_field(2, 1);
  CHECK(derive_relation(f2, 1, 1).pairs.empty());
  CHECK(derive_relation(f2, 1, 2).pairs == std::vector<RelationPair>{{1, 2}});
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9}) {
    const FieldCtx f = make_field_for_order(q);
    for (std::int64_t n = 1; n <= 2; ++n) {
      const std::int64_t qn = ipow(static_cast<std::int64_t>(q), n);
      CHECK(derive_relation(f, qn, qn - 1).pairs == std::vector<RelationPair>{{f.p() - 1, qn}});
    }
  }
  CHECK_THROWS_AS(derive_relation(f2, 0, 3), std::invalid_argument);
}

TEST_CASE("derivation invariants over a grid") {
  for (std::uint64_t q : {2, 3, 4, 5, 7, 9}) {
    const FieldCtx f = make_field_for_order(q);
    for (std::int64_t a = 1; a <= 25; ++a) {
      for (std::int64_t b = 1; b <= 25; ++b) {
        const RelationSet rel = derive_relation(f, a, b);
        CAPTURE(q);
        CAPTURE(a);
        CAPTURE(b);
        CHECK(rel.well_formed());
        CHECK(rel.parity_ok());
        CHECK(rel.pairs.size() <= static_cast<std::size_t>((a + b) / static_cast<std::int64_t>(q - 1) + 1));
        CHECK(derive_relation(f, b, a).pairs == rel.pairs);
        // The emitted pairs reproduce Delta exactly.
        CHECK(relation_upoly(f, rel) == delta_upoly(f, a, b));
      }
    }
  }
}

TEST_CASE("scaled verification agrees with direct evaluation in K") {
  for (auto [q, wmax] : {std::pair{2u, 12}, std::pair{3u, 10}, std::pair{4u, 7}}) {
    const FieldCtx f = make_field_for_order(q);
    PowerSums& sums = power_sums(f);
    for (std::int64_t w = 2; w <= wmax; ++w) {
      for (std::int64_t a = 1; a < w; ++a) {
        const RelationSet rel = derive_relation(f, a, w - a);
        for (std::int64_t d = 0; d <= (q == 4 ? 2 : 3); ++d) {
          CAPTURE(q);
          CAPTURE(a);
          CAPTURE(d);
          CHECK(verify_relation_exact(sums, rel, d).ok);
          CHECK(relation_defect(sums, rel, d).is_zero());
        }
      }
    }
  }
}

TEST_CASE("verification reports the exact defect on a wrong relation") {
  const FieldCtx f3 = make_field(3, 1);
  PowerSums& sums = power_sums(f3);
  const RelationSet good = derive_relation(f3, 3, 2);
  CHECK(verify_relation_exact(sums, good, 1).ok);
  CHECK(verify_relation_exact(sums, good, 2).ok);
  const FieldCtx f2 = make_field(2, 1);
  CHECK(verify_relation_exact(power_sums(f2), derive_relation(f2, 1, 2), 2).ok);

  RelationSet bad = derive_relation(f3, 4, 6);
  REQUIRE_FALSE(bad.pairs.empty());
  bad.pairs.front().f = 3 - bad.pairs.front().f;
  for (std::int64_t d = 1; d <= 3; ++d) {
    const VerifyResult r = verify_relation_exact(sums, bad, d);
    CHECK_FALSE(r.ok);
    REQUIRE(r.witness.has_value());
    CHECK(*r.witness == relation_defect(sums, bad, d));
  }
  RelationSet other = good;
  other.q = 9;
  CHECK_THROWS_AS(verify_relation_exact(sums, other, 1), std::invalid_argument);
}

TEST_CASE("relation sets merge contributions mod p") {
  const FieldCtx f3 = make_field(3, 1);
  const RelationSet rel = RelationSet::from_terms(f3, 4, 5, {{3, 2}, {5, 4}, {7, 3}, {1, -1}});
  CHECK(rel.pairs == std::vector<RelationPair>{{1, 5}, {2, 3}, {2, 1}});
  CHECK(rel.well_formed());
}

TEST_CASE("shuffle expansions") {
  const FieldCtx f2 = make_field(2, 1);
  const MZExpression e11 = shuffle_expand(f2, 1, 1);
  REQUIRE(e11.terms().size() == 1);
  CHECK(e11.terms().begin()->first == MZIndex{{2}});
  CHECK(e11.to_string() == "zeta(2)");

  for (std::uint64_t q : {2, 3, 4, 5}) {
    const FieldCtx f = make_field_for_order(q);
    for (std::int64_t n = 1; n <= 2; ++n) {
      const std::int64_t qn = ipow(static_cast<std::int64_t>(q), n);
      MZExpression expected(f.p());
      expected.add(MZIndex{{2 * qn - 1}}, 1);
      expected.add(MZIndex{{qn - 1, qn}}, 1);
      CHECK(shuffle_expand(f, qn - 1, qn) == expected);
      CHECK(shuffle_expand(f, qn, qn - 1) == expected);
    }
    for (std::int64_t a = 1; a <= 12; ++a) {
      for (std::int64_t b = 1; b <= 12; ++b) CHECK(shuffle_expand(f, a, b).homogeneous(a + b));
    }
  }
}

TEST_CASE("multizeta indices") {
  MZIndex idx{{3, 1, 2}};
  CHECK(idx.weight() == 6);
  CHECK(idx.depth() == 3);
  CHECK(idx.to_string() == "zeta(3,1,2)");
  CHECK_THROWS_AS(MZIndex{}.validate(), std::invalid_argument);
  CHECK_THROWS_AS((MZIndex{{2, 0}}.validate()), std::invalid_argument);
  MZExpression e(2);
  e.add(idx, 1);
  e.add(idx, 1);
  CHECK(e.is_zero());
}
