#include <doctest.h>

#include "hyp/crisp.hpp"
#include "hyp/enumerate.hpp"

using namespace hyp;

namespace {

const Subset A = Subset::single(0);
const Subset B = Subset::single(1);
const Subset AB = Subset::of({0, 1});

Hypergroupoid e1() { return Hypergroupoid::make(2, {A, AB, B, B}); }
Hypergroupoid e2() { return Hypergroupoid::make(2, {A, A, A, A}); }
Hypergroupoid e3() { return Hypergroupoid::make(2, {AB, AB, AB, AB}); }

}  // namespace

TEST_CASE("subgroupoids and ideals on the worked examples") {
  const Hypergroupoid s = e1();
  const Relation none = Relation::empty(2);

  CHECK(is_subgroupoid(s, A));
  CHECK(is_subgroupoid(s, B));
  CHECK(is_subgroupoid(s, AB));

  // H*{b} = {a,b} but {b}*H = {b}
  CHECK_FALSE(is_ideal(s, none, B, IdealSide::Left));
  CHECK(is_ideal(s, none, B, IdealSide::Right));
  CHECK_FALSE(is_ideal(s, none, B, IdealSide::TwoSided));
  CHECK_FALSE(is_ideal(s, none, A, IdealSide::Left));
  CHECK_FALSE(is_ideal(s, none, A, IdealSide::Right));
  CHECK(is_ideal(s, none, AB, IdealSide::TwoSided));

  // {a} absorbs everything in the constant structure
  CHECK(is_ideal(e2(), none, A, IdealSide::TwoSided));
  // ... but loses downward closure once b <= a enters the relation
  const Relation b_below_a = Relation::from_pairs(2, {{1, 0}});
  CHECK_FALSE(is_ideal(e2(), b_below_a, A, IdealSide::TwoSided));
  CHECK(ideal_star_clause(e2(), A, IdealSide::TwoSided));
  CHECK_FALSE(downward_closed_under(b_below_a, A));
  // ... and keeps it when the pair points the other way
  CHECK(is_ideal(e2(), Relation::from_pairs(2, {{0, 1}}), A, IdealSide::TwoSided));

  // {a} in the everything-structure is no ideal: a∘a = {a,b}
  CHECK_FALSE(is_ideal(e3(), none, A, IdealSide::Left));
  CHECK_FALSE(is_ideal_elementwise(e3(), none, A, IdealSide::Left));

  CHECK_THROWS_AS(is_ideal(s, none, Subset{}, IdealSide::Left), Error);
  CHECK_THROWS_AS(is_subgroupoid(s, Subset{}), Error);
}

TEST_CASE("filter profiles on the worked examples") {
  const Hypergroupoid s = e1();
  const Relation none = Relation::empty(2);

  // {a}: closed and divisor-closed, but a∘b = {a,b} straddles the boundary
  const FilterProfile pa = filter_profile(s, none, A);
  CHECK(pa.closure);
  CHECK(pa.divisors);
  CHECK_FALSE(pa.all_or_nothing);
  CHECK(pa.upward_closure);
  CHECK_FALSE(pa.all());
  CHECK_FALSE(is_filter(s, none, A));

  // {b}: b∘a = {b} has divisors a outside the set
  const FilterProfile pb = filter_profile(s, none, B);
  CHECK(pb.closure);
  CHECK_FALSE(pb.divisors);
  CHECK_FALSE(pb.all_or_nothing);
  CHECK(pb.upward_closure);

  // the whole carrier is always a filter
  CHECK(is_filter(s, none, AB));
  CHECK(is_filter(e2(), Relation::from_mask(2, 0b1111), AB));

  // upward closure depends on the relation direction
  const Relation b_below_a = Relation::from_pairs(2, {{1, 0}});
  const Hypergroupoid t = Hypergroupoid::make(2, {A, A, A, B});  // only b∘b = {b}
  CHECK(filter_profile(t, Relation::empty(2), B).all());
  CHECK_FALSE(filter_profile(t, b_below_a, B).upward_closure);
  CHECK(filter_profile(t, Relation::from_pairs(2, {{0, 1}}), B).upward_closure);

  CHECK_THROWS_AS(filter_profile(s, none, Subset{}), Error);
}

TEST_CASE("profile conjunction is the filter predicate") {
  for (std::uint64_t t = 0; t < table_count(2); ++t) {
    const Hypergroupoid s = table_at(2, t);
    for (std::uint64_t m = 0; m < relation_count(2); ++m) {
      const Relation r = relation_at(2, m);
      for (std::uint64_t i = 0; i < subset_count(2); ++i) {
        const Subset f = nonempty_subset_at(2, i);
        const FilterProfile p = filter_profile(s, r, f);
        REQUIRE(is_filter(s, r, f) ==
                (p.closure && p.divisors && p.all_or_nothing && p.upward_closure));
      }
    }
  }
}

TEST_CASE("star and elementwise ideal forms agree everywhere") {
  for (std::uint64_t t = 0; t < table_count(2); ++t) {
    const Hypergroupoid s = table_at(2, t);
    for (std::uint64_t m = 0; m < relation_count(2); ++m) {
      const Relation r = relation_at(2, m);
      for (std::uint64_t i = 0; i < subset_count(2); ++i) {
        const Subset a = nonempty_subset_at(2, i);
        for (IdealSide side : {IdealSide::Left, IdealSide::Right, IdealSide::TwoSided})
          REQUIRE(is_ideal(s, r, a, side) == is_ideal_elementwise(s, r, a, side));
      }
    }
  }
}

TEST_CASE("two-sided decomposes into left and right, ideals are subgroupoids") {
  for (std::uint64_t t = 0; t < table_count(2); ++t) {
    const Hypergroupoid s = table_at(2, t);
    for (std::uint64_t m = 0; m < relation_count(2); ++m) {
      const Relation r = relation_at(2, m);
      for (std::uint64_t i = 0; i < subset_count(2); ++i) {
        const Subset a = nonempty_subset_at(2, i);
        REQUIRE(is_ideal(s, r, a, IdealSide::TwoSided) ==
                (is_ideal(s, r, a, IdealSide::Left) && is_ideal(s, r, a, IdealSide::Right)));
        if (is_ideal(s, r, a, IdealSide::Left) || is_ideal(s, r, a, IdealSide::Right))
          REQUIRE(is_subgroupoid(s, a));
      }
    }
  }
}
