#include <doctest.h>

#include <algorithm>

#include "hyp/enumerate.hpp"
#include "hyp/fuzzy.hpp"

using namespace hyp;

namespace {

const Subset A = Subset::single(0);
const Subset B = Subset::single(1);
const Subset AB = Subset::of({0, 1});

Hypergroupoid e1() { return Hypergroupoid::make(2, {A, AB, B, B}); }
Hypergroupoid e2() { return Hypergroupoid::make(2, {A, A, A, A}); }
Hypergroupoid e3() { return Hypergroupoid::make(2, {AB, AB, AB, AB}); }

}  // namespace

TEST_CASE("grades are exact rationals in the unit interval") {
  CHECK(Grade(2, 4) == Grade(1, 2));
  CHECK(Grade(3, 3) == Grade::one());
  CHECK(Grade(0, 5) == Grade::zero());
  CHECK(Grade(1, 3) < Grade(1, 2));
  CHECK(Grade(2, 3) >= Grade(1, 2));
  CHECK(Grade(1, 2).str() == "1/2");
  CHECK(Grade::one().str() == "1");
  CHECK(Grade(6, 8).num() == 3);
  CHECK(Grade(6, 8).den() == 4);

  CHECK_THROWS_AS(Grade(3, 2), Error);
  CHECK_THROWS_AS(Grade(-1, 2), Error);
  CHECK_THROWS_AS(Grade(1, 0), Error);
  try {
    Grade(5, 4);
    FAIL("expected an exception");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::GradeOutOfRange);
  }
}

TEST_CASE("complement identities hold exactly") {
  // 1 - min{1/4, 2/3} = 3/4 = max{3/4, 1/3}
  const Grade g1(1, 4);
  const Grade g2(2, 3);
  CHECK(std::min(g1, g2).complement() == Grade(3, 4));
  CHECK(std::max(g1.complement(), g2.complement()) == Grade(3, 4));
  CHECK(std::min(g1, g2).complement() == std::max(g1.complement(), g2.complement()));

  // involution and order reversal over a whole grid
  for (std::uint64_t i = 0; i < grid_count(2, 3); ++i) {
    const FuzzySubset f = grid_fuzzy_at(2, 3, i);
    CHECK(complement(complement(f)) == f);
    CHECK((f[0] <= f[1]) == (complement(f)[0] >= complement(f)[1]));
    CHECK((f[0] == f[1]) == (complement(f)[0] == complement(f)[1]));
  }
}

TEST_CASE("characteristic functions") {
  const FuzzySubset fa = characteristic(2, A);
  CHECK(fa[0] == Grade::one());
  CHECK(fa[1] == Grade::zero());
  CHECK(complement(fa) == characteristic(2, B));
  CHECK(characteristic(2, AB) == FuzzySubset::constant(2, Grade::one()));
  CHECK(characteristic(3, Subset{}) == FuzzySubset::constant(3, Grade::zero()));
}

TEST_CASE("fuzzy ideals on the worked examples") {
  const Relation a_below_b = Relation::from_pairs(2, {{0, 1}});
  const Relation b_below_a = Relation::from_pairs(2, {{1, 0}});
  const FuzzySubset fa = characteristic(2, A);

  // constant structure, grades antitone along a <= b: a fuzzy ideal
  CHECK(is_fuzzy_ideal(e2(), a_below_b, fa, IdealSide::Left));
  CHECK(is_fuzzy_ideal(e2(), a_below_b, fa, IdealSide::Right));
  CHECK(is_fuzzy_ideal(e2(), a_below_b, fa, IdealSide::TwoSided));
  // flipping the relation breaks only the relation clause
  CHECK_FALSE(is_fuzzy_ideal(e2(), b_below_a, fa, IdealSide::TwoSided));
  CHECK(fuzzy_ideal_product_clause(e2(), fa, IdealSide::TwoSided));
  CHECK(grades_antitone_along(a_below_b, fa));
  CHECK_FALSE(grades_antitone_along(b_below_a, fa));
  CHECK(grades_monotone_along(b_below_a, fa));

  // e1 with the characteristic function of {b}: a fuzzy right ideal only,
  // mirroring the crisp verdicts. u = a in a∘b gets grade 0 < f(b).
  const FuzzySubset fb = characteristic(2, B);
  CHECK(is_fuzzy_ideal(e1(), Relation::empty(2), fb, IdealSide::Right));
  CHECK_FALSE(is_fuzzy_ideal(e1(), Relation::empty(2), fb, IdealSide::Left));
  CHECK_FALSE(fuzzy_ideal_product_clause(e1(), fb, IdealSide::Left));
  CHECK(fuzzy_ideal_product_clause(e1(), fb, IdealSide::Right));

  // two-sided means both inequalities at once
  for (std::uint64_t i = 0; i < grid_count(2, 2); ++i) {
    const FuzzySubset f = grid_fuzzy_at(2, 2, i);
    CHECK(is_fuzzy_ideal(e1(), a_below_b, f, IdealSide::TwoSided) ==
          (is_fuzzy_ideal(e1(), a_below_b, f, IdealSide::Left) &&
           is_fuzzy_ideal(e1(), a_below_b, f, IdealSide::Right)));
  }
}

TEST_CASE("fuzzy filters demand exact minimum grades") {
  const Relation none = Relation::empty(2);
  const FuzzySubset fa = characteristic(2, A);

  // u = a in a∘b has grade 1 but min{f(a), f(b)} = 0
  CHECK_FALSE(is_fuzzy_filter(e1(), none, fa));
  // constants satisfy every equality-based predicate
  for (const Grade& c : {Grade::zero(), Grade(1, 2), Grade::one()}) {
    const FuzzySubset f = FuzzySubset::constant(2, c);
    CHECK(is_fuzzy_filter(e1(), none, f));
    CHECK(is_fuzzy_prime_ideal(e1(), none, f));
    CHECK(is_fuzzy_ideal(e1(), none, f, IdealSide::TwoSided));
    CHECK(is_fuzzy_prime_subset(e1(), f));
  }
  // the full carrier's characteristic function is a fuzzy filter
  CHECK(is_fuzzy_filter(e2(), none, characteristic(2, AB)));

  // prime subset: f(u) <= max; the everything-structure pushes b into a∘a
  const FuzzySubset fb = characteristic(2, B);
  CHECK_FALSE(is_fuzzy_prime_subset(e3(), fb));  // u = b in a∘a, max = 0
  CHECK(is_fuzzy_prime_subset(e2(), fb));        // u = a always has grade 0
}

TEST_CASE("filters and prime ideals are complement duals") {
  const Relation a_below_b = Relation::from_pairs(2, {{0, 1}});
  for (std::uint64_t i = 0; i < grid_count(2, 2); ++i) {
    const FuzzySubset f = grid_fuzzy_at(2, 2, i);
    CHECK(is_fuzzy_filter(e1(), a_below_b, f) ==
          is_fuzzy_prime_ideal(e1(), a_below_b, complement(f)));
    CHECK(is_fuzzy_prime_ideal(e1(), a_below_b, f) ==
          (is_fuzzy_ideal(e1(), a_below_b, f, IdealSide::TwoSided) &&
           is_fuzzy_prime_subset(e1(), f)));
  }
}

TEST_CASE("carrier sizes must match") {
  const FuzzySubset f3 = FuzzySubset::constant(3, Grade::one());
  CHECK_THROWS_AS(is_fuzzy_ideal(e1(), Relation::empty(2), f3, IdealSide::Left), Error);
  CHECK_THROWS_AS(is_fuzzy_filter(e1(), Relation::empty(2), f3), Error);
  CHECK_THROWS_AS(is_fuzzy_prime_subset(e1(), f3), Error);
  CHECK_THROWS_AS(is_fuzzy_prime_ideal(e1(), Relation::empty(2), f3), Error);
  try {
    is_fuzzy_filter(e1(), Relation::empty(2), f3);
    FAIL("expected an exception");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::CarrierMismatch);
  }
}
