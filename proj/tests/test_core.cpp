#include <doctest.h>

#include <vector>

#include "hyp/core.hpp"
#include "hyp/enumerate.hpp"

using namespace hyp;

namespace {

const Subset A = Subset::single(0);
const Subset B = Subset::single(1);
const Subset AB = Subset::of({0, 1});

// a∘a={a}, a∘b={a,b}, b∘a={b}, b∘b={b}
Hypergroupoid e1() { return Hypergroupoid::make(2, {A, AB, B, B}); }
// every product is {a}
Hypergroupoid e2() { return Hypergroupoid::make(2, {A, A, A, A}); }
// every product is {a,b}
Hypergroupoid e3() { return Hypergroupoid::make(2, {AB, AB, AB, AB}); }

}  // namespace

TEST_CASE("carrier labelling and lookup") {
  const Hypergroupoid s = e1();
  CHECK(s.order() == 2);
  CHECK(s.label(0) == "a");
  CHECK(s.label(1) == "b");
  CHECK(s.index_of("b") == 1);
  CHECK_FALSE(s.index_of("z").has_value());
  CHECK(s.carrier() == AB);
  CHECK(default_labels(3) == std::vector<std::string>{"a", "b", "c"});

  const Hypergroupoid named = Hypergroupoid::make({"x", "y"}, {A, AB, B, B});
  CHECK(named.label(1) == "y");
  CHECK(named.index_of("x") == 0);
  CHECK_FALSE(named == e1());  // same table, different labels
  CHECK(e1() == e1());
}

TEST_CASE("construction rejects malformed tables") {
  CHECK_THROWS_AS(Hypergroupoid::make(0, {}), Error);
  CHECK_THROWS_AS(Hypergroupoid::make(27, std::vector<Subset>(27 * 27, A)), Error);
  CHECK_THROWS_AS(Hypergroupoid::make(2, {A, A, A, Subset{}}), Error);           // empty image
  CHECK_THROWS_AS(Hypergroupoid::make(2, {A, A, A, Subset::single(2)}), Error);  // out of carrier
  CHECK_THROWS_AS(Hypergroupoid::make(2, {A, A, A}), std::invalid_argument);
  CHECK_THROWS_AS(Hypergroupoid::make({"a", "a"}, {A, A, A, A}), std::invalid_argument);

  try {
    Hypergroupoid::make(2, {A, Subset{}, A, A});
    FAIL("expected an exception");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::EmptyImage);
  }
}

TEST_CASE("star lifts the operation to subsets") {
  const Hypergroupoid s = e1();
  // singletons reproduce the table
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      CHECK(star(s, Subset::single(x), Subset::single(y)) == s.product(x, y));

  CHECK(star(s, AB, B) == AB);  // a∘b ∪ b∘b = {a,b}
  CHECK(star(s, B, AB) == B);   // b∘a ∪ b∘b = {b}
  CHECK(star(s, AB, AB) == AB);
  CHECK(star(e2(), AB, AB) == A);

  CHECK_THROWS_AS(star(s, Subset{}, A), Error);
  CHECK_THROWS_AS(star(s, A, Subset{}), Error);
}

TEST_CASE("star agrees with the membership definition") {
  // u is in A*B exactly when some a in A and b in B have u in a∘b.
  const auto member_star = [](const Hypergroupoid& s, Subset a, Subset b) {
    Subset out;
    for (int u = 0; u < s.order(); ++u) {
      bool found = false;
      for (int x = 0; x < s.order() && !found; ++x)
        for (int y = 0; y < s.order() && !found; ++y)
          if (a.contains(x) && b.contains(y) && s.product(x, y).contains(u)) found = true;
      if (found) out |= Subset::single(u);
    }
    return out;
  };

  for (std::uint64_t t = 0; t < table_count(2); ++t) {
    const Hypergroupoid s = table_at(2, t);
    for (std::uint64_t i = 0; i < subset_count(2); ++i)
      for (std::uint64_t j = 0; j < subset_count(2); ++j) {
        const Subset a = nonempty_subset_at(2, i);
        const Subset b = nonempty_subset_at(2, j);
        REQUIRE(star(s, a, b) == member_star(s, a, b));
      }
  }
  for (std::uint64_t draw = 0; draw < 100; ++draw) {
    const auto [s, r] = sample_structure(3, sample_seed_at(7, draw));
    for (std::uint64_t i = 0; i < subset_count(3); ++i)
      for (std::uint64_t j = 0; j < subset_count(3); ++j) {
        const Subset a = nonempty_subset_at(3, i);
        const Subset b = nonempty_subset_at(3, j);
        REQUIRE(star(s, a, b) == member_star(s, a, b));
      }
  }
}

TEST_CASE("relations are sets of ordered pairs") {
  const Relation r = Relation::from_pairs(2, {{1, 0}, {0, 0}, {1, 0}});
  CHECK(r.pairs().size() == 2);  // deduplicated
  CHECK(r.contains(0, 0));
  CHECK(r.contains(1, 0));
  CHECK_FALSE(r.contains(0, 1));
  CHECK(r.mask() == 0b0101u);  // bits 0 (a,a) and 2 (b,a)

  for (std::uint32_t mask = 0; mask < 16; ++mask)
    CHECK(Relation::from_mask(2, mask).mask() == mask);

  CHECK(Relation::empty(2).pairs().empty());
  CHECK_THROWS_AS(Relation::from_pairs(2, {{0, 2}}), Error);
}

TEST_CASE("relation diagnostics are informational") {
  const Hypergroupoid s = e1();
  const auto all = relation_diagnostics(s, Relation::from_mask(2, 0b1001));  // {(a,a),(b,b)}
  CHECK(all.reflexive);
  CHECK(all.transitive);
  CHECK(all.antisymmetric);

  const auto cyc = relation_diagnostics(s, Relation::from_mask(2, 0b0110));  // {(a,b),(b,a)}
  CHECK_FALSE(cyc.reflexive);
  CHECK_FALSE(cyc.transitive);  // (a,b),(b,a) demand (a,a)
  CHECK_FALSE(cyc.antisymmetric);

  const auto none = relation_diagnostics(s, Relation::empty(2));
  CHECK_FALSE(none.reflexive);
  CHECK(none.transitive);
  CHECK(none.antisymmetric);
}

TEST_CASE("subset bit operations") {
  CHECK(Subset::full(3).size() == 3);
  CHECK(AB.contains(0));
  CHECK(AB.contains(1));
  CHECK_FALSE(A.contains(1));
  CHECK(A.subset_of(AB));
  CHECK_FALSE(AB.subset_of(A));
  CHECK(A.intersects(AB));
  CHECK_FALSE(A.intersects(B));
  CHECK((A | B) == AB);
  CHECK((AB & B) == B);
  CHECK(Subset{}.empty());
  CHECK(e3().product(0, 0) == AB);
}
