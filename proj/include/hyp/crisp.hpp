#pragma once

#include "hyp/core.hpp"

namespace hyp {

enum class IdealSide { Left, Right, TwoSided };

// The four filter conditions evaluated independently (never short-circuited
// across each other), so relaxation search can inspect each verdict.
struct FilterProfile {
  bool closure = false;         // c1: x,y in F implies x∘y ⊆ F
  bool divisors = false;        // c2: x∘y ⊆ F implies x in F and y in F
  bool all_or_nothing = false;  // c3: x∘y ⊆ F or (x∘y) ∩ F = ∅
  bool upward_closure = false;  // c4: x in F and x <= y implies y in F

  bool all() const { return closure && divisors && all_or_nothing && upward_closure; }

  friend bool operator==(FilterProfile, FilterProfile) = default;
};

// All predicates below require a nonempty subset argument and throw
// Error{EmptyOperand} otherwise.

bool is_subgroupoid(const Hypergroupoid& s, Subset a);

// Left: star(H, A) ⊆ A; Right: star(A, H) ⊆ A; TwoSided: both.
// Every side additionally requires A downward closed under the relation.
bool is_ideal(const Hypergroupoid& s, const Relation& r, Subset a, IdealSide side);

// Same property decided cell by cell: product(h, a) ⊆ A for the left side,
// product(a, h) ⊆ A for the right, both for two-sided.
bool is_ideal_elementwise(const Hypergroupoid& s, const Relation& r, Subset a, IdealSide side);

bool is_filter(const Hypergroupoid& s, const Relation& r, Subset f);

FilterProfile filter_profile(const Hypergroupoid& s, const Relation& r, Subset f);

// Individual clauses of is_ideal, for relaxation search and witness replay.
bool ideal_star_clause(const Hypergroupoid& s, Subset a, IdealSide side);
bool downward_closed_under(const Relation& r, Subset a);

}  // namespace hyp
