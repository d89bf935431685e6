#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "hyp/enumerate.hpp"

namespace hyp {

// The verified equivalences, named by their external selector tokens:
//   prop6   A is a left ideal   <=>  characteristic(A) is a fuzzy left ideal
//   prop7   A is a right ideal  <=>  characteristic(A) is a fuzzy right ideal
//   prop8   A is an ideal       <=>  characteristic(A) is a fuzzy ideal
//   prop12  F is a filter       <=>  characteristic(F) is a fuzzy filter
//   prop17  f is a fuzzy filter <=>  complement(f) is a fuzzy prime ideal
//   lemma5  star and elementwise ideal forms agree (left and right)
// Each is a theorem over every finite model, so a failing verdict signals an
// implementation bug; the sweeps exist to detect exactly that.
enum class TheoremId { Prop6, Prop7, Prop8, Prop12, Prop17, Lemma5 };

inline constexpr TheoremId kAllTheorems[] = {TheoremId::Prop6,  TheoremId::Prop7,
                                             TheoremId::Prop8,  TheoremId::Prop12,
                                             TheoremId::Prop17, TheoremId::Lemma5};

std::string_view theorem_name(TheoremId id);
std::optional<TheoremId> theorem_from_name(std::string_view name);

// Hypothesis relaxations for counterexample search: each drops one clause
// from a defining property and hunts for a model where the kept clauses hold
// but the corresponding theorem conclusion fails, demonstrating the dropped
// clause is not implied by the others.
//   drop-filter-c1..c4        keep three filter conditions, drop the one named;
//                             conclusion: characteristic(F) is a fuzzy filter
//   drop-ideal-downclosed     keep the star containments, drop downward
//                             closure; conclusion: characteristic(A) is a
//                             fuzzy ideal
//   drop-fuzzyideal-relation  keep the fuzzy product clause of
//                             characteristic(A), drop the relation clause;
//                             conclusion: A is an ideal
enum class Relaxation {
  DropFilterC1,
  DropFilterC2,
  DropFilterC3,
  DropFilterC4,
  DropIdealDownclosed,
  DropFuzzyIdealRelation,
};

inline constexpr Relaxation kAllRelaxations[] = {
    Relaxation::DropFilterC1,        Relaxation::DropFilterC2, Relaxation::DropFilterC3,
    Relaxation::DropFilterC4,        Relaxation::DropIdealDownclosed,
    Relaxation::DropFuzzyIdealRelation,
};

std::string_view relaxation_name(Relaxation r);
// Throws Error{UnknownRelaxation} for an unrecognized name.
Relaxation relaxation_from_name(std::string_view name);

// A concrete model exhibiting a failure: the structure, its relation, and the
// crisp or fuzzy subset on which `failed_clause` (a stable clause token such
// as "filter_c3" or "fuzzy_ideal_relation") does not hold. `origin` is the
// theorem or relaxation name that produced it.
struct Witness {
  std::string origin;
  Hypergroupoid structure;
  Relation relation;
  std::optional<Subset> subset;
  std::optional<FuzzySubset> fuzzy;
  std::string failed_clause;

  friend bool operator==(const Witness&, const Witness&) = default;
};

// Re-evaluates the unrelaxed predicates behind `origin` on the witness model
// and returns the clause token that fails, or "" if nothing does. Supports
// theorem and relaxation origins; throws Error{UnknownRelaxation} otherwise.
std::string replay_witness(const Witness& w);

// What a verdict quantified over: (structures x relations) pairs, each
// checked at `inner` points of `inner_kind` ("subsets", "subset-sides" or
// "grid"). mode is "exhaustive", "sample" or "table-range".
struct Domain {
  int order = 0;
  std::uint64_t structures = 0;
  std::uint64_t relations = 0;
  std::uint64_t inner = 0;
  std::string inner_kind;
  std::string mode;

  friend bool operator==(const Domain&, const Domain&) = default;
};

// Outcome of one theorem sweep. Invariants: holds == !witness.has_value();
// checks equals structures*relations*inner when holds, otherwise the number
// of checks completed in canonical order up to and including the witness.
struct Verdict {
  std::string theorem;
  Domain domain;
  bool holds = true;
  std::uint64_t checks = 0;
  std::optional<Witness> witness;

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

// Result of checking one theorem on one (structure, relation) pair across
// its inner quantification domain, stopping at the first failure.
struct StructureCheck {
  bool holds = true;
  std::uint64_t checks = 0;
  std::optional<Subset> subset;
  std::optional<FuzzySubset> fuzzy;
  std::string failed_clause;

  friend bool operator==(const StructureCheck&, const StructureCheck&) = default;
};

// Per-structure checkers. Inner canonical orders: subsets ascending by
// bitmask; where sides participate, sides cycle fastest (left, right, then
// two-sided where applicable); grid fuzzy subsets ascending by ordinal.
StructureCheck check_ideal_characterization(const Hypergroupoid& s, const Relation& r,
                                            IdealSide side);
StructureCheck check_ideal_characterization(const Hypergroupoid& s, const Relation& r);
StructureCheck check_filter_characterization(const Hypergroupoid& s, const Relation& r);
StructureCheck check_complement_duality(const Hypergroupoid& s, const Relation& r, int grid);
StructureCheck check_ideal_form_agreement(const Hypergroupoid& s, const Relation& r);

// Companion equivalences swept alongside the named theorems.
// For subsets satisfying the closure, divisor and upward-closure filter
// conditions: all-or-nothing <=> products touching F from outside miss F
// entirely. Only qualifying subsets are counted.
StructureCheck check_disjointness_equivalence(const Hypergroupoid& s, const Relation& r);
// Per fuzzy subset: [every u in x∘y has f(u) = min{f(x), f(y)}] <=>
// [every u has f'(u) = max{f'(x), f'(y)}], for every pair (x, y).
StructureCheck check_minmax_duality(const Hypergroupoid& s, int grid);
// Fuzzy prime ideal <=> fuzzy ideal and fuzzy prime subset.
StructureCheck check_prime_decomposition(const Hypergroupoid& s, const Relation& r, int grid);

// Parallel execution policy. threads == 0 uses every available core;
// chunk == 0 derives a chunk size from the thread count. Verdicts are
// bit-identical for every (threads, chunk) combination.
struct ExecPolicy {
  int threads = 0;
  std::uint64_t chunk = 0;
};

using PairChecker = std::function<StructureCheck(const Hypergroupoid&, const Relation&)>;

// Sweeps `checker` over every (structure, relation) pair of the given order,
// table-major. `inner` is the checks a passing pair contributes. This is the
// generic engine behind verify_exhaustive; exposed so tests can drive it
// with deliberately false properties and inspect the witness machinery.
Verdict verify_family(const std::string& name, int order, std::uint64_t inner,
                      const std::string& inner_kind, const PairChecker& checker,
                      const ExecPolicy& policy = {});
Verdict verify_family_serial(const std::string& name, int order, std::uint64_t inner,
                             const std::string& inner_kind, const PairChecker& checker);

// Exhaustive sweep over all (structure, relation) pairs; order must be 1 or 2
// (Error{OrderTooLarge} otherwise; larger orders go through verify_sampled or
// verify_table_range). `grid` is the fuzzy grid denominator, used by prop17.
Verdict verify_exhaustive(TheoremId id, int order, int grid = 2, const ExecPolicy& policy = {});
Verdict verify_exhaustive_serial(TheoremId id, int order, int grid = 2);

// Seeded sweep over `samples` random pairs; sample i is drawn from
// sample_structure(order, sample_seed_at(seed, i)).
Verdict verify_sampled(TheoremId id, int order, int grid, std::uint64_t seed,
                       std::uint64_t samples, const ExecPolicy& policy = {});
Verdict verify_sampled_serial(TheoremId id, int order, int grid, std::uint64_t seed,
                              std::uint64_t samples);

// Exhaustive over tables in [table_lo, table_hi) against one fixed relation:
// the opt-in long-run mode for orders whose full pair space is impractical.
Verdict verify_table_range(TheoremId id, int order, int grid, std::uint64_t table_lo,
                           std::uint64_t table_hi, std::uint32_t relation_mask,
                           const ExecPolicy& policy = {});

// First witness in canonical (order, table, relation, subset) order where the
// relaxed property holds but the conclusion fails; nullopt when the domain or
// budget is exhausted. budget counts (table, relation, subset) tuples, 0
// meaning unlimited. seed is reserved for future randomized strategies; the
// canonical scan ignores it.
std::optional<Witness> search_counterexample(Relaxation relax, int max_order,
                                             std::uint64_t budget = 0, std::uint64_t seed = 0,
                                             const ExecPolicy& policy = {});
std::optional<Witness> search_counterexample_serial(Relaxation relax, int max_order,
                                                    std::uint64_t budget = 0,
                                                    std::uint64_t seed = 0);

}  // namespace hyp
