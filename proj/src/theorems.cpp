#include "hyp/theorems.hpp"

#include <algorithm>
#include <utility>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hyp {

std::string_view theorem_name(TheoremId id) {
  switch (id) {
    case TheoremId::Prop6: return "prop6";
    case TheoremId::Prop7: return "prop7";
    case TheoremId::Prop8: return "prop8";
    case TheoremId::Prop12: return "prop12";
    case TheoremId::Prop17: return "prop17";
    case TheoremId::Lemma5: return "lemma5";
  }
  return "";
}

std::optional<TheoremId> theorem_from_name(std::string_view name) {
  for (TheoremId id : kAllTheorems)
    if (theorem_name(id) == name) return id;
  return std::nullopt;
}

std::string_view relaxation_name(Relaxation r) {
  switch (r) {
    case Relaxation::DropFilterC1: return "drop-filter-c1";
    case Relaxation::DropFilterC2: return "drop-filter-c2";
    case Relaxation::DropFilterC3: return "drop-filter-c3";
    case Relaxation::DropFilterC4: return "drop-filter-c4";
    case Relaxation::DropIdealDownclosed: return "drop-ideal-downclosed";
    case Relaxation::DropFuzzyIdealRelation: return "drop-fuzzyideal-relation";
  }
  return "";
}

Relaxation relaxation_from_name(std::string_view name) {
  for (Relaxation r : kAllRelaxations)
    if (relaxation_name(r) == name) return r;
  throw Error(Errc::UnknownRelaxation, "unknown relaxation \"" + std::string(name) + "\"");
}

namespace {

const char* ideal_clause(IdealSide side) {
  switch (side) {
    case IdealSide::Left: return "ideal_left_equivalence";
    case IdealSide::Right: return "ideal_right_equivalence";
    case IdealSide::TwoSided: return "ideal_two_sided_equivalence";
  }
  return "";
}

bool ideal_sides_agree(const Hypergroupoid& s, const Relation& r, Subset a, IdealSide side) {
  return is_ideal(s, r, a, side) ==
         is_fuzzy_ideal(s, r, characteristic(s.order(), a), side);
}

StructureCheck fail(StructureCheck out, Subset a, const char* clause) {
  out.holds = false;
  out.subset = a;
  out.failed_clause = clause;
  return out;
}

StructureCheck fail(StructureCheck out, FuzzySubset f, const char* clause) {
  out.holds = false;
  out.fuzzy = std::move(f);
  out.failed_clause = clause;
  return out;
}

}  // namespace

StructureCheck check_ideal_characterization(const Hypergroupoid& s, const Relation& r,
                                            IdealSide side) {
  StructureCheck out;
  const std::uint64_t subs = subset_count(s.order());
  for (std::uint64_t i = 0; i < subs; ++i) {
    const Subset a = nonempty_subset_at(s.order(), i);
    ++out.checks;
    if (!ideal_sides_agree(s, r, a, side)) return fail(std::move(out), a, ideal_clause(side));
  }
  return out;
}

StructureCheck check_ideal_characterization(const Hypergroupoid& s, const Relation& r) {
  StructureCheck out;
  const std::uint64_t subs = subset_count(s.order());
  for (std::uint64_t i = 0; i < subs; ++i) {
    const Subset a = nonempty_subset_at(s.order(), i);
    for (IdealSide side : {IdealSide::Left, IdealSide::Right, IdealSide::TwoSided}) {
      ++out.checks;
      if (!ideal_sides_agree(s, r, a, side)) return fail(std::move(out), a, ideal_clause(side));
    }
  }
  return out;
}

StructureCheck check_filter_characterization(const Hypergroupoid& s, const Relation& r) {
  StructureCheck out;
  const std::uint64_t subs = subset_count(s.order());
  for (std::uint64_t i = 0; i < subs; ++i) {
    const Subset f = nonempty_subset_at(s.order(), i);
    ++out.checks;
    if (is_filter(s, r, f) != is_fuzzy_filter(s, r, characteristic(s.order(), f)))
      return fail(std::move(out), f, "filter_equivalence");
  }
  return out;
}

StructureCheck check_complement_duality(const Hypergroupoid& s, const Relation& r, int grid) {
  StructureCheck out;
  const std::uint64_t points = grid_count(s.order(), grid);
  for (std::uint64_t i = 0; i < points; ++i) {
    FuzzySubset f = grid_fuzzy_at(s.order(), grid, i);
    ++out.checks;
    if (is_fuzzy_filter(s, r, f) != is_fuzzy_prime_ideal(s, r, complement(f)))
      return fail(std::move(out), std::move(f), "complement_duality");
  }
  return out;
}

StructureCheck check_ideal_form_agreement(const Hypergroupoid& s, const Relation& r) {
  StructureCheck out;
  const std::uint64_t subs = subset_count(s.order());
  for (std::uint64_t i = 0; i < subs; ++i) {
    const Subset a = nonempty_subset_at(s.order(), i);
    for (IdealSide side : {IdealSide::Left, IdealSide::Right}) {
      ++out.checks;
      if (is_ideal(s, r, a, side) != is_ideal_elementwise(s, r, a, side))
        return fail(std::move(out), a,
                    side == IdealSide::Left ? "elementwise_agreement_left"
                                            : "elementwise_agreement_right");
    }
  }
  return out;
}

StructureCheck check_disjointness_equivalence(const Hypergroupoid& s, const Relation& r) {
  StructureCheck out;
  const std::uint64_t subs = subset_count(s.order());
  for (std::uint64_t i = 0; i < subs; ++i) {
    const Subset f = nonempty_subset_at(s.order(), i);
    const FilterProfile p = filter_profile(s, r, f);
    if (!(p.closure && p.divisors && p.upward_closure)) continue;
    ++out.checks;
    bool outside_products_miss = true;
    for (int x = 0; x < s.order() && outside_products_miss; ++x)
      for (int y = 0; y < s.order(); ++y)
        if ((!f.contains(x) || !f.contains(y)) && s.product(x, y).intersects(f)) {
          outside_products_miss = false;
          break;
        }
    if (p.all_or_nothing != outside_products_miss)
      return fail(std::move(out), f, "disjointness_equivalence");
  }
  return out;
}

StructureCheck check_minmax_duality(const Hypergroupoid& s, int grid) {
  StructureCheck out;
  const std::uint64_t points = grid_count(s.order(), grid);
  for (std::uint64_t i = 0; i < points; ++i) {
    FuzzySubset f = grid_fuzzy_at(s.order(), grid, i);
    const FuzzySubset fc = complement(f);
    ++out.checks;
    for (int x = 0; x < s.order(); ++x)
      for (int y = 0; y < s.order(); ++y) {
        const Subset image = s.product(x, y);
        bool min_form = true;
        bool max_form = true;
        for (int u = 0; u < s.order(); ++u) {
          if (!image.contains(u)) continue;
          if (f[u] != std::min(f[x], f[y])) min_form = false;
          if (fc[u] != std::max(fc[x], fc[y])) max_form = false;
        }
        if (min_form != max_form) return fail(std::move(out), std::move(f), "minmax_duality");
      }
  }
  return out;
}

StructureCheck check_prime_decomposition(const Hypergroupoid& s, const Relation& r, int grid) {
  StructureCheck out;
  const std::uint64_t points = grid_count(s.order(), grid);
  for (std::uint64_t i = 0; i < points; ++i) {
    FuzzySubset f = grid_fuzzy_at(s.order(), grid, i);
    ++out.checks;
    const bool whole = is_fuzzy_prime_ideal(s, r, f);
    const bool parts =
        is_fuzzy_ideal(s, r, f, IdealSide::TwoSided) && is_fuzzy_prime_subset(s, f);
    if (whole != parts) return fail(std::move(out), std::move(f), "prime_ideal_decomposition");
  }
  return out;
}

namespace {

int resolve_threads(int requested) {
#ifdef _OPENMP
  if (requested > 0) return requested;
  return std::max(1, omp_get_max_threads());
#else
  (void)requested;
  return 1;
#endif
}

std::uint64_t resolve_chunk(std::uint64_t requested, std::uint64_t pair_count, int threads) {
  if (requested > 0) return requested;
  const std::uint64_t per_round = std::uint64_t(threads) * 8;
  return std::max<std::uint64_t>(1, (pair_count + per_round - 1) / per_round);
}

using PairAt = std::function<std::pair<Hypergroupoid, Relation>(std::uint64_t)>;

struct PairHit {
  std::uint64_t pair = 0;
  StructureCheck check;
};

std::optional<PairHit> scan_pair_range(std::uint64_t lo, std::uint64_t hi, const PairAt& pair_at,
                                       const PairChecker& checker) {
  for (std::uint64_t p = lo; p < hi; ++p) {
    const auto [s, r] = pair_at(p);
    StructureCheck c = checker(s, r);
    if (!c.holds) return PairHit{p, std::move(c)};
  }
  return std::nullopt;
}

// Chunked sweep: chunks are scanned concurrently but merged strictly in
// canonical order, so the reported hit (and therefore the whole Verdict) is
// bit-identical for every thread count and chunk size.
std::optional<PairHit> sweep_pairs(std::uint64_t pair_count, const PairAt& pair_at,
                                   const PairChecker& checker, const ExecPolicy* policy) {
  if (policy == nullptr) return scan_pair_range(0, pair_count, pair_at, checker);

  const int threads = resolve_threads(policy->threads);
  const std::uint64_t chunk = resolve_chunk(policy->chunk, pair_count, threads);
  const std::uint64_t chunks = pair_count == 0 ? 0 : (pair_count + chunk - 1) / chunk;
  const std::uint64_t group = std::uint64_t(threads) * 4;

  for (std::uint64_t g = 0; g < chunks; g += group) {
    const std::uint64_t g_end = std::min(chunks, g + group);
    std::vector<std::optional<PairHit>> hits(static_cast<std::size_t>(g_end - g));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(threads)
#endif
    for (long long c = static_cast<long long>(g); c < static_cast<long long>(g_end); ++c) {
      const std::uint64_t lo = std::uint64_t(c) * chunk;
      const std::uint64_t hi = std::min(pair_count, lo + chunk);
      hits[static_cast<std::size_t>(c - static_cast<long long>(g))] =
          scan_pair_range(lo, hi, pair_at, checker);
    }
    for (auto& hit : hits)
      if (hit) return std::move(*hit);
  }
  return std::nullopt;
}

Verdict finish_verdict(std::string name, Domain domain, const PairAt& pair_at,
                       std::optional<PairHit> hit) {
  Verdict v;
  v.theorem = std::move(name);
  v.domain = std::move(domain);
  if (!hit) {
    v.holds = true;
    v.checks = v.domain.structures * v.domain.relations * v.domain.inner;
    return v;
  }
  v.holds = false;
  v.checks = hit->pair * v.domain.inner + hit->check.checks;
  auto [s, r] = pair_at(hit->pair);
  v.witness = Witness{v.theorem,           std::move(s),
                      std::move(r),        std::move(hit->check.subset),
                      std::move(hit->check.fuzzy), std::move(hit->check.failed_clause)};
  return v;
}

struct TheoremPlan {
  std::uint64_t inner = 0;
  std::string inner_kind;
  PairChecker checker;
};

TheoremPlan plan_for(TheoremId id, int order, int grid) {
  switch (id) {
    case TheoremId::Prop6:
      return {subset_count(order), "subsets", [](const Hypergroupoid& s, const Relation& r) {
                return check_ideal_characterization(s, r, IdealSide::Left);
              }};
    case TheoremId::Prop7:
      return {subset_count(order), "subsets", [](const Hypergroupoid& s, const Relation& r) {
                return check_ideal_characterization(s, r, IdealSide::Right);
              }};
    case TheoremId::Prop8:
      return {subset_count(order), "subsets", [](const Hypergroupoid& s, const Relation& r) {
                return check_ideal_characterization(s, r, IdealSide::TwoSided);
              }};
    case TheoremId::Prop12:
      return {subset_count(order), "subsets", [](const Hypergroupoid& s, const Relation& r) {
                return check_filter_characterization(s, r);
              }};
    case TheoremId::Prop17:
      return {grid_count(order, grid), "grid", [grid](const Hypergroupoid& s, const Relation& r) {
                return check_complement_duality(s, r, grid);
              }};
    case TheoremId::Lemma5:
      return {subset_count(order) * 2, "subset-sides",
              [](const Hypergroupoid& s, const Relation& r) {
                return check_ideal_form_agreement(s, r);
              }};
  }
  throw Error(Errc::UnknownRelaxation, "unhandled theorem id");
}

Verdict family_impl(const std::string& name, int order, std::uint64_t inner,
                    const std::string& inner_kind, const PairChecker& checker,
                    const ExecPolicy* policy) {
  if (order < 1 || order > 2)
    throw Error(Errc::OrderTooLarge,
                "exhaustive verification covers orders 1 and 2; use sampling or a table range "
                "beyond that");
  Domain d;
  d.order = order;
  d.structures = table_count(order);
  d.relations = relation_count(order);
  d.inner = inner;
  d.inner_kind = inner_kind;
  d.mode = "exhaustive";
  const std::uint64_t rels = d.relations;
  const PairAt pair_at = [order, rels](std::uint64_t p) {
    return std::pair(table_at(order, p / rels), relation_at(order, p % rels));
  };
  auto hit = sweep_pairs(d.structures * rels, pair_at, checker, policy);
  return finish_verdict(name, std::move(d), pair_at, std::move(hit));
}

Verdict sampled_impl(TheoremId id, int order, int grid, std::uint64_t seed, std::uint64_t samples,
                     const ExecPolicy* policy) {
  const TheoremPlan plan = plan_for(id, order, grid);
  Domain d;
  d.order = order;
  d.structures = samples;
  d.relations = 1;
  d.inner = plan.inner;
  d.inner_kind = plan.inner_kind;
  d.mode = "sample";
  const PairAt pair_at = [order, seed](std::uint64_t i) {
    return sample_structure(order, sample_seed_at(seed, i));
  };
  auto hit = sweep_pairs(samples, pair_at, plan.checker, policy);
  return finish_verdict(std::string(theorem_name(id)), std::move(d), pair_at, std::move(hit));
}

}  // namespace

Verdict verify_family(const std::string& name, int order, std::uint64_t inner,
                      const std::string& inner_kind, const PairChecker& checker,
                      const ExecPolicy& policy) {
  return family_impl(name, order, inner, inner_kind, checker, &policy);
}

Verdict verify_family_serial(const std::string& name, int order, std::uint64_t inner,
                             const std::string& inner_kind, const PairChecker& checker) {
  return family_impl(name, order, inner, inner_kind, checker, nullptr);
}

Verdict verify_exhaustive(TheoremId id, int order, int grid, const ExecPolicy& policy) {
  const TheoremPlan plan = plan_for(id, order, grid);
  return family_impl(std::string(theorem_name(id)), order, plan.inner, plan.inner_kind,
                     plan.checker, &policy);
}

Verdict verify_exhaustive_serial(TheoremId id, int order, int grid) {
  const TheoremPlan plan = plan_for(id, order, grid);
  return family_impl(std::string(theorem_name(id)), order, plan.inner, plan.inner_kind,
                     plan.checker, nullptr);
}

Verdict verify_sampled(TheoremId id, int order, int grid, std::uint64_t seed,
                       std::uint64_t samples, const ExecPolicy& policy) {
  return sampled_impl(id, order, grid, seed, samples, &policy);
}

Verdict verify_sampled_serial(TheoremId id, int order, int grid, std::uint64_t seed,
                              std::uint64_t samples) {
  return sampled_impl(id, order, grid, seed, samples, nullptr);
}

Verdict verify_table_range(TheoremId id, int order, int grid, std::uint64_t table_lo,
                           std::uint64_t table_hi, std::uint32_t relation_mask,
                           const ExecPolicy& policy) {
  if (table_lo >= table_hi || table_hi > table_count(order))
    throw Error(Errc::OrderTooLarge, "table range is empty or exceeds the table count");
  if (relation_mask >= relation_count(order))
    throw Error(Errc::OrderTooLarge, "relation mask has bits outside the carrier square");
  const TheoremPlan plan = plan_for(id, order, grid);
  Domain d;
  d.order = order;
  d.structures = table_hi - table_lo;
  d.relations = 1;
  d.inner = plan.inner;
  d.inner_kind = plan.inner_kind;
  d.mode = "table-range";
  const PairAt pair_at = [order, table_lo, relation_mask](std::uint64_t p) {
    return std::pair(table_at(order, table_lo + p), Relation::from_mask(order, relation_mask));
  };
  auto hit = sweep_pairs(d.structures, pair_at, plan.checker, &policy);
  return finish_verdict(std::string(theorem_name(id)), std::move(d), pair_at, std::move(hit));
}

namespace {

struct RelaxPlan {
  std::function<bool(const Hypergroupoid&, const Relation&, Subset)> counterexample;
  const char* clause;
};

RelaxPlan filter_relax_plan(Relaxation relax) {
  // Keeps the three conditions other than the dropped one; a hit is a subset
  // where those hold yet the characteristic function is not a fuzzy filter
  // (equivalently, by the filter theorem, the dropped condition fails).
  return {[relax](const Hypergroupoid& s, const Relation& r, Subset f) {
            const FilterProfile p = filter_profile(s, r, f);
            bool kept = true;
            if (relax != Relaxation::DropFilterC1) kept = kept && p.closure;
            if (relax != Relaxation::DropFilterC2) kept = kept && p.divisors;
            if (relax != Relaxation::DropFilterC3) kept = kept && p.all_or_nothing;
            if (relax != Relaxation::DropFilterC4) kept = kept && p.upward_closure;
            return kept && !is_fuzzy_filter(s, r, characteristic(s.order(), f));
          },
          relax == Relaxation::DropFilterC1   ? "filter_c1"
          : relax == Relaxation::DropFilterC2 ? "filter_c2"
          : relax == Relaxation::DropFilterC3 ? "filter_c3"
                                              : "filter_c4"};
}

RelaxPlan relax_plan(Relaxation relax) {
  switch (relax) {
    case Relaxation::DropFilterC1:
    case Relaxation::DropFilterC2:
    case Relaxation::DropFilterC3:
    case Relaxation::DropFilterC4:
      return filter_relax_plan(relax);
    case Relaxation::DropIdealDownclosed:
      return {[](const Hypergroupoid& s, const Relation& r, Subset a) {
                return ideal_star_clause(s, a, IdealSide::TwoSided) &&
                       !is_fuzzy_ideal(s, r, characteristic(s.order(), a), IdealSide::TwoSided);
              },
              "fuzzy_ideal_relation"};
    case Relaxation::DropFuzzyIdealRelation:
      return {[](const Hypergroupoid& s, const Relation& r, Subset a) {
                return fuzzy_ideal_product_clause(s, characteristic(s.order(), a),
                                                  IdealSide::TwoSided) &&
                       !is_ideal(s, r, a, IdealSide::TwoSided);
              },
              "ideal_downward_closure"};
  }
  throw Error(Errc::UnknownRelaxation, "unhandled relaxation");
}

struct TupleHit {
  std::uint64_t pair = 0;
  std::uint64_t subset = 0;
};

// Scans pairs [lo, hi), honoring the order-wide tuple budget: pair p may use
// subset ordinal si only while p*subs + si < budget.
std::optional<TupleHit> scan_tuple_range(int order, std::uint64_t lo, std::uint64_t hi,
                                         std::uint64_t subs, std::uint64_t budget,
                                         const PairAt& pair_at, const RelaxPlan& plan) {
  for (std::uint64_t p = lo; p < hi; ++p) {
    const std::uint64_t before = p * subs;
    if (before >= budget) break;
    const std::uint64_t allowed = std::min(subs, budget - before);
    const auto [s, r] = pair_at(p);
    for (std::uint64_t si = 0; si < allowed; ++si) {
      if (plan.counterexample(s, r, nonempty_subset_at(order, si)))
        return TupleHit{p, si};
    }
  }
  return std::nullopt;
}

std::optional<TupleHit> sweep_tuples(int order, std::uint64_t pair_count, std::uint64_t subs,
                                     std::uint64_t budget, const PairAt& pair_at,
                                     const RelaxPlan& plan, const ExecPolicy* policy) {
  if (policy == nullptr) return scan_tuple_range(order, 0, pair_count, subs, budget, pair_at, plan);

  const int threads = resolve_threads(policy->threads);
  const std::uint64_t chunk = resolve_chunk(policy->chunk, pair_count, threads);
  const std::uint64_t chunks = pair_count == 0 ? 0 : (pair_count + chunk - 1) / chunk;
  const std::uint64_t group = std::uint64_t(threads) * 4;

  for (std::uint64_t g = 0; g < chunks; g += group) {
    const std::uint64_t g_end = std::min(chunks, g + group);
    std::vector<std::optional<TupleHit>> hits(static_cast<std::size_t>(g_end - g));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(threads)
#endif
    for (long long c = static_cast<long long>(g); c < static_cast<long long>(g_end); ++c) {
      const std::uint64_t lo = std::uint64_t(c) * chunk;
      const std::uint64_t hi = std::min(pair_count, lo + chunk);
      hits[static_cast<std::size_t>(c - static_cast<long long>(g))] =
          scan_tuple_range(order, lo, hi, subs, budget, pair_at, plan);
    }
    for (auto& hit : hits)
      if (hit) return std::move(*hit);
  }
  return std::nullopt;
}

std::optional<Witness> search_impl(Relaxation relax, int max_order, std::uint64_t budget,
                                   const ExecPolicy* policy) {
  if (max_order < 1 || max_order > kMaxEnumOrder)
    throw Error(Errc::OrderTooLarge,
                "search supports orders 1.." + std::to_string(kMaxEnumOrder));
  const RelaxPlan plan = relax_plan(relax);
  std::uint64_t remaining = budget == 0 ? UINT64_MAX : budget;

  for (int order = 1; order <= max_order && remaining > 0; ++order) {
    const std::uint64_t rels = relation_count(order);
    const std::uint64_t subs = subset_count(order);
    const unsigned __int128 total_pairs =
        static_cast<unsigned __int128>(table_count(order)) * rels;
    const unsigned __int128 pairs_in_budget =
        static_cast<unsigned __int128>((remaining - 1) / subs) + 1;
    const std::uint64_t pair_count = static_cast<std::uint64_t>(
        std::min(total_pairs, std::min(pairs_in_budget,
                                       static_cast<unsigned __int128>(UINT64_MAX))));
    const PairAt pair_at = [order, rels](std::uint64_t p) {
      return std::pair(table_at(order, p / rels), relation_at(order, p % rels));
    };
    const auto hit =
        sweep_tuples(order, pair_count, subs, remaining, pair_at, plan, policy);
    if (hit) {
      auto [s, r] = pair_at(hit->pair);
      return Witness{std::string(relaxation_name(relax)),
                     std::move(s),
                     std::move(r),
                     nonempty_subset_at(order, hit->subset),
                     std::nullopt,
                     plan.clause};
    }
    const unsigned __int128 total_tuples = total_pairs * subs;
    if (static_cast<unsigned __int128>(remaining) <= total_tuples) return std::nullopt;
    remaining -= static_cast<std::uint64_t>(total_tuples);
  }
  return std::nullopt;
}

}  // namespace

std::optional<Witness> search_counterexample(Relaxation relax, int max_order, std::uint64_t budget,
                                             std::uint64_t seed, const ExecPolicy& policy) {
  (void)seed;
  return search_impl(relax, max_order, budget, &policy);
}

std::optional<Witness> search_counterexample_serial(Relaxation relax, int max_order,
                                                    std::uint64_t budget, std::uint64_t seed) {
  (void)seed;
  return search_impl(relax, max_order, budget, nullptr);
}

std::string replay_witness(const Witness& w) {
  const Hypergroupoid& s = w.structure;
  const Relation& r = w.relation;
  const std::string& origin = w.origin;
  const auto need_subset = [&]() -> Subset {
    if (!w.subset) throw Error(Errc::EmptyOperand, "witness carries no subset to replay");
    return *w.subset;
  };
  const auto need_fuzzy = [&]() -> const FuzzySubset& {
    if (!w.fuzzy) throw Error(Errc::EmptyOperand, "witness carries no fuzzy subset to replay");
    return *w.fuzzy;
  };

  if (origin == "prop6" || origin == "prop7" || origin == "prop8") {
    const IdealSide side = origin == "prop6"   ? IdealSide::Left
                           : origin == "prop7" ? IdealSide::Right
                                               : IdealSide::TwoSided;
    return ideal_sides_agree(s, r, need_subset(), side) ? "" : ideal_clause(side);
  }
  if (origin == "prop12") {
    const Subset f = need_subset();
    return is_filter(s, r, f) == is_fuzzy_filter(s, r, characteristic(s.order(), f))
               ? ""
               : "filter_equivalence";
  }
  if (origin == "prop17") {
    const FuzzySubset& f = need_fuzzy();
    return is_fuzzy_filter(s, r, f) == is_fuzzy_prime_ideal(s, r, complement(f))
               ? ""
               : "complement_duality";
  }
  if (origin == "lemma5") {
    const Subset a = need_subset();
    for (IdealSide side : {IdealSide::Left, IdealSide::Right})
      if (is_ideal(s, r, a, side) != is_ideal_elementwise(s, r, a, side))
        return side == IdealSide::Left ? "elementwise_agreement_left"
                                       : "elementwise_agreement_right";
    return "";
  }

  for (Relaxation relax : kAllRelaxations) {
    if (origin != relaxation_name(relax)) continue;
    const Subset a = need_subset();
    const RelaxPlan plan = relax_plan(relax);
    return plan.counterexample(s, r, a) ? plan.clause : "";
  }
  throw Error(Errc::UnknownRelaxation, "unknown witness origin \"" + origin + "\"");
}

}  // namespace hyp
