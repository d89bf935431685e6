#include "hyp/crisp.hpp"

namespace hyp {

namespace {

void require_nonempty(Subset a) {
  if (a.empty()) throw Error(Errc::EmptyOperand, "predicate is defined on nonempty subsets only");
}

bool downward_closed(const Relation& r, Subset a) {
  for (const auto& [x, y] : r.pairs())
    if (a.contains(y) && !a.contains(x)) return false;
  return true;
}

bool upward_closed(const Relation& r, Subset f) {
  for (const auto& [x, y] : r.pairs())
    if (f.contains(x) && !f.contains(y)) return false;
  return true;
}

}  // namespace

bool is_subgroupoid(const Hypergroupoid& s, Subset a) {
  require_nonempty(a);
  return star(s, a, a).subset_of(a);
}

bool is_ideal(const Hypergroupoid& s, const Relation& r, Subset a, IdealSide side) {
  require_nonempty(a);
  const Subset carrier = s.carrier();
  if (side != IdealSide::Right && !star(s, carrier, a).subset_of(a)) return false;
  if (side != IdealSide::Left && !star(s, a, carrier).subset_of(a)) return false;
  return downward_closed(r, a);
}

bool is_ideal_elementwise(const Hypergroupoid& s, const Relation& r, Subset a, IdealSide side) {
  require_nonempty(a);
  for (int h = 0; h < s.order(); ++h) {
    for (int x = 0; x < s.order(); ++x) {
      if (!a.contains(x)) continue;
      if (side != IdealSide::Right && !s.product(h, x).subset_of(a)) return false;
      if (side != IdealSide::Left && !s.product(x, h).subset_of(a)) return false;
    }
  }
  return downward_closed(r, a);
}

bool is_filter(const Hypergroupoid& s, const Relation& r, Subset f) {
  return filter_profile(s, r, f).all();
}

bool ideal_star_clause(const Hypergroupoid& s, Subset a, IdealSide side) {
  require_nonempty(a);
  const Subset carrier = s.carrier();
  if (side != IdealSide::Right && !star(s, carrier, a).subset_of(a)) return false;
  if (side != IdealSide::Left && !star(s, a, carrier).subset_of(a)) return false;
  return true;
}

bool downward_closed_under(const Relation& r, Subset a) { return downward_closed(r, a); }

FilterProfile filter_profile(const Hypergroupoid& s, const Relation& r, Subset f) {
  require_nonempty(f);
  FilterProfile p;

  p.closure = true;
  for (int x = 0; x < s.order(); ++x)
    for (int y = 0; y < s.order(); ++y)
      if (f.contains(x) && f.contains(y) && !s.product(x, y).subset_of(f)) p.closure = false;

  p.divisors = true;
  for (int x = 0; x < s.order(); ++x)
    for (int y = 0; y < s.order(); ++y)
      if (s.product(x, y).subset_of(f) && !(f.contains(x) && f.contains(y))) p.divisors = false;

  p.all_or_nothing = true;
  for (int x = 0; x < s.order(); ++x)
    for (int y = 0; y < s.order(); ++y) {
      const Subset image = s.product(x, y);
      if (!image.subset_of(f) && image.intersects(f)) p.all_or_nothing = false;
    }

  p.upward_closure = upward_closed(r, f);
  return p;
}

}  // namespace hyp
