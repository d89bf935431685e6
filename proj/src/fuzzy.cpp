#include "hyp/fuzzy.hpp"

#include <algorithm>

namespace hyp {

Grade::Grade(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(Errc::GradeOutOfRange, "grade denominator is zero");
  value_ = boost::rational<std::int64_t>(num, den);
  if (value_ < 0 || value_ > 1)
    throw Error(Errc::GradeOutOfRange, "grade " + str() + " lies outside [0, 1]");
}

Grade Grade::complement() const { return Grade(boost::rational<std::int64_t>(1) - value_); }

std::string Grade::str() const {
  if (value_.denominator() == 1) return std::to_string(value_.numerator());
  return std::to_string(value_.numerator()) + "/" + std::to_string(value_.denominator());
}

FuzzySubset characteristic(int order, Subset a) {
  std::vector<Grade> grades(static_cast<std::size_t>(order));
  for (int i = 0; i < order; ++i)
    if (a.contains(i)) grades[static_cast<std::size_t>(i)] = Grade::one();
  return FuzzySubset(std::move(grades));
}

FuzzySubset complement(const FuzzySubset& f) {
  std::vector<Grade> grades;
  grades.reserve(f.grades().size());
  for (const Grade& g : f.grades()) grades.push_back(g.complement());
  return FuzzySubset(std::move(grades));
}

namespace {

void require_same_carrier(const Hypergroupoid& s, const FuzzySubset& f) {
  if (f.order() != s.order())
    throw Error(Errc::CarrierMismatch, "fuzzy subset is defined over a different carrier");
}

bool antitone_along(const Relation& r, const FuzzySubset& f) {
  for (const auto& [x, y] : r.pairs())
    if (f[x] < f[y]) return false;
  return true;
}

bool monotone_along(const Relation& r, const FuzzySubset& f) {
  for (const auto& [x, y] : r.pairs())
    if (f[x] > f[y]) return false;
  return true;
}

template <typename Cond>
bool holds_on_every_image(const Hypergroupoid& s, Cond&& cond) {
  for (int x = 0; x < s.order(); ++x)
    for (int y = 0; y < s.order(); ++y) {
      const Subset image = s.product(x, y);
      for (int u = 0; u < s.order(); ++u)
        if (image.contains(u) && !cond(x, y, u)) return false;
    }
  return true;
}

}  // namespace

bool is_fuzzy_ideal(const Hypergroupoid& s, const Relation& r, const FuzzySubset& f,
                    IdealSide side) {
  require_same_carrier(s, f);
  if (!antitone_along(r, f)) return false;
  return holds_on_every_image(s, [&](int x, int y, int u) {
    if (side != IdealSide::Right && f[u] < f[y]) return false;
    if (side != IdealSide::Left && f[u] < f[x]) return false;
    return true;
  });
}

bool is_fuzzy_filter(const Hypergroupoid& s, const Relation& r, const FuzzySubset& f) {
  require_same_carrier(s, f);
  if (!monotone_along(r, f)) return false;
  return holds_on_every_image(
      s, [&](int x, int y, int u) { return f[u] == std::min(f[x], f[y]); });
}

bool is_fuzzy_prime_subset(const Hypergroupoid& s, const FuzzySubset& f) {
  require_same_carrier(s, f);
  return holds_on_every_image(
      s, [&](int x, int y, int u) { return f[u] <= std::max(f[x], f[y]); });
}

bool is_fuzzy_prime_ideal(const Hypergroupoid& s, const Relation& r, const FuzzySubset& f) {
  require_same_carrier(s, f);
  if (!antitone_along(r, f)) return false;
  return holds_on_every_image(
      s, [&](int x, int y, int u) { return f[u] == std::max(f[x], f[y]); });
}

bool grades_antitone_along(const Relation& r, const FuzzySubset& f) {
  return antitone_along(r, f);
}

bool grades_monotone_along(const Relation& r, const FuzzySubset& f) {
  return monotone_along(r, f);
}

bool fuzzy_ideal_product_clause(const Hypergroupoid& s, const FuzzySubset& f, IdealSide side) {
  require_same_carrier(s, f);
  return holds_on_every_image(s, [&](int x, int y, int u) {
    if (side != IdealSide::Right && f[u] < f[y]) return false;
    if (side != IdealSide::Left && f[u] < f[x]) return false;
    return true;
  });
}

}  // namespace hyp
