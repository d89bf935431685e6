#include "hyp/core.hpp"

#include <algorithm>
#include <array>

namespace hyp {

namespace {

const std::shared_ptr<const std::vector<std::string>>& shared_default_labels(int order) {
  static const auto cache = [] {
    std::array<std::shared_ptr<const std::vector<std::string>>, kMaxCarrier + 1> sets;
    for (int n = 0; n <= kMaxCarrier; ++n) {
      std::vector<std::string> labels;
      labels.reserve(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) labels.emplace_back(1, static_cast<char>('a' + i));
      sets[static_cast<std::size_t>(n)] =
          std::make_shared<const std::vector<std::string>>(std::move(labels));
    }
    return sets;
  }();
  return cache[static_cast<std::size_t>(order)];
}

void validate_table(int order, const std::vector<Subset>& table,
                    const std::vector<std::string>& labels) {
  if (order < 1) throw Error(Errc::EmptyCarrier, "carrier must contain at least one element");
  if (order > kMaxCarrier)
    throw Error(Errc::CarrierTooLarge,
                "carrier size " + std::to_string(order) + " exceeds the supported maximum of " +
                    std::to_string(kMaxCarrier));
  if (table.size() != static_cast<std::size_t>(order) * order)
    throw std::invalid_argument("operation table must have order^2 cells");
  const Subset carrier = Subset::full(order);
  for (int x = 0; x < order; ++x) {
    for (int y = 0; y < order; ++y) {
      const Subset cell = table[static_cast<std::size_t>(x) * order + y];
      if (cell.empty())
        throw Error(Errc::EmptyImage,
                    "empty image for pair (" + labels[static_cast<std::size_t>(x)] + ", " +
                        labels[static_cast<std::size_t>(y)] + ")");
      if (!cell.subset_of(carrier))
        throw Error(Errc::OutOfCarrier,
                    "image of pair (" + labels[static_cast<std::size_t>(x)] + ", " +
                        labels[static_cast<std::size_t>(y)] + ") references an unknown element");
    }
  }
}

}  // namespace

std::vector<std::string> default_labels(int order) {
  if (order < 0 || order > kMaxCarrier)
    throw Error(Errc::CarrierTooLarge, "no default labels for carrier size " + std::to_string(order));
  return *shared_default_labels(order);
}

Hypergroupoid Hypergroupoid::make(int order, std::vector<Subset> table) {
  if (order < 1) throw Error(Errc::EmptyCarrier, "carrier must contain at least one element");
  if (order > kMaxCarrier)
    throw Error(Errc::CarrierTooLarge,
                "carrier size " + std::to_string(order) + " exceeds the supported maximum of " +
                    std::to_string(kMaxCarrier));
  auto labels = shared_default_labels(order);
  validate_table(order, table, *labels);
  return Hypergroupoid(order, labels, std::move(table));
}

Hypergroupoid Hypergroupoid::make(std::vector<std::string> labels, std::vector<Subset> table) {
  const int order = static_cast<int>(labels.size());
  validate_table(order, table, labels);
  for (std::size_t i = 0; i < labels.size(); ++i)
    for (std::size_t j = i + 1; j < labels.size(); ++j)
      if (labels[i] == labels[j])
        throw std::invalid_argument("duplicate element label '" + labels[i] + "'");
  return Hypergroupoid(order, std::make_shared<const std::vector<std::string>>(std::move(labels)),
                       std::move(table));
}

std::optional<int> Hypergroupoid::index_of(std::string_view label) const {
  for (int i = 0; i < order_; ++i)
    if ((*labels_)[static_cast<std::size_t>(i)] == label) return i;
  return std::nullopt;
}

Relation Relation::from_pairs(int order, std::vector<std::pair<int, int>> pairs) {
  for (const auto& [x, y] : pairs)
    if (x < 0 || x >= order || y < 0 || y >= order)
      throw Error(Errc::OutOfCarrier, "relation pair references an element outside the carrier");
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  return Relation(order, std::move(pairs));
}

Relation Relation::from_mask(int order, std::uint32_t mask) {
  if (order > 5)
    throw Error(Errc::OrderTooLarge, "relation masks cover orders up to 5 only");
  std::vector<std::pair<int, int>> pairs;
  for (int x = 0; x < order; ++x)
    for (int y = 0; y < order; ++y)
      if ((mask >> (x * order + y)) & 1u) pairs.emplace_back(x, y);
  return Relation(order, std::move(pairs));
}

bool Relation::contains(int x, int y) const {
  return std::binary_search(pairs_.begin(), pairs_.end(), std::pair<int, int>{x, y});
}

std::uint32_t Relation::mask() const {
  if (order_ > 5)
    throw Error(Errc::OrderTooLarge, "relation masks cover orders up to 5 only");
  std::uint32_t mask = 0;
  for (const auto& [x, y] : pairs_) mask |= std::uint32_t{1} << (x * order_ + y);
  return mask;
}

Subset star(const Hypergroupoid& s, Subset a, Subset b) {
  if (a.empty() || b.empty())
    throw Error(Errc::EmptyOperand, "star is defined on nonempty subsets only");
  Subset out;
  for (int x = 0; x < s.order(); ++x) {
    if (!a.contains(x)) continue;
    for (int y = 0; y < s.order(); ++y) {
      if (!b.contains(y)) continue;
      out |= s.product(x, y);
    }
  }
  return out;
}

RelationFlags relation_diagnostics(const Hypergroupoid& s, const Relation& r) {
  RelationFlags flags;
  flags.reflexive = true;
  for (int x = 0; x < s.order(); ++x)
    if (!r.contains(x, x)) flags.reflexive = false;

  flags.transitive = true;
  for (const auto& [x, y] : r.pairs())
    for (const auto& [y2, z] : r.pairs())
      if (y == y2 && !r.contains(x, z)) flags.transitive = false;

  flags.antisymmetric = true;
  for (const auto& [x, y] : r.pairs())
    if (x != y && r.contains(y, x)) flags.antisymmetric = false;

  return flags;
}

}  // namespace hyp
