#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hyp/error.hpp"
#include "hyp/subset.hpp"

namespace hyp {

// Carriers are indexed 0..order-1 and default-labelled a, b, c, ...
inline constexpr int kMaxCarrier = 26;

std::vector<std::string> default_labels(int order);

// Finite hypergroupoid: a carrier of `order` labelled elements together with
// a total operation table assigning a nonempty subset to every ordered pair.
// Immutable after construction; cheap to copy and safe to share.
class Hypergroupoid {
 public:
  // Table is row-major: cell (x, y) at index x * order + y.
  // Throws Error{EmptyImage} if any cell is empty, Error{OutOfCarrier} if a
  // cell references an element outside the carrier.
  static Hypergroupoid make(int order, std::vector<Subset> table);
  static Hypergroupoid make(std::vector<std::string> labels, std::vector<Subset> table);

  int order() const { return order_; }
  Subset carrier() const { return Subset::full(order_); }

  // The image of the ordered pair (x, y); nonempty by construction.
  Subset product(int x, int y) const { return table_[static_cast<std::size_t>(x) * order_ + y]; }

  const std::string& label(int index) const { return (*labels_)[static_cast<std::size_t>(index)]; }
  std::optional<int> index_of(std::string_view label) const;
  std::span<const Subset> table() const { return table_; }

  friend bool operator==(const Hypergroupoid& a, const Hypergroupoid& b) {
    return a.order_ == b.order_ && a.table_ == b.table_ &&
           (a.labels_ == b.labels_ || *a.labels_ == *b.labels_);
  }

 private:
  Hypergroupoid(int order, std::shared_ptr<const std::vector<std::string>> labels,
                std::vector<Subset> table)
      : order_(order), labels_(std::move(labels)), table_(std::move(table)) {}

  int order_ = 0;
  std::shared_ptr<const std::vector<std::string>> labels_;
  std::vector<Subset> table_;
};

// Arbitrary binary relation over the carrier. A pair (x, y) reads "x <= y".
// No axioms (reflexivity etc.) are imposed or assumed.
class Relation {
 public:
  Relation() = default;

  static Relation empty(int order) { return Relation(order, {}); }
  // Deduplicates; throws Error{OutOfCarrier} if a coordinate is out of range.
  static Relation from_pairs(int order, std::vector<std::pair<int, int>> pairs);
  // Bit x*order+y of `mask` holds pair (x, y); requires order <= 5.
  static Relation from_mask(int order, std::uint32_t mask);

  int order() const { return order_; }
  std::span<const std::pair<int, int>> pairs() const { return pairs_; }
  bool contains(int x, int y) const;
  std::uint32_t mask() const;  // requires order <= 5

  friend bool operator==(const Relation&, const Relation&) = default;

 private:
  Relation(int order, std::vector<std::pair<int, int>> pairs)
      : order_(order), pairs_(std::move(pairs)) {}

  int order_ = 0;
  std::vector<std::pair<int, int>> pairs_;  // sorted, unique
};

// A hypergroupoid endowed with a relation; the unit the DSL files describe.
struct LeHypergroupoid {
  Hypergroupoid groupoid;
  Relation relation;

  friend bool operator==(const LeHypergroupoid&, const LeHypergroupoid&) = default;
};

// Union of product(a, b) over all a in A, b in B.
// Throws Error{EmptyOperand} if A or B is empty; the result is never empty.
Subset star(const Hypergroupoid& s, Subset a, Subset b);

// Informational only: the relation is never required to satisfy any of these.
struct RelationFlags {
  bool reflexive = false;
  bool transitive = false;
  bool antisymmetric = false;
};

RelationFlags relation_diagnostics(const Hypergroupoid& s, const Relation& r);

}  // namespace hyp
