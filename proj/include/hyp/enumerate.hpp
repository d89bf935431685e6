#pragma once

#include <cstdint>
#include <utility>

#include "hyp/fuzzy.hpp"

namespace hyp {

// Deterministic, ordinal-indexed enumeration of the finite domains the
// theorem sweeps quantify over. Every stream is an indexable view: element i
// can be materialized independently of every other, so any contiguous range
// of ordinals forms a self-contained work unit for a parallel consumer.
//
// Canonical orders, stable across runs and platforms:
//   tables     cells row-major, compared as tuples, cell (0,0) most
//              significant; cell values are subset bitmasks 1..2^n-1
//   relations  pair bitmask ascending, bit x*n+y for pair (x, y)
//   subsets    nonempty bitmasks 1..2^n-1 ascending
//   fuzzy      grade tuples over {0, 1/k, ..., 1}, element 0 most significant

inline constexpr int kMaxEnumOrder = 4;

// (2^n - 1)^(n^2); throws Error{OrderTooLarge} for n outside 1..4.
std::uint64_t table_count(int order);
// 2^(n^2); same order limits.
std::uint64_t relation_count(int order);
// 2^n - 1.
std::uint64_t subset_count(int order);
// (k+1)^n; throws Error{OrderTooLarge} if the count overflows 64 bits.
std::uint64_t grid_count(int order, int grid);

Hypergroupoid table_at(int order, std::uint64_t ordinal);
std::uint64_t ordinal_of_table(const Hypergroupoid& s);
Relation relation_at(int order, std::uint64_t ordinal);
Subset nonempty_subset_at(int order, std::uint64_t ordinal);
FuzzySubset grid_fuzzy_at(int order, int grid, std::uint64_t ordinal);

template <typename T, T (*At)(int, std::uint64_t), std::uint64_t (*Count)(int)>
class OrdinalStream {
 public:
  explicit OrdinalStream(int order) : order_(order), size_(Count(order)) {}

  int order() const { return order_; }
  std::uint64_t size() const { return size_; }
  T operator[](std::uint64_t ordinal) const { return At(order_, ordinal); }

  class iterator {
   public:
    iterator(const OrdinalStream* stream, std::uint64_t pos) : stream_(stream), pos_(pos) {}
    T operator*() const { return (*stream_)[pos_]; }
    iterator& operator++() {
      ++pos_;
      return *this;
    }
    bool operator!=(const iterator& other) const { return pos_ != other.pos_; }

   private:
    const OrdinalStream* stream_;
    std::uint64_t pos_;
  };

  iterator begin() const { return iterator(this, 0); }
  iterator end() const { return iterator(this, size_); }

 private:
  int order_;
  std::uint64_t size_;
};

using TableStream = OrdinalStream<Hypergroupoid, table_at, table_count>;
using RelationStream = OrdinalStream<Relation, relation_at, relation_count>;
using SubsetStream = OrdinalStream<Subset, nonempty_subset_at, subset_count>;

class GridFuzzyStream {
 public:
  GridFuzzyStream(int order, int grid)
      : order_(order), grid_(grid), size_(grid_count(order, grid)) {}

  std::uint64_t size() const { return size_; }
  FuzzySubset operator[](std::uint64_t ordinal) const {
    return grid_fuzzy_at(order_, grid_, ordinal);
  }

 private:
  int order_;
  int grid_;
  std::uint64_t size_;
};

// splitmix-style mix of (seed, index): addressable per-sample seeds, so a
// sampled sweep can be partitioned without replaying the generator sequence.
std::uint64_t sample_seed_at(std::uint64_t seed, std::uint64_t index);

// One structure-relation pair drawn with std::mt19937_64(seed): each table
// cell is 1 + next() mod (2^n - 1), the relation mask is the low n^2 bits of
// one draw. Identical (order, seed) always yields an identical pair.
std::pair<Hypergroupoid, Relation> sample_structure(int order, std::uint64_t seed);

}  // namespace hyp
