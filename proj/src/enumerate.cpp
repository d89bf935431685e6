#include "hyp/enumerate.hpp"

#include <random>
#include <vector>

#include "hyp/error.hpp"

namespace hyp {

namespace {

void require_enum_order(int order) {
  if (order < 1 || order > kMaxEnumOrder) {
    throw Error(Errc::OrderTooLarge,
                "enumeration supports orders 1.." + std::to_string(kMaxEnumOrder) + ", got " +
                    std::to_string(order));
  }
}

std::uint64_t checked_pow(std::uint64_t base, int exponent, const char* what) {
  std::uint64_t result = 1;
  for (int i = 0; i < exponent; ++i) {
    if (base != 0 && result > UINT64_MAX / base) {
      throw Error(Errc::OrderTooLarge, std::string(what) + " count overflows 64 bits");
    }
    result *= base;
  }
  return result;
}

}  // namespace

std::uint64_t table_count(int order) {
  require_enum_order(order);
  const std::uint64_t cell_values = (std::uint64_t{1} << order) - 1;
  return checked_pow(cell_values, order * order, "table");
}

std::uint64_t relation_count(int order) {
  require_enum_order(order);
  return std::uint64_t{1} << (order * order);
}

std::uint64_t subset_count(int order) {
  require_enum_order(order);
  return (std::uint64_t{1} << order) - 1;
}

std::uint64_t grid_count(int order, int grid) {
  if (order < 1) {
    throw Error(Errc::OrderTooLarge, "grid stream needs a positive order");
  }
  if (grid < 1) {
    throw Error(Errc::OrderTooLarge, "grid resolution must be positive");
  }
  return checked_pow(std::uint64_t(grid) + 1, order, "grid");
}

Hypergroupoid table_at(int order, std::uint64_t ordinal) {
  const std::uint64_t cell_values = (std::uint64_t{1} << order) - 1;
  const int cells = order * order;
  std::vector<Subset> table(cells, Subset{});
  // Mixed-radix digits, cell (0, 0) most significant; digit d encodes mask
  // d + 1 so ordinal 0 is the table with every cell {first element}.
  for (int i = cells - 1; i >= 0; --i) {
    table[i] = Subset::from_bits(std::uint32_t(ordinal % cell_values) + 1);
    ordinal /= cell_values;
  }
  if (ordinal != 0) {
    throw Error(Errc::OrderTooLarge, "table ordinal out of range");
  }
  return Hypergroupoid::make(order, std::move(table));
}

std::uint64_t ordinal_of_table(const Hypergroupoid& s) {
  const std::uint64_t cell_values = (std::uint64_t{1} << s.order()) - 1;
  std::uint64_t ordinal = 0;
  for (const Subset& cell : s.table()) {
    ordinal = ordinal * cell_values + (cell.bits() - 1);
  }
  return ordinal;
}

Relation relation_at(int order, std::uint64_t ordinal) {
  if (ordinal >= relation_count(order)) {
    throw Error(Errc::OrderTooLarge, "relation ordinal out of range");
  }
  return Relation::from_mask(order, static_cast<std::uint32_t>(ordinal));
}

Subset nonempty_subset_at(int order, std::uint64_t ordinal) {
  if (ordinal + 1 >= (std::uint64_t{1} << order)) {
    throw Error(Errc::OrderTooLarge, "subset ordinal out of range");
  }
  return Subset::from_bits(std::uint32_t(ordinal) + 1);
}

FuzzySubset grid_fuzzy_at(int order, int grid, std::uint64_t ordinal) {
  std::vector<Grade> grades(order, Grade::zero());
  // Odometer over {0, 1/k, ..., k/k}^order, element 0 most significant, so
  // ordinal 0 is the constant-zero subset.
  for (int i = order - 1; i >= 0; --i) {
    grades[i] = Grade(std::int64_t(ordinal % (std::uint64_t(grid) + 1)), grid);
    ordinal /= std::uint64_t(grid) + 1;
  }
  if (ordinal != 0) {
    throw Error(Errc::OrderTooLarge, "grid ordinal out of range");
  }
  return FuzzySubset(std::move(grades));
}

std::uint64_t sample_seed_at(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::pair<Hypergroupoid, Relation> sample_structure(int order, std::uint64_t seed) {
  require_enum_order(order);
  std::mt19937_64 gen(seed);
  const std::uint64_t cell_values = (std::uint64_t{1} << order) - 1;
  const int cells = order * order;
  std::vector<Subset> table(cells, Subset{});
  for (int i = 0; i < cells; ++i) {
    table[i] = Subset::from_bits(std::uint32_t(gen() % cell_values) + 1);
  }
  const std::uint32_t mask = static_cast<std::uint32_t>(gen() & (relation_count(order) - 1));
  return {Hypergroupoid::make(order, std::move(table)), Relation::from_mask(order, mask)};
}

}  // namespace hyp
