#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <string>
#include <vector>

#include "hyp/crisp.hpp"

namespace hyp {

// Membership grade: an exact rational in [0, 1]. All comparisons are exact;
// no floating point is involved anywhere in the fuzzy predicates, since the
// filter and prime-ideal conditions are equalities that rounding would break.
class Grade {
 public:
  Grade() = default;  // zero

  // Throws Error{GradeOutOfRange} unless 0 <= num/den <= 1 (or den == 0).
  Grade(std::int64_t num, std::int64_t den);

  static Grade zero() { return Grade(); }
  static Grade one() { return Grade(1, 1); }

  std::int64_t num() const { return value_.numerator(); }
  std::int64_t den() const { return value_.denominator(); }

  Grade complement() const;  // 1 - x

  std::string str() const;  // "p/q", or "p" when q == 1

  friend bool operator==(const Grade& a, const Grade& b) { return a.value_ == b.value_; }
  friend bool operator!=(const Grade& a, const Grade& b) { return a.value_ != b.value_; }
  friend bool operator<(const Grade& a, const Grade& b) { return a.value_ < b.value_; }
  friend bool operator<=(const Grade& a, const Grade& b) { return a.value_ <= b.value_; }
  friend bool operator>(const Grade& a, const Grade& b) { return a.value_ > b.value_; }
  friend bool operator>=(const Grade& a, const Grade& b) { return a.value_ >= b.value_; }

 private:
  explicit Grade(boost::rational<std::int64_t> value) : value_(value) {}

  boost::rational<std::int64_t> value_{0};
};

// Total map from carrier indices to grades.
class FuzzySubset {
 public:
  explicit FuzzySubset(std::vector<Grade> grades) : grades_(std::move(grades)) {}

  static FuzzySubset constant(int order, Grade g) {
    return FuzzySubset(std::vector<Grade>(static_cast<std::size_t>(order), g));
  }

  int order() const { return static_cast<int>(grades_.size()); }
  const Grade& operator[](int index) const { return grades_[static_cast<std::size_t>(index)]; }
  const std::vector<Grade>& grades() const { return grades_; }

  friend bool operator==(const FuzzySubset&, const FuzzySubset&) = default;

 private:
  std::vector<Grade> grades_;
};

// Grade 1 on members of A, 0 elsewhere. A may be empty (the zero function).
FuzzySubset characteristic(int order, Subset a);

// Pointwise 1 - f(x).
FuzzySubset complement(const FuzzySubset& f);

// Fuzzy predicates. All take f over the carrier of s and throw
// Error{CarrierMismatch} when the sizes disagree.
//
// Left ideal:  x <= y implies f(x) >= f(y), and f(u) >= f(y) for u in x∘y.
// Right ideal: same relation condition, f(u) >= f(x).
// TwoSided:    both, equivalently f(u) >= max{f(x), f(y)}.
bool is_fuzzy_ideal(const Hypergroupoid& s, const Relation& r, const FuzzySubset& f,
                    IdealSide side);

// x <= y implies f(x) <= f(y), and f(u) = min{f(x), f(y)} for u in x∘y.
bool is_fuzzy_filter(const Hypergroupoid& s, const Relation& r, const FuzzySubset& f);

// f(u) <= max{f(x), f(y)} for u in x∘y. No relation condition.
bool is_fuzzy_prime_subset(const Hypergroupoid& s, const FuzzySubset& f);

// x <= y implies f(x) >= f(y), and f(u) = max{f(x), f(y)} for u in x∘y.
bool is_fuzzy_prime_ideal(const Hypergroupoid& s, const Relation& r, const FuzzySubset& f);

// Individual clauses of the predicates above, for relaxation search and for
// witness replay: the relation clause alone, and the product clause alone.
bool grades_antitone_along(const Relation& r, const FuzzySubset& f);
bool grades_monotone_along(const Relation& r, const FuzzySubset& f);
bool fuzzy_ideal_product_clause(const Hypergroupoid& s, const FuzzySubset& f, IdealSide side);

}  // namespace hyp
