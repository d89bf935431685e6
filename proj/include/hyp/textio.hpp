#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hyp/theorems.hpp"

namespace hyp {

// Structure description language, line oriented:
//
//   # comment, anywhere; runs to end of line
//   elements: a b          exactly once, first content line
//   op: a b -> a b         exactly once per ordered pair; right side nonempty
//   le: a b                zero or more; reads "a <= b"
//
// Companion one-line files:
//   subset: a b
//   fuzzy: a=1 b=1/2       one entry per carrier element, exact rationals
//
// Parsers never throw on malformed input; they report positioned diagnostics
// and leave the value empty.

struct Diagnostic {
  int line = 0;    // 1-based
  int column = 0;  // 1-based
  std::string message;
  std::string token;

  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

template <typename T>
struct ParseResult {
  std::optional<T> value;
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return value.has_value(); }
};

ParseResult<LeHypergroupoid> parse_structure(std::string_view text);
ParseResult<Subset> parse_subset(std::string_view text, const Hypergroupoid& s);
ParseResult<FuzzySubset> parse_fuzzy(std::string_view text, const Hypergroupoid& s);

// Inverse of parse_structure up to comments and blank lines: elements line,
// op lines row-major, le lines in pair order. parse(render(x)) == x.
std::string render_structure(const Hypergroupoid& s, const Relation& r);
std::string render_subset(const Hypergroupoid& s, Subset a);
std::string render_fuzzy(const Hypergroupoid& s, const FuzzySubset& f);

// Report records, one line each:
//   PROPERTY <name> = true|false
//   THEOREM <id> HOLDS checked=<N>   or   THEOREM <id> FAILS checked=<N>
//   WITNESS <origin> <failed_clause>
// A witness line is followed by its model as a two-space-indented block in
// the structure language, plus subset:/fuzzy: lines when present, so every
// reported counterexample can be fed back to the parsers.
struct PropertyRecord {
  std::string name;
  bool value = false;
};

using ReportRecord = std::variant<PropertyRecord, Verdict, Witness>;

std::string render_witness(const Witness& w);
std::string render_report(std::span<const ReportRecord> records);

// A witness block read back from report text. Diagnostic positions are
// relative to the block body (the indented lines under the WITNESS header).
struct ParsedWitness {
  std::string origin;
  std::string failed_clause;
  LeHypergroupoid model;
  std::optional<Subset> subset;
  std::optional<FuzzySubset> fuzzy;
};

ParseResult<ParsedWitness> parse_witness(std::string_view text);

}  // namespace hyp
