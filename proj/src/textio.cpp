#include "hyp/textio.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace hyp {

namespace {

struct Token {
  std::string text;
  int column = 0;  // 1-based
};

struct Line {
  int number = 0;  // 1-based
  std::vector<Token> tokens;
};

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    out.push_back(text.substr(pos, eol - pos));
    pos = eol + 1;
  }
  return out;
}

// Comment-stripped whitespace tokenization; blank lines are dropped.
std::vector<Line> content_lines(const std::vector<std::string_view>& raw) {
  std::vector<Line> lines;
  for (std::size_t li = 0; li < raw.size(); ++li) {
    std::string_view s = raw[li];
    const std::size_t hash = s.find('#');
    if (hash != std::string_view::npos) s = s.substr(0, hash);
    Line line{static_cast<int>(li) + 1, {}};
    std::size_t i = 0;
    while (i < s.size()) {
      if (std::isspace(static_cast<unsigned char>(s[i]))) {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
      line.tokens.push_back({std::string(s.substr(i, j - i)), static_cast<int>(i) + 1});
      i = j;
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

class DiagnosticSink {
 public:
  explicit DiagnosticSink(std::vector<Diagnostic>& out) : out_(out) {}

  void add(int line, int column, std::string message, std::string token = {}) {
    out_.push_back({line, column, std::move(message), std::move(token)});
  }

  bool clean() const { return out_.empty(); }

 private:
  std::vector<Diagnostic>& out_;
};

int lookup_label(const std::vector<std::string>& labels, const Line& line, const Token& tok,
                 DiagnosticSink& sink) {
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == tok.text) return static_cast<int>(i);
  sink.add(line.number, tok.column, "unknown element \"" + tok.text + "\"", tok.text);
  return -1;
}

}  // namespace

ParseResult<LeHypergroupoid> parse_structure(std::string_view text) {
  ParseResult<LeHypergroupoid> out;
  DiagnosticSink sink(out.diagnostics);
  const auto raw = split_lines(text);
  const auto lines = content_lines(raw);

  if (lines.empty()) {
    sink.add(1, 1, "expected an elements: line");
    return out;
  }

  const Line& head = lines.front();
  if (head.tokens.front().text != "elements:") {
    sink.add(head.number, head.tokens.front().column, "first content line must be elements:",
             head.tokens.front().text);
    return out;
  }
  std::vector<std::string> labels;
  for (std::size_t t = 1; t < head.tokens.size(); ++t) {
    const Token& tok = head.tokens[t];
    if (std::find(labels.begin(), labels.end(), tok.text) != labels.end())
      sink.add(head.number, tok.column, "duplicate element label \"" + tok.text + "\"", tok.text);
    else
      labels.push_back(tok.text);
  }
  if (labels.empty())
    sink.add(head.number, head.tokens.front().column, "carrier must contain at least one element",
             "elements:");
  else if (labels.size() > static_cast<std::size_t>(kMaxCarrier))
    sink.add(head.number, head.tokens.front().column,
             "carrier exceeds the supported maximum of " + std::to_string(kMaxCarrier) +
                 " elements",
             "elements:");
  if (!sink.clean()) return out;

  const int order = static_cast<int>(labels.size());
  std::vector<std::optional<Subset>> cells(static_cast<std::size_t>(order) * order);
  std::vector<std::pair<int, int>> relation_pairs;

  for (std::size_t li = 1; li < lines.size(); ++li) {
    const Line& line = lines[li];
    const Token& first = line.tokens.front();
    if (first.text == "elements:") {
      sink.add(line.number, first.column, "duplicate elements: line", "elements:");
      continue;
    }
    if (first.text == "op:") {
      if (line.tokens.size() < 3) {
        sink.add(line.number, first.column, "op: line needs \"op: x y -> members\"", "op:");
        continue;
      }
      if (line.tokens.size() < 4 || line.tokens[3].text != "->") {
        const Token& bad = line.tokens[std::min<std::size_t>(3, line.tokens.size() - 1)];
        sink.add(line.number, bad.column, "expected -> after the operand pair", bad.text);
        continue;
      }
      const int x = lookup_label(labels, line, line.tokens[1], sink);
      const int y = lookup_label(labels, line, line.tokens[2], sink);
      if (x < 0 || y < 0) continue;
      if (line.tokens.size() == 4) {
        sink.add(line.number, line.tokens[3].column,
                 "empty image for pair (" + labels[static_cast<std::size_t>(x)] + ", " +
                     labels[static_cast<std::size_t>(y)] + ")",
                 "->");
        continue;
      }
      Subset image;
      bool members_ok = true;
      for (std::size_t t = 4; t < line.tokens.size(); ++t) {
        const int z = lookup_label(labels, line, line.tokens[t], sink);
        if (z < 0)
          members_ok = false;
        else
          image |= Subset::single(z);
      }
      if (!members_ok) continue;
      auto& cell = cells[static_cast<std::size_t>(x) * order + y];
      if (cell) {
        sink.add(line.number, line.tokens[1].column,
                 "duplicate op: line for pair (" + labels[static_cast<std::size_t>(x)] + ", " +
                     labels[static_cast<std::size_t>(y)] + ")",
                 line.tokens[1].text);
        continue;
      }
      cell = image;
      continue;
    }
    if (first.text == "le:") {
      if (line.tokens.size() != 3) {
        sink.add(line.number, first.column, "le: line needs exactly two elements", "le:");
        continue;
      }
      const int x = lookup_label(labels, line, line.tokens[1], sink);
      const int y = lookup_label(labels, line, line.tokens[2], sink);
      if (x < 0 || y < 0) continue;
      relation_pairs.emplace_back(x, y);
      continue;
    }
    sink.add(line.number, first.column, "unrecognized line; expected op: or le:", first.text);
  }

  for (int x = 0; x < order; ++x)
    for (int y = 0; y < order; ++y)
      if (!cells[static_cast<std::size_t>(x) * order + y])
        sink.add(static_cast<int>(raw.size()) + 1, 1,
                 "missing op: line for pair (" + labels[static_cast<std::size_t>(x)] + ", " +
                     labels[static_cast<std::size_t>(y)] + ")");

  if (!sink.clean()) return out;

  std::vector<Subset> table(static_cast<std::size_t>(order) * order);
  for (std::size_t i = 0; i < table.size(); ++i) table[i] = *cells[i];
  Relation relation = Relation::from_pairs(order, std::move(relation_pairs));
  out.value = LeHypergroupoid{Hypergroupoid::make(std::move(labels), std::move(table)),
                              std::move(relation)};
  return out;
}

namespace {

// Companion files hold exactly one content line with the given head token.
const Line* single_content_line(const std::vector<Line>& lines, const char* head,
                                DiagnosticSink& sink) {
  if (lines.empty()) {
    sink.add(1, 1, std::string("expected a ") + head + " line");
    return nullptr;
  }
  const Line& line = lines.front();
  if (line.tokens.front().text != head) {
    sink.add(line.number, line.tokens.front().column,
             std::string("line must start with ") + head, line.tokens.front().text);
    return nullptr;
  }
  for (std::size_t li = 1; li < lines.size(); ++li)
    sink.add(lines[li].number, lines[li].tokens.front().column, "unexpected extra line",
             lines[li].tokens.front().text);
  return sink.clean() ? &line : nullptr;
}

}  // namespace

ParseResult<Subset> parse_subset(std::string_view text, const Hypergroupoid& s) {
  ParseResult<Subset> out;
  DiagnosticSink sink(out.diagnostics);
  const auto lines = content_lines(split_lines(text));
  const Line* line = single_content_line(lines, "subset:", sink);
  if (line == nullptr) return out;

  Subset subset;
  for (std::size_t t = 1; t < line->tokens.size(); ++t) {
    const Token& tok = line->tokens[t];
    const auto index = s.index_of(tok.text);
    if (!index) {
      sink.add(line->number, tok.column, "unknown element \"" + tok.text + "\"", tok.text);
      continue;
    }
    subset |= Subset::single(*index);
  }
  if (line->tokens.size() == 1)
    sink.add(line->number, line->tokens.front().column, "subset needs at least one element",
             "subset:");
  if (!sink.clean()) return out;
  out.value = subset;
  return out;
}

namespace {

std::optional<Grade> parse_grade(std::string_view value, const Line& line, int column,
                                 DiagnosticSink& sink) {
  const std::size_t slash = value.find('/');
  const std::string_view num_text = value.substr(0, slash);
  std::int64_t num = 0;
  auto [num_end, num_err] =
      std::from_chars(num_text.data(), num_text.data() + num_text.size(), num);
  if (num_err != std::errc{} || num_end != num_text.data() + num_text.size()) {
    sink.add(line.number, column, "malformed rational \"" + std::string(value) + "\"",
             std::string(value));
    return std::nullopt;
  }
  std::int64_t den = 1;
  if (slash != std::string_view::npos) {
    const std::string_view den_text = value.substr(slash + 1);
    auto [den_end, den_err] =
        std::from_chars(den_text.data(), den_text.data() + den_text.size(), den);
    if (den_err != std::errc{} || den_end != den_text.data() + den_text.size()) {
      sink.add(line.number, column, "malformed rational \"" + std::string(value) + "\"",
               std::string(value));
      return std::nullopt;
    }
    if (den == 0) {
      sink.add(line.number, column, "zero denominator in \"" + std::string(value) + "\"",
               std::string(value));
      return std::nullopt;
    }
  }
  try {
    return Grade(num, den);
  } catch (const Error&) {
    sink.add(line.number, column, "grade " + std::string(value) + " lies outside [0, 1]",
             std::string(value));
    return std::nullopt;
  }
}

}  // namespace

ParseResult<FuzzySubset> parse_fuzzy(std::string_view text, const Hypergroupoid& s) {
  ParseResult<FuzzySubset> out;
  DiagnosticSink sink(out.diagnostics);
  const auto lines = content_lines(split_lines(text));
  const Line* line = single_content_line(lines, "fuzzy:", sink);
  if (line == nullptr) return out;

  std::vector<std::optional<Grade>> grades(static_cast<std::size_t>(s.order()));
  for (std::size_t t = 1; t < line->tokens.size(); ++t) {
    const Token& tok = line->tokens[t];
    const std::size_t eq = tok.text.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 >= tok.text.size()) {
      sink.add(line->number, tok.column, "expected label=rational", tok.text);
      continue;
    }
    const std::string label = tok.text.substr(0, eq);
    const auto index = s.index_of(label);
    if (!index) {
      sink.add(line->number, tok.column, "unknown element \"" + label + "\"", label);
      continue;
    }
    if (grades[static_cast<std::size_t>(*index)]) {
      sink.add(line->number, tok.column, "duplicate grade for element \"" + label + "\"",
               tok.text);
      continue;
    }
    grades[static_cast<std::size_t>(*index)] =
        parse_grade(std::string_view(tok.text).substr(eq + 1), *line,
                    tok.column + static_cast<int>(eq) + 1, sink);
  }
  if (sink.clean())
    for (int i = 0; i < s.order(); ++i)
      if (!grades[static_cast<std::size_t>(i)])
        sink.add(line->number, line->tokens.front().column,
                 "missing grade for element \"" + s.label(i) + "\"", s.label(i));
  if (!sink.clean()) return out;

  std::vector<Grade> values;
  values.reserve(grades.size());
  for (auto& g : grades) values.push_back(*g);
  out.value = FuzzySubset(std::move(values));
  return out;
}

std::string render_structure(const Hypergroupoid& s, const Relation& r) {
  std::string out = "elements:";
  for (int i = 0; i < s.order(); ++i) out += " " + s.label(i);
  out += "\n";
  for (int x = 0; x < s.order(); ++x)
    for (int y = 0; y < s.order(); ++y) {
      out += "op: " + s.label(x) + " " + s.label(y) + " ->";
      const Subset image = s.product(x, y);
      for (int z = 0; z < s.order(); ++z)
        if (image.contains(z)) out += " " + s.label(z);
      out += "\n";
    }
  for (const auto& [x, y] : r.pairs()) out += "le: " + s.label(x) + " " + s.label(y) + "\n";
  return out;
}

std::string render_subset(const Hypergroupoid& s, Subset a) {
  std::string out = "subset:";
  for (int i = 0; i < s.order(); ++i)
    if (a.contains(i)) out += " " + s.label(i);
  return out + "\n";
}

std::string render_fuzzy(const Hypergroupoid& s, const FuzzySubset& f) {
  std::string out = "fuzzy:";
  for (int i = 0; i < s.order(); ++i) out += " " + s.label(i) + "=" + f[i].str();
  return out + "\n";
}

namespace {

void append_indented(std::string& out, const std::string& block) {
  for (std::string_view line : split_lines(block)) {
    out += "  ";
    out += line;
    out += "\n";
  }
}

}  // namespace

std::string render_witness(const Witness& w) {
  std::string out = "WITNESS " + w.origin + " " + w.failed_clause + "\n";
  append_indented(out, render_structure(w.structure, w.relation));
  if (w.subset) append_indented(out, render_subset(w.structure, *w.subset));
  if (w.fuzzy) append_indented(out, render_fuzzy(w.structure, *w.fuzzy));
  return out;
}

std::string render_report(std::span<const ReportRecord> records) {
  std::string out;
  for (const ReportRecord& record : records) {
    if (const auto* property = std::get_if<PropertyRecord>(&record)) {
      out += "PROPERTY " + property->name + " = " + (property->value ? "true" : "false") + "\n";
      continue;
    }
    if (const auto* verdict = std::get_if<Verdict>(&record)) {
      out += "THEOREM " + verdict->theorem + (verdict->holds ? " HOLDS" : " FAILS") +
             " checked=" + std::to_string(verdict->checks) + "\n";
      if (verdict->witness) out += render_witness(*verdict->witness);
      continue;
    }
    out += render_witness(std::get<Witness>(record));
  }
  return out;
}

ParseResult<ParsedWitness> parse_witness(std::string_view text) {
  ParseResult<ParsedWitness> out;
  DiagnosticSink sink(out.diagnostics);
  const auto raw = split_lines(text);

  std::size_t li = 0;
  while (li < raw.size() && raw[li].find_first_not_of(" \t") == std::string_view::npos) ++li;
  if (li == raw.size()) {
    sink.add(1, 1, "expected a WITNESS line");
    return out;
  }
  const auto header = content_lines({raw[li]});
  if (header.empty() || header.front().tokens.front().text != "WITNESS" ||
      header.front().tokens.size() != 3) {
    sink.add(static_cast<int>(li) + 1, 1, "expected \"WITNESS <origin> <failed-clause>\"",
             std::string(raw[li]));
    return out;
  }
  std::string origin = header.front().tokens[1].text;
  std::string clause = header.front().tokens[2].text;

  // Body: the indented lines that follow, dedented by two columns.
  std::string structure_text;
  std::string subset_text;
  std::string fuzzy_text;
  for (++li; li < raw.size(); ++li) {
    const std::string_view line = raw[li];
    if (line.find_first_not_of(" \t") == std::string_view::npos) continue;
    if (!line.starts_with("  ")) break;
    const std::string_view body = line.substr(2);
    const auto tokens = content_lines({body});
    if (tokens.empty()) continue;
    const std::string& head = tokens.front().tokens.front().text;
    if (head == "subset:")
      subset_text += std::string(body) + "\n";
    else if (head == "fuzzy:")
      fuzzy_text += std::string(body) + "\n";
    else
      structure_text += std::string(body) + "\n";
  }

  auto model = parse_structure(structure_text);
  if (!model.ok()) {
    out.diagnostics = std::move(model.diagnostics);
    return out;
  }

  std::optional<Subset> subset;
  if (!subset_text.empty()) {
    auto parsed = parse_subset(subset_text, model.value->groupoid);
    if (!parsed.ok()) {
      out.diagnostics = std::move(parsed.diagnostics);
      return out;
    }
    subset = *parsed.value;
  }
  std::optional<FuzzySubset> fuzzy;
  if (!fuzzy_text.empty()) {
    auto parsed = parse_fuzzy(fuzzy_text, model.value->groupoid);
    if (!parsed.ok()) {
      out.diagnostics = std::move(parsed.diagnostics);
      return out;
    }
    fuzzy = std::move(*parsed.value);
  }

  out.value = ParsedWitness{std::move(origin), std::move(clause), std::move(*model.value),
                            std::move(subset), std::move(fuzzy)};
  return out;
}

}  // namespace hyp
