#include "secinv/problem.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "secinv/errors.hpp"
#include "secinv/parser.hpp"

namespace secinv {
namespace {

enum class Section { kNone, kVariables, kGenerators, kPrimaries, kOrder };

bool blank(char c) { return c == ' ' || c == '\t' || c == '\r'; }

/// [begin, end) of s with surrounding blanks removed, as offsets.
std::pair<std::size_t, std::size_t> trim(std::string_view s, std::size_t begin, std::size_t end) {
  while (begin < end && blank(s[begin])) ++begin;
  while (end > begin && blank(s[end - 1])) --end;
  return {begin, end};
}

Matrix parse_matrix(std::string_view text, std::size_t base) {
  std::vector<std::vector<Rational>> rows;
  std::size_t row_start = 0;
  for (;;) {
    std::size_t row_end = text.find(';', row_start);
    if (row_end == std::string_view::npos) row_end = text.size();
    std::vector<Rational> row;
    std::size_t entry_start = row_start;
    for (;;) {
      std::size_t entry_end = text.find(',', entry_start);
      if (entry_end == std::string_view::npos || entry_end > row_end) entry_end = row_end;
      auto [b, e] = trim(text, entry_start, entry_end);
      if (b == e) throw ParseError("empty matrix entry", base + b);
      try {
        row.push_back(parse_rational(text.substr(b, e - b)));
      } catch (const ParseError& err) {
        throw ParseError("bad matrix entry '" + std::string(text.substr(b, e - b)) + "'", base + b + err.position());
      }
      if (entry_end == row_end) break;
      entry_start = entry_end + 1;
    }
    rows.push_back(std::move(row));
    if (row_end == text.size()) break;
    row_start = row_end + 1;
  }
  for (const auto& r : rows)
    if (r.size() != rows.size())
      throw ParseError("matrix is not square: " + std::to_string(rows.size()) + " rows, a row of " +
                           std::to_string(r.size()) + " entries",
                       base);
  return Matrix::from_rows(rows);
}

}  // namespace

ProblemFile parse_problem(std::string_view text) {
  ProblemFile out;
  Section section = Section::kNone;
  bool seen_order = false;
  std::size_t line_start = 0;
  while (line_start <= text.size()) {
    std::size_t line_end = text.find('\n', line_start);
    if (line_end == std::string_view::npos) line_end = text.size();
    std::size_t content_end = text.find('#', line_start);
    if (content_end == std::string_view::npos || content_end > line_end) content_end = line_end;
    auto [b, e] = trim(text, line_start, content_end);

    if (b < e) {
      // Section header?
      std::size_t colon = text.find(':', b);
      if (colon != std::string_view::npos && colon < e) {
        std::string_view key = text.substr(b, colon - b);
        bool is_header = true;
        if (key == "variables")
          section = Section::kVariables;
        else if (key == "generators")
          section = Section::kGenerators;
        else if (key == "primaries")
          section = Section::kPrimaries;
        else if (key == "order")
          section = Section::kOrder;
        else
          is_header = false;
        if (!is_header) throw ParseError("unknown section '" + std::string(key) + "'", b);
        std::tie(b, e) = trim(text, colon + 1, e);
      }
    }

    if (b < e) {
      std::string_view content = text.substr(b, e - b);
      switch (section) {
        case Section::kNone:
          throw ParseError("content outside of a section", b);
        case Section::kVariables: {
          std::size_t k = 0;
          while (k < content.size()) {
            while (k < content.size() && (blank(content[k]) || content[k] == ',')) ++k;
            std::size_t start = k;
            while (k < content.size() && !blank(content[k]) && content[k] != ',') ++k;
            if (start == k) break;
            std::string name(content.substr(start, k - start));
            if (!(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_'))
              throw ParseError("bad variable name '" + name + "'", b + start);
            for (char c : name)
              if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
                throw ParseError("bad variable name '" + name + "'", b + start);
            for (const auto& v : out.variables)
              if (v == name) throw ParseError("duplicate variable '" + name + "'", b + start);
            out.variables.push_back(std::move(name));
          }
          break;
        }
        case Section::kGenerators:
          out.generators.push_back(parse_matrix(content, b));
          break;
        case Section::kPrimaries:
          out.primaries.emplace_back(content);
          break;
        case Section::kOrder:
          if (seen_order) throw ParseError("order given twice", b);
          try {
            out.order = parse_monomial_order(content);
          } catch (const Error&) {
            throw ParseError("unknown monomial order '" + std::string(content) + "'", b);
          }
          seen_order = true;
          break;
      }
    }
    line_start = line_end + 1;
  }
  if (out.variables.empty()) throw ParseError("missing variables section", 0);
  return out;
}

ProblemFile load_problem(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open problem file " + path.string(), 0);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_problem(buf.str());
}

std::string format_problem(const ProblemFile& problem) {
  std::string out = "variables:";
  for (std::size_t i = 0; i < problem.variables.size(); ++i) out += (i ? ", " : " ") + problem.variables[i];
  out += "\norder: ";
  out += to_string(problem.order);
  out += "\ngenerators:\n";
  for (const auto& g : problem.generators) out += "  " + to_string(g) + "\n";
  out += "primaries:\n";
  for (const auto& p : problem.primaries) out += "  " + p + "\n";
  return out;
}

Problem build_problem(const ProblemFile& file, std::size_t closure_cap) {
  const std::size_t n = file.variables.size();
  for (std::size_t k = 0; k < file.generators.size(); ++k)
    if (file.generators[k].size() != n)
      throw DimensionError("generator " + std::to_string(k + 1) + " is " + std::to_string(file.generators[k].size()) +
                           "x" + std::to_string(file.generators[k].size()) + " but there are " + std::to_string(n) +
                           " variables");
  Problem out;
  out.variables = file.variables;
  out.ring = Ring{n, file.order};
  std::vector<Polynomial> polys;
  for (const auto& text : file.primaries) polys.push_back(parse_polynomial(text, file.variables, file.order));
  out.group = close_group(n, file.generators, closure_cap);
  out.primaries = validate_primaries(std::move(polys), out.group);
  return out;
}

std::vector<std::string> elementary_symmetric(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t k = 1; k <= n; ++k) {
    std::string poly;
    std::vector<std::size_t> pick(k);
    for (std::size_t i = 0; i < k; ++i) pick[i] = i;
    for (;;) {
      if (!poly.empty()) poly += "+";
      for (std::size_t i = 0; i < k; ++i) poly += (i ? "*x" : "x") + std::to_string(pick[i] + 1);
      // Next k-subset in lexicographic order.
      std::size_t i = k;
      while (i > 0 && pick[i - 1] == n - k + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
    out.push_back(std::move(poly));
  }
  return out;
}

namespace {

BuiltinExample permutation_example(int number, std::string description,
                                   std::vector<std::vector<std::size_t>> columns, std::vector<std::string> primaries,
                                   ExpectedCounts expected, std::size_t group_order, bool stretch = false) {
  BuiltinExample ex;
  ex.number = number;
  ex.description = std::move(description);
  ex.n = columns.front().size();
  ex.problem.variables = default_variable_names(ex.n);
  for (const auto& c : columns) ex.problem.generators.push_back(Matrix::from_unit_columns(c));
  ex.problem.primaries = std::move(primaries);
  ex.expected = expected;
  ex.group_order = group_order;
  ex.stretch = stretch;
  return ex;
}

Matrix rows_matrix(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::vector<Rational>> r;
  for (const auto& row : rows) {
    r.emplace_back();
    for (const auto& e : row) r.back().push_back(parse_rational(e));
  }
  return Matrix::from_rows(r);
}

std::vector<BuiltinExample> make_examples() {
  std::vector<BuiltinExample> out;
  out.push_back(permutation_example(
      1, "13-dimensional representation of S2", {{2, 1, 13, 12, 11, 8, 10, 6, 9, 7, 5, 4, 3}},
      {"x9", "x7+x10", "x6+x8", "x5+x11", "x4+x12", "x3+x13", "x1+x2", "x3*x13", "x4*x12", "x5*x11", "x7*x10",
       "x6*x8", "x1*x2"},
      {32, 6, 15, 2}, 2));
  // As printed these two generators close to a group of order 6.
  out.push_back(permutation_example(
      2, "6-dimensional permutation representation (labelled S4)", {{1, 4, 5, 2, 3, 6}, {4, 1, 5, 2, 6, 3}},
      {"x3+x5+x6", "x1+x2+x4", "x3*x5+x3*x6+x5*x6", "x3*x4+x2*x5+x1*x6", "x1*x2*x4",
       "x1^3*x2^3+x1^3*x4^3+x2^3*x4^3+x3^2*x5^2*x6^2"},
      {12, 9, 4, 3}, 6));
  out.push_back(permutation_example(
      3, "6-dimensional representation of A4", {{4, 1, 5, 2, 6, 3}, {2, 3, 1, 6, 4, 5}},
      {"x1+x2+x3+x4+x5+x6", "x3*x4+x2*x5+x1*x6",
       "x1*x2+x1*x3+x2*x3+x1*x4+x2*x4+x1*x5+x3*x5+x4*x5+x2*x6+x3*x6+x4*x6+x5*x6",
       "x3^2*x4+x3*x4^2+x2^2*x5+x2*x5^2+x1^2*x6+x1*x6^2", "x1*x2*x4+x1*x3*x5+x2*x3*x6+x4*x5*x6",
       "x1^2*x2^4+x1^4*x3^2+x2^2*x3^4+x1^4*x4^2+x2^2*x4^4+x3^4*x5^2+x4^4*x5^2+x1^2*x5^4+x2^4*x6^2+x5^4*x6^2+"
       "x3^2*x6^4+x4^2*x6^4"},
      {18, 11, 8, 5}, 12));
  out.push_back(permutation_example(4, "6-dimensional representation of D6", {{6, 5, 4, 3, 2, 1}, {3, 1, 2, 6, 4, 5}},
                                    elementary_symmetric(6), {120, 14, 10, 4}, 6));
  out.push_back(permutation_example(
      5, "8-dimensional representation of D8", {{8, 7, 6, 5, 4, 3, 2, 1}, {4, 1, 2, 3, 8, 5, 6, 7}},
      {"x1+x2+x3+x4+x5+x6+x7+x8", "x4*x5+x1*x6+x2*x7+x3*x8", "x3*x5+x4*x6+x1*x7+x2*x8", "x2*x5+x3*x6+x4*x7+x1*x8",
       "x1*x5+x2*x6+x3*x7+x4*x8", "x1*x3+x2*x4+x5*x7+x6*x8", "x1*x2*x3*x4+x5*x6*x7*x8",
       "x1*x2^3+x2*x3^3+x1^3*x4+x3*x4^3+x5^3*x6+x6^3*x7+x7^3*x8+x5*x8^3"},
      {64, 11, 24, 5}, 8));
  out.push_back(permutation_example(6, "7-dimensional representation of D14",
                                    {{2, 3, 4, 5, 6, 7, 1}, {1, 7, 6, 5, 4, 3, 2}}, elementary_symmetric(7),
                                    {360, 18, 19, 7}, 14));
  out.push_back(permutation_example(
      7, "15-dimensional representation of S3",
      {{2, 1, 3, 4, 7, 14, 5, 8, 11, 13, 9, 15, 10, 6, 12}, {1, 3, 2, 4, 5, 9, 8, 7, 6, 13, 12, 11, 10, 15, 14}},
      {"x1+x2+x3", "x1*x2+x1*x3+x2*x3", "x1*x2*x3", "x10+x13", "x10*x13", "x6+x9+x11+x12+x14+x15",
       "x11*x12+x6*x14+x9*x15", "x9*x11+x6*x12+x14*x15", "x6*x11+x9*x12+x9*x14+x12*x14+x6*x15+x11*x15",
       "x6*x9*x14+x6*x11*x14+x11*x12*x14+x6*x9*x15+x9*x12*x15+x11*x12*x15", "x6^6+x9^6+x11^6+x12^6+x14^6+x15^6",
       "x4", "x5+x7+x8", "x5*x7+x5*x8+x7*x8", "x5*x7*x8"},
      {1728, 17, 76, 4}, 6, true));
  out.push_back(permutation_example(
      8, "18-dimensional representation of S3",
      {{2, 1, 3, 4, 12, 10, 7, 11, 14, 6, 8, 5, 15, 9, 13, 17, 16, 18},
       {1, 3, 2, 14, 8, 7, 6, 5, 9, 10, 15, 13, 12, 4, 11, 16, 18, 17}},
      {"x1+x2+x3", "x1*x2+x1*x3+x2*x3", "x1*x2*x3", "x4+x9+x14", "x4*x9+x4*x14+x9*x14", "x4*x9*x14",
       "x16+x17+x18", "x16*x17+x16*x18+x17*x18", "x16*x17*x18", "x6+x7+x10", "x6*x7+x6*x10+x7*x10", "x6*x7*x10",
       "x5+x8+x11+x12+x13+x15", "x5*x12+x8*x13+x11*x15", "x8*x11+x12*x13+x5*x15",
       "x5*x11+x8*x12+x5*x13+x11*x13+x8*x15+x12*x15",
       "x5*x8*x12+x5*x11*x12+x5*x8*x13+x11*x12*x15+x8*x13*x15+x11*x13*x15", "x5^6+x8^6+x11^6+x12^6+x13^6+x15^6"},
      {31104, 22, 137, 4}, 6, true));

  BuiltinExample nine;
  nine.number = 9;
  nine.description = "10-dimensional representation of S5";
  nine.n = 10;
  nine.problem.variables = default_variable_names(10);
  nine.problem.generators.push_back(rows_matrix({
      {"1", "0", "0", "0", "0", "0", "0", "0", "0", "0"},
      {"0", "1", "1/3", "1/3", "1/3", "0", "0", "0", "0", "0"},
      {"0", "0", "1/3", "-2/3", "-2/3", "0", "0", "0", "0", "0"},
      {"0", "0", "-2/3", "1/3", "-2/3", "0", "0", "0", "0", "0"},
      {"0", "0", "-2/3", "-2/3", "1/3", "0", "0", "0", "0", "0"},
      {"0", "0", "0", "0", "0", "1", "0", "0", "0", "0"},
      {"0", "0", "0", "0", "0", "0", "0", "0", "1", "0"},
      {"0", "0", "0", "0", "0", "0", "0", "0", "0", "1"},
      {"0", "0", "0", "0", "0", "0", "1", "0", "0", "0"},
      {"0", "0", "0", "0", "0", "0", "0", "1", "0", "0"},
  }));
  nine.problem.generators.push_back(rows_matrix({
      {"1", "0", "0", "0", "0", "0", "0", "0", "0", "0"},
      {"0", "0", "1/3", "-2/3", "-2/3", "0", "0", "0", "0", "0"},
      {"0", "0", "-2/3", "1/3", "-2/3", "0", "0", "0", "0", "0"},
      {"0", "0", "-2/3", "-2/3", "1/3", "0", "0", "0", "0", "0"},
      {"0", "1", "1/3", "1/3", "1/3", "0", "0", "0", "0", "0"},
      {"0", "0", "0", "0", "0", "-1", "-1", "1", "1", "0"},
      {"0", "0", "0", "0", "0", "-1", "0", "0", "0", "1"},
      {"0", "0", "0", "0", "0", "-1", "0", "1", "0", "0"},
      {"0", "0", "0", "0", "0", "0", "-1", "0", "0", "0"},
      {"0", "0", "0", "0", "0", "0", "-1", "1", "0", "0"},
  }));
  nine.expected = {720, 22, 46, 9};
  nine.group_order = 120;
  nine.stretch = true;
  nine.has_primaries = false;
  out.push_back(std::move(nine));
  return out;
}

}  // namespace

const std::vector<BuiltinExample>& builtin_examples() {
  static const std::vector<BuiltinExample> examples = make_examples();
  return examples;
}

const BuiltinExample& builtin_example(int number) {
  for (const auto& ex : builtin_examples())
    if (ex.number == number) return ex;
  throw DomainError("no built-in example " + std::to_string(number) + "; choose 1 to 9");
}

}  // namespace secinv
