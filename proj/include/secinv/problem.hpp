#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "secinv/group.hpp"
#include "secinv/matrix.hpp"
#include "secinv/monomial.hpp"

namespace secinv {

/// Problem description as read from a file.
///
///   # comment
///   variables: x1, x2, x3
///   order: degrevlex
///   generators:
///     0,1,0;1,0,0;0,0,1
///   primaries:
///     x1+x2
///     x1*x2
///     x3
///
/// A section header may carry its content on the same line. Matrices are
/// written row by row, rows separated by ';', entries by ','.
struct ProblemFile {
  std::vector<std::string> variables;
  std::vector<Matrix> generators;
  std::vector<std::string> primaries;
  MonomialOrder order = MonomialOrder::kDegRevLex;
};

/// Throws ParseError with the byte offset into `text`.
ProblemFile parse_problem(std::string_view text);
ProblemFile load_problem(const std::filesystem::path& path);
std::string format_problem(const ProblemFile& problem);

/// A parsed, closed and validated problem.
struct Problem {
  std::vector<std::string> variables;
  Ring ring;
  GroupRepresentation group;
  PrimarySystem primaries;
};

/// Parses the primaries, closes the group and validates. Throws ParseError,
/// DimensionError, ValidationError or ResourceError.
Problem build_problem(const ProblemFile& file, std::size_t closure_cap = GroupRepresentation::kDefaultClosureCap);

/// Reference figures for a built-in example.
struct ExpectedCounts {
  std::int64_t secondaries;
  unsigned max_secondary_degree;
  std::int64_t irreducibles;
  unsigned max_irreducible_degree;
};

struct BuiltinExample {
  int number;
  std::string description;
  std::size_t n;
  ProblemFile problem;
  ExpectedCounts expected;
  std::size_t group_order;
  /// Too large for routine runs.
  bool stretch = false;
  /// False when only the group is known.
  bool has_primaries = true;
};

/// Examples 1 to 9 in order.
const std::vector<BuiltinExample>& builtin_examples();
/// Throws DomainError for an unknown number.
const BuiltinExample& builtin_example(int number);

/// e_1, ..., e_n in x1..xn, as polynomial strings.
std::vector<std::string> elementary_symmetric(std::size_t n);

}  // namespace secinv
