#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "secinv/problem.hpp"
#include "secinv/secondary.hpp"

namespace secinv {

/// Version tag written into every structured header record.
inline constexpr const char* kRunSchema = "secinv.run/1";

struct DegreeRow {
  unsigned degree;
  std::int64_t target;
  std::size_t secondaries;
  std::size_t irreducibles;
};

struct InvariantRecord {
  unsigned degree;
  /// Position within its degree.
  std::size_t index;
  Provenance provenance;
  std::vector<std::size_t> factors;
  /// Absent for reducible secondaries of the irreducible-only variant.
  std::optional<std::string> polynomial;
};

/// Everything a CLI run prints.
struct RunReport {
  std::string command;
  std::string source;
  std::optional<Algorithm> algorithm;
  std::vector<std::string> variables;
  MonomialOrder order = MonomialOrder::kDegRevLex;
  std::size_t group_order = 0;
  std::vector<unsigned> primary_degrees;
  std::vector<Integer> series;
  std::vector<DegreeRow> rows;
  std::int64_t molien_total = 0;
  std::size_t total_secondaries = 0;
  std::size_t total_irreducibles = 0;
  unsigned max_secondary_degree = 0;
  unsigned max_irreducible_degree = 0;
  bool tracks_irreducibles = true;
  bool complete = false;
  double elapsed_seconds = 0;
  std::optional<SearchCounters> counters;
  std::vector<InvariantRecord> invariants;
  std::vector<std::string> notes;
};

/// Molien part only: series and m_d table up to `max_degree`.
RunReport molien_report(const Problem& problem, const std::vector<Integer>& series, const SecondaryCounts& counts);

RunReport secondary_report(const Problem& problem, const SecondaryResult& result, bool include_invariants);

void write_text(std::ostream& out, const RunReport& report);
/// One JSON object per line: header, series, degree rows, invariants, summary.
void write_structured(std::ostream& out, const RunReport& report);

/// Polynomial strings of the invariant records in a structured stream, in
/// order; null polynomials are skipped. Throws ParseError on malformed input.
std::vector<std::string> read_structured_invariants(std::istream& in);

}  // namespace secinv
