#include "secinv/report.hpp"

#include <iomanip>
#include <istream>
#include <json.hpp>
#include <ostream>

#include "secinv/errors.hpp"

namespace secinv {
namespace {

using json = nlohmann::ordered_json;

json integer_json(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

RunReport base_report(const Problem& problem) {
  RunReport r;
  r.variables = problem.variables;
  r.order = problem.ring.order;
  r.group_order = problem.group.order();
  r.primary_degrees = problem.primaries.degrees;
  return r;
}

}  // namespace

RunReport molien_report(const Problem& problem, const std::vector<Integer>& series, const SecondaryCounts& counts) {
  RunReport r = base_report(problem);
  r.command = "molien";
  r.series = series;
  r.molien_total = counts.total;
  for (std::size_t d = 0; d < counts.per_degree.size(); ++d)
    r.rows.push_back({static_cast<unsigned>(d), counts.per_degree[d], 0, 0});
  r.tracks_irreducibles = false;
  r.complete = true;
  return r;
}

RunReport secondary_report(const Problem& problem, const SecondaryResult& result, bool include_invariants) {
  RunReport r = base_report(problem);
  r.command = "secondary";
  r.algorithm = result.algorithm;
  r.series = result.molien.series;
  r.molien_total = result.molien.counts.total;
  r.tracks_irreducibles = result.tracks_irreducibles();
  for (const auto& t : result.degrees) {
    r.rows.push_back({t.degree, t.target, t.secondaries.size(), r.tracks_irreducibles ? t.irreducible_count() : 0});
    if (!include_invariants) continue;
    for (std::size_t k = 0; k < t.secondaries.size(); ++k) {
      const auto& s = t.secondaries[k];
      InvariantRecord rec{t.degree, k, s.provenance, s.factors, std::nullopt};
      if (s.invariant) rec.polynomial = to_string(*s.invariant, problem.variables);
      r.invariants.push_back(std::move(rec));
    }
  }
  r.total_secondaries = result.total_secondaries();
  r.total_irreducibles = result.total_irreducibles();
  r.max_secondary_degree = result.max_secondary_degree();
  r.max_irreducible_degree = result.max_irreducible_degree();
  r.complete = result.complete();
  r.counters = result.counters;
  return r;
}

void write_text(std::ostream& out, const RunReport& r) {
  out << r.command;
  if (!r.source.empty()) out << " (" << r.source << ")";
  if (r.algorithm) out << ", algorithm " << to_string(*r.algorithm);
  out << "\n";
  for (const auto& note : r.notes) out << "note: " << note << "\n";
  out << "variables: " << r.variables.size() << ", order " << to_string(r.order) << ", |G| = " << r.group_order
      << "\nprimary degrees:";
  for (unsigned d : r.primary_degrees) out << " " << d;
  out << "\nMolien series:";
  for (std::size_t d = 0; d < r.series.size(); ++d) out << " " << r.series[d].get_str();
  out << "\n\n";

  const bool search = r.command != "molien";
  out << std::setw(4) << "d" << std::setw(8) << "m_d";
  if (search) out << std::setw(8) << "|S_d|" << std::setw(8) << "|IS_d|";
  out << "\n";
  for (const auto& row : r.rows) {
    out << std::setw(4) << row.degree << std::setw(8) << row.target;
    if (search) {
      out << std::setw(8) << row.secondaries;
      if (r.tracks_irreducibles)
        out << std::setw(8) << row.irreducibles;
      else
        out << std::setw(8) << "-";
    }
    out << "\n";
  }
  out << "\nsecondary invariants (Molien total): " << r.molien_total << "\n";
  if (search) {
    out << "secondary invariants found: " << r.total_secondaries << ", maximal degree " << r.max_secondary_degree
        << "\n";
    if (r.tracks_irreducibles)
      out << "irreducible secondary invariants: " << r.total_irreducibles << ", maximal degree "
          << r.max_irreducible_degree << "\n";
    out << "complete: " << (r.complete ? "yes" : "no") << "\n";
    out << "elapsed: " << std::fixed << std::setprecision(3) << r.elapsed_seconds << " s\n";
    out.unsetf(std::ios::floatfield);
  }
  if (r.counters) {
    const auto& c = *r.counters;
    out << "counters: candidates " << c.candidates_generated << " (power products " << c.power_product_candidates
        << ", Reynolds images " << c.reynolds_candidates << "), accepted " << c.candidates_accepted << ", reductions "
        << c.reductions << ", basis extensions " << c.basis_extensions << ", Groebner recomputations "
        << c.groebner_recomputations << ", max basis size " << c.max_basis_size << "\n";
  }
  if (!r.invariants.empty()) {
    out << "\n";
    for (const auto& inv : r.invariants) {
      out << "[" << inv.degree << "." << inv.index << "] " << to_string(inv.provenance);
      if (!inv.factors.empty()) {
        out << " {";
        for (std::size_t k = 0; k < inv.factors.size(); ++k) out << (k ? "," : "") << inv.factors[k];
        out << "}";
      }
      out << ": " << (inv.polynomial ? *inv.polynomial : "(not materialized)") << "\n";
    }
  }
}

void write_structured(std::ostream& out, const RunReport& r) {
  json header = {{"record", "header"},
                 {"schema", kRunSchema},
                 {"command", r.command},
                 {"source", r.source},
                 {"algorithm", r.algorithm ? json(std::string(to_string(*r.algorithm))) : json(nullptr)},
                 {"variables", r.variables},
                 {"order", std::string(to_string(r.order))},
                 {"group_order", r.group_order},
                 {"primary_degrees", r.primary_degrees},
                 {"notes", r.notes}};
  out << header.dump() << "\n";
  json series = json::array();
  for (const auto& a : r.series) series.push_back(integer_json(a));
  out << json{{"record", "series"}, {"coefficients", series}}.dump() << "\n";
  const bool search = r.command != "molien";
  for (const auto& row : r.rows) {
    json rec = {{"record", "degree"}, {"d", row.degree}, {"m_d", row.target}};
    if (search) {
      rec["secondaries"] = row.secondaries;
      rec["irreducibles"] = r.tracks_irreducibles ? json(row.irreducibles) : json(nullptr);
    }
    out << rec.dump() << "\n";
  }
  for (const auto& inv : r.invariants) {
    json rec = {{"record", "invariant"},
                {"degree", inv.degree},
                {"index", inv.index},
                {"provenance", std::string(to_string(inv.provenance))},
                {"factors", inv.factors},
                {"polynomial", inv.polynomial ? json(*inv.polynomial) : json(nullptr)}};
    out << rec.dump() << "\n";
  }
  json summary = {{"record", "summary"}, {"molien_total", r.molien_total}, {"complete", r.complete}};
  if (search) {
    summary["secondaries"] = r.total_secondaries;
    summary["max_secondary_degree"] = r.max_secondary_degree;
    summary["irreducibles"] = r.tracks_irreducibles ? json(r.total_irreducibles) : json(nullptr);
    summary["max_irreducible_degree"] = r.tracks_irreducibles ? json(r.max_irreducible_degree) : json(nullptr);
    summary["elapsed_seconds"] = r.elapsed_seconds;
  }
  if (r.counters) {
    const auto& c = *r.counters;
    summary["counters"] = {{"candidates_generated", c.candidates_generated},
                           {"power_product_candidates", c.power_product_candidates},
                           {"reynolds_candidates", c.reynolds_candidates},
                           {"candidates_accepted", c.candidates_accepted},
                           {"reductions", c.reductions},
                           {"basis_extensions", c.basis_extensions},
                           {"groebner_recomputations", c.groebner_recomputations},
                           {"max_basis_size", c.max_basis_size}};
  }
  out << summary.dump() << "\n";
}

std::vector<std::string> read_structured_invariants(std::istream& in) {
  std::vector<std::string> out;
  std::string line;
  std::size_t offset = 0;
  while (std::getline(in, line)) {
    if (!line.empty()) {
      json rec;
      try {
        rec = json::parse(line);
      } catch (const json::parse_error& e) {
        throw ParseError("malformed record: " + std::string(e.what()), offset + e.byte);
      }
      if (rec.value("record", "") == "invariant" && rec.contains("polynomial") && rec["polynomial"].is_string())
        out.push_back(rec["polynomial"].get<std::string>());
    }
    offset += line.size() + 1;
  }
  return out;
}

}  // namespace secinv
