#include "secinv/secondary.hpp"

#include <algorithm>
#include <string>
#include <thread>

#include "secinv/errors.hpp"

namespace secinv {

std::string_view to_string(Algorithm a) {
  switch (a) {
    case Algorithm::kBasic:
      return "basic";
    case Algorithm::kRefined:
      return "refined";
    case Algorithm::kNew:
      return "new";
    case Algorithm::kImproved:
      return "improved";
    case Algorithm::kIrreducibleOnly:
      return "irred";
  }
  return "unknown";
}

Algorithm parse_algorithm(std::string_view name) {
  if (name == "basic") return Algorithm::kBasic;
  if (name == "refined") return Algorithm::kRefined;
  if (name == "new") return Algorithm::kNew;
  if (name == "improved") return Algorithm::kImproved;
  if (name == "irred" || name == "irreducible") return Algorithm::kIrreducibleOnly;
  throw ParseError("unknown algorithm '" + std::string(name) + "'", 0);
}

std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::kUnit:
      return "unit";
    case Provenance::kPowerProduct:
      return "power-product";
    case Provenance::kReynoldsImage:
      return "reynolds-image";
  }
  return "unknown";
}

std::size_t DegreeTable::irreducible_count() const {
  return static_cast<std::size_t>(std::count_if(secondaries.begin(), secondaries.end(),
                                                [](const SecondaryInvariant& s) { return s.is_irreducible(); }));
}

std::size_t SecondaryResult::total_secondaries() const {
  std::size_t total = 0;
  for (const auto& t : degrees) total += t.secondaries.size();
  return total;
}

std::size_t SecondaryResult::total_irreducibles() const {
  return tracks_irreducibles() ? irreducibles.size() : 0;
}

unsigned SecondaryResult::max_secondary_degree() const {
  unsigned top = 0;
  for (const auto& t : degrees)
    if (!t.secondaries.empty()) top = t.degree;
  return top;
}

unsigned SecondaryResult::max_irreducible_degree() const {
  return tracks_irreducibles() && !irreducibles.empty() ? irreducibles.back().degree : 0;
}

const SecondaryInvariant& SecondaryResult::irreducible(std::size_t label) const {
  const IrreducibleRef& ref = irreducibles.at(label);
  return degrees.at(ref.degree).secondaries.at(ref.position);
}

std::vector<Polynomial> SecondaryResult::irreducible_polynomials() const {
  std::vector<Polynomial> out;
  for (std::size_t k = 0; k < irreducibles.size(); ++k) out.push_back(*irreducible(k).invariant);
  return out;
}

bool SecondaryResult::complete() const {
  return static_cast<std::int64_t>(total_secondaries()) == molien.counts.total;
}

CandidateProducts::CandidateProducts(const SecondaryResult& tables, unsigned degree)
    : tables_(&tables), degree_(degree) {}

std::optional<CandidateProduct> CandidateProducts::next() {
  const auto& irr = tables_->irreducibles;
  while (label_ < irr.size()) {
    const unsigned deg_i = irr[label_].degree;
    if (deg_i >= degree_) return std::nullopt;
    const unsigned e = degree_ - deg_i;
    if (e < tables_->degrees.size()) {
      const auto& cofactors = tables_->degrees[e].secondaries;
      while (position_ < cofactors.size()) {
        const auto& s = cofactors[position_++];
        if (s.factors.empty() || label_ <= s.factors.front())
          return CandidateProduct{label_, e, position_ - 1, degree_};
      }
    }
    ++label_;
    position_ = 0;
  }
  return std::nullopt;
}

namespace {

void enumerate_products(const SecondaryResult& tables, unsigned remaining, std::size_t from,
                        std::vector<std::size_t>& current, std::vector<std::vector<std::size_t>>& out) {
  if (remaining == 0) {
    if (current.size() >= 2) out.push_back(current);
    return;
  }
  for (std::size_t label = from; label < tables.irreducibles.size(); ++label) {
    unsigned deg = tables.irreducibles[label].degree;
    if (deg > remaining) break;
    current.push_back(label);
    enumerate_products(tables, remaining - deg, label, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<std::vector<std::size_t>> power_products(const SecondaryResult& tables, unsigned degree) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> current;
  enumerate_products(tables, degree, 0, current, out);
  return out;
}

struct SecondarySearch::Candidate {
  Provenance provenance = Provenance::kPowerProduct;
  std::vector<std::size_t> factors;
  std::optional<CandidateProduct> product;
  std::optional<Monomial> source;
  std::optional<Polynomial> raw;
  /// What gets reduced modulo the current basis.
  Polynomial reducible;
  Polynomial remainder;
};

SecondarySearch::SecondarySearch(const GroupRepresentation& G, const PrimarySystem& P, SearchOptions options)
    : group_(G), primaries_(P), options_(options), ring_(P.ring()) {
  if (G.n() != ring_.n) throw DimensionError("group size does not match the primary invariants");
  options_.threads = std::max<std::size_t>(options_.threads, 1);
  result_.molien = molien_profile(G, P.degrees);
  DegreeTable zero;
  zero.degree = 0;
  zero.target = result_.molien.counts.per_degree.at(0);
  SecondaryInvariant one;
  one.degree = 0;
  one.provenance = Provenance::kUnit;
  one.invariant = Polynomial::constant(ring_, 1);
  one.normal_form = primaries_.groebner.reduce(*one.invariant);
  zero.secondaries.push_back(std::move(one));
  result_.degrees.push_back(std::move(zero));
  basis_ = primaries_.groebner;
}

bool SecondarySearch::target_met(unsigned d) const {
  const DegreeTable& t = result_.degrees[d];
  return static_cast<std::int64_t>(t.secondaries.size()) >= t.target;
}

void SecondarySearch::begin_degree(unsigned d, Algorithm algorithm) {
  if (d != result_.degrees.size())
    throw DomainError("degrees must be processed in order; expected degree " +
                      std::to_string(result_.degrees.size()) + ", got " + std::to_string(d));
  if (d > 1 && result_.algorithm != algorithm)
    throw DomainError("a search cannot mix algorithm variants across degrees");
  result_.algorithm = algorithm;
  DegreeTable table;
  table.degree = d;
  const auto& m = result_.molien.counts.per_degree;
  table.target = d < m.size() ? m[d] : 0;
  result_.degrees.push_back(std::move(table));

  full_recompute_ = algorithm == Algorithm::kBasic || algorithm == Algorithm::kRefined;
  // Secondaries of lower degree never enter the ideal: membership is
  // tested against <P ∪ S_d> only.
  basis_ = full_recompute_ ? primaries_.groebner : primaries_.groebner.bounded_to(d);
}

void SecondarySearch::finish_degree(unsigned d, bool require_target) {
  const DegreeTable& t = result_.degrees[d];
  auto found = static_cast<std::int64_t>(t.secondaries.size());
  if (found > t.target)
    throw InternalError("found " + std::to_string(found) + " secondary invariants in degree " + std::to_string(d) +
                        ", more than the Molien count " + std::to_string(t.target));
  if (require_target && found < t.target)
    throw ValidationError("only " + std::to_string(found) + " of " + std::to_string(t.target) +
                          " secondary invariants found in degree " + std::to_string(d) +
                          ": the primary invariants are inconsistent");
}

Polynomial SecondarySearch::raw_product(std::span<const std::size_t> factors) const {
  Polynomial p = Polynomial::constant(ring_, 1);
  for (std::size_t label : factors) p = p * *result_.irreducible(label).invariant;
  return p;
}

void SecondarySearch::prepare(Candidate& c) const {
  if (c.product) {
    // Normal forms are multiplicative modulo a complete Groebner basis, so
    // the product of stored normal forms stands in for the product itself.
    const auto& i = result_.irreducible(c.product->irreducible);
    const auto& s = result_.degrees[c.product->cofactor_degree].secondaries[c.product->cofactor_position];
    c.reducible = primaries_.groebner.reduce(*i.normal_form * *s.normal_form);
  } else if (!c.raw) {
    c.raw = raw_product(c.factors);
    c.reducible = *c.raw;
  } else {
    c.reducible = *c.raw;
  }
  c.remainder = basis_.reduce(c.reducible);
}

bool SecondarySearch::accept(Candidate& c, Polynomial remainder, unsigned d) {
  DegreeTable& table = result_.degrees[d];
  const Algorithm mode = result_.algorithm;
  SecondaryInvariant s;
  s.degree = d;
  s.provenance = c.provenance;
  s.source = c.source;
  s.factors = c.factors;

  const bool keeps_normal_forms = mode == Algorithm::kImproved || mode == Algorithm::kIrreducibleOnly;
  if (c.provenance == Provenance::kReynoldsImage) {
    s.invariant = std::move(c.raw);
    if (keeps_normal_forms) s.normal_form = primaries_.groebner.reduce(*s.invariant);
    if (result_.tracks_irreducibles()) {
      s.factors = {result_.irreducibles.size()};
      result_.irreducibles.push_back({d, table.secondaries.size()});
    }
  } else if (c.product) {
    s.normal_form = c.reducible;
    if (mode == Algorithm::kImproved) {
      const auto& cof = result_.degrees[c.product->cofactor_degree].secondaries[c.product->cofactor_position];
      s.invariant = *result_.irreducible(c.product->irreducible).invariant * *cof.invariant;
    }
  } else {
    s.invariant = std::move(c.raw);
  }
  table.secondaries.push_back(std::move(s));
  ++result_.counters.candidates_accepted;

  if (full_recompute_) {
    std::vector<Polynomial> gens(primaries_.groebner.elements().begin(), primaries_.groebner.elements().end());
    for (const auto& sec : table.secondaries) gens.push_back(*sec.invariant);
    basis_ = buchberger(ring_, gens);
    ++result_.counters.groebner_recomputations;
  } else {
    basis_ = extend_with_remainder(std::move(basis_), std::move(remainder));
    ++result_.counters.basis_extensions;
    if (on_extension) on_extension(basis_);
  }
  result_.counters.max_basis_size = std::max<std::uint64_t>(result_.counters.max_basis_size, basis_.size());
  return true;
}

bool SecondarySearch::consume(std::vector<Candidate>& candidates, unsigned d, bool stop_at_target) {
  const std::size_t threads = options_.threads;
  const std::size_t chunk = threads == 1 ? 1 : threads * 2;
  for (std::size_t start = 0; start < candidates.size(); start += chunk) {
    if (stop_at_target && target_met(d)) return true;
    const std::size_t end = std::min(candidates.size(), start + chunk);
    const std::size_t snapshot = result_.degrees[d].secondaries.size();
    if (threads == 1 || end - start == 1) {
      for (std::size_t k = start; k < end; ++k) prepare(candidates[k]);
    } else {
      std::vector<std::jthread> workers;
      for (std::size_t t = 0; t < threads; ++t)
        workers.emplace_back([&, t] {
          for (std::size_t k = start + t; k < end; k += threads) prepare(candidates[k]);
        });
    }
    for (std::size_t k = start; k < end; ++k) {
      if (stop_at_target && target_met(d)) return true;
      Candidate& c = candidates[k];
      ++result_.counters.candidates_generated;
      ++(c.provenance == Provenance::kReynoldsImage ? result_.counters.reynolds_candidates
                                                     : result_.counters.power_product_candidates);
      ++result_.counters.reductions;
      Polynomial r = std::move(c.remainder);
      // Reduced against an older basis: finish against the current one. The
      // normal form at this degree is unique, so this matches a sequential run.
      if (result_.degrees[d].secondaries.size() != snapshot && !r.is_zero()) {
        r = basis_.reduce(r);
        ++result_.counters.reductions;
      }
      if (!r.is_zero()) accept(c, std::move(r), d);
    }
  }
  return stop_at_target && target_met(d);
}

bool SecondarySearch::search_products(unsigned d, bool all_power_products) {
  const std::size_t window = std::max<std::size_t>(options_.threads * 2, 1);
  if (all_power_products) {
    auto products = power_products(result_, d);
    std::vector<Candidate> candidates;
    for (auto& f : products) {
      Candidate c;
      c.provenance = Provenance::kPowerProduct;
      c.factors = std::move(f);
      candidates.push_back(std::move(c));
    }
    return consume(candidates, d, true);
  }
  CandidateProducts products(result_, d);
  for (;;) {
    std::vector<Candidate> window_candidates;
    while (window_candidates.size() < window) {
      auto p = products.next();
      if (!p) break;
      Candidate c;
      c.provenance = Provenance::kPowerProduct;
      c.product = p;
      const auto& cof = result_.degrees[p->cofactor_degree].secondaries[p->cofactor_position];
      c.factors = cof.factors;
      c.factors.insert(std::upper_bound(c.factors.begin(), c.factors.end(), p->irreducible), p->irreducible);
      window_candidates.push_back(std::move(c));
    }
    if (window_candidates.empty()) return target_met(d);
    if (consume(window_candidates, d, true)) return true;
  }
}

void SecondarySearch::search_reynolds(unsigned d, bool stop_at_target) {
  ReynoldsStream stream(group_, ring_, d, options_.batch_size, options_.threads);
  for (;;) {
    if (stop_at_target && target_met(d)) return;
    auto batch = stream.next_batch();
    if (batch.empty()) return;
    std::vector<Candidate> candidates;
    candidates.reserve(batch.size());
    for (auto& img : batch) {
      Candidate c;
      c.provenance = Provenance::kReynoldsImage;
      c.source = img.source;
      c.raw = std::move(img.image);
      candidates.push_back(std::move(c));
    }
    if (consume(candidates, d, stop_at_target)) return;
  }
}

void SecondarySearch::basic_degree(unsigned d) {
  begin_degree(d, Algorithm::kBasic);
  search_reynolds(d, false);
  finish_degree(d, true);
}

void SecondarySearch::refined_degree(unsigned d) {
  begin_degree(d, Algorithm::kRefined);
  if (!target_met(d) && !search_products(d, true)) search_reynolds(d, true);
  finish_degree(d, true);
}

void SecondarySearch::new_degree(unsigned d) {
  begin_degree(d, Algorithm::kNew);
  if (!target_met(d) && !search_products(d, true)) search_reynolds(d, true);
  finish_degree(d, true);
}

void SecondarySearch::improved_degree(unsigned d) {
  begin_degree(d, Algorithm::kImproved);
  if (!target_met(d) && !search_products(d, false)) search_reynolds(d, true);
  finish_degree(d, true);
}

void SecondarySearch::irreducible_only_degree(unsigned d) {
  begin_degree(d, Algorithm::kIrreducibleOnly);
  if (!target_met(d) && !search_products(d, false)) search_reynolds(d, true);
  finish_degree(d, true);
}

const SecondaryResult& SecondarySearch::run(Algorithm algorithm) {
  const unsigned bound = result_.molien.degree_bound;
  for (unsigned d = static_cast<unsigned>(result_.degrees.size()); d <= bound; ++d) {
    if (result_.complete()) break;
    switch (algorithm) {
      case Algorithm::kBasic:
        basic_degree(d);
        break;
      case Algorithm::kRefined:
        refined_degree(d);
        break;
      case Algorithm::kNew:
        new_degree(d);
        break;
      case Algorithm::kImproved:
        improved_degree(d);
        break;
      case Algorithm::kIrreducibleOnly:
        irreducible_only_degree(d);
        break;
    }
  }
  result_.algorithm = algorithm;
  if (!result_.complete())
    throw ValidationError("degree cap " + std::to_string(bound) + " reached with " +
                          std::to_string(result_.total_secondaries()) + " of " +
                          std::to_string(result_.molien.counts.total) + " secondary invariants");
  return result_;
}

SecondaryResult compute_secondary(const GroupRepresentation& G, const PrimarySystem& P, Algorithm algorithm,
                                  SearchOptions options) {
  SecondarySearch search(G, P, options);
  return search.run(algorithm);
}

SecondaryResult improved_new_algorithm(const GroupRepresentation& G, const PrimarySystem& P, SearchOptions options) {
  return compute_secondary(G, P, Algorithm::kImproved, options);
}

SecondaryResult irreducible_only(const GroupRepresentation& G, const PrimarySystem& P, SearchOptions options) {
  return compute_secondary(G, P, Algorithm::kIrreducibleOnly, options);
}

}  // namespace secinv
