#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "secinv/group.hpp"
#include "secinv/molien.hpp"

namespace secinv {

enum class Algorithm {
  /// Every element of B_d is tested; a full Groebner basis is recomputed per acceptance.
  kBasic,
  /// Power products first, stop at m_d; full Groebner basis per acceptance.
  kRefined,
  /// As refined, but the truncated basis is extended with the remainder.
  kNew,
  /// As new, with power products restricted to i*s (irreducible times secondary).
  kImproved,
  /// As improved, keeping only normal forms modulo <P> of reducible secondaries.
  kIrreducibleOnly,
};

std::string_view to_string(Algorithm a);
/// "basic", "refined", "new", "improved", "irred". Throws ParseError otherwise.
Algorithm parse_algorithm(std::string_view name);

enum class Provenance { kUnit, kPowerProduct, kReynoldsImage };
std::string_view to_string(Provenance p);

struct SecondaryInvariant {
  unsigned degree = 0;
  Provenance provenance = Provenance::kUnit;
  /// Irreducible labels (see SecondaryResult::irreducibles) whose product
  /// this is, ascending. An irreducible lists only itself; 1 lists nothing.
  std::vector<std::size_t> factors;
  /// Monomial whose Reynolds image this is, for kReynoldsImage.
  std::optional<Monomial> source;
  /// The invariant itself; absent for reducible secondaries of the
  /// irreducible-only variant.
  std::optional<Polynomial> invariant;
  /// rem(invariant; G_P); kept by the improved and irreducible-only variants.
  std::optional<Polynomial> normal_form;

  bool is_irreducible() const { return provenance == Provenance::kReynoldsImage; }
};

struct DegreeTable {
  unsigned degree = 0;
  /// m_d from the Molien series.
  std::int64_t target = 0;
  /// S_d in acceptance order.
  std::vector<SecondaryInvariant> secondaries;

  std::size_t irreducible_count() const;
};

struct IrreducibleRef {
  unsigned degree;
  /// Position within DegreeTable::secondaries of that degree.
  std::size_t position;
};

struct SearchCounters {
  std::uint64_t candidates_generated = 0;
  std::uint64_t power_product_candidates = 0;
  std::uint64_t reynolds_candidates = 0;
  std::uint64_t candidates_accepted = 0;
  std::uint64_t reductions = 0;
  std::uint64_t basis_extensions = 0;
  std::uint64_t groebner_recomputations = 0;
  std::uint64_t max_basis_size = 0;
};

struct SecondaryResult {
  Algorithm algorithm = Algorithm::kImproved;
  MolienProfile molien;
  /// Indexed by degree; degrees[0] holds the constant 1.
  std::vector<DegreeTable> degrees;
  /// Irreducible secondaries in discovery order (ascending degree); the
  /// index into this list is the label used by SecondaryInvariant::factors.
  std::vector<IrreducibleRef> irreducibles;
  SearchCounters counters;

  /// False for the basic algorithm, which does not classify secondaries.
  bool tracks_irreducibles() const { return algorithm != Algorithm::kBasic; }
  std::size_t total_secondaries() const;
  std::size_t total_irreducibles() const;
  /// Largest degree with a secondary (resp. irreducible) invariant; 0 if none.
  unsigned max_secondary_degree() const;
  unsigned max_irreducible_degree() const;
  const SecondaryInvariant& irreducible(std::size_t label) const;
  /// Raw irreducible invariants in label order.
  std::vector<Polynomial> irreducible_polynomials() const;
  bool complete() const;
};

struct SearchOptions {
  /// Worker threads for candidate reduction; results do not depend on it.
  std::size_t threads = 1;
  /// Reynolds images expanded per batch.
  std::size_t batch_size = 1000;
};

/// One admissible product i*s for the improved algorithm.
struct CandidateProduct {
  std::size_t irreducible;
  unsigned cofactor_degree;
  std::size_t cofactor_position;
  unsigned degree;
};

/// Lazily enumerates products i*s of degree d with i irreducible of degree
/// < d and s in S_{d - deg i}. A product is emitted only when i is the
/// least irreducible factor of i*s, so each power product appears once.
/// Order: ascending label of i (hence ascending deg i), then position of s.
class CandidateProducts {
 public:
  CandidateProducts(const SecondaryResult& tables, unsigned degree);
  std::optional<CandidateProduct> next();

 private:
  const SecondaryResult* tables_;
  unsigned degree_;
  std::size_t label_ = 0;
  std::size_t position_ = 0;
};

/// All multisets of irreducible labels with total degree d, as ascending
/// label lists in lexicographic order (refined and new variants).
std::vector<std::vector<std::size_t>> power_products(const SecondaryResult& tables, unsigned degree);

/// Degree-by-degree secondary invariant search.
///
/// The per-degree steps must be called for d = 1, 2, ... in order and with a
/// single variant per search. run() drives a variant to completion.
class SecondarySearch {
 public:
  SecondarySearch(const GroupRepresentation& G, const PrimarySystem& P, SearchOptions options = {});

  void basic_degree(unsigned d);
  void refined_degree(unsigned d);
  void new_degree(unsigned d);
  void improved_degree(unsigned d);
  void irreducible_only_degree(unsigned d);

  /// Runs all degrees with `algorithm` until prod(deg p_i)/|G| secondaries
  /// are found. Throws ValidationError if the degree cap is reached first.
  const SecondaryResult& run(Algorithm algorithm);

  const SecondaryResult& result() const { return result_; }
  /// Truncated basis of <P ∪ S_d> for the last degree processed by the
  /// new, improved or irreducible-only step.
  const TruncatedGroebnerBasis& current_basis() const { return basis_; }

  /// Called after every extension of the truncated basis.
  std::function<void(const TruncatedGroebnerBasis&)> on_extension;

 private:
  struct Candidate;

  void begin_degree(unsigned d, Algorithm algorithm);
  void finish_degree(unsigned d, bool require_target);
  Polynomial raw_product(std::span<const std::size_t> factors) const;
  void prepare(Candidate& c) const;
  /// Feeds candidates through reduction until the degree target is met;
  /// returns true if it was met.
  bool consume(std::vector<Candidate>& candidates, unsigned d, bool stop_at_target);
  bool accept(Candidate& c, Polynomial remainder, unsigned d);
  bool target_met(unsigned d) const;
  bool search_products(unsigned d, bool all_power_products);
  void search_reynolds(unsigned d, bool stop_at_target);

  const GroupRepresentation& group_;
  const PrimarySystem& primaries_;
  SearchOptions options_;
  Ring ring_;
  SecondaryResult result_;
  TruncatedGroebnerBasis basis_;
  bool full_recompute_ = false;
};

/// Runs the given variant to completion.
SecondaryResult compute_secondary(const GroupRepresentation& G, const PrimarySystem& P, Algorithm algorithm,
                                  SearchOptions options = {});

SecondaryResult improved_new_algorithm(const GroupRepresentation& G, const PrimarySystem& P,
                                       SearchOptions options = {});

/// Irreducible secondaries without materializing the reducible ones.
SecondaryResult irreducible_only(const GroupRepresentation& G, const PrimarySystem& P, SearchOptions options = {});

}  // namespace secinv
