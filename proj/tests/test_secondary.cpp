#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "secinv/errors.hpp"
#include "secinv/parser.hpp"
#include "secinv/problem.hpp"
#include "secinv/secondary.hpp"

using namespace secinv;

namespace {

Problem example(int number) { return build_problem(builtin_example(number).problem); }

std::vector<std::size_t> per_degree(const SecondaryResult& r) {
  std::vector<std::size_t> out;
  for (const auto& t : r.degrees) out.push_back(t.secondaries.size());
  return out;
}

std::vector<Polynomial> degree_polys(const SecondaryResult& r, unsigned d) {
  std::vector<Polynomial> out;
  for (const auto& s : r.degrees[d].secondaries) out.push_back(*s.invariant);
  return out;
}

/// Exponent vectors a with sum a_i * w_i == d.
void weighted(std::span<const unsigned> w, unsigned d, std::size_t i, std::vector<unsigned>& cur,
              std::vector<std::vector<unsigned>>& out) {
  if (i == w.size()) {
    if (d == 0) out.push_back(cur);
    return;
  }
  for (unsigned k = 0; k * w[i] <= d; ++k) {
    cur[i] = k;
    weighted(w, d - k * w[i], i + 1, cur, out);
  }
  cur[i] = 0;
}

}  // namespace

TEST_CASE("trivial group with the variables as primaries") {
  ProblemFile f;
  f.variables = {"x", "y", "z"};
  f.primaries = {"x", "y", "z"};
  auto p = build_problem(f);
  for (auto alg : {Algorithm::kBasic, Algorithm::kRefined, Algorithm::kNew, Algorithm::kImproved,
                   Algorithm::kIrreducibleOnly}) {
    auto r = compute_secondary(p.group, p.primaries, alg);
    CHECK(r.total_secondaries() == 1);
    CHECK(r.total_irreducibles() == 0);
    CHECK(r.degrees[0].secondaries[0].invariant == Polynomial::constant(p.ring, 1));
  }
}

TEST_CASE("swap group with x+y, x*y") {
  ProblemFile f;
  f.variables = {"x", "y"};
  f.generators = {Matrix::from_unit_columns(std::vector<std::size_t>{2, 1})};
  f.primaries = {"x+y", "x*y"};
  auto p = build_problem(f);
  auto r = compute_secondary(p.group, p.primaries, Algorithm::kBasic);
  CHECK(per_degree(r) == std::vector<std::size_t>{1});
  CHECK(r.molien.counts.total == 1);
}

TEST_CASE("expected counts for the small examples") {
  struct Case {
    int number;
    Algorithm alg;
  };
  for (auto [number, alg] : {Case{1, Algorithm::kRefined}, Case{2, Algorithm::kImproved}, Case{2, Algorithm::kBasic},
                             Case{3, Algorithm::kRefined}, Case{3, Algorithm::kNew}}) {
    auto p = example(number);
    auto r = compute_secondary(p.group, p.primaries, alg);
    const auto& e = builtin_example(number).expected;
    INFO("example ", number, " ", to_string(alg));
    CHECK(static_cast<std::int64_t>(r.total_secondaries()) == e.secondaries);
    CHECK(r.max_secondary_degree() == e.max_secondary_degree);
    if (alg != Algorithm::kBasic) {
      CHECK(static_cast<std::int64_t>(r.total_irreducibles()) == e.irreducibles);
      CHECK(r.max_irreducible_degree() == e.max_irreducible_degree);
    }
  }
}

TEST_CASE("variant bookkeeping") {
  auto p = example(3);
  auto r = compute_secondary(p.group, p.primaries, Algorithm::kNew);
  CHECK(r.counters.groebner_recomputations == 0);
  CHECK(r.counters.basis_extensions == r.counters.candidates_accepted);
  CHECK(r.counters.candidates_accepted + 1 == r.total_secondaries());
  auto refined = compute_secondary(p.group, p.primaries, Algorithm::kRefined);
  CHECK(refined.counters.basis_extensions == 0);
  CHECK(refined.counters.groebner_recomputations == refined.counters.candidates_accepted);
  auto basic = compute_secondary(p.group, p.primaries, Algorithm::kBasic);
  CHECK_FALSE(basic.tracks_irreducibles());
  CHECK(basic.total_irreducibles() == 0);
}

TEST_CASE("a degree with m_d = 0 does no work") {
  auto p = example(2);
  SecondarySearch search(p.group, p.primaries);
  REQUIRE(search.result().molien.counts.per_degree[1] == 0);
  search.refined_degree(1);
  CHECK(search.result().counters.candidates_generated == 0);
  CHECK(search.result().counters.groebner_recomputations == 0);
  CHECK(search.result().degrees[1].secondaries.empty());
}

TEST_CASE("degrees must be processed in order with one variant") {
  auto p = example(2);
  SecondarySearch search(p.group, p.primaries);
  CHECK_THROWS_AS(search.improved_degree(2), DomainError);
  search.improved_degree(1);
  search.improved_degree(2);
  CHECK_THROWS_AS(search.new_degree(3), DomainError);
}

TEST_CASE("each acceptance appends exactly one basis element") {
  auto p = example(3);
  SecondarySearch search(p.group, p.primaries);
  unsigned degree = 0;
  std::size_t last = 0;
  std::uint64_t events = 0;
  search.on_extension = [&](const TruncatedGroebnerBasis& g) {
    CHECK(g.size() == last + 1);
    last = g.size();
    ++events;
  };
  for (degree = 1; !search.result().complete(); ++degree) {
    last = p.primaries.groebner.bounded_to(degree).size();
    search.improved_degree(degree);
  }
  CHECK(events == search.result().counters.candidates_accepted);
  CHECK(degree - 1 == 11);
}

TEST_CASE("candidate products: d = 2 with one linear irreducible") {
  SecondaryResult r;
  Ring ring{1};
  auto x = Polynomial::variable(ring, 0);
  r.degrees.resize(2);
  r.degrees[0].secondaries.push_back({0, Provenance::kUnit, {}, std::nullopt, Polynomial::constant(ring, 1), {}});
  r.degrees[1].secondaries.push_back({1, Provenance::kReynoldsImage, {0}, std::nullopt, x, {}});
  r.irreducibles.push_back({1, 0});
  CandidateProducts cp(r, 2);
  auto first = cp.next();
  REQUIRE(first);
  CHECK(first->irreducible == 0);
  CHECK(first->cofactor_degree == 1);
  CHECK_FALSE(cp.next());

  SecondaryResult none;
  none.degrees.resize(1);
  CandidateProducts empty(none, 3);
  CHECK_FALSE(empty.next());
}

TEST_CASE("candidate products: each power product once, least label first") {
  // IS_1 = {a}, IS_2 = {b}; S_1 = {a}, S_2 = {a^2, b}, S_3 = {a^3, a*b}.
  SecondaryResult r;
  r.degrees.resize(4);
  auto add = [&](unsigned d, std::vector<std::size_t> factors, bool irreducible) {
    SecondaryInvariant s;
    s.degree = d;
    s.provenance = irreducible ? Provenance::kReynoldsImage : Provenance::kPowerProduct;
    s.factors = std::move(factors);
    if (irreducible) r.irreducibles.push_back({d, r.degrees[d].secondaries.size()});
    r.degrees[d].secondaries.push_back(std::move(s));
  };
  add(0, {}, false);
  add(1, {0}, true);
  add(2, {0, 0}, false);
  add(2, {1}, true);
  add(3, {0, 0, 0}, false);
  add(3, {0, 1}, false);

  std::multiset<std::vector<std::size_t>> emitted;
  CandidateProducts cp(r, 4);
  std::vector<std::size_t> order;
  while (auto c = cp.next()) {
    auto f = r.degrees[c->cofactor_degree].secondaries[c->cofactor_position].factors;
    f.push_back(c->irreducible);
    std::sort(f.begin(), f.end());
    emitted.insert(f);
    order.push_back(c->irreducible);
  }
  std::multiset<std::vector<std::size_t>> expected{{0, 0, 0, 0}, {0, 0, 1}, {1, 1}};
  CHECK(emitted == expected);
  CHECK(std::is_sorted(order.begin(), order.end()));

  // Brute force: every i*s factorisation, grouped by product.
  std::set<std::vector<std::size_t>> all;
  for (std::size_t i = 0; i < r.irreducibles.size(); ++i) {
    unsigned e = 4 - r.irreducibles[i].degree;
    for (const auto& s : r.degrees[e].secondaries) {
      auto f = s.factors;
      f.push_back(i);
      std::sort(f.begin(), f.end());
      all.insert(f);
    }
  }
  CHECK(std::set<std::vector<std::size_t>>(emitted.begin(), emitted.end()) == all);
  auto pp = power_products(r, 4);
  CHECK(std::set<std::vector<std::size_t>>(pp.begin(), pp.end()) == all);
}

TEST_CASE("cross-variant agreement on Examples 1-3 and random permutation groups") {
  std::vector<ProblemFile> files;
  for (int number : {1, 2, 3}) files.push_back(builtin_example(number).problem);
  std::mt19937 rng(61);
  for (int k = 0; k < 8; ++k) files.push_back(oracle::random_permutation_problem(rng));
  for (const auto& f : files) {
    auto p = build_problem(f);
    auto reference = per_degree(compute_secondary(p.group, p.primaries, Algorithm::kBasic));
    for (auto alg : {Algorithm::kRefined, Algorithm::kNew, Algorithm::kImproved, Algorithm::kIrreducibleOnly})
      CHECK(per_degree(compute_secondary(p.group, p.primaries, alg)) == reference);
  }
}

TEST_CASE("returned secondaries are invariant, homogeneous and independent per degree") {
  for (int number : {1, 2}) {
    auto p = example(number);
    for (auto alg : {Algorithm::kImproved, Algorithm::kBasic}) {
      auto r = compute_secondary(p.group, p.primaries, alg);
      for (const auto& t : r.degrees) {
        auto polys = degree_polys(r, t.degree);
        for (std::size_t k = 0; k < polys.size(); ++k) {
          CHECK(polys[k].homogeneous_degree() == t.degree);
          CHECK(is_invariant(polys[k], p.group));
          if (t.degree == 0) continue;
          std::vector<Polynomial> gens = p.primaries.polys;
          for (std::size_t j = 0; j < polys.size(); ++j)
            if (j != k) gens.push_back(polys[j]);
          CHECK_FALSE(buchberger(p.ring, gens).reduce(polys[k]).is_zero());
        }
      }
    }
  }
}

TEST_CASE("Example 2: the secondaries form a free basis over the primaries") {
  // In every degree d the products s * p^a (deg = d) must be linearly
  // independent and span every Reynolds image, i.e. all degree-d invariants.
  auto p = example(2);
  auto r = compute_secondary(p.group, p.primaries, Algorithm::kImproved);
  const auto& degs = p.primaries.degrees;
  for (unsigned d = 0; d <= r.max_secondary_degree(); ++d) {
    std::vector<Polynomial> products;
    for (const auto& t : r.degrees) {
      if (t.degree > d) continue;
      std::vector<unsigned> cur(degs.size(), 0);
      std::vector<std::vector<unsigned>> exps;
      weighted(degs, d - t.degree, 0, cur, exps);
      for (const auto& a : exps) {
        Polynomial pa = Polynomial::constant(p.ring, 1);
        for (std::size_t i = 0; i < a.size(); ++i)
          for (unsigned k = 0; k < a[i]; ++k) pa = pa * p.primaries.polys[i];
        for (const auto& s : t.secondaries) products.push_back(pa * *s.invariant);
      }
    }
    oracle::Echelon span;
    std::map<oracle::Exps, long> index;
    for (const auto& e : oracle::exponent_vectors(p.ring.n, d)) index.emplace(e, static_cast<long>(index.size()));
    auto row = [&](const Polynomial& q) {
      oracle::Echelon::Row out;
      for (const auto& t : q) out[index.at(t.monomial.exponents())] = t.coeff;
      return out;
    };
    std::size_t independent = 0;
    for (const auto& q : products) independent += span.insert(row(q));
    CHECK(independent == products.size());
    CHECK(r.molien.series[d] == independent);
    for (const auto& b : reynolds_degree_basis(p.group, p.ring, d)) CHECK(span.in_span(row(b)));
  }
}

TEST_CASE("truncated basis at the end of each degree agrees with a full basis") {
  for (int number : {1, 2}) {
    auto p = example(number);
    SecondarySearch search(p.group, p.primaries);
    std::mt19937 rng(71);
    for (unsigned d = 1; !search.result().complete(); ++d) {
      search.improved_degree(d);
      std::vector<Polynomial> gens = p.primaries.polys;
      for (const auto& s : search.result().degrees[d].secondaries) gens.push_back(*s.invariant);
      auto full = buchberger(p.ring, gens);
      const auto& tg = search.current_basis();
      CHECK(tg.valid_up_to() == d);
      for (unsigned e = 1; e <= d; ++e) {
        auto monomials = monomials_of_degree(p.ring.n, e, p.ring.order);
        std::uniform_int_distribution<std::size_t> pick(0, monomials.size() - 1);
        for (int k = 0; k < 60; ++k) {
          Polynomial probe = Polynomial::monomial(p.ring, monomials[pick(rng)]);
          if (k % 3 == 0 && e == d && gens.size() > p.primaries.polys.size())
            probe = probe + gens.back().scaled(k);
          CHECK(member_up_to_degree(probe, tg) == full.reduce(probe).is_zero());
        }
      }
    }
  }
}

TEST_CASE("Example 2: every extension agrees with a fresh truncated basis") {
  auto p = example(2);
  SecondarySearch search(p.group, p.primaries);
  unsigned degree = 0;
  int checked = 0;
  search.on_extension = [&](const TruncatedGroebnerBasis& g) {
    std::vector<Polynomial> gens = p.primaries.polys;
    for (const auto& s : search.result().degrees[degree].secondaries) gens.push_back(*s.invariant);
    auto fresh = truncated_gb(p.ring, gens, degree);
    for (const auto& m : monomials_of_degree(p.ring.n, degree, p.ring.order)) {
      auto probe = Polynomial::monomial(p.ring, m);
      CHECK(member_up_to_degree(probe, g) == member_up_to_degree(probe, fresh));
    }
    ++checked;
  };
  for (degree = 1; !search.result().complete(); ++degree) search.improved_degree(degree);
  CHECK(checked == 11);
}

TEST_CASE("irreducible-only keeps only normal forms and agrees with improved") {
  for (int number : {1, 2, 3}) {
    auto p = example(number);
    auto full = improved_new_algorithm(p.group, p.primaries);
    auto irr = irreducible_only(p.group, p.primaries);
    CHECK(full.irreducible_polynomials() == irr.irreducible_polynomials());
    for (const auto& t : irr.degrees)
      for (const auto& s : t.secondaries) {
        REQUIRE(s.normal_form);
        if (s.provenance == Provenance::kPowerProduct) CHECK_FALSE(s.invariant);
      }
    // Normal forms of the reducible secondaries match the full run.
    for (std::size_t d = 0; d < full.degrees.size(); ++d)
      for (std::size_t k = 0; k < full.degrees[d].secondaries.size(); ++k)
        CHECK(*full.degrees[d].secondaries[k].normal_form == *irr.degrees[d].secondaries[k].normal_form);
  }
}

TEST_CASE("normal forms are multiplicative modulo the primaries") {
  std::mt19937 rng(81);
  for (int number : {2, 3}) {
    auto p = example(number);
    const auto& gp = p.primaries.groebner;
    for (int k = 0; k < 40; ++k) {
      auto a = reynolds(oracle::random_polynomial(rng, p.ring, 4, 3), p.group);
      auto b = reynolds(oracle::random_polynomial(rng, p.ring, 4, 3), p.group);
      CHECK(gp.reduce(gp.reduce(a) * gp.reduce(b)) == gp.reduce(a * b));
    }
  }
}

TEST_CASE("threads and batch size do not change the result") {
  auto p = example(3);
  auto reference = improved_new_algorithm(p.group, p.primaries);
  for (auto alg : {Algorithm::kImproved, Algorithm::kNew, Algorithm::kRefined}) {
    auto seq = compute_secondary(p.group, p.primaries, alg);
    for (std::size_t threads : {2, 4}) {
      SearchOptions o;
      o.threads = threads;
      o.batch_size = 3;
      auto par = compute_secondary(p.group, p.primaries, alg, o);
      REQUIRE(par.degrees.size() == seq.degrees.size());
      for (std::size_t d = 0; d < seq.degrees.size(); ++d)
        CHECK(degree_polys(par, static_cast<unsigned>(d)) == degree_polys(seq, static_cast<unsigned>(d)));
      CHECK(par.counters.candidates_generated == seq.counters.candidates_generated);
    }
  }
  (void)reference;
}

TEST_CASE("algorithm names") {
  for (auto alg : {Algorithm::kBasic, Algorithm::kRefined, Algorithm::kNew, Algorithm::kImproved,
                   Algorithm::kIrreducibleOnly})
    CHECK(parse_algorithm(to_string(alg)) == alg);
  CHECK_THROWS_AS(parse_algorithm("fastest"), ParseError);
}
