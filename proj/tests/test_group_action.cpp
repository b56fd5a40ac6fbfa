#include <doctest.h>

#include <unordered_set>

#include "oracles.hpp"
#include "secinv/errors.hpp"
#include "secinv/group.hpp"
#include "secinv/parser.hpp"
#include "secinv/problem.hpp"

using namespace secinv;

namespace {

const std::vector<std::string> kXY{"x", "y"};

Matrix swap2() { return Matrix::from_unit_columns(std::vector<std::size_t>{2, 1}); }

Matrix sign1() {
  Matrix m(1);
  m(0, 0) = -1;
  return m;
}

GroupRepresentation example_group(int number) {
  const auto& ex = builtin_example(number);
  return close_group(ex.n, ex.problem.generators);
}

}  // namespace

TEST_CASE("group closure") {
  CHECK(close_group(3, {Matrix::identity(3)}).order() == 1);
  CHECK(close_group(3, {}).order() == 1);
  // Orders of the built-in groups. Example 2's generators close to a group of
  // order 6, consistent with its 72 / 6 = 12 secondary invariants.
  for (const auto& ex : builtin_examples()) {
    auto G = close_group(ex.n, ex.problem.generators);
    CHECK_MESSAGE(G.order() == ex.group_order, "example ", ex.number);
  }
  CHECK(example_group(4).order() == 6);
  CHECK_FALSE(example_group(9).is_monomial());
  CHECK(example_group(5).is_monomial());
}

TEST_CASE("group closure errors") {
  Matrix singular(2);
  singular(0, 0) = 1;
  CHECK_THROWS_AS(close_group(2, {singular}), ValidationError);
  CHECK_THROWS_AS(close_group(3, {swap2()}), DimensionError);
  // Rotation of infinite order.
  Matrix r(2);
  r(0, 0) = 1;
  r(0, 1) = 1;
  r(1, 1) = 1;
  CHECK_THROWS_AS(close_group(2, {r}, 50), ResourceError);
}

TEST_CASE("closure is product- and inverse-closed") {
  for (int number : {2, 3, 4, 5, 6, 9}) {
    auto G = example_group(number);
    REQUIRE(G.order() <= 120);
    std::unordered_set<Matrix, MatrixHash> set(G.elements().begin(), G.elements().end());
    CHECK(G.elements().front().is_identity());
    for (const auto& a : G.elements()) {
      bool has_inverse = false;
      for (const auto& b : G.elements()) {
        auto ab = a * b;
        CHECK(set.count(ab) == 1);
        if (ab.is_identity()) has_inverse = true;
      }
      CHECK(has_inverse);
    }
  }
}

TEST_CASE("action examples") {
  Ring ring{2};
  auto p = parse_polynomial("x^2*y", kXY);
  CHECK(act(Matrix::identity(2), p) == p);
  CHECK(act(swap2(), p) == parse_polynomial("x*y^2", kXY));
  // Column convention: column j is the image of x_j.
  Matrix m(2);
  m(0, 0) = 1;
  m(1, 0) = 2;  // x -> x + 2y
  m(1, 1) = 1;  // y -> y
  CHECK(act(m, parse_polynomial("x", kXY)) == parse_polynomial("x+2*y", kXY));
  CHECK_THROWS_AS(act(Matrix::identity(3), p), DimensionError);
}

TEST_CASE("action against direct substitution, homomorphism and composition") {
  std::mt19937 rng(51);
  std::vector<GroupRepresentation> groups{example_group(3), example_group(9)};
  for (const auto& G : groups) {
    Ring ring{G.n()};
    std::uniform_int_distribution<std::size_t> pick(0, G.order() - 1);
    for (int k = 0; k < 500; ++k) {
      std::size_t a = pick(rng), b = pick(rng);
      const Matrix& g = G.elements()[a];
      const Matrix& h = G.elements()[b];
      auto p = oracle::random_polynomial(rng, ring, 3, 3), q = oracle::random_polynomial(rng, ring, 2, 3);
      auto gp = act(G, a, p);
      CHECK(gp == act(g, p));
      CHECK(gp == oracle::from_sparse(ring, oracle::substitute(g, oracle::to_sparse(p))));
      CHECK(act(g, p * q) == gp * act(g, q));
      CHECK(act(g, act(h, p)) == act(g * h, p));
    }
  }
}

TEST_CASE("Reynolds operator") {
  Ring ring{2};
  auto trivial = close_group(2, {});
  auto swap = close_group(2, {swap2()});
  auto p = parse_polynomial("x^3-2*x*y", kXY);
  CHECK(reynolds(p, trivial) == p);
  CHECK(reynolds(parse_polynomial("x", kXY), swap) == parse_polynomial("1/2*x+1/2*y", kXY));
  auto sign = close_group(1, {sign1()});
  std::vector<std::string> x{"x"};
  CHECK(reynolds(parse_polynomial("x", x), sign).is_zero());
  CHECK(reynolds(parse_polynomial("x^2", x), sign) == parse_polynomial("x^2", x));
}

TEST_CASE("Reynolds idempotence and invariance") {
  std::mt19937 rng(53);
  std::vector<GroupRepresentation> groups{example_group(2), example_group(3), example_group(5), example_group(9)};
  for (const auto& G : groups) {
    Ring ring{G.n()};
    for (int k = 0; k < 125; ++k) {
      auto p = oracle::random_polynomial(rng, ring, G.is_monomial() ? 4 : 2, 3);
      auto r = reynolds(p, G);
      CHECK(reynolds(r, G) == r);
      CHECK(is_invariant(r, G));
    }
  }
}

TEST_CASE("Reynolds images of monomials are orbit averages for permutation groups") {
  for (int number : {2, 3, 4, 5}) {
    auto G = example_group(number);
    const auto& gens = builtin_example(number).problem.generators;
    Ring ring{G.n()};
    for (unsigned d = 1; d <= 3; ++d)
      for (const auto& m : monomials_of_degree(G.n(), d, ring.order))
        CHECK(reynolds(Polynomial::monomial(ring, m), G) ==
              oracle::from_sparse(ring, oracle::orbit_average(gens, m.exponents())));
  }
}

TEST_CASE("invariance") {
  auto swap = close_group(2, {swap2()});
  CHECK(is_invariant(parse_polynomial("x+y", kXY), swap));
  CHECK_FALSE(is_invariant(parse_polynomial("x", kXY), swap));
  const auto& ex = builtin_example(1);
  auto G = close_group(ex.n, ex.problem.generators);
  for (const auto& text : ex.problem.primaries) CHECK(is_invariant(parse_polynomial(text, ex.problem.variables), G));
}

TEST_CASE("streamed B_d") {
  Ring ring{2};
  auto trivial = close_group(2, {});
  auto b = reynolds_degree_basis(trivial, ring, 1);
  REQUIRE(b.size() == 2);
  CHECK(b[0] == parse_polynomial("x", kXY));
  CHECK(b[1] == parse_polynomial("y", kXY));

  auto swap = close_group(2, {swap2()});
  auto s = reynolds_degree_basis(swap, ring, 1);
  REQUIRE(s.size() == 1);
  CHECK(s[0] == parse_polynomial("1/2*x+1/2*y", kXY));

  auto sign = close_group(1, {sign1()});
  CHECK(reynolds_degree_basis(sign, Ring{1}, 1).empty());
}

TEST_CASE("streamed B_d: batching and threads do not change the sequence") {
  for (int number : {3, 9}) {
    auto G = example_group(number);
    Ring ring{G.n()};
    unsigned d = number == 9 ? 2 : 4;
    auto reference = reynolds_degree_basis(G, ring, d, 1000);
    for (std::size_t batch : {1, 7}) {
      for (std::size_t threads : {1, 3}) {
        ReynoldsStream stream(G, ring, d, batch, threads);
        std::vector<Polynomial> got;
        for (auto chunk = stream.next_batch(); !chunk.empty(); chunk = stream.next_batch()) {
          CHECK(chunk.size() <= batch);
          for (auto& r : chunk) got.push_back(r.image);
        }
        CHECK(got == reference);
      }
    }
    for (const auto& p : reference) CHECK(is_invariant(p, G));
  }
}

TEST_CASE("orbit deduplication leaves the span unchanged") {
  const auto& ex = builtin_example(5);
  auto G = close_group(ex.n, ex.problem.generators);
  Ring ring{G.n()};
  for (unsigned d = 1; d <= 3; ++d) {
    auto dedup = reynolds_degree_basis(G, ring, d);
    std::size_t expected = oracle::invariant_dimension(G.n(), ex.problem.generators, d);
    // Distinct orbit sums are linearly independent: one per orbit.
    CHECK(dedup.size() == expected);
  }
}

TEST_CASE("primary validation") {
  const auto& ex = builtin_example(1);
  auto G = close_group(ex.n, ex.problem.generators);
  std::vector<Polynomial> polys;
  for (const auto& t : ex.problem.primaries) polys.push_back(parse_polynomial(t, ex.problem.variables));
  auto P = validate_primaries(polys, G);
  CHECK(P.degrees.size() == 13);
  CHECK(P.groebner.is_complete());

  auto missing = polys;
  missing.pop_back();
  CHECK_THROWS_WITH_AS(validate_primaries(missing, G), doctest::Contains("expected 13"), ValidationError);

  auto not_invariant = polys;
  not_invariant[7] = parse_polynomial("x3*x3", ex.problem.variables);
  CHECK_THROWS_WITH_AS(validate_primaries(not_invariant, G), doctest::Contains("primary invariant 8 is not invariant"),
                       ValidationError);

  auto inhomogeneous = polys;
  inhomogeneous[0] = parse_polynomial("x9+x9^2", ex.problem.variables);
  CHECK_THROWS_WITH_AS(validate_primaries(inhomogeneous, G), doctest::Contains("homogeneous"), ValidationError);

  // x1*x2 replaced by (x1+x2)^2: invariant but the ideal is no longer zero-dimensional.
  auto degenerate = polys;
  degenerate[12] = parse_polynomial("x1^2+2*x1*x2+x2^2", ex.problem.variables);
  CHECK_THROWS_WITH_AS(validate_primaries(degenerate, G), doctest::Contains("zero-dimensional"), ValidationError);
}
