#include <doctest.h>

#include <numeric>

#include "oracles.hpp"
#include "secinv/errors.hpp"
#include "secinv/molien.hpp"
#include "secinv/problem.hpp"

using namespace secinv;

namespace {

std::vector<long> as_longs(const std::vector<Integer>& v) {
  std::vector<long> out;
  for (const auto& z : v) out.push_back(z.get_si());
  return out;
}

}  // namespace

TEST_CASE("series of small groups") {
  auto trivial = close_group(3, {});
  auto a = as_longs(molien_series(trivial, 6));
  for (unsigned d = 0; d <= 6; ++d) CHECK(a[d] == static_cast<long>(oracle::binomial(3 + d - 1, d)));

  auto swap = close_group(2, {Matrix::from_unit_columns(std::vector<std::size_t>{2, 1})});
  CHECK(as_longs(molien_series(swap, 7)) == std::vector<long>{1, 1, 2, 2, 3, 3, 4, 4});

  Matrix minus(1);
  minus(0, 0) = -1;
  auto sign = close_group(1, {minus});
  CHECK(as_longs(molien_series(sign, 6)) == std::vector<long>{1, 0, 1, 0, 1, 0, 1});
}

TEST_CASE("det(I - tM)") {
  auto swap = Matrix::from_unit_columns(std::vector<std::size_t>{2, 1});
  // det [[1, -t], [-t, 1]] = 1 - t^2
  auto d = det_one_minus_tm(swap);
  REQUIRE(d.size() >= 3);
  CHECK(d[0] == 1);
  CHECK(d[1] == 0);
  CHECK(d[2] == -1);
  auto id = det_one_minus_tm(Matrix::identity(3));
  CHECK(id == SeriesPolynomial{1, -3, 3, -1});
}

TEST_CASE("secondary counts") {
  SUBCASE("Example 1") {
    const auto& ex = builtin_example(1);
    auto G = close_group(ex.n, ex.problem.generators);
    std::vector<unsigned> degrees{1, 1, 1, 1, 1, 1, 1, 2, 2, 2, 2, 2, 2};
    unsigned bound = secondary_degree_bound(degrees);
    CHECK(bound == 6);
    auto counts = secondary_counts(molien_series(G, bound), degrees, bound, G.order());
    CHECK(counts.total == 32);
    CHECK(std::accumulate(counts.per_degree.begin(), counts.per_degree.end(), std::int64_t{0}) == 32);
  }
  SUBCASE("Example 6") {
    const auto& ex = builtin_example(6);
    auto G = close_group(ex.n, ex.problem.generators);
    std::vector<unsigned> degrees{1, 2, 3, 4, 5, 6, 7};
    unsigned bound = secondary_degree_bound(degrees);
    auto counts = secondary_counts(molien_series(G, bound), degrees, bound, G.order());
    CHECK(counts.total == 360);
    CHECK(std::accumulate(counts.per_degree.begin(), counts.per_degree.end(), std::int64_t{0}) == 360);
  }
  SUBCASE("trivial group with the variables as primaries") {
    auto G = close_group(4, {});
    std::vector<unsigned> degrees(4, 1);
    auto counts = secondary_counts(molien_series(G, 5), degrees, 5, 1);
    CHECK(counts.total == 1);
    CHECK(counts.per_degree == std::vector<std::int64_t>{1, 0, 0, 0, 0, 0});
  }
  SUBCASE("bad primaries show up as negative counts") {
    auto G = close_group(2, {});
    std::vector<unsigned> ok{2, 2};
    CHECK(secondary_counts(molien_series(G, 2), ok, 2, 1).total == 4);
    // The swap group has a single invariant in degree 1, so degrees (1, 1)
    // push m_1 below zero.
    auto swap = close_group(2, {Matrix::from_unit_columns(std::vector<std::size_t>{2, 1})});
    std::vector<unsigned> ones{1, 1};
    CHECK_THROWS_AS(secondary_counts(molien_series(swap, 1), ones, 1, 2), ValidationError);
  }
}

TEST_CASE("totals of all built-in examples") {
  for (const auto& ex : builtin_examples()) {
    if (!ex.has_primaries) continue;
    auto problem = build_problem(ex.problem);
    auto profile = molien_profile(problem.group, problem.primaries.degrees);
    CHECK_MESSAGE(profile.counts.total == ex.expected.secondaries, "example ", ex.number);
    std::int64_t sum = std::accumulate(profile.counts.per_degree.begin(), profile.counts.per_degree.end(),
                                       std::int64_t{0});
    CHECK(sum == ex.expected.secondaries);
    // Nothing above the cap, and the last nonzero count is the expected maximal degree.
    unsigned top = 0;
    for (unsigned d = 0; d < profile.counts.per_degree.size(); ++d)
      if (profile.counts.per_degree[d] > 0) top = d;
    if (ex.number == 8) {
      // The generators are odd permutations, so G is not in SL(n) and the
      // coefficient at the cap sum(deg p_i - 1) = 22 vanishes. The listed
      // maximal degree 22 cannot be attained.
      CHECK(profile.degree_bound == 22);
      CHECK(profile.counts.per_degree[22] == 0);
      CHECK(top == 21);
    } else {
      CHECK(top == ex.expected.max_secondary_degree);
    }
    CHECK(profile.counts.per_degree.size() == profile.degree_bound + 1);
  }
}

TEST_CASE("series matches the linear-algebra invariant dimension") {
  for (int number : {2, 3, 4, 5, 6}) {
    const auto& ex = builtin_example(number);
    auto G = close_group(ex.n, ex.problem.generators);
    auto series = molien_series(G, 5);
    for (unsigned d = 0; d <= 5; ++d)
      CHECK_MESSAGE(series[d] == oracle::invariant_dimension(ex.n, ex.problem.generators, d), "example ", number,
                    " degree ", d);
  }
  SUBCASE("non-permutation representation") {
    const auto& ex = builtin_example(9);
    auto G = close_group(ex.n, ex.problem.generators);
    auto series = molien_series(G, 3);
    for (unsigned d = 0; d <= 3; ++d) CHECK(series[d] == oracle::invariant_dimension(ex.n, ex.problem.generators, d));
  }
}
