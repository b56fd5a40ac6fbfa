#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "secinv/group.hpp"
#include "secinv/rational.hpp"

namespace secinv {

/// Dense univariate polynomial over Q, coefficient of t^k at index k.
using SeriesPolynomial = std::vector<Rational>;

/// det(I - t*M) by fraction-free elimination over Q[t].
SeriesPolynomial det_one_minus_tm(const Matrix& m);

/// Coefficients a_0..a_D of the Molien series (1/|G|) sum_g 1/det(I - t*g);
/// a_d is the dimension of the degree-d invariants. Throws InternalError if a
/// coefficient is not an integer.
std::vector<Integer> molien_series(const GroupRepresentation& G, unsigned max_degree);

struct SecondaryCounts {
  /// m_0..m_D: number of secondary invariants per degree.
  std::vector<std::int64_t> per_degree;
  /// prod(deg p_i) / |G|.
  std::int64_t total = 0;
};

/// Degree cap sum(deg p_i - 1); no secondary invariant lives above it.
unsigned secondary_degree_bound(std::span<const unsigned> primary_degrees);

/// Multiplies the series by prod(1 - t^{deg p_i}) up to degree D.
/// Throws ValidationError on a negative count, a non-integral total, or (when
/// D reaches the degree cap) counts that do not add up to the total.
SecondaryCounts secondary_counts(std::span<const Integer> series, std::span<const unsigned> primary_degrees,
                                 unsigned max_degree, std::size_t group_order);

struct MolienProfile {
  std::vector<Integer> series;
  SecondaryCounts counts;
  unsigned degree_bound = 0;
};

/// Series and counts up to the degree cap of the given primary degrees.
MolienProfile molien_profile(const GroupRepresentation& G, std::span<const unsigned> primary_degrees);

}  // namespace secinv
