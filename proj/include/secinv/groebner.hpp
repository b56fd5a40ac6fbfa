#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "secinv/polynomial.hpp"

namespace secinv {

/// S(p,q) = (L/lt(p))*p - (L/lt(q))*q with L = lcm(lm(p), lm(q)).
/// Throws DomainError if either input is zero.
Polynomial s_polynomial(const Polynomial& p, const Polynomial& q);

/// Full normal form rem(p; basis).
///
/// Terms are processed from the largest monomial down; each reducible
/// monomial is divided by the first basis element (in sequence order) whose
/// leading monomial divides it. The result has no monomial divisible by any
/// basis leading monomial.
Polynomial reduce(const Polynomial& p, std::span<const Polynomial> basis);

/// Ordered set of monic homogeneous polynomials that is a Groebner basis up
/// to degree valid_up_to(): every S-pair of degree <= valid_up_to() reduces
/// to zero modulo the elements. kUnbounded marks a complete Groebner basis.
class TruncatedGroebnerBasis {
 public:
  static constexpr unsigned kUnbounded = std::numeric_limits<unsigned>::max();

  TruncatedGroebnerBasis() = default;
  explicit TruncatedGroebnerBasis(Ring ring, unsigned valid_up_to = kUnbounded)
      : ring_(ring), valid_up_to_(valid_up_to) {}

  const Ring& ring() const { return ring_; }
  std::span<const Polynomial> elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  unsigned valid_up_to() const { return valid_up_to_; }
  bool is_complete() const { return valid_up_to_ == kUnbounded; }

  /// The same elements with the validity bound lowered to d. Lowering is
  /// always sound; raising needs raise_degree().
  TruncatedGroebnerBasis bounded_to(unsigned d) const&;
  TruncatedGroebnerBasis bounded_to(unsigned d) &&;

  Polynomial reduce(const Polynomial& p) const { return secinv::reduce(p, elements_); }

 private:
  friend TruncatedGroebnerBasis buchberger(Ring, std::span<const Polynomial>, bool);
  friend TruncatedGroebnerBasis truncated_gb(Ring, std::span<const Polynomial>, unsigned);
  friend TruncatedGroebnerBasis raise_degree(TruncatedGroebnerBasis, unsigned);
  friend TruncatedGroebnerBasis extend_with_remainder(TruncatedGroebnerBasis, Polynomial);
  friend std::optional<TruncatedGroebnerBasis> complete_intersection_basis(Ring, std::span<const Polynomial>);

  Ring ring_;
  std::vector<Polynomial> elements_;
  unsigned valid_up_to_ = kUnbounded;
};

/// Reduced Groebner basis of <gens> (monic, autoreduced, sorted by ascending
/// leading monomial). Zero generators are dropped. The product criterion is
/// an optimization and can be switched off.
TruncatedGroebnerBasis buchberger(Ring ring, std::span<const Polynomial> gens,
                                  bool use_criteria = true);

/// Homogeneous Groebner basis of <gens> up to degree d, built degree by
/// degree. Generators of degree > d cannot matter below d and are ignored.
/// Throws DomainError on a non-homogeneous generator.
TruncatedGroebnerBasis truncated_gb(Ring ring, std::span<const Polynomial> gens, unsigned d);

/// Raises the validity bound of g to d by treating the S-pairs whose degree
/// lies in (g.valid_up_to(), d]. No-op if d <= g.valid_up_to().
TruncatedGroebnerBasis raise_degree(TruncatedGroebnerBasis g, unsigned d);

/// Appends monic rem(p; g). Requires p homogeneous of degree g.valid_up_to().
/// Throws DegreeError on a degree mismatch and AlreadyMemberError if p
/// reduces to zero. No S-polynomial is recomputed.
TruncatedGroebnerBasis extend_truncated(TruncatedGroebnerBasis g, const Polynomial& p);

/// As extend_truncated, for a caller that already holds r = rem(p; g).
/// Verifies that r is nonzero, of degree g.valid_up_to(), and that lm(r) is
/// not divisible by any element's leading monomial.
TruncatedGroebnerBasis extend_with_remainder(TruncatedGroebnerBasis g, Polynomial r);

/// Reduced Groebner basis of n homogeneous polynomials in n variables if they
/// generate a zero-dimensional ideal, std::nullopt otherwise. Then every
/// monomial of degree sum(deg - 1) + 1 lies in the ideal, so pairs above that
/// degree need not be treated.
std::optional<TruncatedGroebnerBasis> complete_intersection_basis(Ring ring, std::span<const Polynomial> gens);

/// Ideal membership for homogeneous p with deg p <= g.valid_up_to().
/// Throws DegreeError beyond the validity bound.
bool member_up_to_degree(const Polynomial& p, const TruncatedGroebnerBasis& g);

/// Exhaustive check of the defining property: each S-pair of degree at most
/// valid_up_to() reduces to zero. Quadratic in the basis size.
bool satisfies_truncated_invariant(const TruncatedGroebnerBasis& g);

}  // namespace secinv
