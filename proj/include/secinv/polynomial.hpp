#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "secinv/monomial.hpp"
#include "secinv/rational.hpp"

namespace secinv {

/// Ambient ring Q[x_1..x_n] together with the active monomial order.
struct Ring {
  std::size_t n = 0;
  MonomialOrder order = MonomialOrder::kDegRevLex;

  friend bool operator==(const Ring&, const Ring&) = default;
};

struct Term {
  Monomial monomial;
  Rational coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Returned by homogeneous_degree() for the zero polynomial, which is
/// homogeneous of every degree.
inline constexpr unsigned kZeroPolynomialDegree = std::numeric_limits<unsigned>::max();

/// Sparse polynomial with exact rational coefficients.
///
/// Terms are kept strictly descending under the ring's order with no zero
/// coefficients, so the leading term is always terms().front().
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(Ring ring) : ring_(ring) {}

  static Polynomial constant(Ring ring, const Rational& c);
  static Polynomial variable(Ring ring, std::size_t index);
  static Polynomial monomial(Ring ring, const Monomial& m, const Rational& c = 1);
  /// Sorts, merges duplicate monomials and drops zero coefficients.
  static Polynomial from_terms(Ring ring, std::vector<Term> terms);
  /// Takes terms that already satisfy the representation invariants.
  static Polynomial from_sorted_terms(Ring ring, std::vector<Term> terms);

  const Ring& ring() const { return ring_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  /// Leading monomial, coefficient and term. Throw DomainError on zero.
  const Monomial& lm() const;
  const Rational& lc() const;
  const Term& lt() const;

  /// Maximum total degree of a term; DomainError on zero.
  unsigned degree() const;
  /// Common degree of all terms, kZeroPolynomialDegree for zero, nullopt if mixed.
  std::optional<unsigned> homogeneous_degree() const;

  Polynomial monic() const;
  Polynomial scaled(const Rational& c) const;
  Polynomial times(const Monomial& m, const Rational& c) const;
  /// Same polynomial re-sorted under another order.
  Polynomial with_order(MonomialOrder order) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a) { return a.scaled(-1); }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.ring_ == b.ring_ && a.terms_ == b.terms_;
  }

 private:
  Ring ring_;
  std::vector<Term> terms_;
};

struct LeadingParts {
  Monomial lm;
  Rational lc;
  Term lt;
};

/// DomainError on the zero polynomial.
LeadingParts leading_parts(const Polynomial& p);

Polynomial scale(const Polynomial& p, const Rational& c);

/// x1, x2, ..., xn.
std::vector<std::string> default_variable_names(std::size_t n);

/// Renders in the grammar accepted by parse_polynomial ("x1^2*x2-2/3*x3").
std::string to_string(const Polynomial& p, std::span<const std::string> names);
std::string to_string(const Polynomial& p);

/// Throws DimensionError unless both polynomials share a ring.
void require_same_ring(const Polynomial& a, const Polynomial& b);

}  // namespace secinv
