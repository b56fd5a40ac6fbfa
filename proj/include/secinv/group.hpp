#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "secinv/groebner.hpp"
#include "secinv/matrix.hpp"
#include "secinv/polynomial.hpp"

namespace secinv {

/// Linear action of a matrix on Q[x_1..x_n]: x_j -> sum_i M(i,j) x_i, i.e.
/// column j of M holds the image of x_j. With this convention
/// act(g, act(h, p)) == act(g*h, p).
Polynomial act(const Matrix& g, const Polynomial& p);

/// Finite matrix group given by generators, closed at construction.
class GroupRepresentation {
 public:
  static constexpr std::size_t kDefaultClosureCap = 1'000'000;

  GroupRepresentation() = default;

  std::size_t n() const { return n_; }
  const std::vector<Matrix>& generators() const { return generators_; }
  /// Identity first, then breadth-first over left multiplication by generators.
  const std::vector<Matrix>& elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }
  /// True if every element maps each variable to a scalar multiple of a variable.
  bool is_monomial() const { return monomial_; }

  /// Image monomial and scalar of act(elements()[index], m); requires is_monomial().
  Monomial image_monomial(std::size_t index, const Monomial& m, Rational* scale = nullptr) const;

 private:
  friend GroupRepresentation close_group(std::size_t, std::vector<Matrix>, std::size_t);

  struct MonomialAction {
    std::vector<std::uint8_t> target;
    std::vector<Rational> scale;
    bool unit_scale = true;
  };

  std::size_t n_ = 0;
  std::vector<Matrix> generators_;
  std::vector<Matrix> elements_;
  bool monomial_ = false;
  std::vector<MonomialAction> actions_;
};

/// Smallest multiplicatively closed set containing the identity and the
/// generators. Throws DimensionError on non-square or mismatched generators,
/// ValidationError on a singular generator and ResourceError once more than
/// `cap` elements have been produced.
GroupRepresentation close_group(std::size_t n, std::vector<Matrix> generators,
                                std::size_t cap = GroupRepresentation::kDefaultClosureCap);

/// Act by element `index` of G; uses the monomial fast path when available.
Polynomial act(const GroupRepresentation& G, std::size_t index, const Polynomial& p);

/// Reynolds operator (1/|G|) sum_g g.p.
Polynomial reynolds(const Polynomial& p, const GroupRepresentation& G);

/// True iff act(g, p) == p for every generator g.
bool is_invariant(const Polynomial& p, const GroupRepresentation& G);

struct ReynoldsImage {
  Monomial source;
  Polynomial image;
};

/// Lazy enumeration of B_d: Reynolds images of the degree-d monomials, taken
/// in descending monomial order and delivered in batches. Zero images are
/// skipped. For monomial groups only the largest monomial of each orbit is
/// expanded, since orbit-mates have proportional images.
class ReynoldsStream {
 public:
  ReynoldsStream(const GroupRepresentation& G, Ring ring, unsigned degree,
                 std::size_t batch_size = 1000, std::size_t threads = 1);

  /// Up to batch_size nonzero images; empty once the stream is exhausted.
  std::vector<ReynoldsImage> next_batch();
  bool exhausted() const { return next_ >= monomials_.size(); }
  std::size_t monomials_examined() const { return next_; }

 private:
  bool is_orbit_leader(const Monomial& m) const;

  const GroupRepresentation* group_;
  Ring ring_;
  std::size_t batch_size_;
  std::size_t threads_;
  std::vector<Monomial> monomials_;
  std::size_t next_ = 0;
};

/// Collects the whole stream; convenient for small degrees and tests.
std::vector<Polynomial> reynolds_degree_basis(const GroupRepresentation& G, Ring ring, unsigned degree,
                                              std::size_t batch_size = 1000);

/// n homogeneous invariants generating a zero-dimensional ideal, together
/// with the reduced Groebner basis of that ideal.
struct PrimarySystem {
  std::vector<Polynomial> polys;
  std::vector<unsigned> degrees;
  TruncatedGroebnerBasis groebner;

  const Ring& ring() const { return groebner.ring(); }
};

/// Checks count, homogeneity, invariance and zero-dimensionality, in that
/// order, throwing ValidationError naming the first offending polynomial or
/// variable.
PrimarySystem validate_primaries(std::vector<Polynomial> polys, const GroupRepresentation& G);

}  // namespace secinv
