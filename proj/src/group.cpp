#include "secinv/group.hpp"

#include <algorithm>
#include <deque>
#include <string>
#include <thread>
#include <unordered_map>

#include "secinv/errors.hpp"

namespace secinv {
namespace {

Polynomial accumulate(Ring ring, std::unordered_map<Monomial, Rational, MonomialHash>& acc) {
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) terms.push_back({m, std::move(c)});
  return Polynomial::from_terms(ring, std::move(terms));
}

}  // namespace

Polynomial act(const Matrix& g, const Polynomial& p) {
  const Ring ring = p.ring();
  if (g.size() != ring.n) throw DimensionError("matrix size does not match the variable count");
  if (p.is_zero()) return p;

  // Image of each variable as a linear form, plus cached powers.
  std::vector<std::vector<Polynomial>> powers(ring.n);
  for (std::size_t j = 0; j < ring.n; ++j) {
    std::vector<Term> terms;
    for (std::size_t i = 0; i < ring.n; ++i)
      if (g(i, j) != 0) terms.push_back({Monomial::variable(ring.n, i), g(i, j)});
    powers[j].push_back(Polynomial::constant(ring, 1));
    powers[j].push_back(Polynomial::from_terms(ring, std::move(terms)));
  }
  auto power = [&](std::size_t j, unsigned e) -> const Polynomial& {
    while (powers[j].size() <= e) powers[j].push_back(powers[j].back() * powers[j][1]);
    return powers[j][e];
  };

  std::unordered_map<Monomial, Rational, MonomialHash> acc;
  for (const auto& [m, c] : p) {
    Polynomial image = Polynomial::constant(ring, c);
    for (std::size_t j = 0; j < ring.n; ++j)
      if (m[j] != 0) image = image * power(j, m[j]);
    for (const auto& t : image) acc[t.monomial] += t.coeff;
  }
  return accumulate(ring, acc);
}

Monomial GroupRepresentation::image_monomial(std::size_t index, const Monomial& m, Rational* scale) const {
  const MonomialAction& a = actions_[index];
  std::vector<unsigned> exps(n_, 0);
  for (std::size_t j = 0; j < n_; ++j) exps[a.target[j]] += m[j];
  if (scale != nullptr) {
    *scale = 1;
    if (!a.unit_scale)
      for (std::size_t j = 0; j < n_; ++j)
        for (unsigned e = 0; e < m[j]; ++e) *scale *= a.scale[j];
  }
  return Monomial(std::span<const unsigned>(exps));
}

GroupRepresentation close_group(std::size_t n, std::vector<Matrix> generators, std::size_t cap) {
  if (n > kMaxVariables) throw DimensionError("at most " + std::to_string(kMaxVariables) + " variables supported");
  for (std::size_t k = 0; k < generators.size(); ++k) {
    if (generators[k].size() != n)
      throw DimensionError("generator " + std::to_string(k + 1) + " is " + std::to_string(generators[k].size()) +
                           "x" + std::to_string(generators[k].size()) + ", expected " + std::to_string(n) +
                           "x" + std::to_string(n));
    if (generators[k].determinant() == 0)
      throw ValidationError("generator " + std::to_string(k + 1) + " is singular");
  }

  GroupRepresentation G;
  G.n_ = n;
  G.generators_ = std::move(generators);
  std::unordered_map<Matrix, std::size_t, MatrixHash> seen;
  G.elements_.push_back(Matrix::identity(n));
  seen.emplace(G.elements_.front(), 0);
  for (std::size_t head = 0; head < G.elements_.size(); ++head) {
    for (const auto& g : G.generators_) {
      Matrix h = g * G.elements_[head];
      if (seen.count(h)) continue;
      if (G.elements_.size() >= cap)
        throw ResourceError("group too large: closure exceeds " + std::to_string(cap) + " elements");
      seen.emplace(h, G.elements_.size());
      G.elements_.push_back(std::move(h));
    }
  }

  G.monomial_ = true;
  for (const auto& e : G.elements_) {
    GroupRepresentation::MonomialAction a;
    a.target.resize(n);
    a.scale.resize(n);
    for (std::size_t j = 0; j < n && G.monomial_; ++j) {
      std::size_t nonzero = 0;
      for (std::size_t i = 0; i < n; ++i)
        if (e(i, j) != 0) {
          ++nonzero;
          a.target[j] = static_cast<std::uint8_t>(i);
          a.scale[j] = e(i, j);
        }
      if (nonzero != 1) G.monomial_ = false;
      if (a.scale[j] != 1) a.unit_scale = false;
    }
    if (!G.monomial_) break;
    G.actions_.push_back(std::move(a));
  }
  if (!G.monomial_) G.actions_.clear();
  return G;
}

Polynomial act(const GroupRepresentation& G, std::size_t index, const Polynomial& p) {
  if (!G.is_monomial()) return act(G.elements()[index], p);
  if (p.ring().n != G.n()) throw DimensionError("group size does not match the variable count");
  std::vector<Term> terms;
  terms.reserve(p.size());
  Rational scale;
  for (const auto& [m, c] : p) {
    Monomial image = G.image_monomial(index, m, &scale);
    terms.push_back({image, c * scale});
  }
  return Polynomial::from_terms(p.ring(), std::move(terms));
}

Polynomial reynolds(const Polynomial& p, const GroupRepresentation& G) {
  if (p.ring().n != G.n()) throw DimensionError("group size does not match the variable count");
  std::unordered_map<Monomial, Rational, MonomialHash> acc;
  if (G.is_monomial()) {
    Rational scale;
    for (const auto& [m, c] : p)
      for (std::size_t k = 0; k < G.order(); ++k) {
        Monomial image = G.image_monomial(k, m, &scale);
        acc[image] += c * scale;
      }
  } else {
    for (std::size_t k = 0; k < G.order(); ++k)
      for (const auto& t : act(G.elements()[k], p)) acc[t.monomial] += t.coeff;
  }
  return accumulate(p.ring(), acc).scaled(Rational(1, G.order()));
}

bool is_invariant(const Polynomial& p, const GroupRepresentation& G) {
  if (p.ring().n != G.n()) throw DimensionError("group size does not match the variable count");
  for (const auto& g : G.generators())
    if (act(g, p) != p) return false;
  return true;
}

ReynoldsStream::ReynoldsStream(const GroupRepresentation& G, Ring ring, unsigned degree, std::size_t batch_size,
                               std::size_t threads)
    : group_(&G),
      ring_(ring),
      batch_size_(std::max<std::size_t>(batch_size, 1)),
      threads_(std::max<std::size_t>(threads, 1)),
      monomials_(monomials_of_degree(ring.n, degree, ring.order)) {
  if (ring.n != G.n()) throw DimensionError("group size does not match the variable count");
}

bool ReynoldsStream::is_orbit_leader(const Monomial& m) const {
  for (std::size_t k = 1; k < group_->order(); ++k)
    if (compare_unchecked(group_->image_monomial(k, m), m, ring_.order) == std::strong_ordering::greater)
      return false;
  return true;
}

std::vector<ReynoldsImage> ReynoldsStream::next_batch() {
  std::vector<ReynoldsImage> batch;
  while (batch.size() < batch_size_ && next_ < monomials_.size()) {
    // Pick the next slice of sources, then expand them (possibly in parallel).
    std::vector<Monomial> sources;
    while (sources.size() < batch_size_ - batch.size() && next_ < monomials_.size()) {
      const Monomial& m = monomials_[next_++];
      if (!group_->is_monomial() || is_orbit_leader(m)) sources.push_back(m);
    }
    std::vector<Polynomial> images(sources.size());
    auto expand = [&](std::size_t begin, std::size_t step) {
      for (std::size_t k = begin; k < sources.size(); k += step)
        images[k] = reynolds(Polynomial::monomial(ring_, sources[k]), *group_);
    };
    if (threads_ > 1 && sources.size() > 1) {
      std::vector<std::jthread> workers;
      for (std::size_t t = 0; t < threads_; ++t) workers.emplace_back(expand, t, threads_);
    } else {
      expand(0, 1);
    }
    for (std::size_t k = 0; k < sources.size(); ++k)
      if (!images[k].is_zero()) batch.push_back({sources[k], std::move(images[k])});
  }
  return batch;
}

std::vector<Polynomial> reynolds_degree_basis(const GroupRepresentation& G, Ring ring, unsigned degree,
                                              std::size_t batch_size) {
  ReynoldsStream stream(G, ring, degree, batch_size);
  std::vector<Polynomial> out;
  for (auto batch = stream.next_batch(); !batch.empty(); batch = stream.next_batch())
    for (auto& r : batch) out.push_back(std::move(r.image));
  return out;
}

PrimarySystem validate_primaries(std::vector<Polynomial> polys, const GroupRepresentation& G) {
  const std::size_t n = G.n();
  if (polys.size() != n)
    throw ValidationError("expected " + std::to_string(n) + " primary invariants, got " +
                          std::to_string(polys.size()));
  Ring ring = polys.empty() ? Ring{0} : polys.front().ring();
  PrimarySystem P;
  for (std::size_t i = 0; i < polys.size(); ++i) {
    const Polynomial& p = polys[i];
    if (p.ring().n != n) throw DimensionError("primary invariant " + std::to_string(i + 1) + " has wrong variable count");
    if (p.ring() != ring) throw DimensionError("primary invariants use different monomial orders");
    auto deg = p.homogeneous_degree();
    if (p.is_zero() || !deg || *deg == 0)
      throw ValidationError("primary invariant " + std::to_string(i + 1) +
                            " is not homogeneous of positive degree: " + to_string(p));
    P.degrees.push_back(*deg);
  }
  for (std::size_t i = 0; i < polys.size(); ++i)
    if (!is_invariant(polys[i], G))
      throw ValidationError("primary invariant " + std::to_string(i + 1) + " is not invariant: " +
                            to_string(polys[i]));
  auto basis = complete_intersection_basis(ring, polys);
  if (!basis) {
    // Name a variable without a pure power; the full basis is only needed here.
    auto full = buchberger(ring, polys);
    for (std::size_t k = 0; k < n; ++k) {
      bool found = false;
      for (const auto& g : full.elements()) found = found || (g.lm()[k] > 0 && g.lm().degree() == g.lm()[k]);
      if (!found)
        throw ValidationError("primary invariants do not define a zero-dimensional ideal: no leading monomial is a "
                              "pure power of x" + std::to_string(k + 1));
    }
    throw InternalError("pure powers in the full basis but not in the truncated one");
  }
  P.groebner = std::move(*basis);
  P.polys = std::move(polys);
  return P;
}

}  // namespace secinv
