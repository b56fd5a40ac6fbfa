#include "secinv/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <tuple>

#include "secinv/errors.hpp"

namespace secinv {

Polynomial s_polynomial(const Polynomial& p, const Polynomial& q) {
  require_same_ring(p, q);
  if (p.is_zero() || q.is_zero()) throw DomainError("S-polynomial of the zero polynomial");
  Monomial l = lcm(p.lm(), q.lm());
  Polynomial a = p.times(p.lm().quotient_of(l), Rational(1) / p.lc());
  Polynomial b = q.times(q.lm().quotient_of(l), Rational(1) / q.lc());
  return a - b;
}

Polynomial reduce(const Polynomial& p, std::span<const Polynomial> basis) {
  for (const auto& g : basis) {
    require_same_ring(p, g);
    if (g.is_zero()) throw DomainError("zero polynomial in reduction basis");
  }
  const Ring ring = p.ring();
  if (p.is_zero() || basis.empty()) return p;

  // Pending terms, largest first.
  std::map<Monomial, Rational, MonomialGreater> acc(MonomialGreater{ring.order});
  for (const auto& t : p) acc.emplace_hint(acc.end(), t.monomial, t.coeff);

  std::vector<Term> rest;
  Rational factor;
  Rational prod;
  while (!acc.empty()) {
    auto it = acc.begin();
    const Polynomial* divisor = nullptr;
    for (const auto& g : basis)
      if (g.lm().divides(it->first)) {
        divisor = &g;
        break;
      }
    if (divisor == nullptr) {
      rest.push_back({it->first, std::move(it->second)});
      acc.erase(it);
      continue;
    }
    Monomial q = divisor->lm().quotient_of(it->first);
    if (divisor->lc() == 1)
      factor = it->second;
    else
      factor = it->second / divisor->lc();
    acc.erase(it);
    const auto& terms = divisor->terms();
    for (std::size_t k = 1; k < terms.size(); ++k) {
      Monomial m = terms[k].monomial * q;
      mpq_mul(prod.get_mpq_t(), factor.get_mpq_t(), terms[k].coeff.get_mpq_t());
      auto [pos, inserted] = acc.try_emplace(m);
      if (inserted)
        pos->second = -prod;
      else {
        pos->second -= prod;
        if (pos->second == 0) acc.erase(pos);
      }
    }
  }
#ifdef SECINV_CHECKED
  for (const auto& t : rest)
    for (const auto& g : basis)
      if (g.lm().divides(t.monomial)) throw InternalError("remainder term divisible by a leading monomial");
#endif
  return Polynomial::from_sorted_terms(ring, std::move(rest));
}

TruncatedGroebnerBasis TruncatedGroebnerBasis::bounded_to(unsigned d) const& {
  TruncatedGroebnerBasis g = *this;
  g.valid_up_to_ = std::min(valid_up_to_, d);
  return g;
}

TruncatedGroebnerBasis TruncatedGroebnerBasis::bounded_to(unsigned d) && {
  valid_up_to_ = std::min(valid_up_to_, d);
  return std::move(*this);
}

namespace {

struct Pair {
  unsigned degree;
  std::size_t j;
  std::size_t i;

  friend auto operator<=>(const Pair&, const Pair&) = default;
};

using IntegralTerms = std::vector<std::pair<Monomial, Integer>>;

IntegralTerms integral(const Polynomial& p) {
  Integer den = 1;
  for (const auto& t : p) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coeff.get_den_mpz_t());
  IntegralTerms out;
  out.reserve(p.size());
  for (const auto& t : p) out.emplace_back(t.monomial, t.coeff.get_num() * (den / t.coeff.get_den()));
  return out;
}

/// Nonzero multiple of rem(p; basis), computed over the integers. Rational
/// arithmetic spends most of its time in gcds during Groebner construction.
Polynomial reduce_fraction_free(const Polynomial& p, std::span<const Polynomial> basis,
                                std::span<const IntegralTerms> integral_basis) {
  const Ring ring = p.ring();
  if (p.is_zero()) return p;
  std::map<Monomial, Integer, MonomialGreater> acc(MonomialGreater{ring.order});
  for (auto& [m, c] : integral(p)) acc.emplace_hint(acc.end(), m, std::move(c));
  IntegralTerms rest;
  Integer g, ma, mc, prod;
  unsigned steps = 0;
  while (!acc.empty()) {
    auto it = acc.begin();
    std::size_t k = 0;
    while (k < basis.size() && !basis[k].lm().divides(it->first)) ++k;
    if (k == basis.size()) {
      rest.emplace_back(it->first, std::move(it->second));
      acc.erase(it);
      continue;
    }
    const IntegralTerms& div = integral_basis[k];
    Monomial q = div.front().first.quotient_of(it->first);
    mpz_gcd(g.get_mpz_t(), div.front().second.get_mpz_t(), it->second.get_mpz_t());
    mpz_divexact(ma.get_mpz_t(), div.front().second.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(mc.get_mpz_t(), it->second.get_mpz_t(), g.get_mpz_t());
    acc.erase(it);
    if (mpz_cmpabs_ui(ma.get_mpz_t(), 1) != 0 || mpz_sgn(ma.get_mpz_t()) < 0) {
      for (auto& [m, c] : acc) c *= ma;
      for (auto& [m, c] : rest) c *= ma;
    }
    for (std::size_t t = 1; t < div.size(); ++t) {
      mpz_mul(prod.get_mpz_t(), mc.get_mpz_t(), div[t].second.get_mpz_t());
      auto [pos, inserted] = acc.try_emplace(div[t].first * q);
      if (inserted)
        mpz_neg(pos->second.get_mpz_t(), prod.get_mpz_t());
      else {
        pos->second -= prod;
        if (pos->second == 0) acc.erase(pos);
      }
    }
    if (++steps % 8 == 0) {
      // Divide out the content now and then.
      Integer content = 0;
      for (const auto& [m, c] : rest) {
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
        if (content == 1) break;
      }
      for (const auto& [m, c] : acc) {
        if (content == 1) break;
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
      }
      if (content > 1) {
        for (auto& [m, c] : acc) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), content.get_mpz_t());
        for (auto& [m, c] : rest) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), content.get_mpz_t());
      }
    }
  }
  std::vector<Term> terms;
  terms.reserve(rest.size());
  for (auto& [m, c] : rest) terms.push_back({m, Rational(c)});
  return Polynomial::from_sorted_terms(ring, std::move(terms));
}

/// Buchberger pair bookkeeping shared by the complete and the degree-wise
/// constructions. Pairs are treated by ascending lcm degree, then by the
/// index of the younger element, then of the older one.
class PairQueue {
 public:
  explicit PairQueue(std::vector<Polynomial>& basis, bool use_criteria)
      : basis_(basis), use_criteria_(use_criteria) {}

  /// Appends a new basis element and enqueues its pairs with older elements.
  void add(Polynomial g) {
    std::size_t j = basis_.size();
    basis_.push_back(std::move(g));
    redundant_.resize(basis_.size(), false);
    for (std::size_t i = 0; i < j; ++i) {
      if (redundant_[i]) continue;
      enqueue(i, j);
      // An older element whose leading monomial is a multiple of the new one
      // takes part in no further pairs; its queued pairs stay.
      if (basis_[j].lm().divides(basis_[i].lm())) redundant_[i] = true;
    }
  }

  void enqueue(std::size_t i, std::size_t j) {
    redundant_.resize(basis_.size(), false);
    unsigned deg = lcm(basis_[i].lm(), basis_[j].lm()).degree();
    Pair p{deg, j, i};
    pending_.insert(p);
    index_.insert({i, j});
  }

  bool empty() const { return pending_.empty(); }
  unsigned next_degree() const { return pending_.begin()->degree; }

  /// Pops the next pair and returns its reduced S-polynomial, or the zero
  /// polynomial when a criterion shows it is redundant.
  Polynomial pop_and_reduce() {
    Pair p = *pending_.begin();
    pending_.erase(pending_.begin());
    index_.erase({p.i, p.j});
    const Polynomial& a = basis_[p.i];
    const Polynomial& b = basis_[p.j];
    if (use_criteria_) {
      if (coprime(a.lm(), b.lm())) return Polynomial(a.ring());
      Monomial l = lcm(a.lm(), b.lm());
      for (std::size_t k = 0; k < basis_.size(); ++k) {
        if (k == p.i || k == p.j || redundant_[k]) continue;
        if (!basis_[k].lm().divides(l)) continue;
        if (index_.count(ordered(p.i, k)) == 0 && index_.count(ordered(p.j, k)) == 0)
          return Polynomial(a.ring());
      }
    }
    return reduce(s_polynomial(a, b));
  }

  /// Monic remainder of p modulo the current basis, or zero.
  Polynomial reduce(const Polynomial& p) {
    while (integral_.size() < basis_.size()) integral_.push_back(integral(basis_[integral_.size()]));
    return reduce_fraction_free(p, basis_, integral_).monic();
  }

 private:
  static std::pair<std::size_t, std::size_t> ordered(std::size_t a, std::size_t b) {
    return a < b ? std::pair{a, b} : std::pair{b, a};
  }

  std::vector<Polynomial>& basis_;
  bool use_criteria_;
  std::set<Pair> pending_;
  std::set<std::pair<std::size_t, std::size_t>> index_;
  std::vector<bool> redundant_;
  std::vector<IntegralTerms> integral_;
};

void check_ring(Ring ring, std::span<const Polynomial> gens) {
  for (const auto& g : gens)
    if (g.ring() != ring) throw DimensionError("generator does not live in the given ring");
}

}  // namespace

namespace {

/// Reduced Groebner basis from any Groebner basis of the same ideal.
std::vector<Polynomial> reduced_basis(Ring ring, const std::vector<Polynomial>& basis) {
  // Minimize: drop elements whose leading monomial is a multiple of another's.
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t k = 0; k < basis.size() && !redundant; ++k) {
      if (k == i || !basis[k].lm().divides(basis[i].lm())) continue;
      // Equal leading monomials: keep the earliest.
      redundant = basis[k].lm() != basis[i].lm() || k < i;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  // Interreduce tails against the other minimal elements.
  std::vector<Polynomial> out;
  std::vector<IntegralTerms> integral_minimal;
  for (const auto& m : minimal) integral_minimal.push_back(integral(m));
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    std::vector<IntegralTerms> integral_others;
    for (std::size_t k = 0; k < minimal.size(); ++k)
      if (k != i) {
        others.push_back(minimal[k]);
        integral_others.push_back(integral_minimal[k]);
      }
    out.push_back(reduce_fraction_free(minimal[i], others, integral_others).monic());
  }
  MonomialGreater greater{ring.order};
  std::sort(out.begin(), out.end(),
            [&](const Polynomial& a, const Polynomial& b) { return greater(b.lm(), a.lm()); });
  return out;
}

}  // namespace

TruncatedGroebnerBasis buchberger(Ring ring, std::span<const Polynomial> gens, bool use_criteria) {
  check_ring(ring, gens);
  std::vector<const Polynomial*> input;
  for (const auto& g : gens)
    if (!g.is_zero()) input.push_back(&g);
  std::stable_sort(input.begin(), input.end(),
                   [](const Polynomial* a, const Polynomial* b) { return a->degree() < b->degree(); });

  std::vector<Polynomial> basis;
  PairQueue queue(basis, use_criteria);
  for (const Polynomial* g : input) {
    Polynomial r = queue.reduce(*g);
    if (!r.is_zero()) queue.add(r.monic());
  }
  while (!queue.empty()) {
    Polynomial r = queue.pop_and_reduce();
    if (!r.is_zero()) queue.add(r.monic());
  }

  TruncatedGroebnerBasis out(ring);
  out.elements_ = reduced_basis(ring, basis);
  return out;
}

namespace {

void require_homogeneous(std::span<const Polynomial> gens) {
  for (const auto& g : gens)
    if (!g.homogeneous_degree()) throw DomainError("non-homogeneous generator: " + to_string(g));
}

/// Treats pairs of degree <= d, consuming homogeneous generators by degree.
void build_degreewise(PairQueue& queue, unsigned from, unsigned d,
                      std::span<const Polynomial> gens) {
  unsigned top_gen = 0;
  for (const auto& g : gens)
    if (!g.is_zero()) top_gen = std::max(top_gen, g.lm().degree());
  for (unsigned k = from; k <= d; ++k) {
    if (queue.empty() && k > top_gen) break;
    while (!queue.empty() && queue.next_degree() == k) {
      Polynomial r = queue.pop_and_reduce();
      if (!r.is_zero()) queue.add(r.monic());
    }
    for (const auto& g : gens) {
      if (g.is_zero() || g.lm().degree() != k) continue;
      Polynomial r = queue.reduce(g);
      if (!r.is_zero()) queue.add(r.monic());
    }
  }
}

}  // namespace

TruncatedGroebnerBasis truncated_gb(Ring ring, std::span<const Polynomial> gens, unsigned d) {
  check_ring(ring, gens);
  require_homogeneous(gens);
  TruncatedGroebnerBasis out(ring, d);
  PairQueue queue(out.elements_, true);
  build_degreewise(queue, 0, d, gens);
  return out;
}

TruncatedGroebnerBasis raise_degree(TruncatedGroebnerBasis g, unsigned d) {
  if (d <= g.valid_up_to_) return g;
  std::vector<Polynomial> existing = std::move(g.elements_);
  g.elements_.clear();
  PairQueue queue(g.elements_, true);
  // Re-admit the elements; pairs at or below the old bound are already treated.
  const unsigned old = g.valid_up_to_;
  for (auto& e : existing) {
    std::size_t j = g.elements_.size();
    g.elements_.push_back(std::move(e));
    for (std::size_t i = 0; i < j; ++i)
      if (lcm(g.elements_[i].lm(), g.elements_[j].lm()).degree() > old) queue.enqueue(i, j);
  }
  build_degreewise(queue, old + 1, d, {});
  g.valid_up_to_ = d;
  return g;
}

TruncatedGroebnerBasis extend_with_remainder(TruncatedGroebnerBasis g, Polynomial r) {
  if (r.ring() != g.ring_) throw DimensionError("polynomial does not live in the basis ring");
  if (r.is_zero()) throw AlreadyMemberError("polynomial already lies in the ideal");
  auto deg = r.homogeneous_degree();
  if (!deg || *deg != g.valid_up_to_)
    throw DegreeError("extension requires a homogeneous polynomial of degree " +
                      std::to_string(g.valid_up_to_));
  for (const auto& e : g.elements_)
    if (e.lm().divides(r.lm())) throw DomainError("remainder is not reduced modulo the basis");
  g.elements_.push_back(std::move(r).monic());
  return g;
}

TruncatedGroebnerBasis extend_truncated(TruncatedGroebnerBasis g, const Polynomial& p) {
  auto deg = p.homogeneous_degree();
  if (!p.is_zero() && (!deg || *deg != g.valid_up_to()))
    throw DegreeError("extension requires a homogeneous polynomial of degree " +
                      std::to_string(g.valid_up_to()));
  Polynomial r = g.reduce(p);
  return extend_with_remainder(std::move(g), std::move(r));
}

bool member_up_to_degree(const Polynomial& p, const TruncatedGroebnerBasis& g) {
  if (p.is_zero()) return true;
  auto deg = p.homogeneous_degree();
  if (!deg) throw DomainError("membership test requires a homogeneous polynomial");
  if (*deg > g.valid_up_to())
    throw DegreeError("degree " + std::to_string(*deg) + " exceeds basis validity bound " +
                      std::to_string(g.valid_up_to()));
  return g.reduce(p).is_zero();
}

bool satisfies_truncated_invariant(const TruncatedGroebnerBasis& g) {
  auto elems = g.elements();
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = i + 1; j < elems.size(); ++j) {
      if (lcm(elems[i].lm(), elems[j].lm()).degree() > g.valid_up_to()) continue;
      if (!reduce(s_polynomial(elems[i], elems[j]), elems).is_zero()) return false;
    }
  return true;
}

std::optional<TruncatedGroebnerBasis> complete_intersection_basis(Ring ring, std::span<const Polynomial> gens) {
  check_ring(ring, gens);
  require_homogeneous(gens);
  unsigned bound = 1;
  for (const auto& g : gens) {
    if (g.is_zero()) return std::nullopt;
    bound += g.lm().degree() - 1;
  }
  auto truncated = truncated_gb(ring, gens, bound);
  for (std::size_t k = 0; k < ring.n; ++k) {
    bool found = false;
    for (const auto& g : truncated.elements()) found = found || (g.lm()[k] > 0 && g.lm().degree() == g.lm()[k]);
    if (!found) return std::nullopt;
  }
  TruncatedGroebnerBasis out(ring);
  out.elements_ = reduced_basis(ring, truncated.elements_);
  return out;
}

}  // namespace secinv
