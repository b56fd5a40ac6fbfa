#include "secinv/polynomial.hpp"

#include <algorithm>
#include <unordered_map>

#include "secinv/errors.hpp"

namespace secinv {

Rational parse_rational(std::string_view text) {
  std::size_t pos = 0;
  auto digits = [&](std::size_t start) {
    std::size_t end = start;
    while (end < text.size() && text[end] >= '0' && text[end] <= '9') ++end;
    if (end == start) throw ParseError("expected digits in rational literal", start);
    return end;
  };
  bool negative = false;
  if (pos < text.size() && text[pos] == '-') {
    negative = true;
    ++pos;
  }
  std::size_t num_end = digits(pos);
  Integer num(std::string(text.substr(pos, num_end - pos)));
  Integer den = 1;
  pos = num_end;
  if (pos < text.size() && text[pos] == '/') {
    std::size_t den_end = digits(pos + 1);
    den = Integer(std::string(text.substr(pos + 1, den_end - pos - 1)));
    if (den == 0) throw ParseError("zero denominator", pos + 1);
    pos = den_end;
  }
  if (pos != text.size()) throw ParseError("trailing characters in rational literal", pos);
  Rational q(negative ? Integer(-num) : num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

void require_same_ring(const Polynomial& a, const Polynomial& b) {
  if (a.ring() != b.ring()) throw DimensionError("polynomials live in different rings");
}

Polynomial Polynomial::constant(Ring ring, const Rational& c) {
  return monomial(ring, Monomial(ring.n), c);
}

Polynomial Polynomial::variable(Ring ring, std::size_t index) {
  return monomial(ring, Monomial::variable(ring.n, index), 1);
}

Polynomial Polynomial::monomial(Ring ring, const Monomial& m, const Rational& c) {
  if (m.size() != ring.n) throw DimensionError("monomial length does not match ring");
  Polynomial p(ring);
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

Polynomial Polynomial::from_terms(Ring ring, std::vector<Term> terms) {
  for (const auto& t : terms)
    if (t.monomial.size() != ring.n) throw DimensionError("monomial length does not match ring");
  MonomialGreater greater{ring.order};
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return greater(a.monomial, b.monomial); });
  Polynomial p(ring);
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial)
      p.terms_.back().coeff += t.coeff;
    else {
      if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
  return p;
}

Polynomial Polynomial::from_sorted_terms(Ring ring, std::vector<Term> terms) {
  Polynomial p(ring);
  p.terms_ = std::move(terms);
  return p;
}

const Monomial& Polynomial::lm() const { return lt().monomial; }
const Rational& Polynomial::lc() const { return lt().coeff; }

const Term& Polynomial::lt() const {
  if (terms_.empty()) throw DomainError("leading term of the zero polynomial");
  return terms_.front();
}

unsigned Polynomial::degree() const {
  if (terms_.empty()) throw DomainError("degree of the zero polynomial");
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
  return d;
}

std::optional<unsigned> Polynomial::homogeneous_degree() const {
  if (terms_.empty()) return kZeroPolynomialDegree;
  unsigned d = terms_.front().monomial.degree();
  for (const auto& t : terms_)
    if (t.monomial.degree() != d) return std::nullopt;
  return d;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty() || lc() == 1) return *this;
  return scaled(Rational(1) / lc());
}

Polynomial Polynomial::scaled(const Rational& c) const {
  Polynomial p(ring_);
  if (c == 0) return p;
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back({t.monomial, t.coeff * c});
  return p;
}

Polynomial Polynomial::times(const Monomial& m, const Rational& c) const {
  Polynomial p(ring_);
  if (c == 0) return p;
  p.terms_.reserve(terms_.size());
  // Multiplication by a monomial preserves the order of terms.
  for (const auto& t : terms_) p.terms_.push_back({t.monomial * m, t.coeff * c});
  return p;
}

Polynomial Polynomial::with_order(MonomialOrder order) const {
  return from_terms(Ring{ring_.n, order}, terms_);
}

namespace {

template <bool kSubtract>
std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, MonomialOrder order) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    auto c = compare_unchecked(i->monomial, j->monomial, order);
    if (c == std::strong_ordering::greater) {
      out.push_back(*i++);
    } else if (c == std::strong_ordering::less) {
      out.push_back({j->monomial, kSubtract ? Rational(-j->coeff) : j->coeff});
      ++j;
    } else {
      Rational s = kSubtract ? Rational(i->coeff - j->coeff) : Rational(i->coeff + j->coeff);
      if (s != 0) out.push_back({i->monomial, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i != a.end(); ++i) out.push_back(*i);
  for (; j != b.end(); ++j) out.push_back({j->monomial, kSubtract ? Rational(-j->coeff) : j->coeff});
  return out;
}

}  // namespace

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  require_same_ring(*this, other);
  terms_ = merge<false>(terms_, other.terms_, ring_.order);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  require_same_ring(*this, other);
  terms_ = merge<true>(terms_, other.terms_, ring_.order);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  *this = *this * other;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a, b);
  if (a.is_zero() || b.is_zero()) return Polynomial(a.ring());
  if (a.size() == 1) return b.times(a.lm(), a.lc());
  if (b.size() == 1) return a.times(b.lm(), b.lc());
  std::unordered_map<Monomial, Rational, MonomialHash> acc;
  acc.reserve(a.size() * b.size());
  Rational prod;
  for (const auto& s : a.terms())
    for (const auto& t : b.terms()) {
      mpq_mul(prod.get_mpq_t(), s.coeff.get_mpq_t(), t.coeff.get_mpq_t());
      acc[s.monomial * t.monomial] += prod;
    }
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) terms.push_back({m, std::move(c)});
  MonomialGreater greater{a.ring().order};
  std::sort(terms.begin(), terms.end(),
            [&](const Term& x, const Term& y) { return greater(x.monomial, y.monomial); });
  return Polynomial::from_sorted_terms(a.ring(), std::move(terms));
}

LeadingParts leading_parts(const Polynomial& p) {
  const Term& t = p.lt();
  return {t.monomial, t.coeff, t};
}

Polynomial scale(const Polynomial& p, const Rational& c) { return p.scaled(c); }

std::vector<std::string> default_variable_names(std::size_t n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  return names;
}

std::string to_string(const Polynomial& p, std::span<const std::string> names) {
  if (names.size() != p.ring().n) throw DimensionError("variable name count does not match ring");
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p) {
    Rational mag = abs(c);
    if (c < 0)
      out += "-";
    else if (!first)
      out += "+";
    first = false;
    bool wrote = false;
    if (m.is_one() || mag != 1) {
      out += mag.get_str();
      wrote = true;
    }
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (wrote) out += "*";
      out += names[i];
      if (m[i] > 1) out += "^" + std::to_string(m[i]);
      wrote = true;
    }
  }
  return out;
}

std::string to_string(const Polynomial& p) {
  auto names = default_variable_names(p.ring().n);
  return to_string(p, names);
}

}  // namespace secinv
