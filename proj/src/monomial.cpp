#include "secinv/monomial.hpp"

#include <algorithm>
#include <string>

#include "secinv/errors.hpp"

namespace secinv {

std::string_view to_string(MonomialOrder order) {
  switch (order) {
    case MonomialOrder::kDegRevLex:
      return "degrevlex";
    case MonomialOrder::kDegLex:
      return "deglex";
    case MonomialOrder::kLex:
      return "lex";
  }
  return "unknown";
}

MonomialOrder parse_monomial_order(std::string_view name) {
  if (name == "degrevlex" || name == "dp") return MonomialOrder::kDegRevLex;
  if (name == "deglex" || name == "Dp") return MonomialOrder::kDegLex;
  if (name == "lex" || name == "lp") return MonomialOrder::kLex;
  throw ParseError("unknown monomial order '" + std::string(name) + "'", 0);
}

Monomial::Monomial(std::size_t n) {
  if (n > kMaxVariables)
    throw DimensionError("at most " + std::to_string(kMaxVariables) + " variables supported");
  size_ = static_cast<std::uint8_t>(n);
}

Monomial::Monomial(std::span<const unsigned> exponents) : Monomial(exponents.size()) {
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] > kMaxExponent) throw DomainError("exponent exceeds " + std::to_string(kMaxExponent));
    exps_[i] = static_cast<std::uint8_t>(exponents[i]);
  }
  refresh();
}

Monomial::Monomial(std::initializer_list<unsigned> exponents)
    : Monomial(std::span<const unsigned>(exponents.begin(), exponents.size())) {}

Monomial Monomial::variable(std::size_t n, std::size_t index, unsigned power) {
  if (index >= n) throw DimensionError("variable index out of range");
  Monomial m(n);
  if (power > kMaxExponent) throw DomainError("exponent exceeds " + std::to_string(kMaxExponent));
  m.exps_[index] = static_cast<std::uint8_t>(power);
  m.refresh();
  return m;
}

std::vector<unsigned> Monomial::exponents() const {
  return std::vector<unsigned>(exps_.begin(), exps_.begin() + size_);
}

void Monomial::refresh() {
  unsigned d = 0;
  std::uint32_t s = 0;
  for (std::size_t i = 0; i < size_; ++i) {
    d += exps_[i];
    if (exps_[i] != 0) s |= std::uint32_t{1} << i;
  }
  degree_ = static_cast<std::uint16_t>(d);
  support_ = s;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  Monomial q(size_);
  for (std::size_t i = 0; i < size_; ++i) {
    if (exps_[i] > other.exps_[i]) throw DomainError("monomial does not divide");
    q.exps_[i] = static_cast<std::uint8_t>(other.exps_[i] - exps_[i]);
  }
  q.refresh();
  return q;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  if (a.size_ != b.size_) throw DimensionError("monomial length mismatch");
  Monomial r(a.size_);
  for (std::size_t i = 0; i < a.size_; ++i) {
    unsigned e = unsigned{a.exps_[i]} + b.exps_[i];
    if (e > kMaxExponent) throw DomainError("exponent overflow in monomial product");
    r.exps_[i] = static_cast<std::uint8_t>(e);
  }
  r.degree_ = static_cast<std::uint16_t>(a.degree_ + b.degree_);
  r.support_ = a.support_ | b.support_;
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  if (a.size_ != b.size_) throw DimensionError("monomial length mismatch");
  Monomial r(a.size_);
  for (std::size_t i = 0; i < a.size_; ++i) r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
  r.refresh();
  return r;
}

std::size_t Monomial::hash() const {
  // FNV-1a over the used exponent bytes.
  std::size_t h = 1469598103934665603ull;
  for (std::size_t i = 0; i < size_; ++i) {
    h ^= exps_[i];
    h *= 1099511628211ull;
  }
  return h;
}

std::strong_ordering compare_unchecked(const Monomial& a, const Monomial& b,
                                       MonomialOrder order) {
  const std::size_t n = a.size();
  switch (order) {
    case MonomialOrder::kDegRevLex: {
      if (a.degree() != b.degree()) return a.degree() <=> b.degree();
      for (std::size_t i = n; i-- > 0;)
        if (a[i] != b[i]) return b[i] <=> a[i];
      return std::strong_ordering::equal;
    }
    case MonomialOrder::kDegLex:
      if (a.degree() != b.degree()) return a.degree() <=> b.degree();
      [[fallthrough]];
    case MonomialOrder::kLex:
      for (std::size_t i = 0; i < n; ++i)
        if (a[i] != b[i]) return a[i] <=> b[i];
      return std::strong_ordering::equal;
  }
  return std::strong_ordering::equal;
}

std::strong_ordering compare(const Monomial& a, const Monomial& b, MonomialOrder order) {
  if (a.size() != b.size()) throw DimensionError("monomial length mismatch");
  return compare_unchecked(a, b, order);
}

namespace {

void enumerate(std::vector<unsigned>& exps, std::size_t pos, unsigned remaining,
               std::vector<Monomial>& out) {
  if (pos + 1 == exps.size()) {
    exps[pos] = remaining;
    out.emplace_back(std::span<const unsigned>(exps));
    return;
  }
  for (unsigned e = remaining + 1; e-- > 0;) {
    exps[pos] = e;
    enumerate(exps, pos + 1, remaining - e, out);
  }
}

}  // namespace

std::vector<Monomial> monomials_of_degree(std::size_t n, unsigned d, MonomialOrder order) {
  std::vector<Monomial> out;
  if (n == 0) {
    if (d == 0) out.emplace_back(0);
    return out;
  }
  std::vector<unsigned> exps(n, 0);
  enumerate(exps, 0, d, out);
  std::sort(out.begin(), out.end(), MonomialGreater{order});
  return out;
}

}  // namespace secinv
