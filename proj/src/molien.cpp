#include "secinv/molien.hpp"

#include <map>
#include <numeric>
#include <string>

#include "secinv/errors.hpp"

namespace secinv {
namespace {

void trim(SeriesPolynomial& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

SeriesPolynomial mul(const SeriesPolynomial& a, const SeriesPolynomial& b) {
  if (a.empty() || b.empty()) return {};
  SeriesPolynomial c(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  trim(c);
  return c;
}

SeriesPolynomial sub(SeriesPolynomial a, const SeriesPolynomial& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

/// Exact quotient a / b; the remainder must vanish.
SeriesPolynomial exact_div(SeriesPolynomial a, const SeriesPolynomial& b) {
  if (b.empty()) throw InternalError("division by the zero polynomial");
  if (a.empty()) return {};
  if (a.size() < b.size()) throw InternalError("inexact polynomial division");
  SeriesPolynomial q(a.size() - b.size() + 1);
  for (std::size_t k = q.size(); k-- > 0;) {
    Rational f = a[k + b.size() - 1] / b.back();
    q[k] = f;
    if (f == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) a[k + j] -= f * b[j];
  }
  trim(a);
  if (!a.empty()) throw InternalError("inexact polynomial division");
  trim(q);
  return q;
}

}  // namespace

SeriesPolynomial det_one_minus_tm(const Matrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return {Rational(1)};
  std::vector<std::vector<SeriesPolynomial>> a(n, std::vector<SeriesPolynomial>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      SeriesPolynomial e{Rational(i == j ? 1 : 0), Rational(-m(i, j))};
      trim(e);
      a[i][j] = std::move(e);
    }
  // Bareiss: after step k every entry below/right of the pivot is divisible by
  // the previous pivot.
  SeriesPolynomial prev{Rational(1)};
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].empty()) {
      std::size_t r = k + 1;
      while (r < n && a[r][k].empty()) ++r;
      if (r == n) return {};
      std::swap(a[k], a[r]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        a[i][j] = exact_div(sub(mul(a[k][k], a[i][j]), mul(a[i][k], a[k][j])), prev);
      a[i][k].clear();
    }
    prev = a[k][k];
  }
  SeriesPolynomial det = a[n - 1][n - 1];
  if (negate)
    for (auto& c : det) c = -c;
  return det;
}

std::vector<Integer> molien_series(const GroupRepresentation& G, unsigned max_degree) {
  const std::size_t len = std::size_t{max_degree} + 1;
  // Elements with equal det(I - tM) contribute equally; expand each once.
  std::map<std::vector<std::string>, std::pair<SeriesPolynomial, std::size_t>> classes;
  for (const auto& g : G.elements()) {
    SeriesPolynomial d = det_one_minus_tm(g);
    std::vector<std::string> key;
    for (const auto& c : d) key.push_back(c.get_str());
    auto [it, inserted] = classes.try_emplace(std::move(key), std::move(d), 0);
    ++it->second.second;
  }
  std::vector<Rational> sum(len);
  for (const auto& [key, entry] : classes) {
    const auto& [d, count] = entry;
    if (d.empty() || d[0] != 1) throw InternalError("det(I - tM) has constant term other than 1");
    // Invert a power series with constant term 1.
    std::vector<Rational> inv(len);
    inv[0] = 1;
    for (std::size_t k = 1; k < len; ++k) {
      Rational acc = 0;
      for (std::size_t j = 1; j < d.size() && j <= k; ++j) acc -= d[j] * inv[k - j];
      inv[k] = acc;
    }
    for (std::size_t k = 0; k < len; ++k) sum[k] += inv[k] * Rational(count);
  }
  std::vector<Integer> series(len);
  for (std::size_t k = 0; k < len; ++k) {
    Rational a = sum[k] / Rational(G.order());
    if (!is_integer(a))
      throw InternalError("Molien coefficient of degree " + std::to_string(k) + " is not an integer: " + a.get_str());
    series[k] = a.get_num();
  }
  return series;
}

unsigned secondary_degree_bound(std::span<const unsigned> primary_degrees) {
  unsigned bound = 0;
  for (unsigned d : primary_degrees) bound += d > 0 ? d - 1 : 0;
  return bound;
}

SecondaryCounts secondary_counts(std::span<const Integer> series, std::span<const unsigned> primary_degrees,
                                 unsigned max_degree, std::size_t group_order) {
  const std::size_t len = std::size_t{max_degree} + 1;
  if (series.size() < len) throw DomainError("Molien series is shorter than the requested degree");
  std::vector<Integer> num(series.begin(), series.begin() + len);
  Integer product = 1;
  for (unsigned d : primary_degrees) {
    if (d == 0) throw ValidationError("primary invariant of degree 0");
    product *= d;
    for (std::size_t k = len; k-- > d;) num[k] -= num[k - d];
  }
  if (product % Integer(group_order) != 0)
    throw ValidationError("product of primary degrees " + product.get_str() + " is not divisible by |G| = " +
                          std::to_string(group_order));
  Integer total = product / Integer(group_order);
  SecondaryCounts out;
  if (!total.fits_slong_p()) throw ResourceError("secondary count does not fit in 64 bits");
  out.total = total.get_si();
  Integer sum = 0;
  for (std::size_t k = 0; k < len; ++k) {
    if (num[k] < 0)
      throw ValidationError("negative secondary count in degree " + std::to_string(k) +
                            ": the primary invariants are not a system of parameters");
    if (!num[k].fits_slong_p()) throw ResourceError("secondary count does not fit in 64 bits");
    out.per_degree.push_back(num[k].get_si());
    sum += num[k];
  }
  if (max_degree >= secondary_degree_bound(primary_degrees) && sum != total)
    throw ValidationError("secondary counts sum to " + sum.get_str() + " instead of " + total.get_str());
  return out;
}

MolienProfile molien_profile(const GroupRepresentation& G, std::span<const unsigned> primary_degrees) {
  MolienProfile profile;
  profile.degree_bound = secondary_degree_bound(primary_degrees);
  profile.series = molien_series(G, profile.degree_bound);
  profile.counts = secondary_counts(profile.series, primary_degrees, profile.degree_bound, G.order());
  return profile;
}

}  // namespace secinv
