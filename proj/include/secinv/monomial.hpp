#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string_view>
#include <vector>

namespace secinv {

/// Largest supported number of ring variables.
inline constexpr std::size_t kMaxVariables = 32;
/// Largest exponent a single variable may carry.
inline constexpr unsigned kMaxExponent = 255;

enum class MonomialOrder : std::uint8_t { kDegRevLex, kDegLex, kLex };

std::string_view to_string(MonomialOrder order);
/// Accepts "degrevlex", "deglex" and "lex". Throws ParseError otherwise.
MonomialOrder parse_monomial_order(std::string_view name);

/// Power product x_1^e_1 ... x_n^e_n with n fixed at construction.
///
/// Exponents are stored inline so that monomials are cheap to copy and hash;
/// the support bitmask and cached degree make divisibility tests fast.
class Monomial {
 public:
  Monomial() = default;
  /// The constant monomial 1 in n variables.
  explicit Monomial(std::size_t n);
  explicit Monomial(std::span<const unsigned> exponents);
  Monomial(std::initializer_list<unsigned> exponents);

  static Monomial variable(std::size_t n, std::size_t index, unsigned power = 1);

  std::size_t size() const { return size_; }
  unsigned degree() const { return degree_; }
  unsigned operator[](std::size_t i) const { return exps_[i]; }
  std::uint32_t support() const { return support_; }
  bool is_one() const { return degree_ == 0; }

  std::vector<unsigned> exponents() const;

  /// True if this monomial divides `other`.
  bool divides(const Monomial& other) const {
    if (degree_ > other.degree_ || (support_ & ~other.support_) != 0) return false;
    for (std::size_t i = 0; i < size_; ++i)
      if (exps_[i] > other.exps_[i]) return false;
    return true;
  }

  /// other / *this; requires divides(other).
  Monomial quotient_of(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend bool coprime(const Monomial& a, const Monomial& b) {
    return (a.support_ & b.support_) == 0;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.size_ == b.size_ && a.exps_ == b.exps_;
  }

  std::size_t hash() const;

 private:
  void refresh();

  std::array<std::uint8_t, kMaxVariables> exps_{};
  std::uint16_t degree_ = 0;
  std::uint8_t size_ = 0;
  std::uint32_t support_ = 0;
};

/// Three-way comparison under `order`, with x_1 > x_2 > ... > x_n.
/// Throws DimensionError if the monomials have different lengths.
std::strong_ordering compare(const Monomial& a, const Monomial& b, MonomialOrder order);

/// Unchecked variant for hot loops where both sides are known to match.
std::strong_ordering compare_unchecked(const Monomial& a, const Monomial& b,
                                       MonomialOrder order);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// Strict "greater than" under a fixed order; sorts descending.
struct MonomialGreater {
  MonomialOrder order;
  bool operator()(const Monomial& a, const Monomial& b) const {
    return compare_unchecked(a, b, order) == std::strong_ordering::greater;
  }
};

/// All monomials of total degree d in n variables, sorted descending under `order`.
std::vector<Monomial> monomials_of_degree(std::size_t n, unsigned d, MonomialOrder order);

}  // namespace secinv
