#ifndef MONOCURVE_MONOMIAL_HPP
#define MONOCURVE_MONOMIAL_HPP

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace monocurve {

/// Exponent vector with a cached total degree.
///
/// Position 0 is the first variable of the ring the monomial lives in. For
/// the quotient ring by x1 that is x2, so a monomial with N positions prints
/// as x2..x(N+1); full-ring monomials print from x1. The variable count is
/// part of the value and operations on monomials of different counts throw
/// StructuralError.
class Monomial {
 public:
  static constexpr std::size_t kMaxVars = 8;
  using Exponent = std::uint16_t;

  Monomial() = default;
  explicit Monomial(std::size_t nvars);
  Monomial(std::initializer_list<int> exponents);
  explicit Monomial(std::span<const int> exponents);

  /// x_{pos}^power, with pos a 0-based position.
  static Monomial variable(std::size_t nvars, std::size_t pos, int power = 1);

  std::size_t nvars() const { return nvars_; }
  unsigned degree() const { return degree_; }
  int operator[](std::size_t pos) const { return exps_[pos]; }
  bool is_one() const { return degree_ == 0; }
  std::vector<int> exponents() const;

  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  Monomial& operator*=(const Monomial& other);
  /// this / other; throws DomainError unless other divides this.
  Monomial operator/(const Monomial& other) const;
  Monomial pow(unsigned k) const;
  Monomial gcd(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  /// Largest t with x_{pos}^t dividing this.
  int valuation(std::size_t pos) const { return exps_[pos]; }
  bool coprime(const Monomial& other) const;

  /// Renders e.g. "x2^3*x4" with variables numbered from first_index.
  std::string to_string(int first_index = 2) const;

  /// Plain lexicographic comparison of (nvars, exponents); used for
  /// container keys only. Monomial orders live in order.hpp.
  friend std::strong_ordering operator<=>(const Monomial& a,
                                          const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b);

  std::size_t hash() const;

 private:
  void check_same(const Monomial& other) const;
  void set(std::size_t pos, long value);

  std::array<Exponent, kMaxVars> exps_{};
  std::uint8_t nvars_ = 0;
  unsigned degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// All monomials of the given degree in positions [first, last] (inclusive,
/// 0-based) of an nvars-variable ring, in lexicographic order of exponents
/// (highest power of the first position first).
std::vector<Monomial> monomials_of_degree(std::size_t nvars, std::size_t first,
                                          std::size_t last, unsigned degree);

}  // namespace monocurve

#endif  // MONOCURVE_MONOMIAL_HPP
