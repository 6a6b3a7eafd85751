#ifndef MONOCURVE_SCALAR_HPP
#define MONOCURVE_SCALAR_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace monocurve {

enum class FieldKind { Rational, Prime };

/// Run-level coefficient field. Set once before any computation starts;
/// every Scalar built from an integer afterwards lives in this field.
struct FieldConfig {
  FieldKind kind = FieldKind::Rational;
  std::uint32_t prime = 32003;

  static FieldConfig rational() { return {FieldKind::Rational, 0}; }
  static FieldConfig prime_field(std::uint32_t p);

  std::string name() const;
  friend bool operator==(const FieldConfig&, const FieldConfig&) = default;
};

inline constexpr std::uint32_t kDefaultPrime = 32003;

bool is_prime(std::uint64_t n);

FieldConfig active_field();
void set_active_field(const FieldConfig& config);

/// Swaps the active field for the lifetime of the guard. Only for
/// single-threaded test code; suites fix the field before fanning out.
class ScopedField {
 public:
  explicit ScopedField(const FieldConfig& config);
  ~ScopedField();
  ScopedField(const ScopedField&) = delete;
  ScopedField& operator=(const ScopedField&) = delete;

 private:
  FieldConfig saved_;
};

/// Element of Q (lowest terms, positive denominator) or of Z/p.
/// Arithmetic between elements of different fields throws StructuralError.
class Scalar {
 public:
  Scalar() : Scalar(0) {}
  Scalar(long value);  // NOLINT: integers embed implicitly
  Scalar(int value) : Scalar(static_cast<long>(value)) {}  // NOLINT

  static Scalar rational(const mpq_class& q);
  static Scalar rational(long num, long den);
  static Scalar residue(std::uint64_t value, std::uint32_t prime);

  bool is_zero() const;
  bool is_one() const;
  bool is_prime_field() const { return value_.index() == 1; }
  std::uint32_t modulus() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  Scalar inverse() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);

  /// Sign used when printing: rationals by sign, residues are never
  /// negative except that values above p/2 print as -(p - v).
  bool prints_negative() const;
  std::string to_string() const;

  /// Reduces an integer-valued rational into Z/p. Throws if the
  /// denominator is not invertible mod p.
  Scalar reduce_mod(std::uint32_t prime) const;
  const mpq_class& as_rational() const;
  std::uint32_t as_residue() const;

 private:
  struct Residue {
    std::uint32_t value;
    std::uint32_t prime;
    bool operator==(const Residue&) const = default;
  };
  explicit Scalar(std::variant<mpq_class, Residue> v) : value_(std::move(v)) {}
  void check_same_field(const Scalar& o) const;

  std::variant<mpq_class, Residue> value_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace monocurve

#endif  // MONOCURVE_SCALAR_HPP
