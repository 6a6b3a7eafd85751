#include "monocurve/scalar.hpp"

#include <atomic>
#include <ostream>

#include "monocurve/error.hpp"

namespace monocurve {

namespace {

std::atomic<FieldConfig> g_field{FieldConfig::rational()};

std::uint32_t mul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}

std::uint32_t pow_mod(std::uint32_t base, std::uint64_t exp, std::uint32_t p) {
  std::uint32_t result = 1 % p;
  while (exp > 0) {
    if (exp & 1U) result = mul_mod(result, base, p);
    base = mul_mod(base, base, p);
    exp >>= 1U;
  }
  return result;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t f = 2; f * f <= n; ++f) {
    if (n % f == 0) return false;
  }
  return true;
}

FieldConfig FieldConfig::prime_field(std::uint32_t p) {
  if (p == 2 || !is_prime(p)) {
    throw PreconditionError("prime field requires an odd prime, got " +
                            std::to_string(p));
  }
  // Products of two residues must fit in 64 bits.
  return {FieldKind::Prime, p};
}

std::string FieldConfig::name() const {
  if (kind == FieldKind::Rational) return "rational";
  return "fp:" + std::to_string(prime);
}

FieldConfig active_field() { return g_field.load(); }

void set_active_field(const FieldConfig& config) {
  if (config.kind == FieldKind::Prime) {
    (void)FieldConfig::prime_field(config.prime);
  }
  g_field.store(config);
}

ScopedField::ScopedField(const FieldConfig& config) : saved_(active_field()) {
  set_active_field(config);
}

ScopedField::~ScopedField() { set_active_field(saved_); }

Scalar::Scalar(long value) {
  const FieldConfig f = active_field();
  if (f.kind == FieldKind::Rational) {
    value_ = mpq_class(value);
  } else {
    long r = value % static_cast<long>(f.prime);
    if (r < 0) r += f.prime;
    value_ = Residue{static_cast<std::uint32_t>(r), f.prime};
  }
}

Scalar Scalar::rational(const mpq_class& q) {
  mpq_class c = q;
  c.canonicalize();
  return Scalar(std::variant<mpq_class, Residue>(std::move(c)));
}

Scalar Scalar::rational(long num, long den) {
  if (den == 0) throw DomainError("zero denominator");
  return rational(mpq_class(num, den));
}

Scalar Scalar::residue(std::uint64_t value, std::uint32_t prime) {
  return Scalar(std::variant<mpq_class, Residue>(
      Residue{static_cast<std::uint32_t>(value % prime), prime}));
}

bool Scalar::is_zero() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return sgn(*q) == 0;
  return std::get<Residue>(value_).value == 0;
}

bool Scalar::is_one() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return *q == 1;
  return std::get<Residue>(value_).value == 1;
}

std::uint32_t Scalar::modulus() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return r->prime;
  return 0;
}

void Scalar::check_same_field(const Scalar& o) const {
  if (value_.index() != o.value_.index() || modulus() != o.modulus()) {
    throw StructuralError("scalar arithmetic across different fields");
  }
}

Scalar Scalar::operator-() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) {
    return Scalar(std::variant<mpq_class, Residue>(mpq_class(-*q)));
  }
  const Residue& r = std::get<Residue>(value_);
  return residue(r.value == 0 ? 0 : r.prime - r.value, r.prime);
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same_field(o);
  if (auto* q = std::get_if<mpq_class>(&value_)) {
    *q += std::get<mpq_class>(o.value_);
  } else {
    Residue& r = std::get<Residue>(value_);
    const std::uint64_t s =
        static_cast<std::uint64_t>(r.value) + std::get<Residue>(o.value_).value;
    r.value = static_cast<std::uint32_t>(s % r.prime);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same_field(o);
  if (auto* q = std::get_if<mpq_class>(&value_)) {
    *q *= std::get<mpq_class>(o.value_);
  } else {
    Residue& r = std::get<Residue>(value_);
    r.value = mul_mod(r.value, std::get<Residue>(o.value_).value, r.prime);
  }
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero");
  if (const auto* q = std::get_if<mpq_class>(&value_)) {
    return rational(mpq_class(1) / *q);
  }
  const Residue& r = std::get<Residue>(value_);
  return residue(pow_mod(r.value, r.prime - 2, r.prime), r.prime);
}

Scalar& Scalar::operator/=(const Scalar& o) {
  check_same_field(o);
  return *this *= o.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.value_.index() != b.value_.index()) return false;
  return a.value_ == b.value_;
}

bool Scalar::prints_negative() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return sgn(*q) < 0;
  const Residue& r = std::get<Residue>(value_);
  return r.value > r.prime / 2;
}

std::string Scalar::to_string() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return q->get_str();
  const Residue& r = std::get<Residue>(value_);
  if (prints_negative()) return "-" + std::to_string(r.prime - r.value);
  return std::to_string(r.value);
}

Scalar Scalar::reduce_mod(std::uint32_t prime) const {
  if (const auto* r = std::get_if<Residue>(&value_)) {
    if (r->prime != prime) throw StructuralError("residue of another prime");
    return *this;
  }
  const mpq_class& q = std::get<mpq_class>(value_);
  const mpz_class p(prime);
  mpz_class num = q.get_num() % p;
  mpz_class den = q.get_den() % p;
  if (num < 0) num += p;
  if (den == 0) throw DomainError("denominator vanishes mod p");
  return residue(num.get_ui(), prime) / residue(den.get_ui(), prime);
}

const mpq_class& Scalar::as_rational() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return *q;
  throw StructuralError("scalar is not rational");
}

std::uint32_t Scalar::as_residue() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return r->value;
  throw StructuralError("scalar is not a residue");
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) {
  return os << s.to_string();
}

}  // namespace monocurve
