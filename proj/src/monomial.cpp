#include "monocurve/monomial.hpp"

#include <algorithm>
#include <limits>

#include "monocurve/error.hpp"

namespace monocurve {

Monomial::Monomial(std::size_t nvars) {
  if (nvars > kMaxVars) {
    throw StructuralError("too many variables: " + std::to_string(nvars));
  }
  nvars_ = static_cast<std::uint8_t>(nvars);
}

Monomial::Monomial(std::initializer_list<int> exponents)
    : Monomial(std::span<const int>(exponents.begin(), exponents.size())) {}

Monomial::Monomial(std::span<const int> exponents) : Monomial(exponents.size()) {
  for (std::size_t i = 0; i < exponents.size(); ++i) set(i, exponents[i]);
}

void Monomial::set(std::size_t pos, long value) {
  if (value < 0 || value > std::numeric_limits<Exponent>::max()) {
    throw DomainError("exponent out of range: " + std::to_string(value));
  }
  degree_ -= exps_[pos];
  exps_[pos] = static_cast<Exponent>(value);
  degree_ += exps_[pos];
}

Monomial Monomial::variable(std::size_t nvars, std::size_t pos, int power) {
  Monomial m(nvars);
  if (pos >= nvars) throw StructuralError("variable position out of range");
  m.set(pos, power);
  return m;
}

std::vector<int> Monomial::exponents() const {
  return {exps_.begin(), exps_.begin() + nvars_};
}

void Monomial::check_same(const Monomial& other) const {
  if (nvars_ != other.nvars_) {
    throw StructuralError("monomials over different variable counts");
  }
}

bool Monomial::divides(const Monomial& other) const {
  check_same(other);
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < nvars_; ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  check_same(other);
  for (std::size_t i = 0; i < nvars_; ++i) {
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  }
  return true;
}

Monomial& Monomial::operator*=(const Monomial& other) {
  check_same(other);
  for (std::size_t i = 0; i < nvars_; ++i) {
    set(i, static_cast<long>(exps_[i]) + other.exps_[i]);
  }
  return *this;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r = *this;
  return r *= other;
}

Monomial Monomial::operator/(const Monomial& other) const {
  if (!other.divides(*this)) {
    throw DomainError(other.to_string() + " does not divide " + to_string());
  }
  Monomial r = *this;
  for (std::size_t i = 0; i < nvars_; ++i) {
    r.set(i, static_cast<long>(exps_[i]) - other.exps_[i]);
  }
  return r;
}

Monomial Monomial::pow(unsigned k) const {
  Monomial r(nvars_);
  for (std::size_t i = 0; i < nvars_; ++i) {
    r.set(i, static_cast<long>(exps_[i]) * k);
  }
  return r;
}

Monomial Monomial::gcd(const Monomial& other) const {
  check_same(other);
  Monomial r(nvars_);
  for (std::size_t i = 0; i < nvars_; ++i) {
    r.set(i, std::min(exps_[i], other.exps_[i]));
  }
  return r;
}

Monomial Monomial::lcm(const Monomial& other) const {
  check_same(other);
  Monomial r(nvars_);
  for (std::size_t i = 0; i < nvars_; ++i) {
    r.set(i, std::max(exps_[i], other.exps_[i]));
  }
  return r;
}

std::string Monomial::to_string(int first_index) const {
  if (degree_ == 0) return "1";
  std::string out;
  for (std::size_t i = 0; i < nvars_; ++i) {
    if (exps_[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x' + std::to_string(first_index + static_cast<int>(i));
    if (exps_[i] > 1) out += '^' + std::to_string(exps_[i]);
  }
  return out;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (auto c = a.nvars_ <=> b.nvars_; c != 0) return c;
  for (std::size_t i = 0; i < a.nvars_; ++i) {
    if (auto c = a.exps_[i] <=> b.exps_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

bool operator==(const Monomial& a, const Monomial& b) {
  return a.nvars_ == b.nvars_ && a.exps_ == b.exps_;
}

std::size_t Monomial::hash() const {
  std::uint64_t h = 1469598103934665603ULL ^ nvars_;
  for (std::size_t i = 0; i < nvars_; ++i) {
    h = (h ^ exps_[i]) * 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

namespace {

void fill_degree(std::size_t pos, std::size_t last, unsigned remaining,
                 std::vector<int>& exps, std::vector<Monomial>& out) {
  if (pos == last) {
    exps[pos] = static_cast<int>(remaining);
    out.emplace_back(std::span<const int>(exps));
    exps[pos] = 0;
    return;
  }
  for (int e = static_cast<int>(remaining); e >= 0; --e) {
    exps[pos] = e;
    fill_degree(pos + 1, last, remaining - static_cast<unsigned>(e), exps, out);
  }
  exps[pos] = 0;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(std::size_t nvars, std::size_t first,
                                          std::size_t last, unsigned degree) {
  if (first > last || last >= nvars) {
    throw StructuralError("invalid variable range for monomial enumeration");
  }
  std::vector<Monomial> out;
  std::vector<int> exps(nvars, 0);
  fill_degree(first, last, degree, exps, out);
  return out;
}

}  // namespace monocurve
