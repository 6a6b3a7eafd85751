#ifndef MONOCURVE_POLYNOMIAL_HPP
#define MONOCURVE_POLYNOMIAL_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "monocurve/monomial.hpp"
#include "monocurve/order.hpp"
#include "monocurve/scalar.hpp"

namespace monocurve {

struct Term {
  Monomial mono;
  Scalar coeff;
  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial: a finite map monomial -> nonzero scalar.
///
/// Terms are kept strictly descending under the grevelex order, so the
/// representation is canonical and front() is the grevelex leading term.
class Polynomial {
 public:
  explicit Polynomial(std::size_t nvars = 0) : nvars_(nvars) {}

  /// Combines like terms, drops zeros and sorts.
  static Polynomial from_terms(std::size_t nvars, std::vector<Term> terms);
  static Polynomial constant(std::size_t nvars, const Scalar& c);
  static Polynomial monomial(const Monomial& m, const Scalar& c = Scalar(1));
  /// x_{pos} as a polynomial, pos 0-based.
  static Polynomial variable(std::size_t nvars, std::size_t pos);

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  /// Highest total degree; 0 for the zero polynomial.
  unsigned degree() const;
  bool is_homogeneous() const;
  /// Coefficient of m (zero if absent).
  Scalar coefficient(const Monomial& m) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) {
    return a += b;
  }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) {
    return a -= b;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  Polynomial scaled(const Scalar& c) const;
  Polynomial times(const Monomial& m, const Scalar& c = Scalar(1)) const;
  /// Reduces every coefficient into Z/p.
  Polynomial reduce_mod(std::uint32_t prime) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

  /// "x2*x4 - x3^2": terms descending under grevelex, variables numbered
  /// from first_index, "0" for the zero polynomial.
  std::string to_string(int first_index = 2) const;

 private:
  void check_same(const Polynomial& o) const;
  std::size_t nvars_;
  std::vector<Term> terms_;
};

/// Order-maximal term of f. Throws DomainError for f = 0.
const Term& leading_term(const Polynomial& f,
                         const MonomialOrder& order = grevelex());
Monomial leading_monomial(const Polynomial& f,
                          const MonomialOrder& order = grevelex());

/// Square matrix of polynomials over a common variable count.
class PolyMatrix {
 public:
  PolyMatrix(std::size_t size, std::size_t nvars);
  static PolyMatrix from_rows(std::vector<std::vector<Polynomial>> rows);

  std::size_t size() const { return size_; }
  std::size_t nvars() const { return nvars_; }
  const Polynomial& at(std::size_t r, std::size_t c) const {
    return entries_[r * size_ + c];
  }
  Polynomial& at(std::size_t r, std::size_t c) {
    return entries_[r * size_ + c];
  }
  /// Submatrix on the first `rows` rows and the given (0-based) columns.
  PolyMatrix submatrix(std::size_t rows,
                       const std::vector<std::size_t>& columns) const;
  PolyMatrix with_rows_swapped(std::size_t r1, std::size_t r2) const;
  /// Product of the anti-diagonal entries m(r, n-1-r).
  Polynomial antidiagonal_product() const;

  std::string to_string(int first_index = 2) const;

 private:
  std::size_t size_;
  std::size_t nvars_;
  std::vector<Polynomial> entries_;
};

/// Exact determinant by cofactor expansion along successive rows, memoized
/// on the set of columns still available.
Polynomial determinant(const PolyMatrix& m);

/// f(t^{n_1}, ..., t^{n_d}) with n_i = d + (i-1) m, returned as a polynomial
/// in one variable t. f must be over the full variable set x1..xd.
Polynomial substitute_parametrization(const Polynomial& f, int d, int m);

}  // namespace monocurve

#endif  // MONOCURVE_POLYNOMIAL_HPP
