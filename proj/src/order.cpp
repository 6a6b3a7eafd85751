#include "monocurve/order.hpp"

#include "monocurve/error.hpp"

namespace monocurve {

namespace {

void check_arity(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars()) {
    throw StructuralError("comparing monomials over different variable counts");
  }
}

}  // namespace

std::strong_ordering grevelex_compare(const Monomial& a, const Monomial& b) {
  check_arity(a, b);
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  for (std::size_t i = 0; i < a.nvars(); ++i) {
    if (a[i] != b[i]) {
      return a[i] < b[i] ? std::strong_ordering::greater
                         : std::strong_ordering::less;
    }
  }
  return std::strong_ordering::equal;
}

std::strong_ordering Grevelex::compare(const Monomial& a,
                                       const Monomial& b) const {
  return grevelex_compare(a, b);
}

std::strong_ordering GradedLex::compare(const Monomial& a,
                                        const Monomial& b) const {
  check_arity(a, b);
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  for (std::size_t i = 0; i < a.nvars(); ++i) {
    if (a[i] != b[i]) {
      return a[i] > b[i] ? std::strong_ordering::greater
                         : std::strong_ordering::less;
    }
  }
  return std::strong_ordering::equal;
}

const MonomialOrder& grevelex() {
  static const Grevelex order;
  return order;
}

const MonomialOrder& graded_lex() {
  static const GradedLex order;
  return order;
}

}  // namespace monocurve
