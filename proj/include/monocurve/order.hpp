#ifndef MONOCURVE_ORDER_HPP
#define MONOCURVE_ORDER_HPP

#include <compare>
#include <string_view>

#include "monocurve/monomial.hpp"

namespace monocurve {

/// Total, graded, multiplicative order on monomials of a fixed variable
/// count. Implementations are stateless.
class MonomialOrder {
 public:
  virtual ~MonomialOrder() = default;
  virtual std::strong_ordering compare(const Monomial& a,
                                       const Monomial& b) const = 0;
  virtual std::string_view name() const = 0;

  bool greater(const Monomial& a, const Monomial& b) const {
    return compare(a, b) > 0;
  }
};

/// Graded order whose tie-break scans the exponent difference a - b from the
/// left: a is larger when the left-most nonzero entry is negative. Hence
/// x2 < x3 < ... < xd. This is the order every leading ideal in the
/// library is taken with.
class Grevelex final : public MonomialOrder {
 public:
  std::strong_ordering compare(const Monomial& a,
                               const Monomial& b) const override;
  std::string_view name() const override { return "grevelex"; }
};

/// Standard degree-lexicographic order with x2 > x3 > ... > xd. Shipped for
/// differential testing only.
class GradedLex final : public MonomialOrder {
 public:
  std::strong_ordering compare(const Monomial& a,
                               const Monomial& b) const override;
  std::string_view name() const override { return "graded-lex"; }
};

const MonomialOrder& grevelex();
const MonomialOrder& graded_lex();

/// Non-virtual fast path for the default order.
std::strong_ordering grevelex_compare(const Monomial& a, const Monomial& b);

}  // namespace monocurve

#endif  // MONOCURVE_ORDER_HPP
