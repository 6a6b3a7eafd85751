#ifndef MONOCURVE_GROEBNER_HPP
#define MONOCURVE_GROEBNER_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "monocurve/monideal.hpp"
#include "monocurve/order.hpp"
#include "monocurve/polynomial.hpp"

namespace monocurve {

/// Ideal given by a list of nonzero generators.
class PolyIdeal {
 public:
  explicit PolyIdeal(std::size_t nvars) : nvars_(nvars) {}
  /// Zero generators are dropped.
  PolyIdeal(std::size_t nvars, std::vector<Polynomial> gens);

  std::size_t nvars() const { return nvars_; }
  const std::vector<Polynomial>& gens() const { return gens_; }
  void add(Polynomial g);
  PolyIdeal operator+(const PolyIdeal& other) const;

 private:
  std::size_t nvars_;
  std::vector<Polynomial> gens_;
};

struct GroebnerStats {
  std::size_t pairs_considered = 0;
  std::size_t pairs_reduced = 0;
  std::size_t zero_reductions = 0;
};

class GroebnerBasis {
 public:
  GroebnerBasis(std::size_t nvars, std::vector<Polynomial> elements,
                const MonomialOrder& order, bool reduced);

  std::size_t nvars() const { return nvars_; }
  const std::vector<Polynomial>& elements() const { return elements_; }
  const MonomialOrder& order() const { return *order_; }
  bool reduced() const { return reduced_; }
  GroebnerStats stats;

  MonomialIdeal leading_ideal() const;
  /// Every S-polynomial reduces to zero modulo the basis.
  bool satisfies_buchberger_criterion() const;

 private:
  std::size_t nvars_;
  std::vector<Polynomial> elements_;
  const MonomialOrder* order_;
  bool reduced_;
};

/// Full multivariate division remainder: no term of the result is divisible
/// by a leading monomial of G.
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> g,
                       const MonomialOrder& order = grevelex());

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g,
                        const MonomialOrder& order = grevelex());

/// Reduced Groebner basis. Critical pairs are handled by increasing lcm
/// degree, ties broken by the order on the lcm and then by creation order;
/// input generators enter the queue at their degree. Elements come out
/// monic, sorted by increasing leading monomial.
GroebnerBasis buchberger(const PolyIdeal& ideal,
                         const MonomialOrder& order = grevelex());

MonomialIdeal leading_ideal(const PolyIdeal& ideal,
                            const MonomialOrder& order = grevelex());

/// dim_k T'/I via the leading ideal; DomainError if that is not Artinian.
std::size_t quotient_length_poly(const PolyIdeal& ideal);

/// dim_k T'/I from ranks of the degree-wise coefficient matrices of
/// {m * g}, without any Groebner computation. Generators must be
/// homogeneous.
std::size_t hilbert_oracle(const PolyIdeal& ideal);

}  // namespace monocurve

#endif  // MONOCURVE_GROEBNER_HPP
