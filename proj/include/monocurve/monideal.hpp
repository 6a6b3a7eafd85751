#ifndef MONOCURVE_MONIDEAL_HPP
#define MONOCURVE_MONIDEAL_HPP

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "monocurve/monomial.hpp"

namespace monocurve {

class DivisorIndex;

/// Monomial ideal stored by its minimal generators.
///
/// Generators are kept by increasing degree and, within a degree, from the
/// largest to the smallest monomial under grevelex. The unit ideal is the
/// single generator 1 and the zero ideal has no generators. Values are
/// immutable and cheap to copy.
class MonomialIdeal {
 public:
  explicit MonomialIdeal(std::size_t nvars = 0);

  /// Removes every generator divisible by another one (and duplicates).
  static MonomialIdeal minimalize(std::size_t nvars, std::vector<Monomial> gens);
  static MonomialIdeal zero(std::size_t nvars) { return MonomialIdeal(nvars); }
  static MonomialIdeal unit(std::size_t nvars);

  std::size_t nvars() const { return nvars_; }
  const std::vector<Monomial>& gens() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_[0].is_one(); }

  bool contains(const Monomial& m) const;
  /// True when every generator of other lies in this ideal.
  bool contains(const MonomialIdeal& other) const;
  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b);

  friend MonomialIdeal operator+(const MonomialIdeal& a, const MonomialIdeal& b);
  friend MonomialIdeal operator*(const MonomialIdeal& a, const MonomialIdeal& b);
  MonomialIdeal pow(unsigned k) const;
  MonomialIdeal times(const Monomial& m) const;
  MonomialIdeal intersect(const MonomialIdeal& other) const;

  /// (I : m), generated by g / gcd(g, m).
  MonomialIdeal colon(const Monomial& m) const;
  /// (I : J) as the intersection of (I : g) over generators g of J.
  MonomialIdeal colon(const MonomialIdeal& j) const;

  /// Every variable has a pure power among the generators.
  bool is_artinian() const;
  /// Number of standard monomials; DomainError unless Artinian.
  std::size_t length_quotient() const;
  /// Standard monomial counts in degrees 0..max_degree.
  std::vector<std::size_t> hilbert_function(unsigned max_degree) const;
  /// The standard monomials themselves, degree by degree. Artinian only.
  std::vector<Monomial> standard_monomials() const;

  std::string to_string(const std::string& sep = ", ", int first_index = 2) const;

 private:
  std::size_t nvars_;
  std::vector<Monomial> gens_;
  std::shared_ptr<const DivisorIndex> index_;
};

/// Sum of a list of ideals; the empty sum is the zero ideal.
MonomialIdeal ideal_sum(std::size_t nvars, const std::vector<MonomialIdeal>& ideals);
/// Product of a list of ideals; the empty product is the unit ideal.
MonomialIdeal ideal_product(std::size_t nvars,
                            const std::vector<MonomialIdeal>& ideals);

}  // namespace monocurve

#endif  // MONOCURVE_MONIDEAL_HPP
