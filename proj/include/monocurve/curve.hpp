#ifndef MONOCURVE_CURVE_HPP
#define MONOCURVE_CURVE_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "monocurve/groebner.hpp"
#include "monocurve/monideal.hpp"
#include "monocurve/polynomial.hpp"

/// Constructions attached to the monomial curve t -> (t^{n_1}, ..., t^{n_d}),
/// n_i = d + (i-1) m.
///
/// Unless a function says otherwise everything lives in T' = k[x2..xd], the
/// coordinate ring modulo x1: polynomials and monomials have d-1 positions,
/// position p standing for x_{p+2}. Working modulo x1 removes every entry of
/// the structured matrix that carries a power of x1, so none of these
/// constructions depends on m.
namespace monocurve::curve {

struct CurveParams {
  int d = 2;
  int m = 1;
  /// Throws PreconditionError unless d >= 2, m >= 1, gcd(d, m) = 1.
  void validate() const;
};

/// Position of variable x_k in T' (k >= 2).
inline std::size_t pos(int k) { return static_cast<std::size_t>(k - 2); }
inline std::size_t tprime_vars(int d) { return static_cast<std::size_t>(d - 1); }

/// (a_1, ..., a_len) together with its weight sum i * a_i.
struct WeightedComposition {
  std::vector<int> a;
  int weight = 0;

  static WeightedComposition of(std::vector<int> a);
  std::string to_string() const;
  friend bool operator==(const WeightedComposition&,
                         const WeightedComposition&) = default;
};

/// All (a_1..a_len) of non-negative integers with sum i * a_i = n, in colex
/// order (last coordinate most significant, ascending).
std::vector<WeightedComposition> compositions(int len, int n);

/// The d x d matrix X. Entry (i, j) (1-based) is x_{i+j-1} when
/// j <= d-i+1 and x1^m * x_{i+j-d-1} otherwise. With mod_x1 every entry
/// divisible by x1 is zero and the matrix lives in T'; otherwise it lives
/// in k[x1..xd].
PolyMatrix build_matrix(const CurveParams& p, bool mod_x1);

/// det of the leading (i+1) x (i+1) block of X modulo x1, 1 <= i <= d-1.
Polynomial f_poly(int d, int i);

/// Column selections 1 <= j_1 < ... < j_{i+1} <= d in lexicographic order.
std::vector<std::vector<int>> column_selections(int d, int i);

/// The (i+1)-minors of the first i+1 rows of X modulo x1, one per column
/// selection (lexicographic), zero minors dropped.
PolyIdeal cal_J(int d, int i);

/// Same minors over the full ring k[x1..xd] for the given m.
std::vector<Polynomial> full_minors(const CurveParams& p, int i);

/// Sum over weight-n compositions of products of the minor ideals, with
/// generators the products of chosen minors (multisets for powers). n = 0
/// gives the unit ideal.
PolyIdeal cal_I(int d, int n);

/// cal_I(d, n) + (f_1, ..., f_k).
PolyIdeal cal_I_with_f(int d, int n, int k);

/// M_{r,s}^l: all monomials of degree l in x_r..x_s, as elements of T'.
std::vector<Monomial> monomial_block(int d, int r, int s, int l);

/// J_i = (x_{i+1}, ..., x_d)^{i+1}.
MonomialIdeal mono_J(int d, int i);

/// I_n; the unit ideal for n <= 0. Memoized and safe to call concurrently.
MonomialIdeal mono_I(int d, int n);

/// I_n computed literally as the sum over compositions of products of
/// powers of the J_i, without memoization. Slow; used as a cross-check.
MonomialIdeal mono_I_by_compositions(int d, int n);

/// (x_2^2, ..., x_{last}^{last}); the zero ideal when last < 2.
MonomialIdeal pure_powers(int d, int last);

/// Lambda_{j,n}: compositions (a_1..a_j) of weight n with a_j != 0.
std::vector<WeightedComposition> lambda_set(int j, int n);

/// The monomial set S(a) for a = (a_1..a_j), a_j != 0, built recursively:
/// {x_{j+1}^{(j+1)a_j - j}} alone if no earlier a_i is nonzero, otherwise
/// times S(a_1..a_k) times M_{k+1,j+1}^k for k the last earlier nonzero
/// index.
std::vector<Monomial> s_set(int d, const std::vector<int>& a);

/// Output of the quotient/remainder recursion used by the colon witness.
struct Algorithm1Result {
  int i = 0;
  int k = 0;
  int g = 0;
  int c = 0;
  /// q[j], r[j] for j = k-1 .. i (r[i] = 0, q[i] unused); other entries 0.
  std::vector<int> q;
  std::vector<int> r;
};

/// b holds b_1..b_{i-1} at indices 1..i-1 (index 0 ignored). Computes
/// k = min{l : sum_{j>=l} b_j <= i-1}, g = min(i, sum b_j), then q_j, r_j
/// for j = i-1 down to k with b_j - r_{j+1} = (j+1) q_j - r_j, 0 <= r_j <= j
/// (or (0, r_{j+1}) when b_j = 0), then c = g - sum_{j>=k} b_j and
/// (q_{k-1}, r_{k-1}) from c - r_k = k q_{k-1} - r_{k-1}.
Algorithm1Result algorithm1(const std::vector<int>& b, int i);

struct ColonWitness {
  Algorithm1Result qr;
  /// a'_1..a'_{i-1} at indices 1..i-1.
  std::vector<int> aprime;
  /// M'_1..M'_{i-1} at indices 1..i-1.
  std::vector<Monomial> mprime;
  Monomial n;
  /// Total weight sum_{j<i} j a'_j + sum_{j>=i} j a_j.
  int weight = 0;
};

/// Given M_j in J_j^{a_j} with deg M_j = (j+1) a_j (M and a indexed 1..d-1,
/// index 0 ignored), rewrites (prod_{j<i} M_j) / x_i^g as
/// (prod M'_j) * N with M'_j in J_j^{a'_j} and checks the weight bound
/// weight >= n - i + 1. Every claim is verified; a failure raises
/// InvariantViolation.
ColonWitness colon_witness(int d, const std::vector<Monomial>& m,
                           const WeightedComposition& a, int i);

}  // namespace monocurve::curve

#endif  // MONOCURVE_CURVE_HPP
