#ifndef MONOCURVE_VERIFY_HPP
#define MONOCURVE_VERIFY_HPP

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "monocurve/monideal.hpp"

/// Verification suites. Each suite enumerates a grid of cases, evaluates
/// them (possibly on several threads) and collects expected vs actual values
/// into a VerificationReport.
namespace monocurve::verify {

using Json = nlohmann::ordered_json;

struct Case {
  Json inputs = Json::object();
  Json expected;
  Json actual;
  bool pass = false;
  /// Free-form remark, e.g. an observed equality where only <= is claimed.
  std::string note;
  /// Counterexample data; filled for failing cases.
  Json detail;
};

struct Summary {
  std::size_t total = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  long long millis = 0;
};

struct VerificationReport {
  std::string suite;
  Json params = Json::object();
  std::vector<Case> cases;
  Summary summary;

  bool all_passed() const { return summary.failed == 0; }
};

struct Options {
  /// Worker threads; 0 picks the hardware concurrency.
  unsigned jobs = 1;
  /// When false, summary.millis is reported as 0 so output is reproducible.
  bool timing = true;
};

/// (I_n : x_i^i) equals the unit ideal for n < i and I_{n-i+1} otherwise;
/// n = 1..n_max, i = 2..d.
VerificationReport check_colon_identity(int d, int n_max, const Options& opt = {});

/// ((I_{n+i} + sum_{j=2}^{i-1} x_j^j I_{n+i-j}) : x_i^i)
///   = I_{n+1} + sum_{j=2}^{i-1} x_j^j I_{n+1-j};  n = 0..n_max, i = 2..d.
VerificationReport check_assoc_graded_regseq(int d, int n_max, const Options& opt = {});

/// l(T'/I_n) = d * C(n+d-2, d-1); n = 1..n_max.
VerificationReport check_length_formula(int d, int n_max, const Options& opt = {});

/// l(T'/(I_n + (x2^2..x_k^k))) against both the binomial alternating sum
/// and the alternating sum of staircase lengths. k = 0 runs k = 2..d.
VerificationReport check_alternating_lengths(int d, int n_max, int k,
                                             const Options& opt = {});

/// Without f: LI(cal_I_n) = I_n. With f: LI(cal_I_n + (f_1..f_k)) equals
/// I_n + (x2^2..x_{k+1}^{k+1}), via containment plus length equality; k = 0
/// runs k = 1..d-1. Lengths are cross-checked against the linear-algebra
/// oracle for d <= 4, n <= 4.
VerificationReport check_leading_ideal_equality(int d, int n_max, bool with_f, int k,
                                                const Options& opt = {});

/// S-set counts, spanning of I_{n-1} modulo (I_n : x_d), containment
/// (I_n : x_d) in I_{n-1} and the length bound; n = 2..n_max.
VerificationReport check_s_counts_and_spanning(int d, int n_max, const Options& opt = {});

/// l(T'/(I_{n+1}+P_k)) - l(T'/(I_{n+1}+P_{k+1})) = l(T'/(I_{n+1-k}+P_k)) with
/// P_k = (x2^2..x_k^k); n = 0..n_max; k = 0 runs k = 1..d-1.
VerificationReport check_gs_colon_chain(int d, int n_max, int k, const Options& opt = {});

/// Socle of the Artinian reduction B = sum_n I_n / K_n.
struct SocleResult {
  std::size_t dimension = 0;
  std::size_t total_dimension = 0;
  /// dim B_n for n = 0, 1, ... up to the last nonzero piece.
  std::vector<std::size_t> piece_dimensions;
  /// Socle basis as (n, monomial).
  std::vector<std::pair<int, Monomial>> socle;
};

/// Throws InvariantViolation if B does not vanish by n = C(d,2) + d.
SocleResult socle_of_artinian_reduction(int d);
VerificationReport socle_dimension_artinian_reduction(int d, const Options& opt = {});

/// Homogeneity of cal_I_n, Artinian leading ideal, and vanishing of the
/// full-ring minors under t -> (t^{n_1}, ..., t^{n_d}).
VerificationReport check_construction_sanity(int d, int m, int n_max,
                                             const Options& opt = {});

/// d * C(n+d-2, d-1), zero for n <= 0.
long long expected_length(int d, int n);
/// d * sum over subsets {j_1 < ... < j_i} of {1..k} of
/// (-1)^i C(n - sum j + d - 2, d - 1), with C(a, b) = 0 for a < b.
long long expected_length_with_powers(int d, int n, int k);
/// Binomial coefficient; 0 when n < 0, k < 0 or k > n.
long long binomial(long long n, long long k);

/// Short rendering of an ideal: "unit", "0", the generator list when small,
/// otherwise generator count, degree range and a fingerprint.
std::string describe(const MonomialIdeal& ideal);

Json to_json(const VerificationReport& report);
VerificationReport report_from_json(const Json& j);
std::string render_text(const VerificationReport& report);
std::string render_csv(const VerificationReport& report, bool header = true);

/// Evaluates tasks on `jobs` threads; results keep task order.
std::vector<Case> run_cases(const std::vector<std::function<Case()>>& tasks,
                            unsigned jobs);

}  // namespace monocurve::verify

#endif  // MONOCURVE_VERIFY_HPP
