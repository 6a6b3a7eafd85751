// Acceptance run: one PASS/FAIL line per criterion, each under its time limit.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "monocurve/curve.hpp"
#include "monocurve/groebner.hpp"
#include "monocurve/order.hpp"
#include "monocurve/verify.hpp"

using namespace monocurve;
using namespace monocurve::curve;
namespace mv = monocurve::verify;

namespace {

struct Outcome {
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;

  void check(bool ok, const std::string& what) {
    ++cases;
    if (!ok) {
      if (failures == 0) first_failure = what;
      ++failures;
    }
  }
  void absorb(const mv::VerificationReport& r) {
    for (const mv::Case& c : r.cases) {
      check(c.pass, r.suite + " d=" + r.params["d"].dump() + " " + c.inputs.dump() +
                        " expected " + c.expected.dump() + " actual " + c.actual.dump());
    }
  }
};

std::string cell(int d, int n) { return "d=" + std::to_string(d) + " n=" + std::to_string(n); }

std::size_t brute_staircase(const MonomialIdeal& ideal) {
  unsigned cap = 0;
  for (const Monomial& g : ideal.gens()) cap += g.degree();
  std::size_t count = 0;
  for (unsigned e = 0; e <= cap; ++e) {
    for (const Monomial& m : monomials_of_degree(ideal.nvars(), 0, ideal.nvars() - 1, e)) {
      count += !ideal.contains(m);
    }
  }
  return count;
}

Monomial random_monomial(std::mt19937& rng, std::size_t nvars, int max_exp) {
  std::uniform_int_distribution<int> e(0, max_exp);
  std::vector<int> v(nvars);
  for (int& x : v) x = e(rng);
  return Monomial(std::span<const int>(v));
}

MonomialIdeal random_ideal(std::mt19937& rng, std::size_t nvars) {
  std::vector<Monomial> gens;
  const int count = 1 + static_cast<int>(rng() % 4);
  for (int k = 0; k < count; ++k) gens.push_back(random_monomial(rng, nvars, 3));
  return MonomialIdeal::minimalize(nvars, std::move(gens));
}

MonomialIdeal block(int d, int r, int s, int l) {
  if (r > s) return l == 0 ? MonomialIdeal::unit(d - 1) : MonomialIdeal::zero(d - 1);
  return MonomialIdeal::minimalize(d - 1, monomial_block(d, r, s, l));
}

const int kLengthGrid[][2] = {{2, 12}, {3, 10}, {4, 8}, {5, 6}, {6, 5}};

Outcome length_formula() {
  Outcome o;
  for (const auto& [d, n_max] : kLengthGrid) {
    for (int n = 1; n <= n_max; ++n) {
      o.check(static_cast<long long>(mono_I(d, n).length_quotient()) == mv::expected_length(d, n),
              cell(d, n));
    }
  }
  return o;
}

Outcome colon_identities() {
  Outcome o;
  for (int d = 2; d <= 6; ++d) {
    for (int n = 1; n <= 8; ++n) {
      for (int i = 2; i <= d; ++i) {
        const MonomialIdeal lhs = mono_I(d, n).colon(Monomial::variable(d - 1, pos(i), i));
        const bool ok = n < i ? lhs.is_unit() : lhs == mono_I(d, n - i + 1);
        o.check(ok, cell(d, n) + " i=" + std::to_string(i));
      }
    }
  }
  return o;
}

Outcome leading_ideals() {
  Outcome o;
  for (const auto& [d, n_max] : std::vector<std::pair<int, int>>{{3, 5}, {4, 4}, {5, 3}}) {
    for (int n = 1; n <= n_max; ++n) {
      o.check(buchberger(cal_I(d, n)).leading_ideal() == mono_I(d, n), cell(d, n));
    }
  }
  return o;
}

Outcome alternating_with_powers() {
  Outcome o;
  for (int d = 2; d <= 5; ++d) {
    for (int n = 1; n <= 6; ++n) {
      for (int k = 1; k <= d - 1; ++k) {
        const auto actual = static_cast<long long>(
            (mono_I(d, n) + pure_powers(d, k + 1)).length_quotient());
        o.check(actual == mv::expected_length_with_powers(d, n, k),
                cell(d, n) + " k=" + std::to_string(k));
      }
    }
  }
  return o;
}

Outcome groebner_vs_monomial() {
  Outcome o;
  for (int d = 3; d <= 4; ++d) {
    for (int n = 1; n <= 4; ++n) {
      for (int k = 1; k <= d - 1; ++k) {
        const auto actual = static_cast<long long>(quotient_length_poly(cal_I_with_f(d, n, k)));
        o.check(actual == mv::expected_length_with_powers(d, n, k),
                cell(d, n) + " k=" + std::to_string(k));
      }
    }
  }
  return o;
}

Outcome counting_lemma() {
  Outcome o;
  for (int d = 2; d <= 6; ++d) {
    for (int n = 2; n <= 12; ++n) {
      for (int j = 1; j <= d - 1; ++j) {
        long long total = 0;
        for (const auto& a : lambda_set(j, n - 1)) total += static_cast<long long>(s_set(d, a.a).size());
        o.check(total == mv::binomial(n - 2, j - 1), cell(d, n) + " j=" + std::to_string(j));
      }
    }
  }
  return o;
}

Outcome spanning_and_bound() {
  Outcome o;
  for (int d = 2; d <= 5; ++d) o.absorb(mv::check_s_counts_and_spanning(d, 8));
  return o;
}

Outcome regular_sequence() {
  Outcome o;
  for (int d = 2; d <= 5; ++d) o.absorb(mv::check_assoc_graded_regseq(d, 6));
  return o;
}

Outcome colon_chain() {
  Outcome o;
  for (int d = 2; d <= 4; ++d) o.absorb(mv::check_gs_colon_chain(d, 5, 0));
  return o;
}

Outcome socle() {
  Outcome o;
  for (int d = 2; d <= 4; ++d) {
    o.check(mv::socle_of_artinian_reduction(d).dimension == 1, "d=" + std::to_string(d));
  }
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  for (int d = 2; d <= 4; ++d) {
    for (int n = 1; n <= 4; ++n) {
      for (int k = 0; k <= d - 1; ++k) {
        const PolyIdeal ideal = cal_I_with_f(d, n, k);
        const std::size_t gb = quotient_length_poly(ideal);
        const std::size_t stair = brute_staircase(leading_ideal(ideal));
        const std::size_t oracle = hilbert_oracle(ideal);
        o.check(gb == stair && stair == oracle,
                cell(d, n) + " k=" + std::to_string(k) + " groebner=" + std::to_string(gb) +
                    " staircase=" + std::to_string(stair) + " oracle=" + std::to_string(oracle));
      }
    }
  }
  return o;
}

Outcome property_suites() {
  Outcome o;
  std::mt19937 rng(20260101);
  const MonomialOrder& ord = grevelex();
  for (int t = 0; t < 1000; ++t) {
    const std::size_t nv = 1 + rng() % 6;
    const Monomial a = random_monomial(rng, nv, 4);
    const Monomial b = random_monomial(rng, nv, 4);
    const Monomial c = random_monomial(rng, nv, 4);
    const auto ab = ord.compare(a, b);
    bool ok = (ab == 0) == (a == b) && (ab < 0) == (ord.compare(b, a) > 0);
    ok = ok && ord.compare(a * c, b * c) == ab;
    if (a.degree() != b.degree()) ok = ok && ((ab > 0) == (a.degree() > b.degree()));
    o.check(ok, "order axioms " + a.to_string() + " vs " + b.to_string());
  }
  for (int t = 0; t < 1000; ++t) {
    const std::size_t nv = 1 + rng() % 4;
    const MonomialIdeal I = random_ideal(rng, nv);
    const MonomialIdeal J = random_ideal(rng, nv);
    const Monomial m = random_monomial(rng, nv, 3);
    const Monomial m2 = random_monomial(rng, nv, 3);
    const bool ok = I.colon(m).colon(m2) == I.colon(m * m2) &&
                    (I + J).colon(m) == I.colon(m) + J.colon(m);
    o.check(ok, "colon laws " + I.to_string() + " : " + m.to_string());
  }
  for (int t = 0; t < 1000; ++t) {
    const int d = 3 + static_cast<int>(rng() % 4);
    const int j = 1 + static_cast<int>(rng() % (d - 1));
    const int a = 1 + static_cast<int>(rng() % 4);
    const MonomialIdeal one =
        block(d, j + 1, d, j).times(Monomial::variable(d - 1, pos(j + 1), (j + 1) * a - j)) +
        block(d, j + 2, d, j + 1) * block(d, j + 1, d, (j + 1) * (a - 1));
    bool ok = block(d, j + 1, d, (j + 1) * a) == one;
    const int k = 1 + static_cast<int>(rng() % (d - 1));
    const int b = 1 + static_cast<int>(rng() % 4);
    if (k < j) {
      const MonomialIdeal lhs = block(d, k + 1, d, a) * block(d, j + 1, d, b);
      const MonomialIdeal rhs = block(d, k + 1, j + 1, a) * block(d, j + 1, d, b) +
                                block(d, k + 1, d, a - 1) * block(d, j + 2, d, b + 1);
      ok = ok && lhs == rhs;
    }
    o.check(ok, "block identities d=" + std::to_string(d) + " j=" + std::to_string(j));
  }
  return o;
}

struct Criterion {
  int id;
  const char* title;
  double limit_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "length formula l(T'/I_n) = d C(n+d-2, d-1)", 120, length_formula},
      {2, "colon identities (I_n : x_i^i)", 60, colon_identities},
      {3, "leading ideal LI(cal_I_n) = I_n", 300, leading_ideals},
      {4, "alternating-sum lengths with pure powers", 120, alternating_with_powers},
      {5, "Groebner lengths with f_1..f_k match the formula", 300, groebner_vs_monomial},
      {6, "S-set counting lemma", 30, counting_lemma},
      {7, "spanning and length bound for I_{n-1}/(I_n : x_d)", 60, spanning_and_bound},
      {8, "associated graded regular-sequence colon identity", 120, regular_sequence},
      {9, "symbolic associated graded colon chain", 120, colon_chain},
      {10, "socle dimension of the Artinian reduction", 60, socle},
      {11, "Groebner / staircase / linear-algebra length agreement", 300, oracle_equivalence},
      {12, "property suites (order, colon laws, block identities)", 120, property_suites},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    std::string error;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < c.limit_seconds;
    const bool ok = error.empty() && o.failures == 0 && o.cases > 0 && in_time;
    failed += !ok;
    std::printf("%s  %2d  %-58s %5zu cases  %7.2fs (limit %.0fs)\n", ok ? "PASS" : "FAIL", c.id,
                c.title, o.cases, secs, c.limit_seconds);
    if (!error.empty()) std::printf("        error: %s\n", error.c_str());
    if (o.failures > 0) {
      std::printf("        %zu failing cases, first: %s\n", o.failures, o.first_failure.c_str());
    }
    if (!in_time) std::printf("        over the time limit\n");
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
