#include <doctest.h>

#include <numeric>
#include <random>

#include "monocurve/curve.hpp"
#include "monocurve/error.hpp"
#include "monocurve/verify.hpp"

using namespace monocurve;
using namespace monocurve::curve;

namespace {

Monomial random_block_monomial(std::mt19937& rng, int d, int first, int degree) {
  std::vector<int> e(tprime_vars(d), 0);
  std::uniform_int_distribution<int> pick(first, d);
  for (int t = 0; t < degree; ++t) ++e[pos(pick(rng))];
  return Monomial(std::span<const int>(e));
}

std::vector<std::string> strings(const std::vector<Monomial>& ms) {
  std::vector<std::string> out;
  for (const Monomial& m : ms) out.push_back(m.to_string());
  return out;
}

}  // namespace

TEST_SUITE("curve") {

TEST_CASE("build_matrix examples") {
  CHECK(build_matrix({3, 1}, true).to_string() == "[0, x2, x3]\n[x2, x3, 0]\n[x3, 0, 0]\n");
  CHECK(build_matrix({2, 1}, true).to_string() == "[0, x2]\n[x2, 0]\n");
  const PolyMatrix full = build_matrix({3, 1}, false);
  CHECK(full.at(1, 2).to_string(1) == "x1^2");
  CHECK(full.at(0, 0).to_string(1) == "x1");
  CHECK(build_matrix({4, 3}, false).at(3, 3).to_string(1) == "x1^3*x3");
  CHECK_THROWS_AS(build_matrix({4, 2}, false), PreconditionError);
}

TEST_CASE("f_poly examples") {
  CHECK(f_poly(3, 1).to_string() == "-x2^2");
  CHECK(leading_monomial(f_poly(4, 2)) == Monomial{0, 3, 0});
  for (int d = 2; d <= 7; ++d) {
    CHECK(leading_monomial(f_poly(d, d - 1)) == Monomial::variable(d - 1, pos(d), d));
    for (int i = 1; i <= d - 1; ++i) {
      CHECK(leading_monomial(f_poly(d, i)) == Monomial::variable(d - 1, pos(i + 1), i + 1));
    }
  }
  CHECK_THROWS_AS(f_poly(3, 3), PreconditionError);
}

TEST_CASE("cal_J and cal_I") {
  CHECK(cal_J(3, 1).gens().size() == 3);
  for (int d = 2; d <= 6; ++d) {
    const PolyIdeal top = cal_J(d, d - 1);
    REQUIRE(top.gens().size() == 1);
    CHECK(top.gens()[0] == f_poly(d, d - 1));
    CHECK(cal_I(d, 1).gens() == cal_J(d, 1).gens());
  }
  CHECK(cal_I(3, 0).gens().size() == 1);
  CHECK(cal_I(3, 0).gens()[0].to_string() == "1");
  CHECK(cal_I_with_f(3, 2, 2).gens().size() == cal_I(3, 2).gens().size() + 2);
}

TEST_CASE("mono_J and mono_I examples") {
  CHECK(mono_J(3, 2).to_string() == "x3^3");
  CHECK(mono_J(4, 2).to_string() == "x4^3, x3*x4^2, x3^2*x4, x3^3");
  CHECK(mono_I(3, 2).to_string() == "x3^3, x2^2*x3^2, x2^3*x3, x2^4");
  CHECK(mono_I(3, 0).is_unit());
  CHECK(mono_I(3, -2).is_unit());
  CHECK(mono_I(2, 5).to_string() == "x2^10");
}

TEST_CASE("recursive I_n agrees with the composition sum") {
  for (int d = 2; d <= 6; ++d) {
    for (int n = 0; n <= (d <= 4 ? 8 : 5); ++n) {
      CHECK(mono_I(d, n) == mono_I_by_compositions(d, n));
    }
  }
}

TEST_CASE("J_i is the minimalized set of anti-diagonal products") {
  for (int d = 2; d <= 6; ++d) {
    const PolyMatrix x = build_matrix({d, 1}, true);
    for (int i = 1; i <= d - 1; ++i) {
      std::vector<Monomial> antis;
      for (const auto& sel : column_selections(d, i)) {
        std::vector<std::size_t> cols;
        for (int c : sel) cols.push_back(static_cast<std::size_t>(c - 1));
        const Polynomial a = x.submatrix(static_cast<std::size_t>(i + 1), cols).antidiagonal_product();
        if (!a.is_zero()) antis.push_back(a.terms()[0].mono);
      }
      CHECK(MonomialIdeal::minimalize(d - 1, antis) == mono_J(d, i));
    }
  }
}

TEST_CASE("compositions and lambda sets") {
  std::vector<std::vector<int>> got;
  for (const auto& w : lambda_set(1, 2)) got.push_back(w.a);
  CHECK(got == std::vector<std::vector<int>>{{2}});
  got.clear();
  for (const auto& w : lambda_set(2, 2)) got.push_back(w.a);
  CHECK(got == std::vector<std::vector<int>>{{0, 1}});
  got.clear();
  for (const auto& w : lambda_set(2, 4)) got.push_back(w.a);
  CHECK(got == std::vector<std::vector<int>>{{2, 1}, {0, 2}});
  for (const auto& w : compositions(4, 7)) CHECK(w.weight == 7);
  // Number of weight-n compositions with parts <= 3 for n = 6: 7.
  CHECK(compositions(3, 6).size() == 7);
}

TEST_CASE("S-set examples") {
  CHECK(strings(s_set(3, {2})) == std::vector<std::string>{"x2^3"});
  CHECK(strings(s_set(3, {0, 1})) == std::vector<std::string>{"x3"});
  const std::vector<Monomial> s = s_set(3, {1, 1});
  CHECK(s.size() == 2);
  CHECK(std::find(s.begin(), s.end(), Monomial{2, 1}) != s.end());
  CHECK(std::find(s.begin(), s.end(), Monomial{1, 2}) != s.end());
  CHECK_THROWS_AS(s_set(3, {1, 0}), PreconditionError);
}

TEST_CASE("S-set degree law and membership") {
  for (int d = 2; d <= 6; ++d) {
    for (int j = 1; j <= d - 1; ++j) {
      for (int n = 1; n <= 7; ++n) {
        for (const auto& a : lambda_set(j, n)) {
          std::vector<MonomialIdeal> factors;
          unsigned degree = 0;
          for (int l = 1; l <= j; ++l) {
            const int al = a.a[static_cast<std::size_t>(l - 1)];
            factors.push_back(mono_J(d, l).pow(static_cast<unsigned>(al)));
            degree += static_cast<unsigned>((l + 1) * al);
          }
          const MonomialIdeal ja = ideal_product(d - 1, factors);
          for (const Monomial& s : s_set(d, a.a)) {
            for (const Monomial& b : monomial_block(d, j + 1, d, j)) {
              CHECK(ja.contains(s * b));
              CHECK((s * b).degree() == degree);
            }
          }
        }
      }
    }
  }
}

TEST_CASE("counting lemma for d <= 6, 2 <= n <= 12") {
  for (int d = 2; d <= 6; ++d) {
    for (int n = 2; n <= 12; ++n) {
      for (int j = 1; j <= d - 1; ++j) {
        long long total = 0;
        for (const auto& a : lambda_set(j, n - 1)) total += static_cast<long long>(s_set(d, a.a).size());
        CHECK(total == verify::binomial(n - 2, j - 1));
      }
    }
  }
}

TEST_CASE("algorithm1 examples") {
  // b_j = 0 propagates the remainder.
  const Algorithm1Result r = algorithm1({0, 0, 5, 0, 0, 0}, 6);
  CHECK(r.k == 1);
  CHECK(r.g == 5);
  CHECK(r.q[2] == 2);
  CHECK(r.r[2] == 1);
  CHECK(r.q[1] == 0);
  CHECK(r.r[1] == r.r[2]);
  CHECK(r.c == 0);
  CHECK(r.q[0] == 0);
  CHECK(r.r[0] == r.r[1]);
  for (int j = r.k; j <= 5; ++j) {
    CHECK(r.r[static_cast<std::size_t>(j)] >= 0);
    CHECK(r.r[static_cast<std::size_t>(j)] <= j);
  }
  CHECK_THROWS_AS(algorithm1({0, 1}, 3), PreconditionError);

  // A remainder carried over b_2 = 0 exceeds what is left below it.
  const Algorithm1Result neg = algorithm1({0, 1, 0, 1, 0}, 5);
  CHECK(neg.k == 1);
  CHECK(neg.q[3] == 1);
  CHECK(neg.r[2] == 3);
  CHECK(neg.q[1] == -1);
  CHECK(neg.r[1] == 0);
}

TEST_CASE("colon witness with negative quotients") {
  std::vector<Monomial> m(6, Monomial(5));
  m[1] = Monomial{1, 0, 0, 0, 1};
  m[3] = Monomial{0, 0, 0, 3, 5};
  const ColonWitness w = colon_witness(6, m, WeightedComposition::of({1, 0, 2, 0, 0}), 6);
  CHECK(w.qr.k == 2);
  CHECK(w.qr.c == 1);
  CHECK(w.qr.q[1] == -1);
  CHECK(w.aprime[1] == 2);
  CHECK(w.mprime[1] == Monomial{1, 0, 0, 3, 0});
  CHECK(w.aprime[3] == 0);
  CHECK(w.weight == 2);
}

TEST_CASE("colon witness examples") {
  std::vector<Monomial> m(3, Monomial(2));
  m[1] = Monomial{3, 1};
  const ColonWitness w = colon_witness(3, m, WeightedComposition::of({2, 0}), 2);
  CHECK(w.qr.k == 2);
  CHECK(w.qr.c == 2);
  CHECK(w.qr.q[1] == 1);
  CHECK(w.qr.r[1] == 0);
  CHECK(w.qr.g == 2);
  CHECK(w.aprime[1] == 1);
  CHECK(w.mprime[1] == Monomial{1, 1});
  CHECK(w.n.is_one());
  CHECK(w.weight >= 1);

  // No x_i in any M_j: identity witness.
  std::vector<Monomial> m2(4, Monomial(3));
  m2[1] = Monomial{0, 2, 0};
  m2[2] = Monomial{0, 0, 3};
  const ColonWitness id = colon_witness(4, m2, WeightedComposition::of({1, 1, 0}), 2);
  CHECK(id.qr.g == 0);
  CHECK(id.aprime[1] == 1);
  CHECK(id.mprime[1] == m2[1]);
  CHECK(id.n.is_one());
}

TEST_CASE("colon witness claims hold on random generators") {
  std::mt19937 rng(2718);
  std::size_t checked = 0;
  for (int d = 2; d <= 6; ++d) {
    for (int n = 1; n <= 7; ++n) {
      for (const auto& a : compositions(d - 1, n)) {
        for (int trial = 0; trial < 4; ++trial) {
          std::vector<Monomial> m(static_cast<std::size_t>(d), Monomial(tprime_vars(d)));
          Monomial product(tprime_vars(d));
          for (int j = 1; j <= d - 1; ++j) {
            m[static_cast<std::size_t>(j)] = random_block_monomial(
                rng, d, j + 1, (j + 1) * a.a[static_cast<std::size_t>(j - 1)]);
            product *= m[static_cast<std::size_t>(j)];
          }
          REQUIRE(mono_I(d, n).contains(product));
          for (int i = 2; i <= d; ++i) {
            const ColonWitness w = colon_witness(d, m, a, i);
            CHECK(w.weight >= n - i + 1);
            // The colon element (prod M_j) / x_i^g lies in I_{n-i+1}.
            const Monomial xi_g = Monomial::variable(tprime_vars(d), pos(i), w.qr.g);
            CHECK(mono_I(d, n - i + 1).contains(product / xi_g));
            for (int j = 1; j < i; ++j) {
              CHECK(w.mprime[static_cast<std::size_t>(j)].degree() ==
                    static_cast<unsigned>((j + 1) * w.aprime[static_cast<std::size_t>(j)]));
            }
            ++checked;
          }
        }
      }
    }
  }
  CHECK(checked > 1000);
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS((CurveParams{4, 2}.validate()), PreconditionError);
  CHECK_THROWS_AS((CurveParams{1, 1}.validate()), PreconditionError);
  CHECK_NOTHROW((CurveParams{5, 3}.validate()));
  CHECK_THROWS_AS(mono_J(3, 0), PreconditionError);
  CHECK_THROWS_AS(cal_J(3, 3), PreconditionError);
}

}  // TEST_SUITE
