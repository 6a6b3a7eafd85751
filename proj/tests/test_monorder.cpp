#include <doctest.h>

#include <random>

#include "monocurve/curve.hpp"
#include "monocurve/error.hpp"
#include "monocurve/order.hpp"
#include "monocurve/polynomial.hpp"

using namespace monocurve;

namespace {

Monomial random_monomial(std::mt19937& rng, std::size_t nvars, int max_exp) {
  std::uniform_int_distribution<int> e(0, max_exp);
  std::vector<int> v(nvars);
  for (int& x : v) x = e(rng);
  return Monomial(std::span<const int>(v));
}

}  // namespace

TEST_SUITE("monorder") {

TEST_CASE("compare examples") {
  const auto& o = grevelex();
  CHECK(o.compare(Monomial{1, 0}, Monomial{0, 1}) < 0);
  CHECK(o.compare(Monomial{1, 0, 1}, Monomial{0, 2, 0}) < 0);
  CHECK(o.compare(Monomial{3, 0}, Monomial{0, 2}) > 0);
  CHECK(o.compare(Monomial{0, 2}, Monomial{0, 2}) == 0);
  // x2 < x3 < ... < x7
  for (std::size_t v = 0; v + 1 < 6; ++v) {
    CHECK(o.compare(Monomial::variable(6, v), Monomial::variable(6, v + 1)) < 0);
  }
  CHECK_THROWS_AS(o.compare(Monomial{1}, Monomial{1, 0}), StructuralError);
}

TEST_CASE("leading_monomial examples") {
  const std::size_t n = 3;
  const Polynomial f = Polynomial::variable(n, 0) * Polynomial::variable(n, 2) -
                       Polynomial::variable(n, 1) * Polynomial::variable(n, 1);
  CHECK(leading_monomial(f) == Monomial{0, 2, 0});
  CHECK(leading_monomial(Polynomial::monomial(Monomial{2, 1, 0}, Scalar(-7))) ==
        Monomial{2, 1, 0});
  CHECK_THROWS_AS(leading_monomial(Polynomial(n)), DomainError);

  // 2-minors with j1 = 1 or j2 = d lead with x_{j1+1} x_{j2}.
  for (int d = 3; d <= 6; ++d) {
    const auto x = curve::build_matrix({d, 1}, true);
    for (const auto& sel : curve::column_selections(d, 1)) {
      if (sel[0] != 1 && sel[1] != d) continue;
      const Polynomial minor = determinant(x.submatrix(
          2, {static_cast<std::size_t>(sel[0] - 1), static_cast<std::size_t>(sel[1] - 1)}));
      const Monomial expected = Monomial::variable(d - 1, curve::pos(sel[0] + 1)) *
                                Monomial::variable(d - 1, curve::pos(sel[1]));
      CHECK(leading_monomial(minor) == expected);
    }
  }
}

TEST_CASE("order axioms on 1000 random cases") {
  std::mt19937 rng(1234);
  const auto& o = grevelex();
  for (int t = 0; t < 1000; ++t) {
    const std::size_t nvars = 1 + rng() % 6;
    const Monomial a = random_monomial(rng, nvars, 4);
    const Monomial b = random_monomial(rng, nvars, 4);
    const Monomial c = random_monomial(rng, nvars, 4);
    const auto ab = o.compare(a, b);
    const auto ba = o.compare(b, a);
    CHECK((ab == 0) == (a == b));
    CHECK((ab < 0) == (ba > 0));
    CHECK(o.compare(a * c, b * c) == ab);
    if (a.degree() > b.degree()) CHECK(ab > 0);
    if (o.compare(a, b) < 0 && o.compare(b, c) < 0) CHECK(o.compare(a, c) < 0);
    if (!a.is_one()) CHECK(o.compare(Monomial(nvars), a) < 0);
    CHECK(grevelex_compare(a, b) == ab);
  }
}

TEST_CASE("graded lex is a different total order") {
  const auto& g = graded_lex();
  CHECK(g.compare(Monomial{1, 0}, Monomial{0, 1}) > 0);
  std::mt19937 rng(77);
  for (int t = 0; t < 1000; ++t) {
    const Monomial a = random_monomial(rng, 3, 3);
    const Monomial b = random_monomial(rng, 3, 3);
    const Monomial c = random_monomial(rng, 3, 3);
    CHECK(g.compare(a * c, b * c) == g.compare(a, b));
    CHECK((g.compare(a, b) == 0) == (a == b));
  }
}

TEST_CASE("leading monomial of every minor is its anti-diagonal product") {
  for (int d = 2; d <= 6; ++d) {
    const auto x = curve::build_matrix({d, 1}, true);
    for (int i = 1; i <= d - 1; ++i) {
      for (const auto& sel : curve::column_selections(d, i)) {
        std::vector<std::size_t> cols;
        for (int c : sel) cols.push_back(static_cast<std::size_t>(c - 1));
        const PolyMatrix sub = x.submatrix(static_cast<std::size_t>(i + 1), cols);
        const Polynomial det = determinant(sub);
        const Polynomial anti = sub.antidiagonal_product();
        REQUIRE(!det.is_zero());
        REQUIRE(anti.size() == 1);
        CHECK(leading_monomial(det) == anti.terms()[0].mono);
      }
    }
  }
}

}  // TEST_SUITE
