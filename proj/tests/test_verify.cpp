#include <doctest.h>

#include "monocurve/curve.hpp"
#include "monocurve/verify.hpp"

using namespace monocurve;
using namespace monocurve::verify;

namespace {

const Case* find_case(const VerificationReport& r, const Json& inputs) {
  for (const Case& c : r.cases) {
    bool match = true;
    for (const auto& [key, value] : inputs.items()) {
      if (!c.inputs.contains(key) || c.inputs.at(key) != value) match = false;
    }
    if (match) return &c;
  }
  return nullptr;
}

Options quiet() {
  Options o;
  o.timing = false;
  return o;
}

}  // namespace

TEST_SUITE("verify") {

TEST_CASE("binomials and expected lengths") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(-1, 0) == 0);
  CHECK(binomial(2, 3) == 0);
  CHECK(expected_length(2, 7) == 14);
  CHECK(expected_length(5, 4) == 175);
  CHECK(expected_length(3, 0) == 0);
  // 3 (C(3,2) - C(2,2) - C(1,2) + C(0,2)) = 6
  CHECK(expected_length_with_powers(3, 2, 2) == 6);
  CHECK(expected_length_with_powers(3, 3, 1) == 9);
}

TEST_CASE("colon suite") {
  const VerificationReport r = check_colon_identity(3, 2, quiet());
  CHECK(r.all_passed());
  CHECK(find_case(r, Json{{"n", 2}, {"i", 3}})->actual == "unit");
  CHECK(find_case(r, Json{{"n", 2}, {"i", 2}})->actual == describe(curve::mono_I(3, 1)));
  const VerificationReport r5 = check_colon_identity(5, 7, quiet());
  CHECK(r5.all_passed());
  CHECK(find_case(r5, Json{{"n", 7}, {"i", 4}})->actual == describe(curve::mono_I(5, 4)));
}

TEST_CASE("regseq suite") {
  const VerificationReport r = check_assoc_graded_regseq(5, 3, quiet());
  CHECK(r.all_passed());
  CHECK(find_case(r, Json{{"n", 3}, {"i", 5}})->pass);
  CHECK(check_assoc_graded_regseq(4, 2, quiet()).all_passed());
}

TEST_CASE("length suite") {
  const VerificationReport r = check_length_formula(2, 5, quiet());
  CHECK(r.all_passed());
  CHECK(find_case(r, Json{{"n", 5}})->actual == 10);
  CHECK(find_case(check_length_formula(3, 2, quiet()), Json{{"n", 2}})->actual == 9);
  CHECK(find_case(check_length_formula(5, 4, quiet()), Json{{"n", 4}})->actual == 175);
}

TEST_CASE("alternating suite") {
  const VerificationReport r = check_alternating_lengths(3, 3, 0, quiet());
  CHECK(r.all_passed());
  CHECK(find_case(r, Json{{"n", 3}, {"k", 2}})->actual == 9);
  CHECK(find_case(r, Json{{"n", 3}, {"k", 3}})->actual == 6);
  CHECK(check_alternating_lengths(4, 1, 2, quiet()).all_passed());
  CHECK_THROWS(check_alternating_lengths(3, 3, 1, quiet()));
}

TEST_CASE("leading suite") {
  const VerificationReport plain = check_leading_ideal_equality(3, 2, false, 0, quiet());
  CHECK(plain.all_passed());
  CHECK(find_case(plain, Json{{"n", 1}})->actual == "x3^2, x2*x3, x2^2");
  const VerificationReport with_f = check_leading_ideal_equality(3, 2, true, 2, quiet());
  CHECK(with_f.all_passed());
  CHECK(check_leading_ideal_equality(4, 3, false, 0, quiet()).all_passed());
}

TEST_CASE("scounts suite") {
  const VerificationReport r = check_s_counts_and_spanning(3, 3, quiet());
  CHECK(r.all_passed());
  CHECK(find_case(r, Json{{"n", 3}, {"check", "count"}, {"j", 1}})->actual == 1);
  CHECK(find_case(r, Json{{"n", 3}, {"check", "count"}, {"j", 2}})->actual == 1);
  const VerificationReport r4 = check_s_counts_and_spanning(4, 4, quiet());
  const Case* bound = find_case(r4, Json{{"n", 4}, {"check", "bound"}});
  REQUIRE(bound != nullptr);
  CHECK(bound->actual == 10);
  CHECK(bound->note == "equality");
  CHECK(check_s_counts_and_spanning(2, 6, quiet()).all_passed());
}

TEST_CASE("gscolon suite") {
  const VerificationReport r = check_gs_colon_chain(3, 2, 0, quiet());
  CHECK(r.all_passed());
  CHECK(find_case(r, Json{{"n", 1}, {"k", 1}})->actual == 3);
  CHECK(check_gs_colon_chain(4, 3, 3, quiet()).all_passed());
}

TEST_CASE("socle of the Artinian reduction") {
  const SocleResult s2 = socle_of_artinian_reduction(2);
  CHECK(s2.total_dimension == 2);
  REQUIRE(s2.socle.size() == 1);
  CHECK(s2.socle[0].first == 0);
  CHECK(s2.socle[0].second.to_string() == "x2");
  for (int d = 2; d <= 4; ++d) {
    const SocleResult s = socle_of_artinian_reduction(d);
    CHECK(s.dimension == 1);
    for (const auto& [n, u] : s.socle) CHECK(!(n == 0 && u.is_one()));
  }
  CHECK(socle_dimension_artinian_reduction(3, quiet()).all_passed());
}

TEST_CASE("sanity suite") {
  CHECK(check_construction_sanity(3, 1, 2, quiet()).all_passed());
  CHECK(check_construction_sanity(4, 3, 2, quiet()).all_passed());
  CHECK_THROWS(check_construction_sanity(4, 2, 2, quiet()));
}

TEST_CASE("reports are deterministic and round-trip through JSON") {
  Options parallel = quiet();
  parallel.jobs = 3;
  const VerificationReport a = check_s_counts_and_spanning(4, 5, quiet());
  const VerificationReport b = check_s_counts_and_spanning(4, 5, parallel);
  CHECK(to_json(a).dump(2) == to_json(b).dump(2));
  CHECK(render_text(a) == render_text(b));
  CHECK(render_csv(a) == render_csv(b));

  const std::string text = to_json(a).dump(2);
  const VerificationReport back = report_from_json(Json::parse(text));
  CHECK(to_json(back).dump(2) == text);
  CHECK(back.summary.total == a.cases.size());
}

TEST_CASE("failing cases carry counterexamples") {
  Case c;
  VerificationReport r;
  r.suite = "demo";
  c.inputs = Json{{"n", 1}};
  c.expected = "x2";
  c.actual = "x3";
  c.detail = Json{{"expected_gens", {"x2"}}, {"actual_gens", {"x3"}}};
  r.cases.push_back(c);
  r.summary = {1, 0, 1, 0};
  const std::string text = render_text(r);
  CHECK(text.find("FAIL") != std::string::npos);
  CHECK(text.find("expected_gens") != std::string::npos);
  CHECK(render_csv(r).find("\"{\"\"expected_gens\"\"") != std::string::npos);
}

TEST_CASE("describe") {
  CHECK(describe(MonomialIdeal::unit(2)) == "unit");
  CHECK(describe(MonomialIdeal::zero(2)) == "0");
  CHECK(describe(curve::mono_I(3, 2)) == "x3^3, x2^2*x3^2, x2^3*x3, x2^4");
  CHECK(describe(curve::mono_I(4, 3)).find("gens, degrees") != std::string::npos);
}

}  // TEST_SUITE
