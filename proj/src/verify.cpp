#include "monocurve/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <set>
#include <sstream>
#include <thread>

#include "monocurve/curve.hpp"
#include "monocurve/error.hpp"
#include "monocurve/groebner.hpp"
#include "monocurve/scalar.hpp"

namespace monocurve::verify {

using namespace monocurve::curve;

long long binomial(long long n, long long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

long long expected_length(int d, int n) {
  if (n <= 0) return 0;
  return d * binomial(n + d - 2, d - 1);
}

long long expected_length_with_powers(int d, int n, int k) {
  long long total = 0;
  for (unsigned mask = 0; mask < (1U << k); ++mask) {
    int sum = 0;
    int size = 0;
    for (int j = 1; j <= k; ++j) {
      if (mask & (1U << (j - 1))) {
        sum += j;
        ++size;
      }
    }
    const long long term = binomial(n - sum + d - 2, d - 1);
    total += (size % 2 == 0) ? term : -term;
  }
  return d * total;
}

std::string describe(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) return "0";
  if (ideal.is_unit()) return "unit";
  if (ideal.gens().size() <= 8) return ideal.to_string();
  std::uint64_t h = 1469598103934665603ULL;
  for (char ch : ideal.to_string()) {
    h ^= static_cast<unsigned char>(ch);
    h *= 1099511628211ULL;
  }
  std::ostringstream os;
  os << ideal.gens().size() << " gens, degrees " << ideal.gens().front().degree()
     << ".." << ideal.gens().back().degree() << ", fp " << std::hex
     << (h & 0xffffffffULL);
  return os.str();
}

namespace {

Json gens_json(const MonomialIdeal& ideal) {
  Json out = Json::array();
  for (const Monomial& g : ideal.gens()) out.push_back(g.to_string());
  return out;
}

void compare_ideals(Case& c, const MonomialIdeal& expected,
                    const MonomialIdeal& actual) {
  c.expected = describe(expected);
  c.actual = describe(actual);
  c.pass = expected == actual;
  if (!c.pass) {
    c.detail = Json::object();
    c.detail["expected_gens"] = gens_json(expected);
    c.detail["actual_gens"] = gens_json(actual);
  }
}

template <class T>
void compare_values(Case& c, const T& expected, const T& actual) {
  c.expected = expected;
  c.actual = actual;
  c.pass = expected == actual;
}

template <class Body>
std::function<Case()> task(Json inputs, Body body) {
  return [inputs = std::move(inputs), body]() {
    Case c;
    c.inputs = inputs;
    try {
      body(c);
    } catch (const std::exception& e) {
      c.pass = false;
      c.actual = "error";
      c.detail = Json::object();
      c.detail["error"] = e.what();
    }
    return c;
  };
}

Json base_params(int d) {
  Json p = Json::object();
  p["d"] = d;
  return p;
}

void finish_params(Json& p, int n_min, int n_max) {
  p["n_min"] = n_min;
  p["n_max"] = n_max;
  p["field"] = active_field().name();
}

VerificationReport run_suite(const std::string& suite, Json params,
                             const std::vector<std::function<Case()>>& tasks,
                             const Options& opt) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.suite = suite;
  report.params = std::move(params);
  report.cases = run_cases(tasks, opt.jobs);
  const auto stop = std::chrono::steady_clock::now();
  report.summary.total = report.cases.size();
  for (const Case& c : report.cases) {
    if (c.pass) {
      ++report.summary.passed;
    } else {
      ++report.summary.failed;
    }
  }
  report.summary.millis =
      opt.timing ? std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count()
                 : 0;
  return report;
}

void require_d(int d) {
  if (d < 2 || static_cast<std::size_t>(d) > Monomial::kMaxVars) {
    throw PreconditionError("d must be in 2.." + std::to_string(Monomial::kMaxVars));
  }
}

Monomial var_power(int d, int k, int e) {
  return Monomial::variable(tprime_vars(d), pos(k), e);
}

/// Number of monomials outside an Artinian ideal, counted by listing every
/// monomial up to a degree no standard monomial can exceed.
std::size_t brute_force_length(const MonomialIdeal& ideal) {
  if (!ideal.is_artinian()) throw DomainError("brute force length: not Artinian");
  const std::size_t nvars = ideal.nvars();
  unsigned cap = 0;
  for (std::size_t v = 0; v < nvars; ++v) {
    unsigned best = ~0U;
    for (const Monomial& g : ideal.gens()) {
      if (g.degree() == static_cast<unsigned>(g[v])) best = std::min(best, g.degree());
    }
    cap += best - 1;
  }
  std::size_t count = 0;
  for (unsigned e = 0; e <= cap; ++e) {
    for (const Monomial& m : monomials_of_degree(nvars, 0, nvars - 1, e)) {
      if (!ideal.contains(m)) ++count;
    }
  }
  return count;
}

}  // namespace

std::vector<Case> run_cases(const std::vector<std::function<Case()>>& tasks,
                            unsigned jobs) {
  std::vector<Case> out(tasks.size());
  if (jobs == 0) jobs = std::max(1U, std::thread::hardware_concurrency());
  jobs = std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(1, tasks.size())));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) out[i] = tasks[i]();
  };
  if (jobs <= 1) {
    worker();
    return out;
  }
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();
  return out;
}

VerificationReport check_colon_identity(int d, int n_max, const Options& opt) {
  require_d(d);
  std::vector<std::function<Case()>> tasks;
  for (int n = 1; n <= n_max; ++n) {
    for (int i = 2; i <= d; ++i) {
      tasks.push_back(task(Json{{"n", n}, {"i", i}}, [d, n, i](Case& c) {
        const MonomialIdeal lhs = mono_I(d, n).colon(var_power(d, i, i));
        const MonomialIdeal rhs =
            n < i ? MonomialIdeal::unit(tprime_vars(d)) : mono_I(d, n - i + 1);
        compare_ideals(c, rhs, lhs);
      }));
    }
  }
  Json p = base_params(d);
  finish_params(p, 1, n_max);
  return run_suite("colon", std::move(p), tasks, opt);
}

VerificationReport check_assoc_graded_regseq(int d, int n_max, const Options& opt) {
  require_d(d);
  std::vector<std::function<Case()>> tasks;
  for (int n = 0; n <= n_max; ++n) {
    for (int i = 2; i <= d; ++i) {
      tasks.push_back(task(Json{{"n", n}, {"i", i}}, [d, n, i](Case& c) {
        MonomialIdeal lhs = mono_I(d, n + i);
        MonomialIdeal rhs = mono_I(d, n + 1);
        for (int j = 2; j <= i - 1; ++j) {
          lhs = lhs + mono_I(d, n + i - j).times(var_power(d, j, j));
          rhs = rhs + mono_I(d, n + 1 - j).times(var_power(d, j, j));
        }
        compare_ideals(c, rhs, lhs.colon(var_power(d, i, i)));
      }));
    }
  }
  Json p = base_params(d);
  finish_params(p, 0, n_max);
  return run_suite("regseq", std::move(p), tasks, opt);
}

VerificationReport check_length_formula(int d, int n_max, const Options& opt) {
  require_d(d);
  std::vector<std::function<Case()>> tasks;
  for (int n = 1; n <= n_max; ++n) {
    tasks.push_back(task(Json{{"n", n}}, [d, n](Case& c) {
      compare_values<long long>(c, expected_length(d, n),
                                static_cast<long long>(mono_I(d, n).length_quotient()));
    }));
  }
  Json p = base_params(d);
  finish_params(p, 1, n_max);
  return run_suite("length", std::move(p), tasks, opt);
}

VerificationReport check_alternating_lengths(int d, int n_max, int k, const Options& opt) {
  require_d(d);
  if (k != 0 && (k < 2 || k > d)) throw PreconditionError("alternating: need 2 <= k <= d");
  std::vector<int> ks;
  for (int kk = (k == 0 ? 2 : k); kk <= (k == 0 ? d : k); ++kk) ks.push_back(kk);
  std::vector<std::function<Case()>> tasks;
  for (int kk : ks) {
    for (int n = 1; n <= n_max; ++n) {
      tasks.push_back(task(Json{{"n", n}, {"k", kk}, {"against", "binomial"}}, [d, n, kk](Case& c) {
        const auto actual = static_cast<long long>(
            (mono_I(d, n) + pure_powers(d, kk)).length_quotient());
        compare_values<long long>(c, expected_length_with_powers(d, n, kk - 1), actual);
      }));
      tasks.push_back(task(Json{{"n", n}, {"k", kk}, {"against", "staircase"}}, [d, n, kk](Case& c) {
        const auto actual = static_cast<long long>(
            (mono_I(d, n) + pure_powers(d, kk)).length_quotient());
        long long alt = 0;
        for (unsigned mask = 0; mask < (1U << (kk - 1)); ++mask) {
          int sum = 0;
          int size = 0;
          for (int j = 1; j <= kk - 1; ++j) {
            if (mask & (1U << (j - 1))) {
              sum += j;
              ++size;
            }
          }
          const auto l = static_cast<long long>(mono_I(d, n - sum).length_quotient());
          alt += (size % 2 == 0) ? l : -l;
        }
        compare_values<long long>(c, alt, actual);
      }));
    }
  }
  Json p = base_params(d);
  p["k"] = k;
  finish_params(p, 1, n_max);
  return run_suite("alternating", std::move(p), tasks, opt);
}

VerificationReport check_leading_ideal_equality(int d, int n_max, bool with_f, int k,
                                                const Options& opt) {
  require_d(d);
  if (with_f && k != 0 && (k < 1 || k > d - 1)) {
    throw PreconditionError("leading with f: need 1 <= k <= d-1");
  }
  std::vector<int> ks{0};
  if (with_f) {
    ks.clear();
    for (int kk = (k == 0 ? 1 : k); kk <= (k == 0 ? d - 1 : k); ++kk) ks.push_back(kk);
  }
  std::vector<std::function<Case()>> tasks;
  for (int kk : ks) {
    for (int n = 1; n <= n_max; ++n) {
      Json in{{"n", n}};
      if (with_f) in["k"] = kk;
      tasks.push_back(task(in, [d, n, kk, with_f](Case& c) {
        const PolyIdeal ideal = with_f ? cal_I_with_f(d, n, kk) : cal_I(d, n);
        const GroebnerBasis gb = buchberger(ideal);
        const MonomialIdeal li = gb.leading_ideal();
        const MonomialIdeal target =
            with_f ? mono_I(d, n) + pure_powers(d, kk + 1) : mono_I(d, n);
        compare_ideals(c, target, li);
        const long long formula = with_f ? expected_length_with_powers(d, n, kk)
                                         : expected_length(d, n);
        const auto gb_length = static_cast<long long>(li.length_quotient());
        const auto staircase = static_cast<long long>(brute_force_length(li));
        Json lengths = Json::object();
        lengths["formula"] = formula;
        lengths["groebner"] = gb_length;
        lengths["staircase"] = staircase;
        bool agree = formula == gb_length && gb_length == staircase;
        if (d <= 4 && n <= 4) {
          const auto oracle = static_cast<long long>(hilbert_oracle(ideal));
          lengths["oracle"] = oracle;
          agree = agree && oracle == gb_length;
        }
        const bool contained = li.contains(target);
        c.pass = c.pass && agree && contained;
        c.note = "lengths " + lengths.dump();
        if (!c.pass) {
          if (c.detail.is_null()) c.detail = Json::object();
          c.detail["lengths"] = lengths;
          c.detail["target_contained"] = contained;
        }
      }));
    }
  }
  Json p = base_params(d);
  p["with_f"] = with_f;
  if (with_f) p["k"] = k;
  finish_params(p, 1, n_max);
  return run_suite("leading", std::move(p), tasks, opt);
}

VerificationReport check_s_counts_and_spanning(int d, int n_max, const Options& opt) {
  require_d(d);
  std::vector<std::function<Case()>> tasks;
  for (int n = 2; n <= n_max; ++n) {
    for (int j = 1; j <= d - 1; ++j) {
      tasks.push_back(task(Json{{"n", n}, {"check", "count"}, {"j", j}}, [d, n, j](Case& c) {
        long long total = 0;
        for (const WeightedComposition& a : lambda_set(j, n - 1)) {
          total += static_cast<long long>(s_set(d, a.a).size());
        }
        compare_values<long long>(c, binomial(n - 2, j - 1), total);
      }));
    }
    tasks.push_back(task(Json{{"n", n}, {"check", "containment"}}, [d, n](Case& c) {
      const MonomialIdeal colon = mono_I(d, n).colon(var_power(d, d, 1));
      const bool ok = mono_I(d, n - 1).contains(colon);
      c.expected = "(I_n : x_d) in I_{n-1}";
      c.actual = ok ? c.expected : Json("violated");
      c.pass = ok;
      if (!ok) {
        c.detail = Json::object();
        c.detail["colon_gens"] = gens_json(colon);
        c.detail["I_prev_gens"] = gens_json(mono_I(d, n - 1));
      }
    }));
    tasks.push_back(task(Json{{"n", n}, {"check", "spanning"}}, [d, n](Case& c) {
      const MonomialIdeal prev = mono_I(d, n - 1);
      const MonomialIdeal colon = mono_I(d, n).colon(var_power(d, d, 1));
      std::set<Monomial> listed;
      std::size_t with_multiplicity = 0;
      for (int j = 1; j <= d - 1; ++j) {
        const std::vector<Monomial> block = monomial_block(d, j + 1, d, j);
        for (const WeightedComposition& a : lambda_set(j, n - 1)) {
          for (const Monomial& s : s_set(d, a.a)) {
            for (const Monomial& b : block) {
              listed.insert(s * b);
              ++with_multiplicity;
            }
          }
        }
      }
      Json missing = Json::array();
      for (const Monomial& u : colon.standard_monomials()) {
        if (prev.contains(u) && !listed.count(u)) missing.push_back(u.to_string());
      }
      std::size_t outside = 0;
      for (const Monomial& u : listed) {
        if (prev.contains(u) && !colon.contains(u)) ++outside;
      }
      c.expected = "spans";
      c.actual = missing.empty() ? Json("spans")
                                 : Json("missing " + std::to_string(missing.size()));
      c.pass = missing.empty();
      const bool basis = outside == listed.size() && listed.size() == with_multiplicity;
      c.note = basis ? "listed monomials form a basis" : "listed monomials are not a basis";
      if (!c.pass) {
        c.detail = Json::object();
        c.detail["missing"] = missing;
      }
    }));
    tasks.push_back(task(Json{{"n", n}, {"check", "bound"}}, [d, n](Case& c) {
      const MonomialIdeal colon = mono_I(d, n).colon(var_power(d, d, 1));
      const auto length = static_cast<long long>(colon.length_quotient()) -
                          static_cast<long long>(mono_I(d, n - 1).length_quotient());
      const long long bound = binomial(n + d - 3, d - 2);
      c.inputs["relation"] = "<=";
      c.expected = bound;
      c.actual = length;
      c.pass = length <= bound;
      c.note = length == bound ? "equality" : "strict";
    }));
  }
  Json p = base_params(d);
  finish_params(p, 2, n_max);
  return run_suite("scounts", std::move(p), tasks, opt);
}

VerificationReport check_gs_colon_chain(int d, int n_max, int k, const Options& opt) {
  require_d(d);
  if (k != 0 && (k < 1 || k > d - 1)) throw PreconditionError("gscolon: need 1 <= k <= d-1");
  std::vector<std::function<Case()>> tasks;
  for (int kk = (k == 0 ? 1 : k); kk <= (k == 0 ? d - 1 : k); ++kk) {
    for (int n = 0; n <= n_max; ++n) {
      tasks.push_back(task(Json{{"n", n}, {"k", kk}}, [d, n, kk](Case& c) {
        const auto l1 = static_cast<long long>(
            (mono_I(d, n + 1) + pure_powers(d, kk)).length_quotient());
        const auto l2 = static_cast<long long>(
            (mono_I(d, n + 1) + pure_powers(d, kk + 1)).length_quotient());
        const auto l3 = static_cast<long long>(
            (mono_I(d, n + 1 - kk) + pure_powers(d, kk)).length_quotient());
        compare_values<long long>(c, l3, l1 - l2);
      }));
    }
  }
  Json p = base_params(d);
  p["k"] = k;
  finish_params(p, 0, n_max);
  return run_suite("gscolon", std::move(p), tasks, opt);
}

SocleResult socle_of_artinian_reduction(int d) {
  require_d(d);
  const std::size_t nvars = tprime_vars(d);
  const int cap = static_cast<int>(binomial(d, 2)) + d;
  // K_n = I_{n+1} + sum_{j=1}^{min(n,d-1)} x_{j+1}^{j+1} I_{n-j}.
  auto kernel = [&](int n) {
    MonomialIdeal k = mono_I(d, n + 1);
    for (int j = 1; j <= std::min(n, d - 1); ++j) {
      k = k + mono_I(d, n - j).times(var_power(d, j + 1, j + 1));
    }
    return k;
  };
  std::vector<MonomialIdeal> kernels;
  std::vector<std::vector<Monomial>> basis;
  int zero_run = 0;
  int n = 0;
  for (; zero_run < d - 1; ++n) {
    if (n > cap) {
      throw InvariantViolation("Artinian reduction does not vanish by degree " +
                               std::to_string(cap));
    }
    kernels.push_back(kernel(n));
    std::vector<Monomial> piece;
    const MonomialIdeal in = n == 0 ? MonomialIdeal::unit(nvars) : mono_I(d, n);
    for (const Monomial& u : kernels.back().standard_monomials()) {
      if (in.contains(u)) piece.push_back(u);
    }
    zero_run = piece.empty() ? zero_run + 1 : 0;
    basis.push_back(std::move(piece));
  }
  const int pieces = n - zero_run;
  auto kernel_at = [&](int idx) -> MonomialIdeal {
    while (static_cast<int>(kernels.size()) <= idx) {
      kernels.push_back(kernel(static_cast<int>(kernels.size())));
    }
    return kernels[static_cast<std::size_t>(idx)];
  };

  SocleResult res;
  for (int p = 0; p < pieces; ++p) {
    res.piece_dimensions.push_back(basis[static_cast<std::size_t>(p)].size());
    res.total_dimension += basis[static_cast<std::size_t>(p)].size();
    for (const Monomial& u : basis[static_cast<std::size_t>(p)]) {
      bool annihilated = true;
      for (std::size_t v = 0; v < nvars && annihilated; ++v) {
        annihilated = kernel_at(p).contains(u * Monomial::variable(nvars, v));
      }
      for (int j = 1; j <= d - 1 && annihilated; ++j) {
        const MonomialIdeal target = kernel_at(p + j);
        const MonomialIdeal jj = mono_J(d, j);
        for (const Monomial& g : jj.gens()) {
          if (!target.contains(u * g)) {
            annihilated = false;
            break;
          }
        }
      }
      if (annihilated) res.socle.emplace_back(p, u);
    }
  }
  res.dimension = res.socle.size();
  return res;
}

VerificationReport socle_dimension_artinian_reduction(int d, const Options& opt) {
  require_d(d);
  std::vector<std::function<Case()>> tasks;
  tasks.push_back(task(Json{{"d", d}}, [d](Case& c) {
    const SocleResult res = socle_of_artinian_reduction(d);
    compare_values<long long>(c, 1, static_cast<long long>(res.dimension));
    Json socle = Json::array();
    for (const auto& [n, u] : res.socle) {
      socle.push_back("(" + std::to_string(n) + ", " + u.to_string() + ")");
    }
    std::string pieces;
    for (std::size_t i = 0; i < res.piece_dimensions.size(); ++i) {
      if (i > 0) pieces += ",";
      pieces += std::to_string(res.piece_dimensions[i]);
    }
    c.note = "dim B = " + std::to_string(res.total_dimension) + " pieces [" + pieces +
             "] socle " + socle.dump();
    if (!c.pass) {
      c.detail = Json::object();
      c.detail["socle"] = socle;
    }
  }));
  Json p = base_params(d);
  p["field"] = active_field().name();
  return run_suite("socle", std::move(p), tasks, opt);
}

VerificationReport check_construction_sanity(int d, int m, int n_max, const Options& opt) {
  require_d(d);
  CurveParams{d, m}.validate();
  std::vector<std::function<Case()>> tasks;
  for (int n = 1; n <= n_max; ++n) {
    tasks.push_back(task(Json{{"n", n}, {"check", "homogeneous"}}, [d, n](Case& c) {
      const PolyIdeal ideal = cal_I(d, n);
      std::size_t bad = 0;
      for (const Polynomial& g : ideal.gens()) {
        if (!g.is_homogeneous()) ++bad;
      }
      compare_values<long long>(c, 0, static_cast<long long>(bad));
      c.inputs["counts"] = "inhomogeneous generators";
    }));
    tasks.push_back(task(Json{{"n", n}, {"check", "artinian"}}, [d, n](Case& c) {
      const MonomialIdeal li = leading_ideal(cal_I(d, n));
      compare_values<bool>(c, true, li.is_artinian());
      if (!c.pass) c.detail = Json{{"leading_ideal", gens_json(li)}};
    }));
  }
  for (int i = 1; i <= d - 1; ++i) {
    tasks.push_back(task(Json{{"i", i}, {"check", "parametrization"}}, [d, m, i](Case& c) {
      Json nonvanishing = Json::array();
      for (const Polynomial& f : full_minors({d, m}, i)) {
        if (!substitute_parametrization(f, d, m).is_zero()) {
          nonvanishing.push_back(f.to_string(1));
        }
      }
      compare_values<long long>(c, 0, static_cast<long long>(nonvanishing.size()));
      c.inputs["counts"] = "minors not vanishing on the curve";
      if (!c.pass) c.detail = Json{{"minors", nonvanishing}};
    }));
  }
  Json p = base_params(d);
  p["m"] = m;
  finish_params(p, 1, n_max);
  return run_suite("sanity", std::move(p), tasks, opt);
}

// ---------------------------------------------------------------------------
// Rendering

Json to_json(const VerificationReport& report) {
  Json j = Json::object();
  j["suite"] = report.suite;
  j["params"] = report.params;
  Json cases = Json::array();
  for (const Case& c : report.cases) {
    Json jc = Json::object();
    jc["inputs"] = c.inputs;
    jc["expected"] = c.expected;
    jc["actual"] = c.actual;
    jc["pass"] = c.pass;
    if (!c.note.empty()) jc["note"] = c.note;
    if (!c.detail.is_null()) jc["detail"] = c.detail;
    cases.push_back(std::move(jc));
  }
  j["cases"] = std::move(cases);
  j["summary"] = Json{{"total", report.summary.total},
                      {"passed", report.summary.passed},
                      {"failed", report.summary.failed},
                      {"millis", report.summary.millis}};
  return j;
}

VerificationReport report_from_json(const Json& j) {
  VerificationReport r;
  r.suite = j.at("suite").get<std::string>();
  r.params = j.at("params");
  for (const Json& jc : j.at("cases")) {
    Case c;
    c.inputs = jc.at("inputs");
    c.expected = jc.at("expected");
    c.actual = jc.at("actual");
    c.pass = jc.at("pass").get<bool>();
    if (jc.contains("note")) c.note = jc.at("note").get<std::string>();
    if (jc.contains("detail")) c.detail = jc.at("detail");
    r.cases.push_back(std::move(c));
  }
  const Json& s = j.at("summary");
  r.summary.total = s.at("total").get<std::size_t>();
  r.summary.passed = s.at("passed").get<std::size_t>();
  r.summary.failed = s.at("failed").get<std::size_t>();
  r.summary.millis = s.at("millis").get<long long>();
  return r;
}

namespace {

std::string scalar_text(const Json& v) {
  return v.is_string() ? v.get<std::string>() : v.dump();
}

std::string inputs_text(const Json& inputs, const char* sep) {
  std::string out;
  for (const auto& [key, value] : inputs.items()) {
    if (!out.empty()) out += sep;
    out += key + "=" + scalar_text(value);
  }
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

std::string render_text(const VerificationReport& report) {
  std::ostringstream os;
  os << "suite " << report.suite << "  (" << inputs_text(report.params, " ") << ")\n";
  for (const Case& c : report.cases) {
    os << "  " << (c.pass ? "PASS" : "FAIL") << "  " << inputs_text(c.inputs, " ")
       << "  expected=" << scalar_text(c.expected) << "  actual=" << scalar_text(c.actual);
    if (!c.note.empty()) os << "  [" << c.note << "]";
    os << "\n";
    if (!c.pass && !c.detail.is_null()) os << "        detail: " << c.detail.dump() << "\n";
  }
  os << "summary: " << report.summary.passed << "/" << report.summary.total << " passed, "
     << report.summary.failed << " failed, " << report.summary.millis << " ms\n";
  return os.str();
}

std::string render_csv(const VerificationReport& report, bool header) {
  std::ostringstream os;
  if (header) os << "suite,inputs,expected,actual,pass,note,detail\n";
  for (const Case& c : report.cases) {
    os << csv_field(report.suite) << ',' << csv_field(inputs_text(c.inputs, ";")) << ','
       << csv_field(scalar_text(c.expected)) << ',' << csv_field(scalar_text(c.actual)) << ','
       << (c.pass ? "true" : "false") << ',' << csv_field(c.note) << ','
       << csv_field(c.detail.is_null() ? "" : c.detail.dump()) << '\n';
  }
  return os.str();
}

}  // namespace monocurve::verify
