#include "monocurve/curve.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

#include "monocurve/error.hpp"

namespace monocurve::curve {

void CurveParams::validate() const {
  if (d < 2) throw PreconditionError("d must be at least 2");
  if (static_cast<std::size_t>(d) > Monomial::kMaxVars) {
    throw PreconditionError("d is limited to " +
                            std::to_string(Monomial::kMaxVars));
  }
  if (m < 1) throw PreconditionError("m must be at least 1");
  if (std::gcd(d, m) != 1) {
    throw PreconditionError("gcd(d, m) must be 1, got d=" + std::to_string(d) +
                            " m=" + std::to_string(m));
  }
}

namespace {

void check_d(int d) {
  if (d < 2 || static_cast<std::size_t>(d) > Monomial::kMaxVars) {
    throw PreconditionError("d out of range: " + std::to_string(d));
  }
}

void check_i(int d, int i) {
  check_d(d);
  if (i < 1 || i > d - 1) {
    throw PreconditionError("index i must satisfy 1 <= i <= d-1, got " +
                            std::to_string(i));
  }
}

void compositions_rec(int len, int n, std::vector<int>& a,
                      std::vector<WeightedComposition>& out) {
  if (len == 0) {
    if (n == 0) out.push_back(WeightedComposition::of(a));
    return;
  }
  for (int v = 0; v * len <= n; ++v) {
    a[static_cast<std::size_t>(len - 1)] = v;
    compositions_rec(len - 1, n - v * len, a, out);
  }
  a[static_cast<std::size_t>(len - 1)] = 0;
}

// Multisets of size k from {0..count-1}, each as a non-decreasing index list
// in lexicographic order.
void multisets_rec(std::size_t count, std::size_t k, std::size_t start,
                   std::vector<std::size_t>& cur,
                   std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t v = start; v < count; ++v) {
    cur.push_back(v);
    multisets_rec(count, k, v, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<std::size_t>> multisets(std::size_t count,
                                                std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  multisets_rec(count, k, 0, cur, out);
  return out;
}

}  // namespace

WeightedComposition WeightedComposition::of(std::vector<int> a) {
  WeightedComposition w;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < 0) throw PreconditionError("negative composition entry");
    w.weight += static_cast<int>(i + 1) * a[i];
  }
  w.a = std::move(a);
  return w;
}

std::string WeightedComposition::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(a[i]);
  }
  return out + ")";
}

std::vector<WeightedComposition> compositions(int len, int n) {
  std::vector<WeightedComposition> out;
  if (len < 0 || n < 0) return out;
  std::vector<int> a(static_cast<std::size_t>(len), 0);
  compositions_rec(len, n, a, out);
  return out;
}

PolyMatrix build_matrix(const CurveParams& p, bool mod_x1) {
  check_d(p.d);
  if (!mod_x1) p.validate();
  const int d = p.d;
  const std::size_t nvars = mod_x1 ? tprime_vars(d) : static_cast<std::size_t>(d);
  // Polynomial for x_k in the chosen ring; zero for x1 modulo x1.
  auto var = [&](int k) {
    if (mod_x1) {
      return k == 1 ? Polynomial(nvars) : Polynomial::variable(nvars, pos(k));
    }
    return Polynomial::variable(nvars, static_cast<std::size_t>(k - 1));
  };
  PolyMatrix x(static_cast<std::size_t>(d), nvars);
  for (int i = 1; i <= d; ++i) {
    for (int j = 1; j <= d; ++j) {
      Polynomial entry(nvars);
      if (j <= d - i + 1) {
        entry = var(i + j - 1);
      } else if (!mod_x1) {
        entry = Polynomial::monomial(
                    Monomial::variable(nvars, 0, p.m)) * var(i + j - d - 1);
      }
      x.at(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) =
          std::move(entry);
    }
  }
  return x;
}

Polynomial f_poly(int d, int i) {
  check_i(d, i);
  const PolyMatrix x = build_matrix({d, 1}, true);
  std::vector<std::size_t> cols(static_cast<std::size_t>(i + 1));
  std::iota(cols.begin(), cols.end(), 0);
  return determinant(x.submatrix(static_cast<std::size_t>(i + 1), cols));
}

std::vector<std::vector<int>> column_selections(int d, int i) {
  check_i(d, i);
  std::vector<std::vector<int>> out;
  const int width = i + 1;
  std::vector<int> sel(static_cast<std::size_t>(width));
  std::iota(sel.begin(), sel.end(), 1);
  while (true) {
    out.push_back(sel);
    int pos_ = width - 1;
    while (pos_ >= 0 && sel[static_cast<std::size_t>(pos_)] == d - width + 1 + pos_) {
      --pos_;
    }
    if (pos_ < 0) break;
    ++sel[static_cast<std::size_t>(pos_)];
    for (int q = pos_ + 1; q < width; ++q) {
      sel[static_cast<std::size_t>(q)] = sel[static_cast<std::size_t>(q - 1)] + 1;
    }
  }
  return out;
}

namespace {

std::vector<Polynomial> minors_of(const PolyMatrix& x, int d, int i) {
  std::vector<Polynomial> out;
  for (const std::vector<int>& sel : column_selections(d, i)) {
    std::vector<std::size_t> cols;
    for (int c : sel) cols.push_back(static_cast<std::size_t>(c - 1));
    out.push_back(determinant(x.submatrix(static_cast<std::size_t>(i + 1), cols)));
  }
  return out;
}

}  // namespace

PolyIdeal cal_J(int d, int i) {
  check_i(d, i);
  return PolyIdeal(tprime_vars(d), minors_of(build_matrix({d, 1}, true), d, i));
}

std::vector<Polynomial> full_minors(const CurveParams& p, int i) {
  p.validate();
  check_i(p.d, i);
  return minors_of(build_matrix(p, false), p.d, i);
}

PolyIdeal cal_I(int d, int n) {
  check_d(d);
  const std::size_t nvars = tprime_vars(d);
  if (n <= 0) {
    return PolyIdeal(nvars, {Polynomial::constant(nvars, Scalar(1))});
  }
  std::vector<std::vector<Polynomial>> minors(static_cast<std::size_t>(d));
  for (int i = 1; i <= d - 1; ++i) {
    minors[static_cast<std::size_t>(i)] = cal_J(d, i).gens();
  }
  PolyIdeal result(nvars);
  for (const WeightedComposition& comp : compositions(d - 1, n)) {
    std::vector<Polynomial> partial{Polynomial::constant(nvars, Scalar(1))};
    for (int i = 1; i <= d - 1; ++i) {
      const int power = comp.a[static_cast<std::size_t>(i - 1)];
      if (power == 0) continue;
      const auto& gens = minors[static_cast<std::size_t>(i)];
      std::vector<Polynomial> powers;
      for (const auto& choice : multisets(gens.size(), static_cast<std::size_t>(power))) {
        Polynomial prod = Polynomial::constant(nvars, Scalar(1));
        for (std::size_t idx : choice) prod *= gens[idx];
        powers.push_back(std::move(prod));
      }
      std::vector<Polynomial> next;
      next.reserve(partial.size() * powers.size());
      for (const Polynomial& a : partial) {
        for (const Polynomial& b : powers) next.push_back(a * b);
      }
      partial = std::move(next);
    }
    for (Polynomial& g : partial) result.add(std::move(g));
  }
  return result;
}

PolyIdeal cal_I_with_f(int d, int n, int k) {
  check_d(d);
  if (k < 0 || k > d - 1) throw PreconditionError("k must be in 0..d-1");
  PolyIdeal ideal = cal_I(d, n);
  for (int i = 1; i <= k; ++i) ideal.add(f_poly(d, i));
  return ideal;
}

std::vector<Monomial> monomial_block(int d, int r, int s, int l) {
  check_d(d);
  if (r < 2 || s > d || r > s || l < 0) {
    throw PreconditionError("invalid variable block x" + std::to_string(r) +
                            "..x" + std::to_string(s));
  }
  return monomials_of_degree(tprime_vars(d), pos(r), pos(s),
                             static_cast<unsigned>(l));
}

MonomialIdeal mono_J(int d, int i) {
  check_i(d, i);
  return MonomialIdeal::minimalize(tprime_vars(d),
                                   monomial_block(d, i + 1, d, i + 1));
}

MonomialIdeal mono_I(int d, int n) {
  check_d(d);
  const std::size_t nvars = tprime_vars(d);
  if (n <= 0) return MonomialIdeal::unit(nvars);

  static std::mutex mutex;
  static std::map<std::pair<int, int>, MonomialIdeal> cache;
  {
    std::lock_guard<std::mutex> lock(mutex);
    if (auto it = cache.find({d, n}); it != cache.end()) return it->second;
  }
  // Every weight-n composition has some a_j > 0, so by distributivity
  // I_n = sum_j J_j * I_{n-j}.
  std::vector<Monomial> gens;
  for (int j = 1; j <= std::min(n, d - 1); ++j) {
    const MonomialIdeal rest = mono_I(d, n - j);
    const std::vector<Monomial> block = monomial_block(d, j + 1, d, j + 1);
    for (const Monomial& g : rest.gens()) {
      for (const Monomial& b : block) gens.push_back(g * b);
    }
  }
  MonomialIdeal result = MonomialIdeal::minimalize(nvars, std::move(gens));
  std::lock_guard<std::mutex> lock(mutex);
  return cache.emplace(std::make_pair(d, n), std::move(result)).first->second;
}

MonomialIdeal mono_I_by_compositions(int d, int n) {
  check_d(d);
  const std::size_t nvars = tprime_vars(d);
  if (n <= 0) return MonomialIdeal::unit(nvars);
  std::vector<MonomialIdeal> terms;
  for (const WeightedComposition& comp : compositions(d - 1, n)) {
    std::vector<MonomialIdeal> factors;
    for (int j = 1; j <= d - 1; ++j) {
      const int a = comp.a[static_cast<std::size_t>(j - 1)];
      if (a > 0) factors.push_back(mono_J(d, j).pow(static_cast<unsigned>(a)));
    }
    terms.push_back(ideal_product(nvars, factors));
  }
  return ideal_sum(nvars, terms);
}

MonomialIdeal pure_powers(int d, int last) {
  check_d(d);
  if (last > d) throw PreconditionError("pure power index beyond x_d");
  std::vector<Monomial> gens;
  for (int k = 2; k <= last; ++k) {
    gens.push_back(Monomial::variable(tprime_vars(d), pos(k), k));
  }
  return MonomialIdeal::minimalize(tprime_vars(d), std::move(gens));
}

std::vector<WeightedComposition> lambda_set(int j, int n) {
  if (j < 1) throw PreconditionError("lambda_set needs j >= 1");
  std::vector<WeightedComposition> out;
  for (WeightedComposition& w : compositions(j, n)) {
    if (w.a.back() != 0) out.push_back(std::move(w));
  }
  return out;
}

std::vector<Monomial> s_set(int d, const std::vector<int>& a) {
  check_d(d);
  const int j = static_cast<int>(a.size());
  if (j < 1 || j > d - 1) throw PreconditionError("S(a) needs 1 <= len <= d-1");
  if (a.back() == 0) throw PreconditionError("S(a) needs a_j != 0");
  if (std::any_of(a.begin(), a.end(), [](int v) { return v < 0; })) {
    throw PreconditionError("S(a) needs non-negative entries");
  }
  const std::size_t nvars = tprime_vars(d);
  const Monomial head = Monomial::variable(nvars, pos(j + 1), (j + 1) * a.back() - j);
  int k = 0;
  for (int idx = j - 1; idx >= 1; --idx) {
    if (a[static_cast<std::size_t>(idx - 1)] != 0) {
      k = idx;
      break;
    }
  }
  if (k == 0) return {head};
  const std::vector<Monomial> inner =
      s_set(d, std::vector<int>(a.begin(), a.begin() + k));
  const std::vector<Monomial> block = monomial_block(d, k + 1, j + 1, k);
  std::vector<Monomial> out;
  for (const Monomial& s : inner) {
    for (const Monomial& b : block) out.push_back(head * s * b);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

int ceil_div(int x, int y) {
  // y > 0
  return x >= 0 ? (x + y - 1) / y : -((-x) / y);
}

}  // namespace

Algorithm1Result algorithm1(const std::vector<int>& b, int i) {
  if (i < 2) throw PreconditionError("algorithm1 needs i >= 2");
  if (b.size() < static_cast<std::size_t>(i)) {
    throw PreconditionError("algorithm1 needs b_1..b_{i-1}");
  }
  auto bj = [&](int j) { return b[static_cast<std::size_t>(j)]; };
  for (int j = 1; j <= i - 1; ++j) {
    if (bj(j) < 0) throw PreconditionError("negative valuation");
  }
  Algorithm1Result res;
  res.i = i;
  res.q.assign(static_cast<std::size_t>(i + 1), 0);
  res.r.assign(static_cast<std::size_t>(i + 1), 0);

  int total = 0;
  for (int j = 1; j <= i - 1; ++j) total += bj(j);
  res.g = std::min(i, total);

  res.k = i;
  int tail = 0;
  for (int l = i - 1; l >= 1; --l) {
    tail += bj(l);
    if (tail <= i - 1) res.k = l;
  }
  // Tail sums grow as l decreases, so the set of valid l is an interval
  // ending at i and the loop above finds its minimum.

  auto q = [&](int j) -> int& { return res.q[static_cast<std::size_t>(j)]; };
  auto r = [&](int j) -> int& { return res.r[static_cast<std::size_t>(j)]; };
  r(i) = 0;
  int used = 0;
  for (int j = i - 1; j >= res.k; --j) {
    used += bj(j);
    if (bj(j) == 0) {
      q(j) = 0;
      r(j) = r(j + 1);
      continue;
    }
    const int x = bj(j) - r(j + 1);
    q(j) = ceil_div(x, j + 1);
    r(j) = (j + 1) * q(j) - x;
    // q_j may be negative when a carried remainder exceeds b_j; only
    // q_{k-1} is required to be non-negative.
    if (r(j) < 0 || r(j) > j) {
      throw InvariantViolation("algorithm1: no admissible (q_j, r_j) at j=" +
                               std::to_string(j));
    }
  }
  res.c = res.g - used;
  const int k = res.k;
  if (res.c == 0) {
    q(k - 1) = 0;
    r(k - 1) = r(k);
  } else {
    const int x = res.c - r(k);
    q(k - 1) = ceil_div(x, k);
    r(k - 1) = k * q(k - 1) - x;
    // Same relaxation as above: with a carried remainder r_k > c the
    // equation forces q_{k-1} < 0. The witness claims are still checked.
    if (r(k - 1) < 0 || r(k - 1) > k - 1) {
      throw InvariantViolation("algorithm1: no admissible (q_{k-1}, r_{k-1})");
    }
  }
  return res;
}

namespace {

// A divisor of m of the given degree, taken from the highest variables first.
Monomial divisor_of_degree(const Monomial& m, int degree) {
  if (degree < 0 || static_cast<unsigned>(degree) > m.degree()) {
    throw InvariantViolation("no divisor of degree " + std::to_string(degree) +
                             " of " + m.to_string());
  }
  std::vector<int> exps(m.nvars(), 0);
  int left = degree;
  for (std::size_t v = m.nvars(); v-- > 0 && left > 0;) {
    const int take = std::min(left, m[v]);
    exps[v] = take;
    left -= take;
  }
  return Monomial(std::span<const int>(exps));
}

bool supported_from(const Monomial& m, int first_var) {
  for (std::size_t v = 0; v < m.nvars(); ++v) {
    if (m[v] != 0 && static_cast<int>(v) + 2 < first_var) return false;
  }
  return true;
}

}  // namespace

ColonWitness colon_witness(int d, const std::vector<Monomial>& m,
                           const WeightedComposition& a, int i) {
  check_d(d);
  const std::size_t nvars = tprime_vars(d);
  if (i < 2 || i > d) throw PreconditionError("colon witness needs 2 <= i <= d");
  if (m.size() != static_cast<std::size_t>(d) ||
      a.a.size() != static_cast<std::size_t>(d - 1)) {
    throw PreconditionError("colon witness needs M_1..M_{d-1} and a_1..a_{d-1}");
  }
  auto aj = [&](int j) { return a.a[static_cast<std::size_t>(j - 1)]; };
  for (int j = 1; j <= d - 1; ++j) {
    const Monomial& mj = m[static_cast<std::size_t>(j)];
    if (mj.nvars() != nvars || mj.degree() != static_cast<unsigned>((j + 1) * aj(j)) ||
        !supported_from(mj, j + 1)) {
      throw PreconditionError("M_" + std::to_string(j) + " is not a generator of J_" +
                              std::to_string(j) + "^" + std::to_string(aj(j)));
    }
  }
  const std::size_t xi = pos(i);
  std::vector<int> b(static_cast<std::size_t>(i), 0);
  for (int j = 1; j <= i - 1; ++j) b[static_cast<std::size_t>(j)] = m[static_cast<std::size_t>(j)][xi];

  ColonWitness w;
  w.aprime.assign(static_cast<std::size_t>(i), 0);
  w.mprime.assign(static_cast<std::size_t>(i), Monomial(nvars));
  w.n = Monomial(nvars);
  for (int j = 1; j <= i - 1; ++j) {
    w.aprime[static_cast<std::size_t>(j)] = aj(j);
    w.mprime[static_cast<std::size_t>(j)] = m[static_cast<std::size_t>(j)];
  }

  w.qr = algorithm1(b, i);
  const Algorithm1Result& qr = w.qr;
  const int k = qr.k;
  auto q = [&](int j) { return qr.q[static_cast<std::size_t>(j)]; };
  auto r = [&](int j) { return qr.r[static_cast<std::size_t>(j)]; };

  if (qr.g > 0) {
    // N_j for j = k-1..i; N_i = 1.
    std::vector<Monomial> nj(static_cast<std::size_t>(i + 1), Monomial(nvars));
    for (int j = i - 1; j >= k; --j) {
      const Monomial& mj = m[static_cast<std::size_t>(j)];
      const Monomial& next = nj[static_cast<std::size_t>(j + 1)];
      const int bj = b[static_cast<std::size_t>(j)];
      if (bj == 0) {
        nj[static_cast<std::size_t>(j)] = next;
        continue;
      }
      const Monomial rest = (mj * next) / Monomial::variable(nvars, xi, bj);
      nj[static_cast<std::size_t>(j)] = divisor_of_degree(rest, r(j));
      w.mprime[static_cast<std::size_t>(j)] = rest / nj[static_cast<std::size_t>(j)];
      w.aprime[static_cast<std::size_t>(j)] = aj(j) - q(j);
    }
    const Monomial m_km1 = k - 1 >= 1 ? m[static_cast<std::size_t>(k - 1)] : Monomial(nvars);
    const Monomial rest = (m_km1 * nj[static_cast<std::size_t>(k)]) /
                          Monomial::variable(nvars, xi, qr.c);
    const Monomial n_km1 = divisor_of_degree(rest, r(k - 1));
    if (k - 1 >= 1) {
      w.mprime[static_cast<std::size_t>(k - 1)] = rest / n_km1;
      w.aprime[static_cast<std::size_t>(k - 1)] = aj(k - 1) - q(k - 1);
    } else if (!(rest / n_km1).is_one()) {
      throw InvariantViolation("colon witness: leftover factor at index 0");
    }
    if (r(k - 1) >= 2) {
      const int target = r(k - 1) - 1;
      w.mprime[static_cast<std::size_t>(target)] *= n_km1;
      w.aprime[static_cast<std::size_t>(target)] += 1;
    } else {
      w.n = n_km1;
    }
  }

  // Claim (1): M'_j in J_j^{a'_j}.
  for (int j = 1; j <= i - 1; ++j) {
    const Monomial& mp = w.mprime[static_cast<std::size_t>(j)];
    const int ap = w.aprime[static_cast<std::size_t>(j)];
    if (ap < 0 || mp.degree() != static_cast<unsigned>((j + 1) * ap) ||
        !supported_from(mp, j + 1)) {
      throw InvariantViolation("colon witness: M'_" + std::to_string(j) + " = " +
                               mp.to_string() + " is not in J_" + std::to_string(j) +
                               "^" + std::to_string(ap));
    }
  }
  // Claim (2): (prod M_j) / x_i^g = (prod M'_j) * N.
  Monomial lhs(nvars);
  Monomial rhs = w.n;
  for (int j = 1; j <= i - 1; ++j) {
    lhs *= m[static_cast<std::size_t>(j)];
    rhs *= w.mprime[static_cast<std::size_t>(j)];
  }
  lhs = lhs / Monomial::variable(nvars, xi, qr.g);
  if (lhs != rhs) {
    throw InvariantViolation("colon witness: product mismatch " + lhs.to_string() +
                             " != " + rhs.to_string());
  }
  // Claim (3): weight bound.
  w.weight = 0;
  for (int j = 1; j <= i - 1; ++j) w.weight += j * w.aprime[static_cast<std::size_t>(j)];
  for (int j = i; j <= d - 1; ++j) w.weight += j * aj(j);
  if (w.weight < a.weight - i + 1) {
    throw InvariantViolation("colon witness: weight " + std::to_string(w.weight) +
                             " below " + std::to_string(a.weight - i + 1));
  }
  return w;
}

}  // namespace monocurve::curve
