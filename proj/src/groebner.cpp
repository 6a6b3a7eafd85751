#include "monocurve/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

#include "monocurve/error.hpp"

namespace monocurve {

PolyIdeal::PolyIdeal(std::size_t nvars, std::vector<Polynomial> gens)
    : nvars_(nvars) {
  for (Polynomial& g : gens) add(std::move(g));
}

void PolyIdeal::add(Polynomial g) {
  if (g.nvars() != nvars_) {
    throw StructuralError("generator over a different variable count");
  }
  if (!g.is_zero()) gens_.push_back(std::move(g));
}

PolyIdeal PolyIdeal::operator+(const PolyIdeal& other) const {
  if (other.nvars_ != nvars_) {
    throw StructuralError("ideals over different variable counts");
  }
  PolyIdeal sum = *this;
  for (const Polynomial& g : other.gens_) sum.add(g);
  return sum;
}

namespace {

/// Terms sorted strictly descending under a given order.
using Terms = std::vector<Term>;

Terms sorted_terms(const Polynomial& f, const MonomialOrder& order) {
  Terms t = f.terms();
  if (dynamic_cast<const Grevelex*>(&order) == nullptr) {
    std::sort(t.begin(), t.end(), [&](const Term& a, const Term& b) {
      return order.compare(a.mono, b.mono) > 0;
    });
  }
  return t;
}

Polynomial to_polynomial(std::size_t nvars, Terms t) {
  return Polynomial::from_terms(nvars, std::move(t));
}

/// a - c * m * b, both inputs sorted descending.
Terms sub_mul(const Terms& a, const Scalar& c, const Monomial& m,
              const Terms& b, const MonomialOrder& order) {
  Terms out;
  out.reserve(a.size() + b.size());
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end()) {
      out.push_back(*ia++);
      continue;
    }
    Monomial mb = ib->mono * m;
    if (ia == a.end()) {
      out.push_back({std::move(mb), -(c * ib->coeff)});
      ++ib;
      continue;
    }
    const auto cmp = order.compare(ia->mono, mb);
    if (cmp > 0) {
      out.push_back(*ia++);
    } else if (cmp < 0) {
      out.push_back({std::move(mb), -(c * ib->coeff)});
      ++ib;
    } else {
      Scalar s = ia->coeff - c * ib->coeff;
      if (!s.is_zero()) out.push_back({ia->mono, std::move(s)});
      ++ia;
      ++ib;
    }
  }
  return out;
}

void make_monic(Terms& t) {
  if (t.empty() || t.front().coeff.is_one()) return;
  const Scalar inv = t.front().coeff.inverse();
  for (Term& term : t) term.coeff *= inv;
}

/// Full reduction of f by the divisors; returns remainder terms.
Terms reduce(Terms f, const std::vector<Terms>& divisors,
             const MonomialOrder& order, std::size_t skip = ~std::size_t{0}) {
  Terms remainder;
  while (!f.empty()) {
    const Term& lead = f.front();
    std::size_t chosen = ~std::size_t{0};
    for (std::size_t k = 0; k < divisors.size(); ++k) {
      if (k == skip || divisors[k].empty()) continue;
      if (divisors[k].front().mono.divides(lead.mono)) {
        chosen = k;
        break;
      }
    }
    if (chosen == ~std::size_t{0}) {
      remainder.push_back(lead);
      f.erase(f.begin());
      continue;
    }
    const Terms& g = divisors[chosen];
    const Scalar c = lead.coeff / g.front().coeff;
    const Monomial m = lead.mono / g.front().mono;
    f = sub_mul(f, c, m, g, order);
  }
  return remainder;
}

Terms s_poly_terms(const Terms& f, const Terms& g, const MonomialOrder& order) {
  const Monomial lcm = f.front().mono.lcm(g.front().mono);
  // f * (lcm / LM f) / LC f  -  g * (lcm / LM g) / LC g
  Terms scaled_f;
  scaled_f.reserve(f.size());
  const Monomial mf = lcm / f.front().mono;
  const Scalar cf = f.front().coeff.inverse();
  for (const Term& t : f) scaled_f.push_back({t.mono * mf, t.coeff * cf});
  return sub_mul(scaled_f, g.front().coeff.inverse(), lcm / g.front().mono, g,
                 order);
}

}  // namespace

GroebnerBasis::GroebnerBasis(std::size_t nvars, std::vector<Polynomial> elements,
                             const MonomialOrder& order, bool reduced)
    : nvars_(nvars),
      elements_(std::move(elements)),
      order_(&order),
      reduced_(reduced) {}

MonomialIdeal GroebnerBasis::leading_ideal() const {
  std::vector<Monomial> lms;
  lms.reserve(elements_.size());
  for (const Polynomial& g : elements_) lms.push_back(leading_monomial(g, *order_));
  return MonomialIdeal::minimalize(nvars_, std::move(lms));
}

bool GroebnerBasis::satisfies_buchberger_criterion() const {
  std::vector<Terms> divisors;
  for (const Polynomial& g : elements_) divisors.push_back(sorted_terms(g, *order_));
  for (std::size_t i = 0; i < divisors.size(); ++i) {
    for (std::size_t j = i + 1; j < divisors.size(); ++j) {
      Terms s = s_poly_terms(divisors[i], divisors[j], *order_);
      if (!reduce(std::move(s), divisors, *order_).empty()) return false;
    }
  }
  return true;
}

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> g,
                       const MonomialOrder& order) {
  std::vector<Terms> divisors;
  divisors.reserve(g.size());
  for (const Polynomial& p : g) {
    if (p.nvars() != f.nvars()) {
      throw StructuralError("divisor over a different variable count");
    }
    divisors.push_back(sorted_terms(p, order));
  }
  return to_polynomial(f.nvars(),
                       reduce(sorted_terms(f, order), divisors, order));
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g,
                        const MonomialOrder& order) {
  if (f.is_zero() || g.is_zero()) {
    throw DomainError("S-polynomial of the zero polynomial");
  }
  return to_polynomial(f.nvars(), s_poly_terms(sorted_terms(f, order),
                                               sorted_terms(g, order), order));
}

namespace {

struct QueueItem {
  unsigned degree;
  Monomial lcm;
  std::size_t seq;
  std::size_t i;
  std::size_t j;  // kInput for an input generator
};

constexpr std::size_t kInput = ~std::size_t{0};

}  // namespace

GroebnerBasis buchberger(const PolyIdeal& ideal, const MonomialOrder& order) {
  const std::size_t nvars = ideal.nvars();
  auto before = [&order](const QueueItem& a, const QueueItem& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    if (auto c = order.compare(a.lcm, b.lcm); c != 0) return c < 0;
    return a.seq < b.seq;
  };
  std::set<QueueItem, decltype(before)> queue(before);
  std::set<std::pair<std::size_t, std::size_t>> pending;
  std::size_t seq = 0;

  std::vector<Terms> inputs;
  for (const Polynomial& g : ideal.gens()) {
    inputs.push_back(sorted_terms(g, order));
    const Monomial lm = inputs.back().front().mono;
    queue.insert({lm.degree(), lm, seq++, inputs.size() - 1, kInput});
  }

  std::vector<Terms> basis;
  GroebnerStats stats;

  auto chain_criterion = [&](std::size_t i, std::size_t j, const Monomial& lcm) {
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (k == i || k == j) continue;
      if (!basis[k].front().mono.divides(lcm)) continue;
      const auto ik = std::minmax(i, k);
      const auto jk = std::minmax(j, k);
      if (!pending.contains({ik.first, ik.second}) &&
          !pending.contains({jk.first, jk.second})) {
        return true;
      }
    }
    return false;
  };

  while (!queue.empty()) {
    const QueueItem item = *queue.begin();
    queue.erase(queue.begin());
    Terms h;
    if (item.j == kInput) {
      h = std::move(inputs[item.i]);
    } else {
      pending.erase({item.i, item.j});
      ++stats.pairs_considered;
      const Monomial& li = basis[item.i].front().mono;
      const Monomial& lj = basis[item.j].front().mono;
      if (li.coprime(lj) || chain_criterion(item.i, item.j, item.lcm)) continue;
      ++stats.pairs_reduced;
      h = s_poly_terms(basis[item.i], basis[item.j], order);
    }
    h = reduce(std::move(h), basis, order);
    if (h.empty()) {
      ++stats.zero_reductions;
      continue;
    }
    make_monic(h);
    const std::size_t t = basis.size();
    const Monomial lt = h.front().mono;
    basis.push_back(std::move(h));
    for (std::size_t i = 0; i < t; ++i) {
      Monomial lcm = basis[i].front().mono.lcm(lt);
      const unsigned deg = lcm.degree();
      queue.insert({deg, std::move(lcm), seq++, i, t});
      pending.insert({i, t});
    }
  }

  // Keep one element per minimal leading monomial.
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      const Monomial& lj = basis[j].front().mono;
      const Monomial& li = basis[i].front().mono;
      if (lj.divides(li) && (lj != li || j < i)) redundant = true;
    }
    if (!redundant) keep.push_back(i);
  }
  std::vector<Terms> minimal;
  for (std::size_t i : keep) minimal.push_back(std::move(basis[i]));

  // Tail-reduce each element against the others.
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    Terms tail(minimal[i].begin() + 1, minimal[i].end());
    Terms reduced_tail = reduce(std::move(tail), minimal, order, i);
    Terms full{minimal[i].front()};
    full.insert(full.end(), reduced_tail.begin(), reduced_tail.end());
    make_monic(full);
    minimal[i] = std::move(full);
  }
  std::sort(minimal.begin(), minimal.end(), [&](const Terms& a, const Terms& b) {
    return order.compare(a.front().mono, b.front().mono) < 0;
  });

  std::vector<Polynomial> elements;
  elements.reserve(minimal.size());
  for (Terms& t : minimal) elements.push_back(to_polynomial(nvars, std::move(t)));
  GroebnerBasis gb(nvars, std::move(elements), order, true);
  gb.stats = stats;
  return gb;
}

MonomialIdeal leading_ideal(const PolyIdeal& ideal, const MonomialOrder& order) {
  if (ideal.gens().empty()) return MonomialIdeal::zero(ideal.nvars());
  return buchberger(ideal, order).leading_ideal();
}

std::size_t quotient_length_poly(const PolyIdeal& ideal) {
  const MonomialIdeal li = leading_ideal(ideal);
  if (!li.is_artinian()) {
    throw DomainError("leading ideal is not Artinian: " + li.to_string());
  }
  return li.length_quotient();
}

std::size_t hilbert_oracle(const PolyIdeal& ideal) {
  const std::size_t nvars = ideal.nvars();
  unsigned max_gen_degree = 0;
  for (const Polynomial& g : ideal.gens()) {
    if (!g.is_homogeneous()) {
      throw PreconditionError("hilbert_oracle needs homogeneous generators: " +
                              g.to_string());
    }
    max_gen_degree = std::max(max_gen_degree, g.degree());
  }
  if (ideal.gens().empty() && nvars > 0) {
    throw DomainError("quotient by the zero ideal has infinite length");
  }
  // An m-primary ideal contains a complete intersection of nvars forms of
  // degree max_gen_degree, which kills every degree above this bound.
  const unsigned degree_cap =
      static_cast<unsigned>(nvars) * std::max(max_gen_degree, 1U) + 4;

  std::size_t total = 0;
  unsigned zero_run = 0;
  for (unsigned e = 0; zero_run < 3; ++e) {
    if (e > degree_cap) {
      throw DomainError("quotient is not Artinian (no vanishing by degree " +
                        std::to_string(degree_cap) + ")");
    }
    const std::vector<Monomial> basis =
        nvars == 0 ? std::vector<Monomial>{Monomial(0)}
                   : monomials_of_degree(nvars, 0, nvars - 1, e);
    if (nvars == 0 && e > 0) {
      ++zero_run;
      continue;
    }
    std::unordered_map<Monomial, std::size_t, MonomialHash> column;
    for (std::size_t c = 0; c < basis.size(); ++c) column.emplace(basis[c], c);

    std::map<std::size_t, std::vector<Scalar>> pivots;
    const Scalar zero = Scalar(0);
    for (const Polynomial& g : ideal.gens()) {
      if (pivots.size() == basis.size()) break;
      if (g.degree() > e) continue;
      const std::vector<Monomial> multipliers =
          nvars == 0 ? std::vector<Monomial>{Monomial(0)}
                     : monomials_of_degree(nvars, 0, nvars - 1, e - g.degree());
      for (const Monomial& m : multipliers) {
        if (pivots.size() == basis.size()) break;
        std::vector<Scalar> row(basis.size(), zero * g.terms().front().coeff);
        for (const Term& t : g.terms()) row[column.at(t.mono * m)] = t.coeff;
        for (const auto& [col, prow] : pivots) {
          if (row[col].is_zero()) continue;
          const Scalar factor = row[col];
          for (std::size_t c = col; c < row.size(); ++c) {
            if (!prow[c].is_zero()) row[c] -= factor * prow[c];
          }
        }
        auto lead = std::find_if(row.begin(), row.end(),
                                 [](const Scalar& s) { return !s.is_zero(); });
        if (lead == row.end()) continue;
        const Scalar inv = lead->inverse();
        for (auto it = lead; it != row.end(); ++it) *it *= inv;
        pivots.emplace(static_cast<std::size_t>(lead - row.begin()),
                       std::move(row));
      }
    }
    const std::size_t count = basis.size() - pivots.size();
    total += count;
    zero_run = count == 0 ? zero_run + 1 : 0;
  }
  return total;
}

}  // namespace monocurve
