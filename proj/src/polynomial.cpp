#include "monocurve/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "monocurve/error.hpp"

namespace monocurve {

namespace {

bool term_before(const Term& a, const Term& b) {
  return grevelex_compare(a.mono, b.mono) > 0;
}

}  // namespace

Polynomial Polynomial::from_terms(std::size_t nvars, std::vector<Term> terms) {
  Polynomial p(nvars);
  for (const Term& t : terms) {
    if (t.mono.nvars() != nvars) {
      throw StructuralError("term over a different variable count");
    }
  }
  std::sort(terms.begin(), terms.end(), term_before);
  for (Term& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
    } else if (!t.coeff.is_zero()) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

Polynomial Polynomial::constant(std::size_t nvars, const Scalar& c) {
  Polynomial p(nvars);
  if (!c.is_zero()) p.terms_.push_back({Monomial(nvars), c});
  return p;
}

Polynomial Polynomial::monomial(const Monomial& m, const Scalar& c) {
  Polynomial p(m.nvars());
  if (!c.is_zero()) p.terms_.push_back({m, c});
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t pos) {
  return monomial(Monomial::variable(nvars, pos));
}

unsigned Polynomial::degree() const {
  unsigned d = 0;
  for (const Term& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

bool Polynomial::is_homogeneous() const {
  return std::all_of(terms_.begin(), terms_.end(), [&](const Term& t) {
    return t.mono.degree() == terms_.front().mono.degree();
  });
}

Scalar Polynomial::coefficient(const Monomial& m) const {
  for (const Term& t : terms_) {
    if (t.mono == m) return t.coeff;
  }
  if (!terms_.empty()) return terms_.front().coeff * Scalar(0);
  return Scalar(0);
}

void Polynomial::check_same(const Polynomial& o) const {
  if (nvars_ != o.nvars_) {
    throw StructuralError("polynomials over different variable counts");
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (Term& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check_same(o);
  std::vector<Term> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() ||
        (a != terms_.end() && grevelex_compare(a->mono, b->mono) > 0)) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || grevelex_compare(a->mono, b->mono) < 0) {
      merged.push_back(*b++);
    } else {
      Scalar c = a->coeff + b->coeff;
      if (!c.is_zero()) merged.push_back({a->mono, std::move(c)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this += -o; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_same(b);
  std::unordered_map<Monomial, Scalar, MonomialHash> acc;
  for (const Term& s : a.terms_) {
    for (const Term& t : b.terms_) {
      auto [it, inserted] = acc.try_emplace(s.mono * t.mono, s.coeff * t.coeff);
      if (!inserted) it->second += s.coeff * t.coeff;
    }
  }
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc) terms.push_back({m, std::move(c)});
  return Polynomial::from_terms(a.nvars_, std::move(terms));
}

Polynomial Polynomial::scaled(const Scalar& c) const {
  if (c.is_zero()) return Polynomial(nvars_);
  Polynomial r = *this;
  for (Term& t : r.terms_) t.coeff *= c;
  return r;
}

Polynomial Polynomial::times(const Monomial& m, const Scalar& c) const {
  if (c.is_zero()) return Polynomial(nvars_);
  Polynomial r = *this;
  // Multiplying by a monomial preserves the order of terms.
  for (Term& t : r.terms_) {
    t.mono *= m;
    t.coeff *= c;
  }
  return r;
}

Polynomial Polynomial::reduce_mod(std::uint32_t prime) const {
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const Term& t : terms_) terms.push_back({t.mono, t.coeff.reduce_mod(prime)});
  return from_terms(nvars_, std::move(terms));
}

std::string Polynomial::to_string(int first_index) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const Term& t : terms_) {
    const bool negative = t.coeff.prints_negative();
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    std::string mag = negative ? (-t.coeff).to_string() : t.coeff.to_string();
    if (t.mono.is_one()) {
      out += mag;
    } else {
      if (mag != "1") out += mag + "*";
      out += t.mono.to_string(first_index);
    }
    first = false;
  }
  return out;
}

const Term& leading_term(const Polynomial& f, const MonomialOrder& order) {
  if (f.is_zero()) throw DomainError("leading term of the zero polynomial");
  const auto& terms = f.terms();
  if (dynamic_cast<const Grevelex*>(&order) != nullptr) return terms.front();
  return *std::max_element(terms.begin(), terms.end(),
                           [&](const Term& a, const Term& b) {
                             return order.compare(a.mono, b.mono) < 0;
                           });
}

Monomial leading_monomial(const Polynomial& f, const MonomialOrder& order) {
  return leading_term(f, order).mono;
}

PolyMatrix::PolyMatrix(std::size_t size, std::size_t nvars)
    : size_(size), nvars_(nvars), entries_(size * size, Polynomial(nvars)) {
  if (size == 0) throw StructuralError("empty matrix");
}

PolyMatrix PolyMatrix::from_rows(std::vector<std::vector<Polynomial>> rows) {
  if (rows.empty()) throw StructuralError("empty matrix");
  const std::size_t n = rows.size();
  const std::size_t nvars = rows[0].empty() ? 0 : rows[0][0].nvars();
  PolyMatrix m(n, nvars);
  for (std::size_t r = 0; r < n; ++r) {
    if (rows[r].size() != n) throw StructuralError("matrix is not square");
    for (std::size_t c = 0; c < n; ++c) {
      if (rows[r][c].nvars() != nvars) {
        throw StructuralError("matrix entries over different variable counts");
      }
      m.at(r, c) = std::move(rows[r][c]);
    }
  }
  return m;
}

PolyMatrix PolyMatrix::submatrix(std::size_t rows,
                                 const std::vector<std::size_t>& columns) const {
  if (rows != columns.size() || rows > size_ || rows == 0) {
    throw StructuralError("submatrix must be square and fit in the matrix");
  }
  PolyMatrix m(rows, nvars_);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < rows; ++c) {
      if (columns[c] >= size_) throw StructuralError("column out of range");
      m.at(r, c) = at(r, columns[c]);
    }
  }
  return m;
}

PolyMatrix PolyMatrix::with_rows_swapped(std::size_t r1, std::size_t r2) const {
  PolyMatrix m = *this;
  for (std::size_t c = 0; c < size_; ++c) std::swap(m.at(r1, c), m.at(r2, c));
  return m;
}

Polynomial PolyMatrix::antidiagonal_product() const {
  Polynomial p = Polynomial::constant(nvars_, Scalar(1));
  for (std::size_t r = 0; r < size_; ++r) p *= at(r, size_ - 1 - r);
  return p;
}

std::string PolyMatrix::to_string(int first_index) const {
  std::string out;
  for (std::size_t r = 0; r < size_; ++r) {
    out += "[";
    for (std::size_t c = 0; c < size_; ++c) {
      if (c > 0) out += ", ";
      out += at(r, c).to_string(first_index);
    }
    out += "]\n";
  }
  return out;
}

namespace {

struct DeterminantMemo {
  const PolyMatrix& m;
  std::unordered_map<std::uint32_t, Polynomial> cache;

  // Determinant of rows [n - popcount(mask), n) restricted to the columns
  // in mask.
  const Polynomial& minor(std::uint32_t mask) {
    if (auto it = cache.find(mask); it != cache.end()) return it->second;
    const std::size_t n = m.size();
    const auto width = static_cast<std::size_t>(__builtin_popcount(mask));
    Polynomial result(m.nvars());
    if (width == 0) {
      result = Polynomial::constant(m.nvars(), Scalar(1));
    } else {
      const std::size_t row = n - width;
      std::size_t position = 0;
      for (std::size_t c = 0; c < n; ++c) {
        if ((mask & (1U << c)) == 0) continue;
        const Polynomial& entry = m.at(row, c);
        if (!entry.is_zero()) {
          Polynomial term = entry * minor(mask & ~(1U << c));
          if (position % 2 == 0) {
            result += term;
          } else {
            result -= term;
          }
        }
        ++position;
      }
    }
    return cache.emplace(mask, std::move(result)).first->second;
  }
};

}  // namespace

Polynomial determinant(const PolyMatrix& m) {
  if (m.size() > 31) throw StructuralError("matrix too large");
  DeterminantMemo memo{m, {}};
  return memo.minor((1U << m.size()) - 1U);
}

Polynomial substitute_parametrization(const Polynomial& f, int d, int m) {
  if (d < 2 || m < 1 || std::gcd(d, m) != 1) {
    throw PreconditionError("parametrization requires d >= 2, m >= 1 and "
                            "gcd(d, m) = 1");
  }
  if (f.nvars() != static_cast<std::size_t>(d)) {
    throw StructuralError("substitution expects a polynomial in x1..xd");
  }
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const Term& t : f.terms()) {
    long power = 0;
    for (int i = 0; i < d; ++i) {
      power += static_cast<long>(t.mono[static_cast<std::size_t>(i)]) *
               (d + static_cast<long>(i) * m);
    }
    terms.push_back({Monomial::variable(1, 0, static_cast<int>(power)), t.coeff});
  }
  return Polynomial::from_terms(1, std::move(terms));
}

}  // namespace monocurve
