#include "monocurve/monideal.hpp"

#include <algorithm>
#include <unordered_set>

#include "monocurve/error.hpp"
#include "monocurve/order.hpp"

namespace monocurve {

/// Trie over exponent vectors answering "is some stored monomial a divisor
/// of m?". Level v branches on the exponent of variable v.
class DivisorIndex {
 public:
  explicit DivisorIndex(std::size_t nvars) : nvars_(nvars), nodes_(1) {}

  void insert(const Monomial& m) {
    std::uint32_t node = 0;
    for (std::size_t v = 0; v < nvars_; ++v) {
      const auto e = static_cast<std::uint16_t>(m[v]);
      std::uint32_t next = kNone;
      for (const auto& [exp, child] : nodes_[node].children) {
        if (exp == e) {
          next = child;
          break;
        }
      }
      if (next == kNone) {
        next = static_cast<std::uint32_t>(nodes_.size());
        nodes_[node].children.emplace_back(e, next);
        nodes_.emplace_back();
      }
      node = next;
    }
    nodes_[node].terminal = true;
    ++count_;
  }

  bool has_divisor_of(const Monomial& m) const {
    return count_ > 0 && search(0, 0, m);
  }

 private:
  static constexpr std::uint32_t kNone = 0xffffffffU;
  struct Node {
    std::vector<std::pair<std::uint16_t, std::uint32_t>> children;
    bool terminal = false;
  };

  bool search(std::uint32_t node, std::size_t v, const Monomial& m) const {
    if (v == nvars_) return nodes_[node].terminal;
    const int bound = m[v];
    for (const auto& [exp, child] : nodes_[node].children) {
      if (exp <= bound && search(child, v + 1, m)) return true;
    }
    return false;
  }

  std::size_t nvars_;
  std::vector<Node> nodes_;
  std::size_t count_ = 0;
};

namespace {

bool storage_before(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return grevelex_compare(a, b) > 0;
}

void check_arity(std::size_t a, std::size_t b) {
  if (a != b) throw StructuralError("ideals over different variable counts");
}

}  // namespace

MonomialIdeal::MonomialIdeal(std::size_t nvars)
    : nvars_(nvars), index_(std::make_shared<DivisorIndex>(nvars)) {}

MonomialIdeal MonomialIdeal::minimalize(std::size_t nvars,
                                        std::vector<Monomial> gens) {
  for (const Monomial& g : gens) check_arity(g.nvars(), nvars);
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a < b;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  auto index = std::make_shared<DivisorIndex>(nvars);
  MonomialIdeal ideal(nvars);
  // Increasing degree: a candidate can only be divided by one already seen.
  for (Monomial& g : gens) {
    if (!index->has_divisor_of(g)) {
      index->insert(g);
      ideal.gens_.push_back(std::move(g));
    }
  }
  std::sort(ideal.gens_.begin(), ideal.gens_.end(), storage_before);
  ideal.index_ = std::move(index);
  return ideal;
}

MonomialIdeal MonomialIdeal::unit(std::size_t nvars) {
  return minimalize(nvars, {Monomial(nvars)});
}

bool MonomialIdeal::contains(const Monomial& m) const {
  check_arity(m.nvars(), nvars_);
  return index_->has_divisor_of(m);
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
  check_arity(other.nvars_, nvars_);
  return std::all_of(other.gens_.begin(), other.gens_.end(),
                     [&](const Monomial& g) { return contains(g); });
}

bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
  // Minimal generating sets of monomial ideals are unique.
  return a.nvars_ == b.nvars_ && a.gens_ == b.gens_;
}

MonomialIdeal operator+(const MonomialIdeal& a, const MonomialIdeal& b) {
  check_arity(a.nvars_, b.nvars_);
  std::vector<Monomial> gens = a.gens_;
  gens.insert(gens.end(), b.gens_.begin(), b.gens_.end());
  return MonomialIdeal::minimalize(a.nvars_, std::move(gens));
}

MonomialIdeal operator*(const MonomialIdeal& a, const MonomialIdeal& b) {
  check_arity(a.nvars_, b.nvars_);
  std::vector<Monomial> gens;
  gens.reserve(a.gens_.size() * b.gens_.size());
  for (const Monomial& g : a.gens_) {
    for (const Monomial& h : b.gens_) gens.push_back(g * h);
  }
  return MonomialIdeal::minimalize(a.nvars_, std::move(gens));
}

MonomialIdeal MonomialIdeal::pow(unsigned k) const {
  MonomialIdeal result = unit(nvars_);
  for (unsigned i = 0; i < k; ++i) result = result * *this;
  return result;
}

MonomialIdeal MonomialIdeal::times(const Monomial& m) const {
  std::vector<Monomial> gens;
  gens.reserve(gens_.size());
  for (const Monomial& g : gens_) gens.push_back(g * m);
  return minimalize(nvars_, std::move(gens));
}

MonomialIdeal MonomialIdeal::intersect(const MonomialIdeal& other) const {
  check_arity(other.nvars_, nvars_);
  std::vector<Monomial> gens;
  gens.reserve(gens_.size() * other.gens_.size());
  for (const Monomial& g : gens_) {
    for (const Monomial& h : other.gens_) gens.push_back(g.lcm(h));
  }
  return minimalize(nvars_, std::move(gens));
}

MonomialIdeal MonomialIdeal::colon(const Monomial& m) const {
  check_arity(m.nvars(), nvars_);
  std::vector<Monomial> gens;
  gens.reserve(gens_.size());
  for (const Monomial& g : gens_) gens.push_back(g / g.gcd(m));
  return minimalize(nvars_, std::move(gens));
}

MonomialIdeal MonomialIdeal::colon(const MonomialIdeal& j) const {
  check_arity(j.nvars_, nvars_);
  if (j.is_zero()) throw DomainError("colon by the zero ideal");
  MonomialIdeal result = colon(j.gens_.front());
  for (std::size_t k = 1; k < j.gens_.size() && !result.is_zero(); ++k) {
    result = result.intersect(colon(j.gens_[k]));
  }
  return result;
}

bool MonomialIdeal::is_artinian() const {
  for (std::size_t v = 0; v < nvars_; ++v) {
    const bool has_pure_power =
        std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) {
          return g.degree() == static_cast<unsigned>(g[v]);
        });
    if (!has_pure_power) return false;
  }
  return !gens_.empty();
}

namespace {

// Standard monomials of degree e+1 are exactly the products x_v * s with s
// standard of degree e that avoid the ideal, since divisors of standard
// monomials are standard.
template <class Visit>
void walk_staircase(const MonomialIdeal& ideal, unsigned max_degree,
                    Visit&& visit) {
  const std::size_t nvars = ideal.nvars();
  std::vector<Monomial> level;
  if (!ideal.contains(Monomial(nvars))) level.emplace_back(nvars);
  for (unsigned deg = 0; deg <= max_degree && !level.empty(); ++deg) {
    visit(deg, level);
    if (deg == max_degree) break;
    std::unordered_set<Monomial, MonomialHash> next;
    for (const Monomial& s : level) {
      for (std::size_t v = 0; v < nvars; ++v) {
        Monomial t = s * Monomial::variable(nvars, v);
        if (!ideal.contains(t)) next.insert(t);
      }
    }
    level.assign(next.begin(), next.end());
    std::sort(level.begin(), level.end(), storage_before);
  }
}

}  // namespace

std::size_t MonomialIdeal::length_quotient() const {
  if (!is_artinian()) {
    throw DomainError("length of a non-Artinian quotient: " + to_string());
  }
  std::size_t total = 0;
  walk_staircase(*this, ~0U, [&](unsigned, const std::vector<Monomial>& level) {
    total += level.size();
  });
  return total;
}

std::vector<Monomial> MonomialIdeal::standard_monomials() const {
  if (!is_artinian()) {
    throw DomainError("standard monomials of a non-Artinian quotient");
  }
  std::vector<Monomial> out;
  walk_staircase(*this, ~0U, [&](unsigned, const std::vector<Monomial>& level) {
    out.insert(out.end(), level.begin(), level.end());
  });
  return out;
}

std::vector<std::size_t> MonomialIdeal::hilbert_function(
    unsigned max_degree) const {
  std::vector<std::size_t> counts(max_degree + 1, 0);
  walk_staircase(*this, max_degree,
                 [&](unsigned deg, const std::vector<Monomial>& level) {
                   counts[deg] = level.size();
                 });
  return counts;
}

std::string MonomialIdeal::to_string(const std::string& sep,
                                     int first_index) const {
  if (gens_.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < gens_.size(); ++k) {
    if (k > 0) out += sep;
    out += gens_[k].to_string(first_index);
  }
  return out;
}

MonomialIdeal ideal_sum(std::size_t nvars,
                        const std::vector<MonomialIdeal>& ideals) {
  std::vector<Monomial> gens;
  for (const MonomialIdeal& i : ideals) {
    check_arity(i.nvars(), nvars);
    gens.insert(gens.end(), i.gens().begin(), i.gens().end());
  }
  return MonomialIdeal::minimalize(nvars, std::move(gens));
}

MonomialIdeal ideal_product(std::size_t nvars,
                            const std::vector<MonomialIdeal>& ideals) {
  MonomialIdeal result = MonomialIdeal::unit(nvars);
  for (const MonomialIdeal& i : ideals) result = result * i;
  return result;
}

}  // namespace monocurve
