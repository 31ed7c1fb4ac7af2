#include "gradus/groebner.hpp"

#include <algorithm>

#include "gradus/error.hpp"

namespace gradus {
namespace {

void check_ring(const Polynomial& f, std::span<const Polynomial> basis) {
  for (const auto& g : basis) {
    if (!(g.ring() == f.ring())) throw MismatchError("division across different rings");
    if (g.is_zero()) throw PreconditionError("division by the zero polynomial");
  }
}

// out = a - c*m*b, where a and b are descending term ranges.
std::vector<Term> subtract_scaled(std::span<const Term> a, std::span<const Term> b,
                                  const Scalar& c, const Monomial& m, const TermOrder& order) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  Monomial bm;
  bool have_bm = false;
  while (i < a.size() || j < b.size()) {
    if (j < b.size() && !have_bm) {
      bm = b[j].monomial * m;
      have_bm = true;
    }
    if (j == b.size()) {
      out.push_back(a[i++]);
      continue;
    }
    auto cmp = i < a.size() ? order.compare(a[i].monomial, bm) : std::strong_ordering::less;
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back({bm, -(b[j].coeff * c)});
      ++j;
      have_bm = false;
    } else {
      Scalar s = a[i].coeff - b[j].coeff * c;
      if (!s.is_zero()) out.push_back({bm, std::move(s)});
      ++i;
      ++j;
      have_bm = false;
    }
  }
  return out;
}

// Core reduction loop shared by divide() and normal_form().
std::vector<Term> reduce_terms(std::vector<Term> p, std::span<const Polynomial> basis,
                               const TermOrder& order,
                               std::vector<std::vector<Term>>* quotients) {
  std::vector<Term> remainder;
  std::size_t head = 0;
  while (head < p.size()) {
    const Term lt = p[head];
    std::size_t k = 0;
    while (k < basis.size() && !basis[k].leading_monomial().divides(lt.monomial)) ++k;
    if (k == basis.size()) {
      remainder.push_back(lt);
      ++head;
      continue;
    }
    const Polynomial& g = basis[k];
    Monomial m = lt.monomial / g.leading_monomial();
    Scalar c = lt.coeff / g.leading_coefficient();
    if (quotients != nullptr) (*quotients)[k].push_back({m, c});
    std::span<const Term> rest(p.data() + head + 1, p.size() - head - 1);
    std::span<const Term> tail(g.terms().data() + 1, g.terms().size() - 1);
    p = subtract_scaled(rest, tail, c, m, order);
    head = 0;
  }
  return remainder;
}

struct CriticalPair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
};

}  // namespace

Division divide(const Polynomial& f, std::span<const Polynomial> divisors) {
  check_ring(f, divisors);
  std::vector<std::vector<Term>> q(divisors.size());
  auto r = reduce_terms(f.terms(), divisors, f.ring().order, &q);
  Division out{{}, Polynomial::from_canonical(f.ring(), std::move(r))};
  for (auto& terms : q) out.quotients.push_back(Polynomial::from_canonical(f.ring(), std::move(terms)));
  return out;
}

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis) {
  check_ring(f, basis);
  return Polynomial::from_canonical(f.ring(),
                                    reduce_terms(f.terms(), basis, f.ring().order, nullptr));
}

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis, TermOrder order) {
  std::vector<Polynomial> reordered;
  reordered.reserve(basis.size());
  for (const auto& g : basis) reordered.push_back(g.with_order(order));
  return normal_form(f.with_order(order), reordered);
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  if (!(f.ring() == g.ring())) throw MismatchError("S-polynomial across different rings");
  Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
  Polynomial a = f.times_term(l / f.leading_monomial(), f.leading_coefficient().inverse());
  a.subtract_multiple(g.leading_coefficient().inverse(), l / g.leading_monomial(), g);
  return a;
}

std::vector<Polynomial> reduced_groebner(std::span<const Polynomial> generators) {
  std::vector<Polynomial> basis;
  for (const auto& g : generators) {
    if (!g.is_zero()) basis.push_back(g.monic());
  }
  if (basis.empty()) return basis;
  const RingSpec ring = basis.front().ring();
  for (const auto& g : basis) {
    if (!(g.ring() == ring)) throw MismatchError("generators from different rings");
  }
  const TermOrder order = ring.order;

  std::vector<CriticalPair> pairs;
  std::vector<std::vector<char>> pending;
  auto add_element = [&](Polynomial h) {
    const std::size_t t = basis.size();
    basis.push_back(std::move(h));
    for (auto& row : pending) row.push_back(0);
    pending.emplace_back(t + 1, 0);
    for (std::size_t k = 0; k < t; ++k) {
      pairs.push_back({k, t, lcm(basis[k].leading_monomial(), basis[t].leading_monomial())});
      pending[k][t] = pending[t][k] = 1;
    }
  };
  {
    std::vector<Polynomial> initial;
    initial.swap(basis);
    for (auto& g : initial) add_element(std::move(g));
  }

  while (!pairs.empty()) {
    // normal strategy: smallest lcm first
    auto best = std::min_element(pairs.begin(), pairs.end(), [&](const auto& a, const auto& b) {
      if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
      auto c = order.compare(a.lcm, b.lcm);
      if (c != 0) return c < 0;
      return std::tie(a.i, a.j) < std::tie(b.i, b.j);
    });
    CriticalPair pair = *best;
    pairs.erase(best);
    pending[pair.i][pair.j] = pending[pair.j][pair.i] = 0;

    const Monomial& lm_i = basis[pair.i].leading_monomial();
    const Monomial& lm_j = basis[pair.j].leading_monomial();
    if (lm_i.coprime(lm_j)) continue;

    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == pair.i || k == pair.j) continue;
      chain = !pending[pair.i][k] && !pending[pair.j][k] &&
              basis[k].leading_monomial().divides(pair.lcm);
    }
    if (chain) continue;

    Polynomial h = normal_form(s_polynomial(basis[pair.i], basis[pair.j]), basis);
    if (!h.is_zero()) add_element(h.monic());
  }

  // minimize, then tail-reduce
  std::sort(basis.begin(), basis.end(), [&](const Polynomial& a, const Polynomial& b) {
    return order.compare(a.leading_monomial(), b.leading_monomial()) < 0;
  });
  std::vector<Polynomial> minimal;
  for (auto& g : basis) {
    bool redundant = std::any_of(minimal.begin(), minimal.end(), [&](const Polynomial& h) {
      return h.leading_monomial().divides(g.leading_monomial());
    });
    if (!redundant) minimal.push_back(std::move(g));
  }
  std::vector<Polynomial> reduced;
  reduced.reserve(minimal.size());
  for (const auto& g : minimal) {
    const auto& terms = g.terms();
    std::vector<Term> tail(terms.begin() + 1, terms.end());
    auto rest = reduce_terms(std::move(tail), minimal, order, nullptr);
    rest.insert(rest.begin(), terms.front());
    reduced.push_back(Polynomial::from_canonical(ring, std::move(rest)));
  }
  return reduced;
}

bool is_groebner_basis(std::span<const Polynomial> basis) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      if (!normal_form(s_polynomial(basis[i], basis[j]), basis).is_zero()) return false;
    }
  }
  return true;
}

}  // namespace gradus
