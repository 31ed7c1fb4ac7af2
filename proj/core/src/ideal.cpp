#include <algorithm>
#include <map>
#include <mutex>
#include <optional>

#include "gradus/error.hpp"
#include "gradus/groebner.hpp"

namespace gradus {

struct Ideal::State {
  std::vector<Polynomial> gb;
  std::mutex mutex;
  std::map<unsigned, std::size_t> quotient_dims;
};

namespace {

// Maps f(x_0..x_n) to f(x_1..x_{n+1}) in the ring with one extra leading variable.
Polynomial lift_with_auxiliary(const Polynomial& f, const RingSpec& big) {
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) {
    Monomial m(big.nvars);
    for (std::size_t i = 0; i < f.ring().nvars; ++i) m.set(i + 1, t.monomial[i]);
    terms.push_back({m, t.coeff});
  }
  return Polynomial(big, std::move(terms));
}

Polynomial drop_auxiliary(const Polynomial& f, const RingSpec& small) {
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) {
    Monomial m(small.nvars);
    for (std::size_t i = 0; i < small.nvars; ++i) m.set(i, t.monomial[i + 1]);
    terms.push_back({m, t.coeff});
  }
  return Polynomial(small, std::move(terms));
}

void check_same_ring(const Ideal& a, const Ideal& b) {
  if (!(a.ring() == b.ring())) throw MismatchError("ideals from different rings");
}

}  // namespace

Ideal::Ideal(RingSpec ring) : ring_(ring), state_(std::make_shared<State>()) {}

Ideal::Ideal(RingSpec ring, std::vector<Polynomial> generators)
    : ring_(ring), state_(std::make_shared<State>()) {
  for (auto& g : generators) {
    if (!(g.ring() == ring_)) throw MismatchError("generator from a different ring");
    if (g.is_zero()) continue;
    if (!g.is_homogeneous()) {
      throw PreconditionError("non-homogeneous generator " + g.to_string());
    }
    generators_.push_back(std::move(g));
  }
  state_->gb = reduced_groebner(generators_);
}

Ideal Ideal::parse(const RingSpec& ring, const std::vector<std::string>& generators) {
  std::vector<Polynomial> polys;
  polys.reserve(generators.size());
  for (const auto& text : generators) polys.push_back(Polynomial::parse(ring, text));
  return Ideal(ring, std::move(polys));
}

const std::vector<Polynomial>& Ideal::groebner_basis() const { return state_->gb; }

bool Ideal::is_zero() const { return state_->gb.empty(); }

bool Ideal::is_unit() const {
  const auto& gb = state_->gb;
  return gb.size() == 1 && gb.front().degree() == 0;
}

bool Ideal::contains(const Polynomial& f) const { return reduce(f).is_zero(); }

Polynomial Ideal::reduce(const Polynomial& f) const {
  if (!(f.ring() == ring_)) throw MismatchError("polynomial from a different ring");
  return normal_form(f, state_->gb);
}

std::vector<Monomial> Ideal::leading_monomials() const {
  std::vector<Monomial> out;
  out.reserve(state_->gb.size());
  for (const auto& g : state_->gb) out.push_back(g.leading_monomial());
  return out;
}

int Ideal::initial_degree() const {
  int d = -1;
  for (const auto& g : state_->gb) d = d < 0 ? g.degree() : std::min(d, g.degree());
  return d;
}

int Ideal::max_basis_degree() const {
  int d = -1;
  for (const auto& g : state_->gb) d = std::max(d, g.degree());
  return d;
}

std::vector<Polynomial> Ideal::graded_piece(unsigned d) const {
  std::vector<Polynomial> out;
  const auto& gb = state_->gb;
  for (const auto& u : monomials_of_degree(ring_, d)) {
    auto it = std::find_if(gb.begin(), gb.end(), [&u](const Polynomial& g) {
      return g.leading_monomial().divides(u);
    });
    if (it != gb.end()) {
      out.push_back(it->times_term(u / it->leading_monomial(), Scalar::one(ring_.field)));
    }
  }
  return out;
}

std::size_t Ideal::dimension_in_degree(unsigned d) const {
  return static_cast<std::size_t>(binomial(ring_.nvars - 1 + d, ring_.nvars - 1)) -
         quotient_dimension(d);
}

std::size_t Ideal::quotient_dimension(unsigned d) const {
  {
    std::lock_guard lock(state_->mutex);
    auto it = state_->quotient_dims.find(d);
    if (it != state_->quotient_dims.end()) return it->second;
  }
  const auto leads = leading_monomials();
  std::size_t count = 0;
  for (const auto& u : monomials_of_degree(ring_, d)) {
    bool standard = std::none_of(leads.begin(), leads.end(),
                                 [&u](const Monomial& m) { return m.divides(u); });
    if (standard) ++count;
  }
  std::lock_guard lock(state_->mutex);
  state_->quotient_dims.emplace(d, count);
  return count;
}

std::vector<Polynomial> Ideal::minimal_generators() const {
  std::vector<Polynomial> out;
  std::vector<Polynomial> by_degree = state_->gb;
  std::stable_sort(by_degree.begin(), by_degree.end(),
                   [](const Polynomial& a, const Polynomial& b) { return a.degree() < b.degree(); });
  std::size_t k = 0;
  while (k < by_degree.size()) {
    const unsigned d = static_cast<unsigned>(by_degree[k].degree());
    // span of R_1 * I_{d-1}
    std::vector<Polynomial> lower;
    if (d > 0) {
      for (const auto& f : graded_piece(d - 1)) {
        for (std::size_t v = 0; v < ring_.nvars; ++v) {
          lower.push_back(f.times_term(Monomial::variable(ring_.nvars, v), Scalar::one(ring_.field)));
        }
      }
    }
    const auto basis = monomials_of_degree(ring_, d);
    std::size_t current = rank(coefficient_matrix(lower, basis, ring_.field));
    for (; k < by_degree.size() && by_degree[k].degree() == static_cast<int>(d); ++k) {
      lower.push_back(by_degree[k]);
      std::size_t next = rank(coefficient_matrix(lower, basis, ring_.field));
      if (next > current) {
        out.push_back(by_degree[k]);
        current = next;
      } else {
        lower.pop_back();
      }
    }
  }
  return out;
}

bool operator==(const Ideal& a, const Ideal& b) {
  return a.ring_ == b.ring_ && a.state_->gb == b.state_->gb;
}

std::vector<Polynomial> reduced_groebner(const Ideal& ideal, TermOrder order) {
  if (order == ideal.ring().order) return ideal.groebner_basis();
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.groebner_basis()) gens.push_back(g.with_order(order));
  return reduced_groebner(gens);
}

bool ideal_membership(const Polynomial& f, const Ideal& ideal) { return ideal.contains(f); }

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  check_same_ring(a, b);
  std::vector<Polynomial> gens = a.groebner_basis();
  gens.insert(gens.end(), b.groebner_basis().begin(), b.groebner_basis().end());
  return Ideal(a.ring(), std::move(gens));
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
  check_same_ring(a, b);
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators()) {
    for (const auto& g : b.generators()) gens.push_back(f * g);
  }
  return Ideal(a.ring(), std::move(gens));
}

Ideal ideal_intersection(const Ideal& a, const Ideal& b) {
  check_same_ring(a, b);
  const RingSpec& ring = a.ring();
  if (a.is_zero() || b.is_zero()) return Ideal(ring);
  if (ring.nvars + 1 > kMaxVariables) {
    throw PreconditionError("intersection needs one auxiliary variable beyond the ring");
  }
  const RingSpec big{ring.nvars + 1, ring.field, TermOrder::elimination(1)};
  const Polynomial t = Polynomial::variable(big, 0);
  const Polynomial one_minus_t = Polynomial::constant(big, Scalar::one(ring.field)) - t;

  std::vector<Polynomial> gens;
  for (const auto& f : a.groebner_basis()) gens.push_back(t * lift_with_auxiliary(f, big));
  for (const auto& g : b.groebner_basis()) gens.push_back(one_minus_t * lift_with_auxiliary(g, big));

  std::vector<Polynomial> contracted;
  for (const auto& g : reduced_groebner(gens)) {
    bool t_free = std::all_of(g.terms().begin(), g.terms().end(),
                              [](const Term& term) { return term.monomial[0] == 0; });
    if (t_free) contracted.push_back(drop_auxiliary(g, ring));
  }
  return Ideal(ring, std::move(contracted));
}

Ideal ideal_quotient(const Ideal& a, const Ideal& b) {
  check_same_ring(a, b);
  if (b.is_zero()) throw PreconditionError("quotient by the zero ideal");
  const RingSpec& ring = a.ring();
  std::optional<Ideal> result;
  for (const auto& g : b.groebner_basis()) {
    Ideal principal(ring, {g});
    Ideal meet = ideal_intersection(a, principal);
    std::vector<Polynomial> quotients;
    const std::vector<Polynomial> divisor{g};
    for (const auto& h : meet.groebner_basis()) {
      Division div = divide(h, divisor);
      if (!div.remainder.is_zero()) {
        throw ComputationError("inexact division while forming a colon ideal");
      }
      quotients.push_back(div.quotients.front());
    }
    Ideal colon(ring, std::move(quotients));
    result = result ? ideal_intersection(*result, colon) : colon;
  }
  return *result;
}

Ideal leading_term_ideal(const Ideal& ideal, TermOrder order, LeadingTermSource source) {
  const RingSpec& ring = ideal.ring();
  std::vector<Polynomial> source_polys;
  if (source == LeadingTermSource::kGroebnerBasis) {
    source_polys = reduced_groebner(ideal, order);
  } else {
    for (const auto& g : ideal.generators()) source_polys.push_back(g.with_order(order));
  }
  std::vector<Polynomial> monomials;
  for (const auto& g : source_polys) {
    monomials.push_back(Polynomial::term(ring, g.leading_monomial(), Scalar::one(ring.field)));
  }
  return Ideal(ring, std::move(monomials));
}

}  // namespace gradus
