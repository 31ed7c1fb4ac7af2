#include "gradus/betti.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

#include "gradus/error.hpp"

namespace gradus {
namespace {

// Standard monomials of R/I in each degree, with multiplication-by-variable
// maps expressed in those bases.
class QuotientBasis {
 public:
  QuotientBasis(const Ideal& ideal, unsigned max_degree) : ideal_(ideal) {
    const auto leads = ideal.leading_monomials();
    for (unsigned d = 0; d <= max_degree; ++d) {
      std::vector<Monomial> standard;
      for (const auto& u : monomials_of_degree(ideal.ring(), d)) {
        bool divisible = std::any_of(leads.begin(), leads.end(),
                                     [&u](const Monomial& m) { return m.divides(u); });
        if (!divisible) standard.push_back(u);
      }
      std::unordered_map<Monomial, std::size_t, MonomialHash> index;
      for (std::size_t k = 0; k < standard.size(); ++k) index.emplace(standard[k], k);
      basis_.push_back(std::move(standard));
      index_.push_back(std::move(index));
    }
  }

  std::size_t dim(int d) const {
    return d < 0 || d >= static_cast<int>(basis_.size()) ? 0 : basis_[d].size();
  }

  /// x_var * (k-th standard monomial of degree d), reduced, as (index, coeff) pairs.
  const std::vector<std::pair<std::size_t, Scalar>>& multiply(unsigned d, std::size_t k,
                                                              std::size_t var) {
    auto key = std::make_tuple(d, k, var);
    auto it = products_.find(key);
    if (it != products_.end()) return it->second;
    const RingSpec& ring = ideal_.ring();
    Polynomial p = Polynomial::term(ring, basis_[d][k] * Monomial::variable(ring.nvars, var),
                                    Scalar::one(ring.field));
    std::vector<std::pair<std::size_t, Scalar>> coords;
    const Polynomial reduced = ideal_.reduce(p);
    for (const auto& t : reduced.terms()) coords.emplace_back(index_[d + 1].at(t.monomial), t.coeff);
    return products_.emplace(key, std::move(coords)).first->second;
  }

 private:
  struct KeyHash {
    std::size_t operator()(const std::tuple<unsigned, std::size_t, std::size_t>& k) const noexcept {
      return (std::get<0>(k) * 1000003u + std::get<1>(k)) * 31u + std::get<2>(k);
    }
  };
  const Ideal& ideal_;
  std::vector<std::vector<Monomial>> basis_;
  std::vector<std::unordered_map<Monomial, std::size_t, MonomialHash>> index_;
  std::unordered_map<std::tuple<unsigned, std::size_t, std::size_t>,
                     std::vector<std::pair<std::size_t, Scalar>>, KeyHash>
      products_;
};

// Subsets of {0..nvars-1} of size i, as bit masks in increasing order.
std::vector<std::vector<unsigned>> exterior_bases(std::size_t nvars) {
  std::vector<std::vector<unsigned>> by_size(nvars + 1);
  for (unsigned mask = 0; mask < (1u << nvars); ++mask) by_size[std::popcount(mask)].push_back(mask);
  return by_size;
}

}  // namespace

std::size_t BettiTable::at(int i, int j) const {
  auto it = entries_.find({i, j});
  return it == entries_.end() ? 0 : it->second;
}

void BettiTable::set(int i, int j, std::size_t value) {
  if (value == 0) {
    entries_.erase({i, j});
  } else {
    entries_[{i, j}] = value;
  }
}

std::vector<std::size_t> BettiTable::totals() const {
  std::vector<std::size_t> out;
  for (const auto& [key, value] : entries_) {
    if (out.size() <= static_cast<std::size_t>(key.first)) out.resize(key.first + 1, 0);
    out[key.first] += value;
  }
  return out;
}

unsigned betti_degree_bound(const Ideal& ideal) {
  if (ideal.is_zero()) return 0;
  Monomial l(ideal.ring().nvars);
  for (const auto& m : ideal.leading_monomials()) l = lcm(l, m);
  unsigned bound = l.degree();
  if (!ideal.is_unit() && is_artinian(ideal)) {
    bound = std::min(bound, *socle_degree(ideal).socle_degree + static_cast<unsigned>(ideal.ring().nvars));
  }
  return bound;
}

BettiTable graded_betti(const Ideal& ideal, std::optional<unsigned> max_degree) {
  if (ideal.is_unit()) throw PreconditionError("Betti numbers of the zero ring");
  const RingSpec& ring = ideal.ring();
  const std::size_t nvars = ring.nvars;
  if (nvars > 12) throw PreconditionError("too many variables for the Koszul complex");

  BettiTable table(nvars);
  table.degree_bound = betti_degree_bound(ideal);
  table.max_degree = max_degree.value_or(table.degree_bound);
  table.truncated = table.max_degree < table.degree_bound;

  QuotientBasis quotient(ideal, table.max_degree + 1);
  const auto wedge = exterior_bases(nvars);

  // dim of (wedge^i (x) R/I)_j
  auto chain_dim = [&](int i, int j) -> std::size_t {
    if (i < 0 || i > static_cast<int>(nvars)) return 0;
    return wedge[i].size() * quotient.dim(j - i);
  };

  // rank of d_i : C_i -> C_{i-1} in internal degree j
  auto differential_rank = [&](int i, int j) -> std::size_t {
    if (i < 1 || i > static_cast<int>(nvars) || j - i < 0) return 0;
    const std::size_t src_dim = chain_dim(i, j), dst_dim = chain_dim(i - 1, j);
    if (src_dim == 0 || dst_dim == 0) return 0;
    const unsigned src_deg = static_cast<unsigned>(j - i);
    const std::size_t src_block = quotient.dim(j - i), dst_block = quotient.dim(j - i + 1);
    std::unordered_map<unsigned, std::size_t> dst_pos;
    for (std::size_t k = 0; k < wedge[i - 1].size(); ++k) dst_pos.emplace(wedge[i - 1][k], k);

    Matrix m(ring.field, dst_dim, src_dim);
    for (std::size_t s = 0; s < wedge[i].size(); ++s) {
      const unsigned mask = wedge[i][s];
      int sign_index = 0;
      for (std::size_t var = 0; var < nvars; ++var) {
        if (!(mask & (1u << var))) continue;
        const std::size_t face = dst_pos.at(mask & ~(1u << var));
        const bool negative = (sign_index++ % 2) == 1;
        for (std::size_t k = 0; k < src_block; ++k) {
          for (const auto& [row, coeff] : quotient.multiply(src_deg, k, var)) {
            Scalar& cell = m(face * dst_block + row, s * src_block + k);
            cell = negative ? cell - coeff : cell + coeff;
          }
        }
      }
    }
    return rank(m);
  };

  for (int j = 0; j <= static_cast<int>(table.max_degree); ++j) {
    std::vector<std::size_t> ranks(nvars + 2, 0);
    for (int i = 1; i <= static_cast<int>(nvars); ++i) ranks[i] = differential_rank(i, j);
    for (int i = 0; i <= static_cast<int>(nvars); ++i) {
      const std::size_t dim = chain_dim(i, j);
      if (dim == 0) continue;
      table.set(i, j, dim - ranks[i] - ranks[i + 1]);
    }
  }
  return table;
}

bool betti_consistency_check(const BettiTable& table, const HilbertFunction& hf) {
  const long n = static_cast<long>(table.nvars()) - 1;
  const std::size_t limit = std::min<std::size_t>(hf.values.size(), table.max_degree + 1);
  for (std::size_t d = 0; d < limit; ++d) {
    long long sum = 0;
    for (const auto& [key, value] : table.entries()) {
      const long j = key.second;
      if (j > static_cast<long>(d)) continue;
      const long long term = static_cast<long long>(value) *
                             static_cast<long long>(binomial(static_cast<std::uint64_t>(n + d - j),
                                                             static_cast<std::uint64_t>(n)));
      sum += key.first % 2 == 0 ? term : -term;
    }
    if (sum != static_cast<long long>(hf.values[d])) return false;
  }
  return true;
}

std::string render_betti(const BettiTable& table) {
  const auto totals = table.totals();
  const int columns = static_cast<int>(totals.size());
  int rows = 0;
  for (const auto& [key, value] : table.entries()) rows = std::max(rows, key.second - key.first + 1);

  auto cell = [&](int i, int r) {
    std::size_t v = table.at(i, i + r);
    return v == 0 ? std::string("-") : std::to_string(v);
  };
  std::vector<std::size_t> width(columns, 1);
  for (int i = 0; i < columns; ++i) {
    width[i] = std::to_string(totals[i]).size();
    for (int r = 0; r < rows; ++r) width[i] = std::max(width[i], cell(i, r).size());
  }
  const std::size_t label_width = std::to_string(std::max(rows - 1, 0)).size() + 1;
  auto pad = [](const std::string& s, std::size_t w) { return std::string(w - s.size(), ' ') + s; };

  std::string out(label_width, ' ');
  for (int i = 0; i < columns; ++i) out += " " + pad(std::to_string(totals[i]), width[i]);
  out += '\n';
  for (int r = 0; r < rows; ++r) {
    out += pad(std::to_string(r) + ":", label_width);
    for (int i = 0; i < columns; ++i) out += " " + pad(cell(i, r), width[i]);
    out += '\n';
  }
  return out;
}

}  // namespace gradus
