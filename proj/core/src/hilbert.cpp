#include "gradus/hilbert.hpp"

#include <algorithm>

#include "gradus/matrix.hpp"

namespace gradus {
namespace {

std::vector<mpq_class> trim(std::vector<mpq_class> c) {
  while (!c.empty() && sgn(c.back()) == 0) c.pop_back();
  return c;
}

// Lagrange interpolation through (x0 + k, values[k]).
HilbertPolynomial interpolate(unsigned x0, const std::vector<std::size_t>& values) {
  const std::size_t m = values.size();
  std::vector<mpq_class> result(m, mpq_class(0));
  for (std::size_t k = 0; k < m; ++k) {
    std::vector<mpq_class> basis{mpq_class(1)};
    mpq_class denom(1);
    for (std::size_t j = 0; j < m; ++j) {
      if (j == k) continue;
      const long xj = static_cast<long>(x0 + j);
      std::vector<mpq_class> next(basis.size() + 1, mpq_class(0));
      for (std::size_t e = 0; e < basis.size(); ++e) {
        next[e + 1] += basis[e];
        next[e] -= basis[e] * xj;
      }
      basis = std::move(next);
      denom *= static_cast<long>(k) - static_cast<long>(j);
    }
    const mpq_class scale = mpq_class(static_cast<unsigned long>(values[k])) / denom;
    for (std::size_t e = 0; e < basis.size(); ++e) result[e] += basis[e] * scale;
  }
  return HilbertPolynomial(std::move(result));
}

bool matches(const HilbertPolynomial& p, unsigned d, std::size_t value) {
  return p(static_cast<long>(d)) == mpq_class(static_cast<unsigned long>(value));
}

// Whether some leading monomial divides x_i^k for large k (a pure power of
// x_i, or the constant 1).
bool has_power_of(const std::vector<Monomial>& leads, std::size_t var, unsigned* exponent) {
  bool found = false;
  for (const auto& m : leads) {
    if (m.degree() != m[var]) continue;
    if (!found || m[var] < *exponent) *exponent = m[var];
    found = true;
  }
  return found;
}

}  // namespace

HilbertPolynomial::HilbertPolynomial(std::vector<mpq_class> coefficients)
    : coefficients_(trim(std::move(coefficients))) {
  for (auto& c : coefficients_) c.canonicalize();
}

mpq_class HilbertPolynomial::operator()(long d) const {
  mpq_class v(0);
  for (std::size_t e = coefficients_.size(); e-- > 0;) v = v * d + coefficients_[e];
  return v;
}

std::string HilbertPolynomial::to_string() const {
  if (coefficients_.empty()) return "0";
  std::string out;
  for (std::size_t e = coefficients_.size(); e-- > 0;) {
    const mpq_class& c = coefficients_[e];
    if (sgn(c) == 0) continue;
    mpq_class mag = abs(c);
    if (sgn(c) < 0) {
      out += '-';
    } else if (!out.empty()) {
      out += '+';
    }
    if (e == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += "d";
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

std::size_t hilbert_function(const Ideal& ideal, unsigned d) { return ideal.quotient_dimension(d); }

std::vector<std::size_t> hilbert_values(const Ideal& ideal, unsigned max_degree) {
  std::vector<std::size_t> values;
  values.reserve(max_degree + 1);
  for (unsigned d = 0; d <= max_degree; ++d) values.push_back(hilbert_function(ideal, d));
  return values;
}

std::size_t hilbert_function_by_rank(const Ideal& ideal, unsigned d) {
  const RingSpec& ring = ideal.ring();
  const Scalar one = Scalar::one(ring.field);
  std::vector<Polynomial> products;
  for (const auto& g : ideal.generators()) {
    if (g.degree() > static_cast<int>(d)) continue;
    for (const auto& m : monomials_of_degree(ring, d - static_cast<unsigned>(g.degree()))) {
      products.push_back(g.times_term(m, one));
    }
  }
  const auto basis = monomials_of_degree(ring, d);
  return basis.size() - rank(coefficient_matrix(products, basis, ring.field));
}

HilbertPolynomialResult hilbert_polynomial(const Ideal& ideal, unsigned probe_limit) {
  const unsigned window = static_cast<unsigned>(ideal.ring().nvars) + 1;  // n + 2 points
  constexpr unsigned kConfirm = 3;
  std::vector<std::size_t> values;
  auto value_at = [&](unsigned d) {
    while (values.size() <= d) values.push_back(hilbert_function(ideal, static_cast<unsigned>(values.size())));
    return values[d];
  };
  for (unsigned start = 0; start + window + kConfirm - 1 <= probe_limit; ++start) {
    std::vector<std::size_t> sample;
    for (unsigned d = start; d < start + window; ++d) sample.push_back(value_at(d));
    HilbertPolynomial p = interpolate(start, sample);
    bool confirmed = true;
    for (unsigned d = start + window; d < start + window + kConfirm && confirmed; ++d) {
      confirmed = matches(p, d, value_at(d));
    }
    if (!confirmed || p.degree() > static_cast<int>(ideal.ring().nvars) - 1) continue;
    unsigned stable = start;
    while (stable > 0 && matches(p, stable - 1, value_at(stable - 1))) --stable;
    return {std::move(p), stable};
  }
  throw StabilizationError("Hilbert function did not stabilize by degree " +
                               std::to_string(probe_limit),
                           values);
}

HilbertFunction hilbert_data(const Ideal& ideal, unsigned max_degree) {
  HilbertFunction hf;
  hf.values = hilbert_values(ideal, max_degree);
  try {
    auto hp = hilbert_polynomial(ideal, std::max(max_degree, 64u));
    hf.polynomial = std::move(hp.polynomial);
    hf.stable_from = hp.stable_from;
  } catch (const StabilizationError&) {
    // left empty: no certified polynomial within the probe range
  }
  return hf;
}

ArtinianCertificate artinian_certificate(const Ideal& ideal) {
  const auto leads = ideal.leading_monomials();
  const std::size_t nvars = ideal.ring().nvars;
  ArtinianCertificate cert{true, false, 0};
  unsigned excess = 0;  // sum of (k_i - 1)
  for (std::size_t v = 0; v < nvars; ++v) {
    unsigned k = 0;
    if (!has_power_of(leads, v, &k)) {
      cert.pure_powers = false;
      break;
    }
    excess += k > 0 ? k - 1 : 0;
  }
  // With pure powers x_i^{k_i}, every monomial of degree sum(k_i - 1) + 1 is
  // divisible by one of them; otherwise some x_i^d stays standard forever.
  const int top = std::max(ideal.max_basis_degree(), 1);
  cert.probe_degree = cert.pure_powers ? excess + 1 : static_cast<unsigned>(top) * nvars + 3;
  cert.eventual_zero = hilbert_function(ideal, cert.probe_degree) == 0;
  if (cert.pure_powers != cert.eventual_zero) {
    throw ComputationError("Artinian criteria disagree (pure powers: " +
                           std::string(cert.pure_powers ? "yes" : "no") + ", HF at degree " +
                           std::to_string(cert.probe_degree) + " is " +
                           (cert.eventual_zero ? "zero" : "nonzero") + ")");
  }
  return cert;
}

bool is_artinian(const Ideal& ideal) { return artinian_certificate(ideal).pure_powers; }

SocleReport socle_degree(const Ideal& ideal) { return socle_degree(ideal, ideal); }

SocleReport socle_degree(const Ideal& ideal, const Ideal& defining_part) {
  if (ideal.is_unit()) throw PreconditionError("socle degree of the zero ring");
  SocleReport report;
  report.initial_degree = defining_part.initial_degree();
  ArtinianCertificate cert = artinian_certificate(ideal);
  report.artinian = cert.pure_powers;
  if (!report.artinian) return report;
  for (unsigned d = cert.probe_degree; d-- > 0;) {
    if (hilbert_function(ideal, d) != 0) {
      report.socle_degree = d;
      break;
    }
  }
  return report;
}

unsigned delta_X(const Ideal& vanishing, std::size_t s) {
  for (unsigned d = 0;; ++d) {
    std::size_t h = hilbert_function(vanishing, d);
    if (h == s) return d;
    if (h > s) throw PreconditionError("Hilbert function exceeds the number of points");
    if (d > s + 1) throw ComputationError("Hilbert function never reached the number of points");
  }
}

unsigned delta_X(const PointSet& points) { return delta_X(vanishing_ideal(points), points.size()); }

}  // namespace gradus
