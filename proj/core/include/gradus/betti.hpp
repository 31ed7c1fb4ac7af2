#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gradus/groebner.hpp"
#include "gradus/hilbert.hpp"

namespace gradus {

/// Graded Betti numbers beta_{i,j} of R/I. Zero entries are not stored.
class BettiTable {
 public:
  explicit BettiTable(std::size_t nvars) : nvars_(nvars) {}

  std::size_t nvars() const { return nvars_; }
  std::size_t at(int i, int j) const;
  void set(int i, int j, std::size_t value);
  const std::map<std::pair<int, int>, std::size_t>& entries() const { return entries_; }

  /// Column sums, index i = 0..max homological index.
  std::vector<std::size_t> totals() const;

  /// Entries are complete for internal degrees j <= max_degree.
  unsigned max_degree = 0;
  /// Degree beyond which every beta_{i,j} is provably zero.
  unsigned degree_bound = 0;
  /// max_degree < degree_bound: some entries may be missing.
  bool truncated = false;

  friend bool operator==(const BettiTable&, const BettiTable&) = default;

 private:
  std::size_t nvars_;
  std::map<std::pair<int, int>, std::size_t> entries_;
};

/// Upper bound on internal degrees j carrying nonzero beta_{i,j}(R/I):
/// the degree of the lcm of the minimal generators of in(I) (Taylor
/// complex plus upper semicontinuity), tightened to socle degree + nvars
/// when R/I is Artinian.
unsigned betti_degree_bound(const Ideal& ideal);

/// beta_{i,j} = dim_k H_i(K(x_0..x_n) (x) R/I)_j from ranks of the Koszul
/// differentials on the graded pieces of R/I, for j <= max_degree (default:
/// betti_degree_bound). Throws PreconditionError for the unit ideal.
BettiTable graded_betti(const Ideal& ideal, std::optional<unsigned> max_degree = std::nullopt);

/// Checks HF_d = sum_i (-1)^i sum_j beta_{i,j} binom(n + d - j, n) for every
/// d covered by both the table and the Hilbert values.
bool betti_consistency_check(const BettiTable& table, const HilbertFunction& hf);

/// Betti diagram: a header of column totals, then rows "r:" showing
/// beta_{i, i+r} or "-". Columns are right-aligned and separated by one space.
std::string render_betti(const BettiTable& table);

}  // namespace gradus
