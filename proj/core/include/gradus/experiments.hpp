#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gradus/groebner.hpp"
#include "gradus/points.hpp"

namespace gradus {

/// Where an expected value comes from.
enum class Provenance { kPublished, kTrivial, kDerived };
std::string to_string(Provenance provenance);

/// One checked (or merely reported) expectation.
struct Assertion {
  std::string name;
  std::string expected;
  std::string computed;
  Provenance provenance = Provenance::kDerived;
  /// Informational rows are reported but never fail the report.
  bool checked = true;
  bool passed = false;
  std::string note;
};

struct ExperimentReport {
  std::string name;
  std::vector<std::pair<std::string, std::string>> inputs;
  std::vector<std::pair<std::string, std::string>> values;
  std::vector<Assertion> assertions;

  bool passed() const;
  void expect(std::string name, std::string expected, std::string computed, Provenance provenance,
              std::string note = {});
  void inform(std::string name, std::string expected, std::string computed, Provenance provenance,
              std::string note = {});
};

/// Human-readable report: inputs, values, then one line per assertion.
std::string render_report(const ExperimentReport& report);

/// The fixed J ideals of the worked examples, verbatim.
enum class ExampleJ { kJX1, kJX2, kJX3, kJX6 };
Ideal example_J(const RingSpec& ring, ExampleJ which);

enum class ExampleJStyle { kFirstGroup, kQuadCubic };
/// first_group is the (linear, quadric) pair used for X1 and X3; quad_cubic
/// is the (quadric, cubic) pair used for X6. Requires X in P^2.
Ideal build_example_J(const PointSet& points, ExampleJStyle style);

/// J = (random form of degree a, random form of degree a + 1) with
/// a = max(min_degree, alpha(I_X) + shift), alpha the initial degree of I_X.
struct JConvention {
  int shift = -1;
  unsigned min_degree = 1;
  std::string describe() const;
};

struct SocleExperimentRow {
  std::size_t s = 0;
  unsigned trial = 0;
  unsigned group = 0;            // offset + 1
  unsigned predicted_group = 0;  // n with n^2 + 1 <= s <= (n+1)^2
  unsigned initial_degree = 0;   // of J
  unsigned socle_degree = 0;
  int offset = 0;
  std::uint64_t seed = 0;  // seed of the accepted sample
  unsigned attempts = 1;   // samples drawn until R/(I_X + J) was Artinian
};

struct SocleGroup {
  int offset = 0;
  std::size_t s_lo = 0;
  std::size_t s_hi = 0;
  std::size_t size = 0;
  bool contiguous = true;
  bool complete = true;  // the scan covers the whole predicted range
};

struct SocleScan {
  std::vector<SocleExperimentRow> rows;
  std::vector<SocleGroup> groups;
  /// Every trial of each s landed in one offset class.
  bool consistent_per_s = true;
  /// Complete groups have sizes 2n + 1 and ranges n^2 + 1 .. (n+1)^2.
  bool law_holds = false;
};

inline constexpr unsigned kSocleResampleBudget = 8;

/// Samples general points for every s in [s_min, s_max], builds J by the
/// convention and records Omega(R/(I_X + J)) - deg J. Non-Artinian samples are
/// redrawn up to kSocleResampleBudget times, then ComputationError.
SocleScan socle_group_scan(std::size_t s_min, std::size_t s_max, unsigned trials, std::uint64_t seed,
                           FieldSpec field = FieldSpec::default_field(), JConvention convention = {});

/// Predicted number of point counts sharing a socle offset of n - 1.
std::size_t xi_group_size(unsigned n);
/// Predicted range n^2 + 1 .. (n+1)^2 of group n (n >= 1).
std::pair<std::size_t, std::size_t> xi_group_range(unsigned n);

ExperimentReport socle_group_report(const SocleScan& scan, std::size_t s_min, std::size_t s_max,
                                    unsigned trials, std::uint64_t seed, const JConvention& convention);

/// Leading-term ideals I, I* of two general point sets, the three quotient
/// candidates for R_X/(I + I*) and the comparison of I + I* with the
/// intersection and union ideals.
ExperimentReport monomial_artinian_study(std::size_t s1, std::size_t s2, std::uint64_t seed,
                                         FieldSpec field = FieldSpec::default_field());

/// table1..table4, hilb_JX1, hilb_JX2, hilb_JX3, hilb_JX6, example_2_11.
const std::vector<std::string>& reproduction_cases();
/// Throws PreconditionError for an unknown case.
ExperimentReport reproduce_case(const std::string& name, std::uint64_t seed,
                               FieldSpec field = FieldSpec::default_field());

}  // namespace gradus
