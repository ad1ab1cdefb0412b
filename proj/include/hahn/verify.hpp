#pragma once

// Seeded generators and the property suites behind `hahn verify`.
//
// Every suite is deterministic in its seed: the same seed yields the same
// cases, the same verdicts and a byte-identical report.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "hahn/autalg.hpp"
#include "hahn/laurent.hpp"
#include "hahn/random.hpp"

namespace hahn {

// ---- generators -------------------------------------------------------------

// Nonzero p + q√m with small integer p, q (q = 0 over Q).
FieldElement random_field_element(Rng& rng, const FieldDescriptor& field, std::int64_t range = 3);
// Random element of UUT_d(Z) (off-diagonal in [-2, 2]) or UPT_d(Q).
OrderAutMatrix random_oaut(Rng& rng, GroupKind kind, int dimension);
// Lex-positive exponent of the group.
Exponent random_positive_exponent(Rng& rng, const GroupDescriptor& group);
Exponent random_exponent(Rng& rng, const GroupDescriptor& group);

struct SeriesShape {
  std::size_t max_terms = 4;
  // First-coordinate range of the exponents, in lattice steps.
  std::int64_t lead_min = -2;
  std::int64_t lead_max = 6;
  // Range of the remaining coordinates.
  std::int64_t rest_range = 3;
};

Series random_series(Rng& rng, const GroupDescriptor& group, const FieldDescriptor& field,
                     const Bound& cutoff, const SeriesShape& shape = {});
// Redraws until the series is nonzero below its cutoff.
Series random_nonzero_series(Rng& rng, const GroupDescriptor& group, const FieldDescriptor& field,
                             const Bound& cutoff, const SeriesShape& shape = {});
// 1 + (up to `terms` terms whose first coordinate is positive).
Series random_one_unit(Rng& rng, const GroupDescriptor& group, const FieldDescriptor& field,
                       const Bound& cutoff, std::size_t terms = 2);

struct NfShape {
  bool internal = false;  // ρ = id, τ = id
  bool one_aut = false;   // additionally x ≡ 1
  std::size_t unit_terms = 2;
};

AutNormalForm random_nf(Rng& rng, const GroupDescriptor& group, const FieldDescriptor& field,
                        const Bound& cutoff, const NfShape& shape = {});

MoebiusMap random_moebius(Rng& rng, const FieldDescriptor& field);

// Monomials t^g truncated at g + precision for g = ±generators and their sum.
std::vector<Series> monomial_probes(const GroupDescriptor& group, const FieldDescriptor& field,
                                    const Bound& precision);

// ---- suites -----------------------------------------------------------------

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::size_t cases = 0;
  std::size_t failed = 0;
  // Up to five failure descriptions, in case order.
  std::vector<std::string> failures;
  // Suite-specific facts, in insertion order.
  std::vector<std::pair<std::string, std::string>> notes;

  bool ok() const { return failed == 0; }
};

const std::vector<std::string>& suite_names();
// Throws UnknownSuite.
SuiteReport run_suite(const std::string& name, std::uint64_t seed);

// key=value lines, fixed key order.
std::string format_report_kv(const SuiteReport& report);
std::string format_report_text(const SuiteReport& report);

}  // namespace hahn
