#pragma once

// Support sets over Q and Rayner field families.
//
// A descriptor is a finite set of points plus finitely many arithmetic
// progressions {start + j·step : j ≥ 0}, all on the lattice (1/level)Z. This
// class is closed under union, shifts and positive scalings, and its sum sets
// can be enumerated below any ceiling.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hahn/exponents.hpp"

namespace hahn {

struct Progression {
  ExpRational start;
  ExpRational step;

  bool operator==(const Progression&) const = default;
};

class SupportDescriptor {
 public:
  // Canonicalizes: sorted distinct points, points covered by a progression
  // removed. Throws LevelExceeded for off-lattice data and InvalidArgument
  // for non-positive steps.
  SupportDescriptor(std::int64_t level, std::vector<ExpRational> points,
                    std::vector<Progression> tails = {});

  // The cofinite tail {m, m + 1/level, ...} of the plain lattice.
  static SupportDescriptor with_lattice_tail(std::int64_t level, std::vector<ExpRational> points,
                                             const ExpRational& start);

  std::int64_t level() const { return level_; }
  const std::vector<ExpRational>& points() const { return points_; }
  const std::vector<Progression>& tails() const { return tails_; }
  bool is_finite() const { return tails_.empty(); }
  bool contains(const ExpRational& q) const;
  std::optional<ExpRational> min_element() const;
  // Elements strictly below the ceiling, ascending.
  std::vector<ExpRational> elements_below(const ExpRational& ceiling) const;

  bool operator==(const SupportDescriptor&) const = default;

 private:
  std::int64_t level_;
  std::vector<ExpRational> points_;
  std::vector<Progression> tails_;
};

std::ostream& operator<<(std::ostream& os, const SupportDescriptor& a);

SupportDescriptor support_union(const SupportDescriptor& a, const SupportDescriptor& b);
SupportDescriptor support_shift(const SupportDescriptor& a, const ExpRational& g);
// q·A for q = m/n > 0, at level d·n; throws NonPositiveScale.
SupportDescriptor support_scale(const SupportDescriptor& a, const ExpRational& q);
// Finite sums of elements of A below the ceiling (A ⊆ Q≥0).
SupportDescriptor support_sums_below(const SupportDescriptor& a, const ExpRational& ceiling);

struct FamilyPolicy {
  enum class Kind { PuiseuxCommonDenominator, CardinalityBounded, LatticeContained };

  Kind kind = Kind::PuiseuxCommonDenominator;
  // CardinalityBounded only: members have fewer than `bound` elements;
  // nullopt means countable.
  std::optional<std::int64_t> bound;

  static FamilyPolicy puiseux() { return {Kind::PuiseuxCommonDenominator, std::nullopt}; }
  static FamilyPolicy cardinality(std::int64_t n) { return {Kind::CardinalityBounded, n}; }
  static FamilyPolicy countable() { return {Kind::CardinalityBounded, std::nullopt}; }
  static FamilyPolicy lattice() { return {Kind::LatticeContained, std::nullopt}; }

  // A finite cardinality bound does not give a field family; such policies
  // exist as negative fixtures.
  bool is_fixture() const { return kind == Kind::CardinalityBounded && bound.has_value(); }
  std::string name() const;
};

// Accepts "puiseux", "countable", "lattice" and "kappa:<n>".
FamilyPolicy parse_family_policy(const std::string& text);

bool family_member(const FamilyPolicy& family, const SupportDescriptor& a);

enum class AxiomStatus { Pass, Fail, Analytic };

std::string axiom_status_name(AxiomStatus s);

struct AxiomResult {
  std::string axiom;  // "R1" ... "R6"
  AxiomStatus status = AxiomStatus::Pass;
  std::size_t checks = 0;
  std::string witness;  // first failing instance, or a note
};

struct FamilyReport {
  std::string family;
  std::vector<AxiomResult> axioms;

  // True iff no sampled axiom failed.
  bool passed() const;
  const AxiomResult* find(const std::string& axiom) const;
};

// R1 holds structurally, R2 is analytic, R3–R6 are checked on the samples;
// R6 only below the ceiling.
FamilyReport family_check_axioms(const FamilyPolicy& family,
                                 const std::vector<SupportDescriptor>& samples,
                                 const ExpRational& ceiling);

struct StabilityCase {
  ExpRational scale;
  std::size_t sample = 0;
  SupportDescriptor image;
  bool member = false;
};

struct StabilityReport {
  std::string family;
  std::vector<StabilityCase> cases;

  bool passed() const;
};

// Checks that q·A stays in the family for every scale q and sample A.
StabilityReport family_check_oaut_stability(const FamilyPolicy& family,
                                            const std::vector<ExpRational>& scales,
                                            const std::vector<SupportDescriptor>& samples);

// Seeded member-positive samples for the policy. For a finite bound n the
// samples are pairwise disjoint (n-1)-point sets, so unions exceed the bound.
std::vector<SupportDescriptor> family_samples(const FamilyPolicy& family, std::uint64_t seed,
                                              std::size_t count);

}  // namespace hahn
