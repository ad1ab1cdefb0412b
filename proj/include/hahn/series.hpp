#pragma once

// Truncated Hahn series Σ a_g t^g over a lattice exponent group.
//
// Every series carries a cutoff: all coefficients at exponents below the
// cutoff are exact, nothing is known at or above it. A series with an
// infinite cutoff is an exact finite sum (a polynomial in t^g).

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "hahn/coeffs.hpp"
#include "hahn/exponents.hpp"

namespace hahn {

// A cutoff: a finite exponent or +∞.
class Bound {
 public:
  Bound() = default;  // +∞
  Bound(Exponent e) : value_(std::move(e)) {}  // NOLINT: exponents are bounds

  static Bound infinity() { return Bound(); }

  bool is_finite() const { return value_.has_value(); }
  const Exponent& value() const { return *value_; }
  // e < bound
  bool above(const Exponent& e) const { return !value_ || e < *value_; }

  friend bool operator==(const Bound&, const Bound&) = default;
  friend Bound min(const Bound& a, const Bound& b);
  friend Bound operator+(const Bound& a, const Exponent& g);
  friend Bound operator+(const Bound& a, const Bound& b);
  // Strict lex order with +∞ on top.
  friend bool operator<(const Bound& a, const Bound& b);

 private:
  std::optional<Exponent> value_;
};

std::ostream& operator<<(std::ostream& os, const Bound& b);

struct Term {
  Exponent exp;
  FieldElement coef;
};

class Series {
 public:
  Series(GroupDescriptor group, FieldDescriptor field, Bound cutoff = Bound::infinity());

  // Sorts, merges equal exponents, drops zeros and everything at or above the
  // cutoff. IntLattice exponents must be integral; RationalLattice series
  // refine their level to cover every exponent.
  static Series from_terms(GroupDescriptor group, FieldDescriptor field, std::vector<Term> terms,
                           Bound cutoff = Bound::infinity());
  static Series zero(GroupDescriptor group, FieldDescriptor field, Bound cutoff = Bound::infinity());
  static Series constant(GroupDescriptor group, FieldDescriptor field, FieldElement c,
                         Bound cutoff = Bound::infinity());
  static Series monomial(GroupDescriptor group, FieldDescriptor field, FieldElement c, Exponent g,
                         Bound cutoff = Bound::infinity());

  const GroupDescriptor& group() const { return group_; }
  const FieldDescriptor& field() const { return field_; }
  const Bound& cutoff() const { return cutoff_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  FieldElement coefficient(const Exponent& g) const;
  std::vector<Exponent> support() const;
  // Least support element, or nullopt (+∞) for the zero series.
  std::optional<Exponent> valuation() const;
  // v(a) for a nonzero series, the cutoff otherwise: every exponent that can
  // carry a nonzero coefficient, known or not, is at least this.
  Bound floor() const;
  // cutoff - v(a); infinite when the cutoff is.
  Bound relative_precision() const;

  Series truncated(const Bound& new_cutoff) const;
  Series with_group(const GroupDescriptor& group) const;

  // Predicates on the canonical valuation ring R_K, its maximal ideal I_K,
  // the units U_K and the 1-units 1+I_K.
  bool in_valuation_ring() const;
  bool in_maximal_ideal() const;
  bool is_unit() const;
  bool is_one_unit() const;

 private:
  GroupDescriptor group_;
  FieldDescriptor field_;
  Bound cutoff_;
  std::vector<Term> terms_;
};

Series s_add(const Series& a, const Series& b);
Series s_sub(const Series& a, const Series& b);
Series s_neg(const Series& a);
// Cutoff min(v(a)+cutoff(b), v(b)+cutoff(a)).
Series s_mul(const Series& a, const Series& b);
Series s_scale(const FieldElement& c, const Series& a);
// t^g · a
Series s_shift(const Series& a, const Exponent& g);
// Σ ρ(a_g) t^g
Series s_map_coefficients(FieldAut rho, const Series& a);

// a^{-1} for a ∈ U_K via the Neumann (geometric) series. Throws NotAUnit,
// UnreachableCutoff, or UnboundedPrecision for an exact non-constant input.
Series s_invert_unit(const Series& a);
// Throws ZeroToNegativePower.
Series s_pow_int(const Series& a, std::int64_t n);

std::optional<Exponent> s_valuation(const Series& a);
// Throws ZeroSeries.
FieldElement s_leading(const Series& a);
FieldElement s_constant_term(const Series& a);

// The unique b ∈ 1+I_K with b^n = a, by Newton iteration from `start`
// (default 1). Throws NotOneUnit.
Series s_nth_root_one_unit(const Series& a, std::int64_t n,
                           const std::optional<Series>& start = std::nullopt);
// Solves x^n = 1 inside 1+I_K at the given cutoff.
Series s_root_of_unity_solve(std::int64_t n, const GroupDescriptor& group,
                             const FieldDescriptor& field, const Bound& cutoff);

struct SummableFamily {
  std::vector<Series> members;

  // Throws MixedDescriptors (or on an empty family).
  void validate() const;
  // Union of supports.
  std::vector<Exponent> joint_support() const;
  // Indices of members whose support contains g.
  std::vector<std::size_t> occurrences(const Exponent& g) const;
  // ν: least member valuation.
  std::optional<Exponent> min_valuation() const;
};

// Pointwise sum below the least member cutoff.
Series s_sum_family(const SummableFamily& family);

// Coefficientwise equality below min(cutoff(a), cutoff(b)).
bool s_equal_to_cutoff(const Series& a, const Series& b);

}  // namespace hahn
