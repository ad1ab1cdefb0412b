#pragma once

// G = Z: Laurent series, Schilling's product on units and Möbius maps.
//
// A unit u of the valuation ring determines the k-automorphism σ_u with
// σ_u(t) = u·t; composition of these corresponds to
//
//     u1 ×_s u2 = σ_{u1}(u2) · u1,      σ_{u1 ×_s u2} = σ_{u1} ∘ σ_{u2}.

#include <array>
#include <iosfwd>
#include <string>

#include "hahn/autalg.hpp"

namespace hahn {

// A series over Z with valuation 0.
class LaurentUnit {
 public:
  // Throws NotAUnit unless v(series) = 0, DescriptorMismatch unless G = Z.
  explicit LaurentUnit(Series series);

  const Series& series() const { return series_; }
  FieldElement constant() const { return s_constant_term(series_); }
  bool is_one_unit() const { return series_.is_one_unit(); }

 private:
  Series series_;
};

// The normal form of t ↦ u·t composed with ρ: x(1) = u_0, u(1) = u / u_0.
AutNormalForm laurent_nf(const LaurentUnit& u, FieldAut rho = FieldAut::Identity);

// Computed through twisted_product on the 1-unit parts; constants multiply.
LaurentUnit schilling_xs(const LaurentUnit& u1, const LaurentUnit& u2);
// w with u ×_s w = 1, from the triangular solve σ_u(w·t) = t.
LaurentUnit schilling_inverse(const LaurentUnit& u);

// Σ ρ(a_i)·(u·t)^i, evaluated directly with integer powers.
Series sigma_u_apply(const LaurentUnit& u, FieldAut rho, const Series& a);

// σ_u preserves the order of K iff u_0 > 0. Throws UnorderedField.
bool is_order_preserving(const LaurentUnit& u);

// σ(t) = (at + b)/(ct + d), up to a common scalar.
class MoebiusMap {
 public:
  // Normalizes so the first nonzero entry is 1; throws SingularMatrix.
  MoebiusMap(FieldElement a, FieldElement b, FieldElement c, FieldElement d, FieldDescriptor field);

  const FieldElement& a() const { return m_[0]; }
  const FieldElement& b() const { return m_[1]; }
  const FieldElement& c() const { return m_[2]; }
  const FieldElement& d() const { return m_[3]; }
  const FieldDescriptor& field() const { return field_; }

  bool operator==(const MoebiusMap& other) const { return m_ == other.m_ && field_ == other.field_; }

 private:
  std::array<FieldElement, 4> m_;
  FieldDescriptor field_;
};

std::ostream& operator<<(std::ostream& os, const MoebiusMap& m);

// σ_{M1} ∘ σ_{M2}; as matrices this is M2·M1 since σ acts by substitution.
MoebiusMap moebius_compose(const MoebiusMap& m1, const MoebiusMap& m2);
MoebiusMap moebius_invert(const MoebiusMap& m);
// Laurent expansion of (at + b)/(ct + d) below `cutoff`.
Series moebius_to_series(const MoebiusMap& m, std::int64_t cutoff);

enum class MoebiusClass { ValuationPreservingKAut, OneAut, Other };

std::string moebius_class_name(MoebiusClass c);
MoebiusClass moebius_classify(const MoebiusMap& m);

// The substitution automorphism t ↦ moebius_to_series(m, cutoff).
BlackBoxAut moebius_black_box(const MoebiusMap& m, std::int64_t cutoff);

}  // namespace hahn
