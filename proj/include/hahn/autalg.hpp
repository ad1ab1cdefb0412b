#pragma once

// Valuation-preserving, strongly additive automorphisms of truncated Hahn
// series in normal form
//
//     σ = σ_u ∘ ρ_x ∘ Ψ_c(ρ, τ)
//
// acting by  σ(Σ a_g t^g) = Σ ρ(a_g) · x(τg) · u(τg) · t^{τg}.
//
//   Ψ_c(ρ, τ)   canonical lift of a field automorphism ρ and an order
//               automorphism τ of the exponent group (the external part)
//   ρ_x         G-exponentiation by a homomorphism x: G → k^×
//   σ_u         1-automorphism t^g ↦ u(g) t^g for a homomorphism u: G → 1+I
//
// Homomorphisms are stored by their values on the generators (1/L)e_i of the
// level-L lattice. Arbitrary automorphisms enter through BlackBoxAut and are
// brought into normal form by decompose(), which only probes monomials.

#include <functional>
#include <iosfwd>
#include <utility>
#include <vector>

#include "hahn/series.hpp"

namespace hahn {

// x: G → k^×, values x((1/L)e_i).
struct FieldUnitHom {
  GroupDescriptor group;
  std::vector<FieldElement> values;

  static FieldUnitHom trivial(const GroupDescriptor& group);
  // Throws InvalidArgument for zero values or a wrong arity.
  void validate() const;
  bool is_trivial() const;

  bool operator==(const FieldUnitHom&) const = default;
};

// u: G → 1+I_K, values u((1/L)e_i). At finite truncation every such hom is
// summable, so this also models Hom⁺(G, 1+I_K).
struct OneUnitHom {
  GroupDescriptor group;
  FieldDescriptor field;
  std::vector<Series> values;

  static OneUnitHom trivial(const GroupDescriptor& group, const FieldDescriptor& field);
  // Throws NotOneUnit or InvalidArgument.
  void validate() const;
  // Every value equals 1 below its cutoff.
  bool is_trivial() const;
  // Least cutoff among the values (they all have valuation 0).
  Bound precision() const;
};

bool equal_to_cutoff(const OneUnitHom& a, const OneUnitHom& b);

// Throws LevelExceeded when g is off the lattice of a non-trivial hom.
FieldElement hom_eval(const FieldUnitHom& x, const Exponent& g);
Series hom_eval(const OneUnitHom& u, const Exponent& g, const Bound& precision = Bound::infinity());

struct AutNormalForm {
  FieldAut rho = FieldAut::Identity;
  OrderAutMatrix tau;
  FieldUnitHom x;
  OneUnitHom u;

  static AutNormalForm identity(const GroupDescriptor& group, const FieldDescriptor& field);

  const GroupDescriptor& group() const { return u.group; }
  const FieldDescriptor& field() const { return u.field; }

  // Shared descriptors and level, valid components.
  void validate() const;
  bool is_internal() const { return rho == FieldAut::Identity && tau.is_identity(); }
  bool is_one_aut() const { return is_internal() && x.is_trivial(); }
  bool is_identity() const { return is_one_aut() && u.is_trivial(); }
};

// Componentwise equality, u-values compared below their common cutoff.
bool equal_to_cutoff(const AutNormalForm& a, const AutNormalForm& b);

std::ostream& operator<<(std::ostream& os, const AutNormalForm& nf);

// An automorphism known only through its action on series.
struct BlackBoxAut {
  GroupDescriptor group;
  FieldDescriptor field;
  std::function<Series(const Series&)> action;

  Series operator()(const Series& a) const { return action(a); }
};

BlackBoxAut as_black_box(const AutNormalForm& sigma);
// outer ∘ inner
BlackBoxAut compose_black_box(const BlackBoxAut& outer, const BlackBoxAut& inner);
// The strongly additive map determined by ρ on coefficients and the images
// f_i = σ(t^{(1/L)e_i}) of the lattice generators: Σ a_g t^g ↦ Σ ρ(a_g) Π f_i^{m_i}.
BlackBoxAut substitution_black_box(const GroupDescriptor& group, const FieldDescriptor& field,
                                   FieldAut rho, std::vector<Series> images);

// ρ_x(Σ a_g t^g) = Σ a_g x(g) t^g.
Series g_exponentiation(const FieldUnitHom& x, const Series& a);
AutNormalForm canonical_lift(FieldAut rho, const OrderAutMatrix& tau, const GroupDescriptor& group,
                             const FieldDescriptor& field);

// The result cutoff is min(τ(cutoff a), τ(v(a)) + precision(u)).
Series apply_aut(const AutNormalForm& sigma, const Series& a);

// The s with σ(s) = target, built by cancelling the leading term of the
// residual target - σ(s) one step at a time.
Series solve_preimage(const AutNormalForm& sigma, const Series& target);

// Probes are monomials t^g truncated at g + precision.
std::pair<FieldAut, OrderAutMatrix> extract_phi(const BlackBoxAut& sigma, const Bound& precision);
FieldUnitHom extract_x(const BlackBoxAut& sigma, const Bound& precision);
OneUnitHom extract_u(const BlackBoxAut& sigma, const FieldUnitHom& x, const Bound& precision);
// Throws RoundTripMismatch when the rebuilt normal form disagrees with σ on
// the verification probes.
AutNormalForm decompose(const BlackBoxAut& sigma, const Bound& precision);

// (u_T × u_S)(g) = T(u_S(g)) · u_T(g) for an internal carrier T with u-part u_T.
OneUnitHom twisted_product(const AutNormalForm& carrier, const OneUnitHom& u_s);

// σ1 ∘ σ2, renormalized through decompose at the joint u-precision.
AutNormalForm compose_nf(const AutNormalForm& sigma1, const AutNormalForm& sigma2);
AutNormalForm invert_nf(const AutNormalForm& sigma);

}  // namespace hahn
