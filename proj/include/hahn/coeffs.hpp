#pragma once

// Coefficient fields: Q and Q(√m) for squarefree m ∉ {0, 1}.

#include <cstdint>
#include <iosfwd>
#include <vector>

#include <gmpxx.h>

namespace hahn {

using Rational = mpq_class;

struct FieldDescriptor {
  // 0 encodes Q; otherwise the squarefree radicand of Q(√m).
  std::int64_t radicand = 0;

  static FieldDescriptor rationals() { return {0}; }
  static FieldDescriptor quadratic(std::int64_t m);

  bool is_rational() const { return radicand == 0; }
  // Q, and Q(√m) with m > 0 embedded so that √m > 0.
  bool ordered() const { return radicand >= 0; }

  bool operator==(const FieldDescriptor&) const = default;
};

// p + q·√m. Rational elements (q = 0) mix freely with any field; two irrational
// elements must share the radicand.
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(long n) : p_(n) {}  // NOLINT: integers embed implicitly
  FieldElement(Rational p) : p_(std::move(p)) { p_.canonicalize(); }  // NOLINT
  FieldElement(Rational p, Rational q, std::int64_t radicand);

  static FieldElement sqrt_generator(const FieldDescriptor& field);

  const Rational& rational_part() const { return p_; }
  const Rational& radical_part() const { return q_; }
  std::int64_t radicand() const { return m_; }

  bool is_zero() const { return sgn(p_) == 0 && sgn(q_) == 0; }
  bool is_one() const { return p_ == 1 && sgn(q_) == 0; }
  bool is_rational() const { return sgn(q_) == 0; }

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.p_ == b.p_ && a.q_ == b.q_;
  }

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);

  FieldElement& operator+=(const FieldElement& b);
  FieldElement& operator-=(const FieldElement& b);
  FieldElement& operator*=(const FieldElement& b);

  FieldElement inverse() const;
  // Conjugate p - q√m.
  FieldElement conjugate() const;
  // p² - m q².
  Rational norm() const;
  FieldElement pow(std::int64_t n) const;

 private:
  Rational p_{0};
  Rational q_{0};
  std::int64_t m_ = 0;
};

std::ostream& operator<<(std::ostream& os, const FieldElement& a);

enum class ArithOp { Add, Sub, Mul, Div, Neg, Inv };

// Throws DivisionByZero for div/inv by zero.
FieldElement field_arith(ArithOp op, const FieldElement& a, const FieldElement& b = FieldElement());

enum class FieldAut { Identity, Conjugation };

std::ostream& operator<<(std::ostream& os, FieldAut rho);

// Throws ConjugationOnRationals if ρ is Conjugation on a rational element of Q.
FieldElement field_aut_apply(FieldAut rho, const FieldElement& a, const FieldDescriptor& field);
std::vector<FieldAut> field_aut_list(const FieldDescriptor& field);
FieldAut field_aut_compose(FieldAut outer, FieldAut inner);
// Every automorphism here is an involution or the identity.
inline FieldAut field_aut_inverse(FieldAut rho) { return rho; }

// Exact sign test; throws UnorderedField for imaginary quadratic fields.
bool field_is_positive(const FieldElement& a, const FieldDescriptor& field);

// Root provider: exact square roots of elements that are squares in the field.
// Returns the root with positive rational part (or positive √m part when the
// rational part vanishes); throws RootUnavailable otherwise.
FieldElement field_sqrt(const FieldElement& a, const FieldDescriptor& field);

}  // namespace hahn
