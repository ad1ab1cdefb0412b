#include "hahn/coeffs.hpp"

#include <optional>
#include <ostream>
#include <sstream>

#include "hahn/error.hpp"

namespace hahn {

namespace {

bool squarefree(std::int64_t m) {
  std::int64_t n = m < 0 ? -m : m;
  for (std::int64_t f = 2; f * f <= n; ++f) {
    if (n % (f * f) == 0) return false;
  }
  return true;
}

std::int64_t joint_radicand(const FieldElement& a, const FieldElement& b) {
  const std::int64_t ma = a.is_rational() ? 0 : a.radicand();
  const std::int64_t mb = b.is_rational() ? 0 : b.radicand();
  if (ma != 0 && mb != 0 && ma != mb) {
    throw Error(ErrorCode::DescriptorMismatch, "elements of different quadratic fields");
  }
  if (ma != 0) return ma;
  if (mb != 0) return mb;
  return a.radicand() != 0 ? a.radicand() : b.radicand();
}

}  // namespace

FieldDescriptor FieldDescriptor::quadratic(std::int64_t m) {
  if (m == 0 || m == 1 || !squarefree(m)) {
    throw Error(ErrorCode::InvalidArgument,
                "radicand " + std::to_string(m) + " is not squarefree or is trivial");
  }
  return {m};
}

FieldElement::FieldElement(Rational p, Rational q, std::int64_t radicand)
    : p_(std::move(p)), q_(std::move(q)), m_(radicand) {
  p_.canonicalize();
  q_.canonicalize();
  if (m_ == 0 && sgn(q_) != 0) {
    throw Error(ErrorCode::DescriptorMismatch, "radical part in the rational field");
  }
}

FieldElement FieldElement::sqrt_generator(const FieldDescriptor& field) {
  if (field.is_rational()) return FieldElement(1);
  return FieldElement(Rational(0), Rational(1), field.radicand);
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  FieldElement out = a;
  out += b;
  return out;
}

FieldElement& FieldElement::operator+=(const FieldElement& b) {
  m_ = joint_radicand(*this, b);
  p_ += b.p_;
  q_ += b.q_;
  return *this;
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  FieldElement out = a;
  out -= b;
  return out;
}

FieldElement& FieldElement::operator-=(const FieldElement& b) {
  m_ = joint_radicand(*this, b);
  p_ -= b.p_;
  q_ -= b.q_;
  return *this;
}

FieldElement operator-(const FieldElement& a) {
  FieldElement out = a;
  out.p_ = -out.p_;
  out.q_ = -out.q_;
  return out;
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  FieldElement out;
  out.m_ = joint_radicand(a, b);
  if (a.is_rational()) {
    out.p_ = a.p_ * b.p_;
    out.q_ = a.p_ * b.q_;
  } else if (b.is_rational()) {
    out.p_ = a.p_ * b.p_;
    out.q_ = a.q_ * b.p_;
  } else {
    out.p_ = a.p_ * b.p_ + Rational(static_cast<long>(out.m_)) * a.q_ * b.q_;
    out.q_ = a.p_ * b.q_ + a.q_ * b.p_;
  }
  return out;
}

FieldElement& FieldElement::operator*=(const FieldElement& b) {
  *this = *this * b;
  return *this;
}

Rational FieldElement::norm() const {
  return p_ * p_ - Rational(static_cast<long>(m_)) * q_ * q_;
}

FieldElement FieldElement::conjugate() const {
  FieldElement out = *this;
  out.q_ = -out.q_;
  return out;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  if (is_rational()) {
    FieldElement out = *this;
    out.p_ = 1 / p_;
    return out;
  }
  // (p + q√m)^{-1} = (p - q√m) / (p² - m q²); the norm is nonzero for squarefree m.
  const Rational n = norm();
  return FieldElement(p_ / n, -q_ / n, m_);
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  return a * b.inverse();
}

FieldElement FieldElement::pow(std::int64_t n) const {
  FieldElement base = n < 0 ? inverse() : *this;
  std::uint64_t e = n < 0 ? static_cast<std::uint64_t>(-n) : static_cast<std::uint64_t>(n);
  FieldElement acc(1);
  acc.m_ = m_;
  while (e) {
    if (e & 1u) acc *= base;
    e >>= 1u;
    if (e) base *= base;
  }
  return acc;
}

std::ostream& operator<<(std::ostream& os, const FieldElement& a) {
  if (a.is_rational()) return os << a.rational_part().get_str();
  os << '(';
  if (sgn(a.rational_part()) != 0) {
    os << a.rational_part().get_str();
    if (sgn(a.radical_part()) > 0) os << '+';
  }
  return os << a.radical_part().get_str() << "r)";
}

FieldElement field_arith(ArithOp op, const FieldElement& a, const FieldElement& b) {
  switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
    case ArithOp::Div: return a / b;
    case ArithOp::Neg: return -a;
    case ArithOp::Inv: return a.inverse();
  }
  throw Error(ErrorCode::InvalidArgument, "unknown arithmetic operation");
}

std::ostream& operator<<(std::ostream& os, FieldAut rho) {
  return os << (rho == FieldAut::Identity ? "id" : "conj");
}

FieldElement field_aut_apply(FieldAut rho, const FieldElement& a, const FieldDescriptor& field) {
  if (rho == FieldAut::Identity) return a;
  if (field.is_rational()) {
    throw Error(ErrorCode::ConjugationOnRationals, "Q has no conjugation");
  }
  return a.conjugate();
}

std::vector<FieldAut> field_aut_list(const FieldDescriptor& field) {
  if (field.is_rational()) return {FieldAut::Identity};
  return {FieldAut::Identity, FieldAut::Conjugation};
}

FieldAut field_aut_compose(FieldAut outer, FieldAut inner) {
  return outer == inner ? FieldAut::Identity : FieldAut::Conjugation;
}

bool field_is_positive(const FieldElement& a, const FieldDescriptor& field) {
  if (!field.ordered()) {
    throw Error(ErrorCode::UnorderedField, "Q(√" + std::to_string(field.radicand) +
                                               ") carries no field order");
  }
  const Rational& p = a.rational_part();
  const Rational& q = a.radical_part();
  if (sgn(q) == 0) return sgn(p) > 0;
  const Rational p2 = p * p;
  const Rational mq2 = Rational(static_cast<long>(field.radicand)) * q * q;
  return (sgn(p) > 0 && p2 > mq2) || (sgn(q) > 0 && mq2 > p2) || (sgn(p) > 0 && sgn(q) > 0);
}

namespace {

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (sgn(q) < 0) return std::nullopt;
  if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t())) {
    return std::nullopt;
  }
  mpz_class num, den;
  mpz_sqrt(num.get_mpz_t(), q.get_num_mpz_t());
  mpz_sqrt(den.get_mpz_t(), q.get_den_mpz_t());
  return Rational(num, den);
}

}  // namespace

FieldElement field_sqrt(const FieldElement& a, const FieldDescriptor& field) {
  const Rational& p = a.rational_part();
  const Rational& q = a.radical_part();
  const Rational m(static_cast<long>(field.radicand));
  auto unavailable = [&] {
    std::ostringstream msg;
    msg << a << " is not a square";
    return Error(ErrorCode::RootUnavailable, msg.str());
  };
  if (sgn(q) == 0) {
    if (auto r = rational_sqrt(p)) return FieldElement(*r);
    if (field.is_rational()) throw unavailable();
    // p = m y^2
    if (auto y = rational_sqrt(p / m)) return FieldElement(Rational(0), *y, field.radicand);
    throw unavailable();
  }
  // (x + y√m)^2 = p + q√m  ⇔  x^2 = (p ± √(p^2 - m q^2)) / 2,  y = q / (2x).
  const auto disc = rational_sqrt(p * p - m * q * q);
  if (!disc) throw unavailable();
  for (const Rational& x2 : {Rational((p + *disc) / 2), Rational((p - *disc) / 2)}) {
    if (sgn(x2) == 0) continue;
    if (auto x = rational_sqrt(x2)) {
      Rational y = q / (2 * *x);
      y.canonicalize();
      return FieldElement(*x, y, field.radicand);
    }
  }
  throw unavailable();
}

}  // namespace hahn
