#include "hahn/laurent.hpp"

#include <ostream>
#include <sstream>

#include "hahn/error.hpp"
#include "hahn/text.hpp"

namespace hahn {

namespace {

const GroupDescriptor kZ = GroupDescriptor::integers(1);

Exponent z(std::int64_t n) { return Exponent{ExpRational(n)}; }

void require_laurent(const Series& a) {
  if (!(a.group() == kZ)) {
    throw Error(ErrorCode::DescriptorMismatch, "Laurent operations need G = Z");
  }
}

}  // namespace

LaurentUnit::LaurentUnit(Series series) : series_(std::move(series)) {
  require_laurent(series_);
  if (!series_.is_unit()) {
    std::ostringstream msg;
    msg << format_series(series_) << " is not a unit of the valuation ring";
    throw Error(ErrorCode::NotAUnit, msg.str());
  }
}

AutNormalForm laurent_nf(const LaurentUnit& u, FieldAut rho) {
  const FieldDescriptor& field = u.series().field();
  AutNormalForm nf = AutNormalForm::identity(kZ, field);
  nf.rho = rho;
  nf.x.values = {u.constant()};
  nf.u.values = {s_scale(u.constant().inverse(), u.series())};
  nf.validate();
  return nf;
}

LaurentUnit schilling_xs(const LaurentUnit& u1, const LaurentUnit& u2) {
  const AutNormalForm carrier = laurent_nf(u1);
  const FieldElement c2 = u2.constant();
  OneUnitHom w2{kZ, u2.series().field(), {s_scale(c2.inverse(), u2.series())}};
  const OneUnitHom prod = twisted_product(carrier, w2);
  return LaurentUnit(s_scale(u1.constant() * c2, prod.values[0]));
}

LaurentUnit schilling_inverse(const LaurentUnit& u) {
  const Series& s = u.series();
  const Series t = Series::monomial(kZ, s.field(), FieldElement(1), z(1));
  const Series wt = solve_preimage(laurent_nf(u), t);
  return LaurentUnit(s_shift(wt, z(-1)));
}

Series sigma_u_apply(const LaurentUnit& u, FieldAut rho, const Series& a) {
  require_laurent(a);
  if (!(a.field() == u.series().field())) {
    throw Error(ErrorCode::DescriptorMismatch, "unit and series over different fields");
  }
  const Series ut = s_shift(u.series(), z(1));
  SummableFamily family;
  // σ_u is valuation preserving, so the tail O(t^c) stays O(t^c).
  family.members.push_back(Series::zero(kZ, a.field(), a.cutoff()));
  for (const auto& term : a.terms()) {
    const std::int64_t i = term.exp[0].numerator();
    family.members.push_back(
        s_scale(field_aut_apply(rho, term.coef, a.field()), s_pow_int(ut, i)));
  }
  return s_sum_family(family);
}

bool is_order_preserving(const LaurentUnit& u) {
  return field_is_positive(u.constant(), u.series().field());
}

MoebiusMap::MoebiusMap(FieldElement a, FieldElement b, FieldElement c, FieldElement d,
                       FieldDescriptor field)
    : m_{std::move(a), std::move(b), std::move(c), std::move(d)}, field_(field) {
  if ((m_[0] * m_[3] - m_[1] * m_[2]).is_zero()) {
    throw Error(ErrorCode::SingularMatrix, "ad - bc = 0");
  }
  for (const auto& e : m_) {
    if (e.is_zero()) continue;
    const FieldElement scale = e.inverse();
    for (auto& f : m_) f = f * scale;
    break;
  }
}

std::ostream& operator<<(std::ostream& os, const MoebiusMap& m) {
  return os << "[" << m.a() << ", " << m.b() << ", " << m.c() << ", " << m.d() << "]";
}

MoebiusMap moebius_compose(const MoebiusMap& m1, const MoebiusMap& m2) {
  if (!(m1.field() == m2.field())) {
    throw Error(ErrorCode::DescriptorMismatch, "Möbius maps over different fields");
  }
  // Substituting σ1(t) into σ2(t) = (a2 t + b2)/(c2 t + d2) gives the product M2·M1.
  return MoebiusMap(m2.a() * m1.a() + m2.b() * m1.c(), m2.a() * m1.b() + m2.b() * m1.d(),
                    m2.c() * m1.a() + m2.d() * m1.c(), m2.c() * m1.b() + m2.d() * m1.d(),
                    m1.field());
}

MoebiusMap moebius_invert(const MoebiusMap& m) {
  return MoebiusMap(m.d(), -m.b(), -m.c(), m.a(), m.field());
}

Series moebius_to_series(const MoebiusMap& m, std::int64_t cutoff) {
  const FieldDescriptor& field = m.field();
  if (m.c().is_zero() && m.d().is_zero()) {
    throw Error(ErrorCode::NotExpandable, "denominator ct + d vanishes");
  }
  const Series num = Series::from_terms(kZ, field, {{z(0), m.b()}, {z(1), m.a()}});
  const Series den = Series::from_terms(kZ, field, {{z(0), m.d()}, {z(1), m.c()}});
  const std::int64_t vn = (*num.valuation())[0].numerator();
  const std::int64_t vd = (*den.valuation())[0].numerator();
  const std::int64_t v = vn - vd;
  // Relative precision needed for the quotient of the unit parts.
  const std::int64_t rel = cutoff - v;
  if (rel <= 0) return Series::zero(kZ, field, z(cutoff));
  const Series num_unit = s_shift(num, z(-vn)).truncated(z(rel));
  const Series den_unit = s_shift(den, z(-vd)).truncated(z(rel));
  return s_shift(s_mul(num_unit, s_invert_unit(den_unit)), z(v));
}

std::string moebius_class_name(MoebiusClass c) {
  switch (c) {
    case MoebiusClass::ValuationPreservingKAut: return "ValuationPreservingKAut";
    case MoebiusClass::OneAut: return "OneAut";
    case MoebiusClass::Other: return "Other";
  }
  return "Other";
}

MoebiusClass moebius_classify(const MoebiusMap& m) {
  if (!m.b().is_zero() || (m.a() * m.d()).is_zero()) return MoebiusClass::Other;
  return m.a() == m.d() ? MoebiusClass::OneAut : MoebiusClass::ValuationPreservingKAut;
}

BlackBoxAut moebius_black_box(const MoebiusMap& m, std::int64_t cutoff) {
  return substitution_black_box(kZ, m.field(), FieldAut::Identity, {moebius_to_series(m, cutoff)});
}

}  // namespace hahn
