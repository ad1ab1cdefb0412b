#include "hahn/puiseux.hpp"

#include <map>
#include <numeric>
#include <ostream>

#include "hahn/error.hpp"
#include "hahn/text.hpp"

namespace hahn {

namespace {

const GroupDescriptor kZ = GroupDescriptor::integers(1);

std::int64_t ceil_div(std::int64_t p, std::int64_t q) {
  // q > 0
  return p >= 0 ? (p + q - 1) / q : -((-p) / q);
}

Bound body_cutoff(std::int64_t n, const std::optional<ExpRational>& cutoff) {
  if (!cutoff) return Bound::infinity();
  const ExpRational scaled = *cutoff * n;
  return Bound(Exponent{ExpRational(ceil_div(scaled.numerator(), scaled.denominator()))});
}

void require_puiseux_group(const GroupDescriptor& group) {
  if (group.dimension != 1) {
    throw Error(ErrorCode::DescriptorMismatch, "Puiseux series need a one-dimensional group");
  }
}

}  // namespace

PuiseuxSeries::PuiseuxSeries(std::int64_t ramification, const Series& body,
                             std::optional<ExpRational> cutoff)
    : ramification_(ramification), body_(body), cutoff_(std::move(cutoff)) {
  if (ramification < 1) throw Error(ErrorCode::InvalidArgument, "ramification must be positive");
  if (!(body.group() == kZ)) {
    throw Error(ErrorCode::DescriptorMismatch, "Puiseux body must be a series over Z");
  }
  if (!cutoff_ && body.cutoff().is_finite()) {
    cutoff_ = body.cutoff().value()[0] / ramification;
  }
  std::int64_t g = ramification;
  for (const auto& t : body.terms()) g = std::gcd(g, t.exp[0].numerator());
  ramification_ = ramification / g;
  std::vector<Term> terms = body.terms();
  for (auto& t : terms) t.exp = Exponent{t.exp[0] / g};
  body_ = Series::from_terms(kZ, body.field(), std::move(terms),
                             body_cutoff(ramification_, cutoff_));
}

bool PuiseuxSeries::operator==(const PuiseuxSeries& other) const {
  if (ramification_ != other.ramification_ || cutoff_ != other.cutoff_ ||
      !(field() == other.field()) || body_.size() != other.body_.size()) {
    return false;
  }
  for (std::size_t i = 0; i < body_.size(); ++i) {
    if (!(body_.terms()[i].exp == other.body_.terms()[i].exp) ||
        !(body_.terms()[i].coef == other.body_.terms()[i].coef)) {
      return false;
    }
  }
  return true;
}

std::ostream& operator<<(std::ostream& os, const PuiseuxSeries& p) {
  return os << format_series(puiseux_to_lattice(p));
}

Series puiseux_to_lattice(const PuiseuxSeries& p) {
  const std::int64_t n = p.ramification();
  std::int64_t level = n;
  Bound cutoff;
  if (p.cutoff()) {
    level = lcm64(level, p.cutoff()->denominator());
    cutoff = Bound(Exponent{*p.cutoff()});
  }
  std::vector<Term> terms = p.body().terms();
  for (auto& t : terms) t.exp = Exponent{t.exp[0] / n};
  return Series::from_terms(GroupDescriptor::rationals(1, level), p.field(), std::move(terms),
                            cutoff);
}

PuiseuxSeries lattice_to_puiseux(const Series& a) {
  require_puiseux_group(a.group());
  std::int64_t n = 1;
  for (const auto& t : a.terms()) n = lcm64(n, t.exp[0].denominator());
  std::vector<Term> terms = a.terms();
  for (auto& t : terms) t.exp = Exponent{t.exp[0] * n};
  std::optional<ExpRational> cutoff;
  if (a.cutoff().is_finite()) cutoff = a.cutoff().value()[0];
  return PuiseuxSeries(n, Series::from_terms(kZ, a.field(), std::move(terms)), cutoff);
}

PuiseuxSeries puiseux_arith(PuiseuxOp op, const PuiseuxSeries& p,
                            const std::optional<PuiseuxSeries>& q) {
  const Series a = puiseux_to_lattice(p);
  auto other = [&] {
    if (!q) throw Error(ErrorCode::InvalidArgument, "binary Puiseux operation needs two operands");
    return puiseux_to_lattice(*q);
  };
  switch (op) {
    case PuiseuxOp::Add: return lattice_to_puiseux(s_add(a, other()));
    case PuiseuxOp::Sub: return lattice_to_puiseux(s_sub(a, other()));
    case PuiseuxOp::Mul: return lattice_to_puiseux(s_mul(a, other()));
    case PuiseuxOp::Neg: return lattice_to_puiseux(s_neg(a));
    case PuiseuxOp::Inv: return lattice_to_puiseux(s_pow_int(a, -1));
  }
  throw Error(ErrorCode::InvalidArgument, "unknown Puiseux operation");
}

PuiseuxSeries puiseux_oaut_apply(const ExpRational& scale, const PuiseuxSeries& p) {
  if (scale <= 0) throw Error(ErrorCode::NonPositiveScale, "scale must be positive");
  const Series a = puiseux_to_lattice(p);
  std::vector<Term> terms = a.terms();
  for (auto& t : terms) t.exp = Exponent{t.exp[0] * scale};
  Bound cutoff;
  if (a.cutoff().is_finite()) cutoff = Bound(Exponent{a.cutoff().value()[0] * scale});
  return lattice_to_puiseux(
      Series::from_terms(GroupDescriptor::rationals(1, 1), a.field(), std::move(terms), cutoff));
}

Series puiseux_unit_pow_q(const Series& u, std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (!u.is_one_unit()) throw Error(ErrorCode::NotOneUnit, "rational powers need a 1-unit");
  const Series root = den == 1 ? u : s_nth_root_one_unit(u, den);
  return s_pow_int(root, num);
}

Series puiseux_unit_pow_q(const Series& u, const ExpRational& q) {
  return puiseux_unit_pow_q(u, q.numerator(), q.denominator());
}

PuiseuxSeries puiseux_apply_aut(const AutNormalForm& sigma, const PuiseuxSeries& p) {
  const GroupDescriptor& group = sigma.group();
  require_puiseux_group(group);
  if (group.kind != GroupKind::RationalLattice || !(sigma.field() == p.field())) {
    throw Error(ErrorCode::DescriptorMismatch, "σ must act on Puiseux series over the same field");
  }
  const Series a = puiseux_to_lattice(p);
  const ExpRational scale = sigma.tau.at(0, 0);
  const Bound precision = sigma.u.precision();
  Bound bound = a.cutoff().is_finite() ? Bound(Exponent{a.cutoff().value()[0] * scale}) : Bound();
  if (!a.is_zero()) bound = min(bound, Bound(Exponent{a.terms().front().exp[0] * scale}) + precision);

  const GroupDescriptor result_group = GroupDescriptor::rationals(1, 1);
  // u(h) = u((1/L))^{L·h}, one rational power per exponent.
  std::map<ExpRational, Series> unit_cache;
  auto unit_at = [&](const ExpRational& h) -> const Series& {
    const ExpRational q = h * group.level;
    auto it = unit_cache.find(q);
    if (it == unit_cache.end()) {
      it = unit_cache.emplace(q, puiseux_unit_pow_q(sigma.u.values[0], q)).first;
    }
    return it->second;
  };

  SummableFamily family;
  family.members.push_back(Series::zero(result_group, p.field(), bound));
  for (const auto& t : a.terms()) {
    const Exponent h{t.exp[0] * scale};
    if (!bound.above(h)) break;
    const FieldElement coef =
        field_aut_apply(sigma.rho, t.coef, p.field()) * hom_eval(sigma.x, h);
    Series unit = sigma.u.is_trivial()
                      ? Series::constant(group, p.field(), FieldElement(1), precision)
                      : unit_at(h[0]);
    unit = unit.truncated(bound + (-h));
    family.members.push_back(s_shift(s_scale(coef, unit), h));
  }
  return lattice_to_puiseux(s_sum_family(family));
}

}  // namespace hahn
