#include "hahn/series.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>

#include "hahn/error.hpp"

namespace hahn {

Bound min(const Bound& a, const Bound& b) {
  if (!a.value_) return b;
  if (!b.value_) return a;
  return *a.value_ < *b.value_ ? a : b;
}

Bound operator+(const Bound& a, const Exponent& g) {
  if (!a.value_) return a;
  return Bound(*a.value_ + g);
}

Bound operator+(const Bound& a, const Bound& b) {
  if (!a.value_ || !b.value_) return Bound::infinity();
  return Bound(*a.value_ + *b.value_);
}

bool operator<(const Bound& a, const Bound& b) {
  if (!a.value_) return false;
  if (!b.value_) return true;
  return *a.value_ < *b.value_;
}

std::ostream& operator<<(std::ostream& os, const Bound& b) {
  if (!b.is_finite()) return os << "inf";
  return os << b.value();
}

namespace {

using TermMap = std::map<Exponent, FieldElement>;

void check_coefficient(const FieldElement& c, const FieldDescriptor& field) {
  if (!c.is_rational() && c.radicand() != field.radicand) {
    throw Error(ErrorCode::DescriptorMismatch, "coefficient outside the coefficient field");
  }
}

FieldDescriptor joint_field(const Series& a, const Series& b) {
  if (!(a.field() == b.field())) {
    throw Error(ErrorCode::DescriptorMismatch, "coefficient fields differ");
  }
  return a.field();
}

GroupDescriptor joint_group(const Series& a, const Series& b) {
  if (!a.group().compatible(b.group())) {
    throw Error(ErrorCode::DescriptorMismatch, "exponent groups differ");
  }
  return a.group().refined(b.group());
}

Series from_map(const GroupDescriptor& group, const FieldDescriptor& field, const Bound& cutoff,
                TermMap&& acc) {
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [e, c] : acc) {
    if (!c.is_zero() && cutoff.above(e)) terms.push_back({e, std::move(c)});
  }
  return Series::from_terms(group, field, std::move(terms), cutoff);
}

}  // namespace

Series::Series(GroupDescriptor group, FieldDescriptor field, Bound cutoff)
    : group_(group), field_(field), cutoff_(std::move(cutoff)) {
  if (cutoff_.is_finite() && cutoff_.value().dimension() != group_.dimension) {
    throw Error(ErrorCode::DimensionError, "cutoff does not match group dimension");
  }
}

Series Series::from_terms(GroupDescriptor group, FieldDescriptor field, std::vector<Term> terms,
                          Bound cutoff) {
  Series out(group, field, std::move(cutoff));
  for (const auto& t : terms) {
    if (t.exp.dimension() != group.dimension) {
      throw Error(ErrorCode::DimensionError, "term exponent does not match group dimension");
    }
    check_coefficient(t.coef, field);
    if (group.kind == GroupKind::IntLattice) {
      require_on_lattice(t.exp, group);
    } else if (!t.exp.on_lattice(out.group_.level)) {
      out.group_.level = lcm64(out.group_.level, t.exp.level());
    }
  }
  std::sort(terms.begin(), terms.end(),
            [](const Term& x, const Term& y) { return x.exp < y.exp; });
  out.terms_.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.cutoff_.above(t.exp)) break;
    if (!out.terms_.empty() && out.terms_.back().exp == t.exp) {
      out.terms_.back().coef += t.coef;
    } else {
      out.terms_.push_back(std::move(t));
    }
  }
  std::erase_if(out.terms_, [](const Term& t) { return t.coef.is_zero(); });
  return out;
}

Series Series::zero(GroupDescriptor group, FieldDescriptor field, Bound cutoff) {
  return Series(group, field, std::move(cutoff));
}

Series Series::constant(GroupDescriptor group, FieldDescriptor field, FieldElement c,
                        Bound cutoff) {
  return monomial(group, field, std::move(c), Exponent::zero(group.dimension), std::move(cutoff));
}

Series Series::monomial(GroupDescriptor group, FieldDescriptor field, FieldElement c, Exponent g,
                        Bound cutoff) {
  std::vector<Term> terms;
  terms.push_back({std::move(g), std::move(c)});
  return from_terms(group, field, std::move(terms), std::move(cutoff));
}

FieldElement Series::coefficient(const Exponent& g) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), g,
                             [](const Term& t, const Exponent& e) { return t.exp < e; });
  if (it != terms_.end() && it->exp == g) return it->coef;
  return FieldElement(0);
}

std::vector<Exponent> Series::support() const {
  std::vector<Exponent> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back(t.exp);
  return out;
}

std::optional<Exponent> Series::valuation() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.front().exp;
}

Bound Series::floor() const {
  if (terms_.empty()) return cutoff_;
  return Bound(terms_.front().exp);
}

Bound Series::relative_precision() const {
  if (!cutoff_.is_finite()) return cutoff_;
  return Bound(cutoff_.value() - floor().value());
}

Series Series::truncated(const Bound& new_cutoff) const {
  Series out = *this;
  out.cutoff_ = min(cutoff_, new_cutoff);
  if (out.cutoff_.is_finite()) {
    std::erase_if(out.terms_, [&](const Term& t) { return !out.cutoff_.above(t.exp); });
  }
  return out;
}

Series Series::with_group(const GroupDescriptor& group) const {
  return from_terms(group, field_, terms_, cutoff_);
}

bool Series::in_valuation_ring() const {
  const Bound f = floor();
  return !f.is_finite() || f.value() >= Exponent::zero(group_.dimension);
}

bool Series::in_maximal_ideal() const {
  const Bound f = floor();
  return !f.is_finite() || f.value() > Exponent::zero(group_.dimension);
}

bool Series::is_unit() const {
  return !terms_.empty() && terms_.front().exp.is_zero();
}

bool Series::is_one_unit() const {
  return is_unit() && terms_.front().coef.is_one();
}

Series s_add(const Series& a, const Series& b) {
  const GroupDescriptor group = joint_group(a, b);
  const FieldDescriptor field = joint_field(a, b);
  const Bound cutoff = min(a.cutoff(), b.cutoff());
  std::vector<Term> terms;
  terms.reserve(a.size() + b.size());
  auto ia = a.terms().begin();
  auto ib = b.terms().begin();
  while (ia != a.terms().end() || ib != b.terms().end()) {
    if (ib == b.terms().end() || (ia != a.terms().end() && ia->exp < ib->exp)) {
      terms.push_back(*ia++);
    } else if (ia == a.terms().end() || ib->exp < ia->exp) {
      terms.push_back(*ib++);
    } else {
      terms.push_back({ia->exp, ia->coef + ib->coef});
      ++ia;
      ++ib;
    }
  }
  return Series::from_terms(group, field, std::move(terms), cutoff);
}

Series s_neg(const Series& a) {
  std::vector<Term> terms = a.terms();
  for (auto& t : terms) t.coef = -t.coef;
  return Series::from_terms(a.group(), a.field(), std::move(terms), a.cutoff());
}

Series s_sub(const Series& a, const Series& b) { return s_add(a, s_neg(b)); }

Series s_mul(const Series& a, const Series& b) {
  const GroupDescriptor group = joint_group(a, b);
  const FieldDescriptor field = joint_field(a, b);
  const Bound cutoff = min(a.floor() + b.cutoff(), b.floor() + a.cutoff());
  TermMap acc;
  for (const auto& ta : a.terms()) {
    for (const auto& tb : b.terms()) {
      Exponent e = ta.exp + tb.exp;
      // b is sorted, so later sums only grow.
      if (!cutoff.above(e)) break;
      auto [it, inserted] = acc.try_emplace(std::move(e));
      if (inserted) {
        it->second = ta.coef * tb.coef;
      } else {
        it->second += ta.coef * tb.coef;
      }
    }
  }
  return from_map(group, field, cutoff, std::move(acc));
}

Series s_scale(const FieldElement& c, const Series& a) {
  if (c.is_zero()) {
    return Series::zero(a.group(), a.field(), a.floor());
  }
  std::vector<Term> terms = a.terms();
  for (auto& t : terms) t.coef = c * t.coef;
  return Series::from_terms(a.group(), a.field(), std::move(terms), a.cutoff());
}

Series s_shift(const Series& a, const Exponent& g) {
  std::vector<Term> terms = a.terms();
  for (auto& t : terms) t.exp += g;
  GroupDescriptor group = a.group();
  if (group.kind == GroupKind::RationalLattice) {
    group.level = lcm64(group.level, g.level());
  } else {
    require_on_lattice(g, group);
  }
  return Series::from_terms(group, a.field(), std::move(terms), a.cutoff() + g);
}

Series s_map_coefficients(FieldAut rho, const Series& a) {
  if (rho == FieldAut::Identity) return a;
  std::vector<Term> terms = a.terms();
  for (auto& t : terms) t.coef = field_aut_apply(rho, t.coef, a.field());
  return Series::from_terms(a.group(), a.field(), std::move(terms), a.cutoff());
}

Series s_invert_unit(const Series& a) {
  if (!a.is_unit()) {
    std::ostringstream msg;
    msg << "valuation " << a.floor() << " is not 0";
    throw Error(ErrorCode::NotAUnit, msg.str());
  }
  const FieldElement a0_inv = a.terms().front().coef.inverse();
  const Exponent zero = Exponent::zero(a.group().dimension);
  // a = a0 (1 + eps) with eps ∈ I_K.
  Series eps = s_scale(a0_inv, a);
  eps = Series::from_terms(eps.group(), eps.field(),
                           std::vector<Term>(eps.terms().begin() + 1, eps.terms().end()),
                           eps.cutoff());
  if (eps.is_zero()) {
    return Series::constant(a.group(), a.field(), a0_inv, a.cutoff());
  }
  if (!a.cutoff().is_finite()) {
    throw Error(ErrorCode::UnboundedPrecision, "inverse of an exact non-constant unit");
  }
  const Bound& cutoff = a.cutoff();
  if (!reaches(*eps.valuation(), cutoff.value())) {
    std::ostringstream msg;
    msg << "powers of t^" << *eps.valuation() << " never reach cutoff " << cutoff;
    throw Error(ErrorCode::UnreachableCutoff, msg.str());
  }
  const Series neg_eps = s_neg(eps);
  Series power = Series::constant(a.group(), a.field(), FieldElement(1), cutoff);
  Series sum = power;
  for (;;) {
    power = s_mul(power, neg_eps).truncated(cutoff);
    if (power.is_zero()) break;
    sum = s_add(sum, power);
  }
  return s_scale(a0_inv, sum).truncated(cutoff);
}

Series s_pow_int(const Series& a, std::int64_t n) {
  if (n < 0) {
    if (a.is_zero()) throw Error(ErrorCode::ZeroToNegativePower, "zero to a negative power");
    const Exponent h = *a.valuation();
    const Series inv = s_invert_unit(s_shift(a, -h));
    return s_shift(s_pow_int(inv, -n), ExpRational(n) * h);
  }
  Series acc = Series::constant(a.group(), a.field(), FieldElement(1), a.relative_precision());
  if (n == 0) return acc;
  Series base = a;
  std::uint64_t e = static_cast<std::uint64_t>(n);
  bool first = true;
  while (e) {
    if (e & 1u) {
      acc = first ? base : s_mul(acc, base);
      first = false;
    }
    e >>= 1u;
    if (e) base = s_mul(base, base);
  }
  return acc;
}

std::optional<Exponent> s_valuation(const Series& a) { return a.valuation(); }

FieldElement s_leading(const Series& a) {
  if (a.is_zero()) throw Error(ErrorCode::ZeroSeries, "zero series has no leading coefficient");
  return a.terms().front().coef;
}

FieldElement s_constant_term(const Series& a) {
  return a.coefficient(Exponent::zero(a.group().dimension));
}

Series s_nth_root_one_unit(const Series& a, std::int64_t n, const std::optional<Series>& start) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "root order must be positive");
  if (!a.is_one_unit()) throw Error(ErrorCode::NotOneUnit, "input is not in 1+I_K");
  if (start && !start->is_one_unit()) {
    throw Error(ErrorCode::NotOneUnit, "starting point is not in 1+I_K");
  }
  const Series one = Series::constant(a.group(), a.field(), FieldElement(1), a.cutoff());
  if (n == 1) return a;
  if (!a.cutoff().is_finite()) {
    if (a.size() == 1) return a;
    throw Error(ErrorCode::UnboundedPrecision, "root of an exact non-trivial 1-unit");
  }
  const Bound& cutoff = a.cutoff();
  for (const Series* s : {&a, start ? &*start : nullptr}) {
    if (!s || s->size() < 2) continue;
    if (!reaches(s->terms()[1].exp, cutoff.value())) {
      throw Error(ErrorCode::UnreachableCutoff, "Newton steps never reach the cutoff");
    }
  }
  Series b = start ? start->truncated(cutoff) : one;
  const FieldElement n_elem(static_cast<long>(n));
  // Each step at least doubles the valuation of the residual, so this bound is
  // generous for any reachable cutoff.
  for (int iter = 0; iter < 256; ++iter) {
    const Series b_pow = s_pow_int(b, n - 1).truncated(cutoff);
    const Series residual = s_sub(s_mul(b_pow, b), a).truncated(cutoff);
    if (residual.is_zero()) return b;
    const Series step = s_mul(residual, s_invert_unit(s_scale(n_elem, b_pow)));
    b = s_sub(b, step).truncated(cutoff);
  }
  throw Error(ErrorCode::UnreachableCutoff, "Newton iteration did not settle");
}

Series s_root_of_unity_solve(std::int64_t n, const GroupDescriptor& group,
                             const FieldDescriptor& field, const Bound& cutoff) {
  const Series one = Series::constant(group, field, FieldElement(1), cutoff);
  return s_nth_root_one_unit(one, n);
}

void SummableFamily::validate() const {
  if (members.empty()) throw Error(ErrorCode::MixedDescriptors, "empty family");
  for (const auto& m : members) {
    if (!m.group().compatible(members.front().group()) || !(m.field() == members.front().field())) {
      throw Error(ErrorCode::MixedDescriptors, "family members use different descriptors");
    }
  }
}

std::vector<Exponent> SummableFamily::joint_support() const {
  std::vector<Exponent> out;
  for (const auto& m : members) {
    for (const auto& t : m.terms()) out.push_back(t.exp);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::size_t> SummableFamily::occurrences(const Exponent& g) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (!members[i].coefficient(g).is_zero()) out.push_back(i);
  }
  return out;
}

std::optional<Exponent> SummableFamily::min_valuation() const {
  std::optional<Exponent> nu;
  for (const auto& m : members) {
    auto v = m.valuation();
    if (v && (!nu || *v < *nu)) nu = v;
  }
  return nu;
}

Series s_sum_family(const SummableFamily& family) {
  family.validate();
  Bound cutoff = family.members.front().cutoff();
  GroupDescriptor group = family.members.front().group();
  for (const auto& m : family.members) {
    cutoff = min(cutoff, m.cutoff());
    group = group.refined(m.group());
  }
  TermMap acc;
  for (const auto& m : family.members) {
    for (const auto& t : m.terms()) {
      if (!cutoff.above(t.exp)) break;
      acc[t.exp] += t.coef;
    }
  }
  return from_map(group, family.members.front().field(), cutoff, std::move(acc));
}

bool s_equal_to_cutoff(const Series& a, const Series& b) {
  const Bound cutoff = min(a.cutoff(), b.cutoff());
  const Series ta = a.truncated(cutoff);
  const Series tb = b.truncated(cutoff);
  if (ta.size() != tb.size()) return false;
  for (std::size_t i = 0; i < ta.size(); ++i) {
    if (!(ta.terms()[i].exp == tb.terms()[i].exp) || !(ta.terms()[i].coef == tb.terms()[i].coef)) {
      return false;
    }
  }
  return true;
}

}  // namespace hahn
