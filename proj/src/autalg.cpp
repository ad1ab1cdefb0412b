#include "hahn/autalg.hpp"

#include <map>
#include <ostream>
#include <sstream>

#include "hahn/error.hpp"
#include "hahn/text.hpp"

namespace hahn {

namespace {

Series one_series(const GroupDescriptor& group, const FieldDescriptor& field, const Bound& cutoff) {
  return Series::constant(group, field, FieldElement(1), cutoff);
}

Exponent generator(const GroupDescriptor& group, int i) {
  return Exponent::unit(group.dimension, i, ExpRational(1, group.level));
}

// Integer coordinates of g in the basis (1/L)e_i.
std::vector<std::int64_t> lattice_coords(const Exponent& g, const GroupDescriptor& group) {
  require_on_lattice(g, group);
  std::vector<std::int64_t> out;
  out.reserve(static_cast<std::size_t>(g.dimension()));
  for (int i = 0; i < g.dimension(); ++i) {
    const ExpRational m = g[i] * group.level;
    out.push_back(m.numerator());
  }
  return out;
}

Bound image_bound(const OrderAutMatrix& tau, const Bound& b) {
  if (!b.is_finite()) return b;
  return Bound(oaut_apply(tau, b.value()));
}

Bound shifted_down(const Bound& b, const Exponent& h) { return b + (-h); }

void require_compatible(const AutNormalForm& sigma, const Series& a) {
  if (!sigma.group().compatible(a.group()) || !(sigma.field() == a.field())) {
    throw Error(ErrorCode::DescriptorMismatch, "series and automorphism use different descriptors");
  }
}

// Powers u_i^m, computed once per call site.
class UnitPowerCache {
 public:
  explicit UnitPowerCache(const OneUnitHom& u) : u_(u), cache_(u.values.size()) {}

  Series eval(const Exponent& g, const Bound& precision) {
    Series acc = one_series(u_.group, u_.field, min(precision, u_.precision()));
    if (u_.is_trivial()) return acc;
    const auto m = lattice_coords(g, u_.group);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      acc = s_mul(acc, power(i, m[i]).truncated(precision)).truncated(precision);
    }
    return acc;
  }

 private:
  const Series& power(std::size_t i, std::int64_t m) {
    auto& table = cache_[i];
    if (auto it = table.find(m); it != table.end()) return it->second;
    const Series& base = u_.values[i];
    if (m == 1) return table.emplace(m, base).first->second;
    if (m == -1) return table.emplace(m, s_invert_unit(base)).first->second;
    const std::int64_t step = m > 0 ? 1 : -1;
    Series next = s_mul(power(i, m - step), power(i, step));
    return table.emplace(m, std::move(next)).first->second;
  }

  const OneUnitHom& u_;
  std::vector<std::map<std::int64_t, Series>> cache_;
};

// Images of single terms under a fixed normal form.
class TermImager {
 public:
  explicit TermImager(const AutNormalForm& sigma) : sigma_(sigma), powers_(sigma.u) {}

  // σ(c t^g) truncated at `bound`, or nullopt when τ(g) is already past it.
  std::optional<Series> image(const FieldElement& c, const Exponent& g, const Bound& bound) {
    const Exponent h = oaut_apply(sigma_.tau, g);
    if (!bound.above(h)) return std::nullopt;
    const FieldElement coef =
        field_aut_apply(sigma_.rho, c, sigma_.field()) * hom_eval(sigma_.x, h);
    const Series unit = powers_.eval(h, shifted_down(bound, h));
    return s_shift(s_scale(coef, unit), h);
  }

 private:
  const AutNormalForm& sigma_;
  UnitPowerCache powers_;
};

Series probe(const GroupDescriptor& group, const FieldDescriptor& field, const FieldElement& c,
             const Exponent& g, const Bound& precision) {
  return Series::monomial(group, field, c, g, precision + g);
}

}  // namespace

FieldUnitHom FieldUnitHom::trivial(const GroupDescriptor& group) {
  return {group, std::vector<FieldElement>(static_cast<std::size_t>(group.dimension), FieldElement(1))};
}

void FieldUnitHom::validate() const {
  if (static_cast<int>(values.size()) != group.dimension) {
    throw Error(ErrorCode::InvalidArgument, "x needs one value per lattice generator");
  }
  for (const auto& v : values) {
    if (v.is_zero()) throw Error(ErrorCode::InvalidArgument, "x takes values in k^×");
  }
}

bool FieldUnitHom::is_trivial() const {
  for (const auto& v : values) {
    if (!v.is_one()) return false;
  }
  return true;
}

OneUnitHom OneUnitHom::trivial(const GroupDescriptor& group, const FieldDescriptor& field) {
  return {group, field,
          std::vector<Series>(static_cast<std::size_t>(group.dimension),
                              one_series(group, field, Bound::infinity()))};
}

void OneUnitHom::validate() const {
  if (static_cast<int>(values.size()) != group.dimension) {
    throw Error(ErrorCode::InvalidArgument, "u needs one value per lattice generator");
  }
  for (const auto& v : values) {
    if (!v.group().compatible(group) || !(v.field() == field)) {
      throw Error(ErrorCode::DescriptorMismatch, "u value over a different field or group");
    }
    if (!v.is_one_unit()) throw Error(ErrorCode::NotOneUnit, "u takes values in 1+I_K");
  }
}

bool OneUnitHom::is_trivial() const {
  for (const auto& v : values) {
    if (v.size() != 1) return false;
  }
  return true;
}

Bound OneUnitHom::precision() const {
  Bound out;
  for (const auto& v : values) out = min(out, v.cutoff());
  return out;
}

bool equal_to_cutoff(const OneUnitHom& a, const OneUnitHom& b) {
  if (a.values.size() != b.values.size() || !(a.group == b.group)) return false;
  for (std::size_t i = 0; i < a.values.size(); ++i) {
    if (!s_equal_to_cutoff(a.values[i], b.values[i])) return false;
  }
  return true;
}

FieldElement hom_eval(const FieldUnitHom& x, const Exponent& g) {
  if (x.is_trivial()) return FieldElement(1);
  const auto m = lattice_coords(g, x.group);
  FieldElement acc(1);
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] != 0) acc *= x.values[i].pow(m[i]);
  }
  return acc;
}

Series hom_eval(const OneUnitHom& u, const Exponent& g, const Bound& precision) {
  UnitPowerCache cache(u);
  return cache.eval(g, precision);
}

AutNormalForm AutNormalForm::identity(const GroupDescriptor& group, const FieldDescriptor& field) {
  return {FieldAut::Identity, OrderAutMatrix::identity(group.kind, group.dimension),
          FieldUnitHom::trivial(group), OneUnitHom::trivial(group, field)};
}

void AutNormalForm::validate() const {
  x.validate();
  u.validate();
  if (!(x.group == u.group)) {
    throw Error(ErrorCode::DescriptorMismatch, "x and u live on different lattices");
  }
  if (tau.kind() != u.group.kind || tau.dimension() != u.group.dimension) {
    throw Error(ErrorCode::DescriptorMismatch, "τ does not act on the exponent group");
  }
  if (rho == FieldAut::Conjugation && u.field.is_rational()) {
    throw Error(ErrorCode::ConjugationOnRationals, "Q has no conjugation");
  }
}

bool equal_to_cutoff(const AutNormalForm& a, const AutNormalForm& b) {
  return a.rho == b.rho && a.tau == b.tau && a.x == b.x && equal_to_cutoff(a.u, b.u);
}

std::ostream& operator<<(std::ostream& os, const AutNormalForm& nf) {
  os << "rho = " << nf.rho << "\ntau = " << nf.tau << "\nx = [";
  for (std::size_t i = 0; i < nf.x.values.size(); ++i) {
    if (i) os << ", ";
    os << nf.x.values[i];
  }
  os << "]\nu = [";
  for (std::size_t i = 0; i < nf.u.values.size(); ++i) {
    if (i) os << ", ";
    os << nf.u.values[i];
  }
  return os << "]\nlevel = " << nf.group().level;
}

BlackBoxAut as_black_box(const AutNormalForm& sigma) {
  return {sigma.group(), sigma.field(), [sigma](const Series& a) { return apply_aut(sigma, a); }};
}

BlackBoxAut compose_black_box(const BlackBoxAut& outer, const BlackBoxAut& inner) {
  if (!outer.group.compatible(inner.group) || !(outer.field == inner.field)) {
    throw Error(ErrorCode::DescriptorMismatch, "composing automorphisms of different fields");
  }
  return {outer.group.refined(inner.group), outer.field,
          [outer, inner](const Series& a) { return outer(inner(a)); }};
}

BlackBoxAut substitution_black_box(const GroupDescriptor& group, const FieldDescriptor& field,
                                   FieldAut rho, std::vector<Series> images) {
  if (static_cast<int>(images.size()) != group.dimension) {
    throw Error(ErrorCode::InvalidArgument, "need one image per lattice generator");
  }
  for (const auto& f : images) {
    if (!f.group().compatible(group) || !(f.field() == field)) {
      throw Error(ErrorCode::DescriptorMismatch, "generator image over a different field or group");
    }
    if (f.is_zero()) throw Error(ErrorCode::InvalidArgument, "generator image is zero");
  }
  return {group, field, [group, field, rho, images = std::move(images)](const Series& a) {
            std::vector<std::map<std::int64_t, Series>> powers(images.size());
            // Negative powers of an exact image are only needed to the
            // relative precision of the input.
            const Bound relative = a.relative_precision();
            auto base = [&](std::size_t i, std::int64_t m) {
              const Series& f = images[i];
              if (m >= 0 || f.cutoff().is_finite() || !relative.is_finite()) return f;
              return f.truncated(f.floor() + relative);
            };
            // Π f_i^{m_i} for g = Σ m_i (1/L)e_i.
            auto monomial_image = [&](const Exponent& g) {
              Series img = one_series(group, field, Bound::infinity());
              const auto m = lattice_coords(g, group);
              for (std::size_t i = 0; i < m.size(); ++i) {
                if (m[i] == 0) continue;
                auto it = powers[i].find(m[i]);
                if (it == powers[i].end()) it = powers[i].emplace(m[i], s_pow_int(base(i, m[i]), m[i])).first;
                img = s_mul(img, it->second);
              }
              return img;
            };
            SummableFamily family;
            // The dropped tail O(t^c) maps into O(t^{v(σ(t^c))}).
            Bound cutoff = a.cutoff();
            if (cutoff.is_finite()) cutoff = monomial_image(cutoff.value()).floor();
            family.members.push_back(Series::zero(group, field, cutoff));
            for (const auto& t : a.terms()) {
              family.members.push_back(
                  s_scale(field_aut_apply(rho, t.coef, field), monomial_image(t.exp)));
            }
            return s_sum_family(family);
          }};
}

Series g_exponentiation(const FieldUnitHom& x, const Series& a) {
  std::vector<Term> terms = a.terms();
  for (auto& t : terms) t.coef = t.coef * hom_eval(x, t.exp);
  return Series::from_terms(a.group(), a.field(), std::move(terms), a.cutoff());
}

AutNormalForm canonical_lift(FieldAut rho, const OrderAutMatrix& tau, const GroupDescriptor& group,
                             const FieldDescriptor& field) {
  AutNormalForm out = AutNormalForm::identity(group, field);
  out.rho = rho;
  out.tau = tau;
  out.validate();
  return out;
}

Series apply_aut(const AutNormalForm& sigma, const Series& a) {
  require_compatible(sigma, a);
  const Bound bound =
      min(image_bound(sigma.tau, a.cutoff()), image_bound(sigma.tau, a.floor()) + sigma.u.precision());
  const GroupDescriptor group = a.group().refined(sigma.group());
  TermImager imager(sigma);
  SummableFamily family;
  family.members.push_back(Series::zero(group, a.field(), bound));
  for (const auto& t : a.terms()) {
    auto img = imager.image(t.coef, t.exp, bound);
    // τ is order preserving, so later terms land even higher.
    if (!img) break;
    family.members.push_back(std::move(*img));
  }
  return s_sum_family(family);
}

Series solve_preimage(const AutNormalForm& sigma, const Series& target) {
  require_compatible(sigma, target);
  const Bound bound = min(target.cutoff(), target.floor() + sigma.u.precision());
  const GroupDescriptor group = target.group().refined(sigma.group());
  const OrderAutMatrix tau_inv = oaut_invert(sigma.tau);
  const FieldAut rho_inv = field_aut_inverse(sigma.rho);
  if (!sigma.u.is_trivial()) {
    if (!bound.is_finite()) {
      throw Error(ErrorCode::UnboundedPrecision, "exact preimage under a non-trivial σ_u");
    }
    for (const auto& v : sigma.u.values) {
      if (v.size() < 2) continue;
      if (!reaches(v.terms()[1].exp, bound.value() - target.floor().value())) {
        throw Error(ErrorCode::UnreachableCutoff, "elimination never reaches the cutoff");
      }
    }
  }
  TermImager imager(sigma);
  std::vector<Term> solution;
  Series residual = target.truncated(bound);
  while (!residual.is_zero()) {
    const Term& lead = residual.terms().front();
    const Exponent g = oaut_apply(tau_inv, lead.exp);
    const FieldElement c =
        field_aut_apply(rho_inv, lead.coef / hom_eval(sigma.x, lead.exp), sigma.field());
    auto img = imager.image(c, g, bound);
    solution.push_back({g, c});
    residual = s_sub(residual, *img).truncated(bound);
  }
  return Series::from_terms(group, target.field(), std::move(solution),
                            image_bound(tau_inv, bound));
}

std::pair<FieldAut, OrderAutMatrix> extract_phi(const BlackBoxAut& sigma, const Bound& precision) {
  const GroupDescriptor& group = sigma.group;
  const FieldDescriptor& field = sigma.field;
  const Exponent zero = Exponent::zero(group.dimension);

  const Series one_image = sigma(probe(group, field, FieldElement(1), zero, precision));
  if (!one_image.is_unit() || !s_leading(one_image).is_one() || one_image.size() != 1) {
    throw Error(ErrorCode::NotValuationPreserving, "σ(1) is not 1");
  }

  OrderAutMatrix::Matrix rows;
  for (int i = 0; i < group.dimension; ++i) {
    const Exponent g = generator(group, i);
    const Series img = sigma(probe(group, field, FieldElement(1), g, precision));
    const Series inv_img = sigma(probe(group, field, FieldElement(1), -g, precision));
    if (img.is_zero() || inv_img.is_zero()) {
      throw Error(ErrorCode::NotValuationPreserving, "generator image vanishes below the cutoff");
    }
    const Exponent v = *img.valuation();
    if (!(*inv_img.valuation() == -v)) {
      throw Error(ErrorCode::NotValuationPreserving,
                  "v(σ(t^-g)) differs from -v(σ(t^g)) at generator " + std::to_string(i));
    }
    std::vector<ExpRational> row;
    for (int j = 0; j < group.dimension; ++j) row.push_back(v[j] * group.level);
    rows.push_back(std::move(row));
  }
  OrderAutMatrix tau = OrderAutMatrix::identity(group.kind, group.dimension);
  try {
    tau = oaut_check(rows, group.kind);
  } catch (const Error& e) {
    throw Error(ErrorCode::NotValuationPreserving,
                std::string("induced exponent map is not an order automorphism (") + e.what() + ")");
  }

  FieldAut rho = FieldAut::Identity;
  if (!field.is_rational()) {
    const FieldElement root = FieldElement::sqrt_generator(field);
    const Series img = sigma(probe(group, field, root, zero, precision));
    const FieldElement c = s_constant_term(img);
    if (img.valuation() != zero) {
      throw Error(ErrorCode::NotValuationPreserving, "σ(√m) is not a unit");
    }
    if (c == root) {
      rho = FieldAut::Identity;
    } else if (c == root.conjugate()) {
      rho = FieldAut::Conjugation;
    } else {
      throw Error(ErrorCode::UnrecognizedFieldAut,
                  "σ(√m) has constant term " + format_field_element(c));
    }
  }
  return {rho, tau};
}

FieldUnitHom extract_x(const BlackBoxAut& sigma, const Bound& precision) {
  FieldUnitHom x{sigma.group, {}};
  for (int i = 0; i < sigma.group.dimension; ++i) {
    const Exponent g = generator(sigma.group, i);
    const Series img = sigma(probe(sigma.group, sigma.field, FieldElement(1), g, precision));
    if (img.valuation() != g) {
      throw Error(ErrorCode::NotInternal, "σ moves the valuation of a generator");
    }
    x.values.push_back(s_leading(img));
  }
  return x;
}

OneUnitHom extract_u(const BlackBoxAut& sigma, const FieldUnitHom& x, const Bound& precision) {
  OneUnitHom u{sigma.group, sigma.field, {}};
  for (int i = 0; i < sigma.group.dimension; ++i) {
    const Exponent g = generator(sigma.group, i);
    const Series img = sigma(probe(sigma.group, sigma.field, FieldElement(1), g, precision));
    if (img.valuation() != g) {
      throw Error(ErrorCode::NotInternal, "σ moves the valuation of a generator");
    }
    Series value = s_scale(x.values[static_cast<std::size_t>(i)].inverse(), s_shift(img, -g));
    if (!value.is_one_unit()) {
      throw Error(ErrorCode::NotInternal, "t^-g σ(t^g) / x(g) is not a 1-unit");
    }
    u.values.push_back(value.with_group(sigma.group));
  }
  return u;
}

AutNormalForm decompose(const BlackBoxAut& sigma, const Bound& precision) {
  const GroupDescriptor& group = sigma.group;
  const FieldDescriptor& field = sigma.field;
  auto [rho, tau] = extract_phi(sigma, precision);

  const AutNormalForm lift_inverse =
      canonical_lift(field_aut_inverse(rho), oaut_invert(tau), group, field);
  const BlackBoxAut internal = compose_black_box(sigma, as_black_box(lift_inverse));
  FieldUnitHom x = extract_x(internal, precision);
  OneUnitHom u = extract_u(internal, x, precision);
  AutNormalForm nf{rho, tau, std::move(x), std::move(u)};
  nf.validate();

  std::vector<Series> probes;
  Exponent sum = Exponent::zero(group.dimension);
  for (int i = 0; i < group.dimension; ++i) {
    const Exponent g = generator(group, i);
    sum += g;
    probes.push_back(probe(group, field, FieldElement(1), g, precision));
    probes.push_back(probe(group, field, FieldElement(1), -g, precision));
  }
  if (group.dimension > 1) probes.push_back(probe(group, field, FieldElement(1), sum, precision));
  if (!field.is_rational()) {
    probes.push_back(probe(group, field, FieldElement::sqrt_generator(field) + FieldElement(1),
                           generator(group, 0), precision));
  }
  for (const auto& p : probes) {
    const Series expected = sigma(p);
    const Series rebuilt = apply_aut(nf, p);
    if (!s_equal_to_cutoff(expected, rebuilt)) {
      throw Error(ErrorCode::RoundTripMismatch,
                  "rebuilt normal form differs on probe " + format_series(p) + ": " +
                      format_series(expected) + " vs " + format_series(rebuilt));
    }
  }
  return nf;
}

OneUnitHom twisted_product(const AutNormalForm& carrier, const OneUnitHom& u_s) {
  if (!carrier.is_internal()) {
    throw Error(ErrorCode::InvalidArgument, "twisted product needs an internal carrier");
  }
  if (!(carrier.group() == u_s.group) || !(carrier.field() == u_s.field)) {
    throw Error(ErrorCode::DescriptorMismatch, "twisted product over different lattices");
  }
  OneUnitHom out{u_s.group, u_s.field, {}};
  for (std::size_t i = 0; i < u_s.values.size(); ++i) {
    out.values.push_back(s_mul(apply_aut(carrier, u_s.values[i]), carrier.u.values[i]));
  }
  out.validate();
  return out;
}

AutNormalForm compose_nf(const AutNormalForm& sigma1, const AutNormalForm& sigma2) {
  if (!(sigma1.group() == sigma2.group()) || !(sigma1.field() == sigma2.field())) {
    throw Error(ErrorCode::DescriptorMismatch, "normal forms over different fields or lattices");
  }
  const BlackBoxAut composite = compose_black_box(as_black_box(sigma1), as_black_box(sigma2));
  return decompose(composite, min(sigma1.u.precision(), sigma2.u.precision()));
}

AutNormalForm invert_nf(const AutNormalForm& sigma) {
  const BlackBoxAut inverse{sigma.group(), sigma.field(),
                            [sigma](const Series& a) { return solve_preimage(sigma, a); }};
  return decompose(inverse, sigma.u.precision());
}

}  // namespace hahn
