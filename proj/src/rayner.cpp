#include "hahn/rayner.hpp"

#include <algorithm>
#include <ostream>
#include <set>
#include <sstream>

#include "hahn/error.hpp"
#include "hahn/random.hpp"
#include "hahn/text.hpp"

namespace hahn {

namespace {

bool on_level(const ExpRational& q, std::int64_t level) { return level % q.denominator() == 0; }

bool in_progression(const Progression& p, const ExpRational& q) {
  if (q < p.start) return false;
  return ((q - p.start) / p.step).denominator() == 1;
}

// Every element of `inner` lies in `outer`.
bool progression_within(const Progression& inner, const Progression& outer) {
  return in_progression(outer, inner.start) && (inner.step / outer.step).denominator() == 1;
}

std::string describe(const SupportDescriptor& a) {
  std::ostringstream os;
  os << a;
  return os.str();
}

std::size_t cardinality(const SupportDescriptor& a) { return a.points().size(); }

}  // namespace

SupportDescriptor::SupportDescriptor(std::int64_t level, std::vector<ExpRational> points,
                                     std::vector<Progression> tails)
    : level_(level) {
  if (level < 1) throw Error(ErrorCode::InvalidArgument, "level must be positive");
  for (const auto& q : points) {
    if (!on_level(q, level)) {
      throw Error(ErrorCode::LevelExceeded,
                  format_exp_rational(q) + " is not on the level-" + std::to_string(level) + " lattice");
    }
  }
  for (const auto& t : tails) {
    if (t.step <= 0) throw Error(ErrorCode::InvalidArgument, "progression step must be positive");
    if (!on_level(t.start, level) || !on_level(t.step, level)) {
      throw Error(ErrorCode::LevelExceeded, "progression is not on the level-" +
                                                std::to_string(level) + " lattice");
    }
  }
  std::sort(tails.begin(), tails.end(), [](const Progression& x, const Progression& y) {
    return x.start < y.start || (x.start == y.start && x.step < y.step);
  });
  for (std::size_t i = 0; i < tails.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < tails.size() && !redundant; ++j) {
      if (i == j) continue;
      // Drop a progression contained in another; of two equal ones keep the first.
      if (progression_within(tails[i], tails[j]) &&
          (!(tails[i] == tails[j]) || j < i)) {
        redundant = true;
      }
    }
    if (!redundant) tails_.push_back(tails[i]);
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  for (const auto& q : points) {
    const bool covered = std::any_of(tails_.begin(), tails_.end(),
                                     [&](const Progression& t) { return in_progression(t, q); });
    if (!covered) points_.push_back(q);
  }
}

SupportDescriptor SupportDescriptor::with_lattice_tail(std::int64_t level,
                                                       std::vector<ExpRational> points,
                                                       const ExpRational& start) {
  return SupportDescriptor(level, std::move(points), {{start, ExpRational(1, level)}});
}

bool SupportDescriptor::contains(const ExpRational& q) const {
  if (std::binary_search(points_.begin(), points_.end(), q)) return true;
  return std::any_of(tails_.begin(), tails_.end(),
                     [&](const Progression& t) { return in_progression(t, q); });
}

std::optional<ExpRational> SupportDescriptor::min_element() const {
  std::optional<ExpRational> out;
  if (!points_.empty()) out = points_.front();
  for (const auto& t : tails_) {
    if (!out || t.start < *out) out = t.start;
  }
  return out;
}

std::vector<ExpRational> SupportDescriptor::elements_below(const ExpRational& ceiling) const {
  std::set<ExpRational> out;
  for (const auto& q : points_) {
    if (q < ceiling) out.insert(q);
  }
  for (const auto& t : tails_) {
    for (ExpRational q = t.start; q < ceiling; q += t.step) out.insert(q);
  }
  return {out.begin(), out.end()};
}

std::ostream& operator<<(std::ostream& os, const SupportDescriptor& a) {
  os << "{";
  bool first = true;
  for (const auto& q : a.points()) {
    os << (first ? "" : ", ") << format_exp_rational(q);
    first = false;
  }
  for (const auto& t : a.tails()) {
    os << (first ? "" : ", ") << format_exp_rational(t.start) << " + "
       << format_exp_rational(t.step) << "N";
    first = false;
  }
  return os << "} @" << a.level();
}

SupportDescriptor support_union(const SupportDescriptor& a, const SupportDescriptor& b) {
  std::vector<ExpRational> points = a.points();
  points.insert(points.end(), b.points().begin(), b.points().end());
  std::vector<Progression> tails = a.tails();
  tails.insert(tails.end(), b.tails().begin(), b.tails().end());
  return SupportDescriptor(lcm64(a.level(), b.level()), std::move(points), std::move(tails));
}

SupportDescriptor support_shift(const SupportDescriptor& a, const ExpRational& g) {
  std::vector<ExpRational> points = a.points();
  for (auto& q : points) q += g;
  std::vector<Progression> tails = a.tails();
  for (auto& t : tails) t.start += g;
  return SupportDescriptor(lcm64(a.level(), g.denominator()), std::move(points), std::move(tails));
}

SupportDescriptor support_scale(const SupportDescriptor& a, const ExpRational& q) {
  if (q <= 0) throw Error(ErrorCode::NonPositiveScale, "scale must be positive");
  // (m/n)·(1/d)A = (1/(dn))·(mA)
  std::vector<ExpRational> points = a.points();
  for (auto& p : points) p *= q;
  std::vector<Progression> tails = a.tails();
  for (auto& t : tails) {
    t.start *= q;
    t.step *= q;
  }
  return SupportDescriptor(a.level() * q.denominator(), std::move(points), std::move(tails));
}

SupportDescriptor support_sums_below(const SupportDescriptor& a, const ExpRational& ceiling) {
  const auto least = a.min_element();
  if (least && *least < 0) {
    throw Error(ErrorCode::InvalidArgument, "sum sets are taken of non-negative supports");
  }
  const std::vector<ExpRational> base = a.elements_below(ceiling);
  std::set<ExpRational> sums(base.begin(), base.end());
  std::vector<ExpRational> frontier(base.begin(), base.end());
  while (!frontier.empty()) {
    std::vector<ExpRational> next;
    for (const auto& s : frontier) {
      for (const auto& e : base) {
        const ExpRational t = s + e;
        if (!(t < ceiling)) break;
        if (sums.insert(t).second) next.push_back(t);
      }
    }
    frontier = std::move(next);
  }
  return SupportDescriptor(a.level(), {sums.begin(), sums.end()});
}

std::string FamilyPolicy::name() const {
  switch (kind) {
    case Kind::PuiseuxCommonDenominator: return "puiseux";
    case Kind::LatticeContained: return "lattice";
    case Kind::CardinalityBounded:
      return bound ? "kappa:" + std::to_string(*bound) : std::string("countable");
  }
  return "puiseux";
}

FamilyPolicy parse_family_policy(const std::string& text) {
  if (text == "puiseux") return FamilyPolicy::puiseux();
  if (text == "countable") return FamilyPolicy::countable();
  if (text == "lattice") return FamilyPolicy::lattice();
  if (text.rfind("kappa:", 0) == 0) {
    const std::string digits = text.substr(6);
    if (!digits.empty() && std::all_of(digits.begin(), digits.end(), ::isdigit)) {
      return FamilyPolicy::cardinality(std::stoll(digits));
    }
  }
  throw Error(ErrorCode::InvalidArgument, "unknown family '" + text + "'");
}

bool family_member(const FamilyPolicy& family, const SupportDescriptor& a) {
  switch (family.kind) {
    case FamilyPolicy::Kind::PuiseuxCommonDenominator:
      // (1/level)·(well-ordered subset of Z): finite sets and increasing
      // progressions are well ordered.
      return true;
    case FamilyPolicy::Kind::LatticeContained:
      // Contained in the finitely generated group (1/level)Z.
      return true;
    case FamilyPolicy::Kind::CardinalityBounded:
      if (!family.bound) return true;
      return a.is_finite() && static_cast<std::int64_t>(cardinality(a)) < *family.bound;
  }
  return false;
}

std::string axiom_status_name(AxiomStatus s) {
  switch (s) {
    case AxiomStatus::Pass: return "pass";
    case AxiomStatus::Fail: return "fail";
    case AxiomStatus::Analytic: return "analytic";
  }
  return "fail";
}

bool FamilyReport::passed() const {
  return std::none_of(axioms.begin(), axioms.end(),
                      [](const AxiomResult& r) { return r.status == AxiomStatus::Fail; });
}

const AxiomResult* FamilyReport::find(const std::string& axiom) const {
  for (const auto& r : axioms) {
    if (r.axiom == axiom) return &r;
  }
  return nullptr;
}

FamilyReport family_check_axioms(const FamilyPolicy& family,
                                 const std::vector<SupportDescriptor>& samples,
                                 const ExpRational& ceiling) {
  FamilyReport report{family.name(), {}};
  auto check = [&](AxiomResult& r, const SupportDescriptor& candidate, const std::string& what) {
    ++r.checks;
    if (r.status == AxiomStatus::Pass && !family_member(family, candidate)) {
      r.status = AxiomStatus::Fail;
      r.witness = what + " = " + describe(candidate) + " is not a member";
    }
  };

  AxiomResult r1{"R1", AxiomStatus::Pass, samples.size(),
                 "finite sets and increasing progressions are well ordered"};
  AxiomResult r2{"R2", AxiomStatus::Analytic, 0, "analytic - not sampled"};

  AxiomResult r3{"R3", AxiomStatus::Pass, 0, ""};
  for (std::size_t i = 0; i < samples.size(); ++i) {
    for (std::size_t j = i + 1; j < samples.size(); ++j) {
      check(r3, support_union(samples[i], samples[j]),
            describe(samples[i]) + " u " + describe(samples[j]));
    }
  }

  AxiomResult r4{"R4", AxiomStatus::Pass, 0, ""};
  for (const auto& a : samples) {
    const std::string name = describe(a);
    check(r4, SupportDescriptor(a.level(), {}), "empty subset of " + name);
    check(r4, SupportDescriptor(a.level(), a.points()), "points of " + name);
    if (!a.points().empty()) {
      std::vector<ExpRational> rest(a.points().begin() + 1, a.points().end());
      check(r4, SupportDescriptor(a.level(), rest, a.tails()), "tail of points of " + name);
    }
    if (!a.tails().empty()) {
      std::vector<Progression> advanced = a.tails();
      for (auto& t : advanced) t.start += t.step;
      check(r4, SupportDescriptor(a.level(), a.points(), advanced), "advanced progressions of " + name);
    }
  }

  AxiomResult r5{"R5", AxiomStatus::Pass, 0, ""};
  for (const auto& a : samples) {
    for (const ExpRational& g : {ExpRational(1), ExpRational(-1), ExpRational(1, 2 * a.level())}) {
      check(r5, support_shift(a, g), describe(a) + " + " + format_exp_rational(g));
    }
  }

  AxiomResult r6{"R6", AxiomStatus::Pass, 0, ""};
  for (const auto& a : samples) {
    const auto least = a.min_element();
    if (least && *least < 0) continue;
    check(r6, support_sums_below(a, ceiling),
          "sums of " + describe(a) + " below " + format_exp_rational(ceiling));
  }
  if (r6.checks == 0) r6.witness = "no non-negative sample";

  report.axioms = {r1, r2, r3, r4, r5, r6};
  return report;
}

bool StabilityReport::passed() const {
  return std::all_of(cases.begin(), cases.end(), [](const StabilityCase& c) { return c.member; });
}

StabilityReport family_check_oaut_stability(const FamilyPolicy& family,
                                            const std::vector<ExpRational>& scales,
                                            const std::vector<SupportDescriptor>& samples) {
  StabilityReport report{family.name(), {}};
  for (const auto& q : scales) {
    for (std::size_t i = 0; i < samples.size(); ++i) {
      SupportDescriptor image = support_scale(samples[i], q);
      const bool member = family_member(family, image);
      report.cases.push_back({q, i, std::move(image), member});
    }
  }
  return report;
}

std::vector<SupportDescriptor> family_samples(const FamilyPolicy& family, std::uint64_t seed,
                                              std::size_t count) {
  Rng rng(seed);
  std::vector<SupportDescriptor> out;
  out.reserve(count);
  if (family.is_fixture()) {
    const std::int64_t size = std::max<std::int64_t>(*family.bound - 1, 0);
    const std::int64_t level = rng.uniform(1, 4);
    const std::int64_t offset = rng.uniform(-4, 4);
    for (std::size_t i = 0; i < count; ++i) {
      std::vector<ExpRational> points;
      for (std::int64_t j = 0; j < size; ++j) {
        points.emplace_back(offset + static_cast<std::int64_t>(i) * size + j, level);
      }
      out.emplace_back(level, std::move(points));
    }
    return out;
  }
  for (std::size_t i = 0; i < count; ++i) {
    const std::int64_t level = rng.uniform(1, 6);
    std::vector<ExpRational> points;
    const std::int64_t n = rng.uniform(0, 4);
    for (std::int64_t j = 0; j < n; ++j) points.emplace_back(rng.uniform(-2, 12), level);
    std::vector<Progression> tails;
    if (rng.coin()) {
      tails.push_back({ExpRational(rng.uniform(0, 12), level), ExpRational(rng.uniform(1, 3), level)});
    }
    out.emplace_back(level, std::move(points), std::move(tails));
  }
  return out;
}

}  // namespace hahn
