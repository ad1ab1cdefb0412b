#include <gtest/gtest.h>

#include <sstream>

#include "hahn/puiseux.hpp"
#include "hahn/text.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace hahn;

namespace {

const GroupDescriptor kZ = GroupDescriptor::integers(1);
const FieldDescriptor kQ = FieldDescriptor::rationals();

ExpRational Q(std::int64_t p, std::int64_t q = 1) { return ExpRational(p, q); }

PuiseuxSeries P(std::int64_t level, const char* text) {
  return lattice_to_puiseux(parse_series(text, GroupDescriptor::rationals(1, level), kQ, Bound()));
}

std::string str(const PuiseuxSeries& p) {
  std::ostringstream os;
  os << p;
  return os.str();
}

}  // namespace

TEST(Puiseux, BodyAndLatticeViews) {
  const PuiseuxSeries p(2, parse_series("1 + t + t^3", kZ, kQ, Bound()));
  EXPECT_EQ(str(p), "1 + t^(1/2) + t^(3/2)");
  EXPECT_EQ(lattice_to_puiseux(puiseux_to_lattice(p)), p);
  EXPECT_EQ(P(2, "1 + t^(1/2) + t^(3/2)"), p);
}

TEST(Puiseux, RamificationIsMinimal) {
  const PuiseuxSeries p(6, parse_series("1 + t^3 + t^6", kZ, kQ, Bound()));
  EXPECT_EQ(p.ramification(), 2);
  EXPECT_EQ(format_series(p.body()), "1 + t + t^2");
  EXPECT_EQ(PuiseuxSeries(4, parse_series("t^8", kZ, kQ, Bound())).ramification(), 1);
  EXPECT_HAHN_ERROR(PuiseuxSeries(0, parse_series("1", kZ, kQ, Bound())), InvalidArgument);
}

TEST(Puiseux, Arithmetic) {
  const auto prod = puiseux_arith(PuiseuxOp::Mul, P(2, "t^(1/2)"), P(3, "t^(1/3)"));
  EXPECT_EQ(prod.ramification(), 6);
  EXPECT_EQ(str(prod), "t^(5/6)");

  const auto diff = puiseux_arith(PuiseuxOp::Mul, P(2, "1 + t^(1/2)"), P(2, "1 - t^(1/2)"));
  EXPECT_EQ(diff.ramification(), 1);
  EXPECT_EQ(str(diff), "1 - t");

  EXPECT_EQ(str(puiseux_arith(PuiseuxOp::Add, P(2, "t^(1/2)"), P(3, "-t^(1/3)"))), "-t^(1/3) + t^(1/2)");
  EXPECT_EQ(str(puiseux_arith(PuiseuxOp::Neg, P(2, "t^(1/2)"))), "-t^(1/2)");
  EXPECT_HAHN_ERROR(puiseux_arith(PuiseuxOp::Sub, P(2, "t^(1/2)")), InvalidArgument);
}

TEST(Puiseux, InverseMatchesGeometricSeries) {
  const auto inv = puiseux_arith(PuiseuxOp::Inv, P(2, "1 - t^(1/2) + O(t^2)"));
  // 1/(1 - s) = Σ s^k with s = t^{1/2}.
  const oracle::Poly geometric(4, 1);
  EXPECT_EQ(format_series(inv.body()), format_series(oracle::to_series(geometric)));
  EXPECT_EQ(str(inv), "1 + t^(1/2) + t + t^(3/2) + O(t^2)");
}

TEST(Puiseux, ExponentScaling) {
  const auto p = P(2, "t^(1/2) + t^(3/2)");
  EXPECT_EQ(str(puiseux_oaut_apply(Q(2), p)), "t + t^3");
  EXPECT_EQ(str(puiseux_oaut_apply(Q(1, 3), p)), "t^(1/6) + t^(1/2)");
  EXPECT_HAHN_ERROR(puiseux_oaut_apply(Q(-1), p), NonPositiveScale);
}

TEST(Puiseux, RationalPowersMatchBinomialSeries) {
  const Series u = parse_series("1 + t + O(t^6)", kZ, kQ, Bound());
  EXPECT_EQ(format_series(puiseux_unit_pow_q(u, 1, 2)),
            format_series(oracle::to_series(oracle::binomial_series(mpq_class(1, 2), 6))));
  EXPECT_EQ(format_series(puiseux_unit_pow_q(u, Q(-2, 3))),
            format_series(oracle::to_series(oracle::binomial_series(mpq_class(-2, 3), 6))));
  EXPECT_EQ(format_series(puiseux_unit_pow_q(parse_series("1 + t + O(t^3)", kZ, kQ, Bound()), 1, 2)),
            "1 + 1/2*t - 1/8*t^2 + O(t^3)");
  EXPECT_HAHN_ERROR(puiseux_unit_pow_q(parse_series("2 + t", kZ, kQ, Bound()), 1, 2), NotOneUnit);
}

TEST(Puiseux, ApplyAutomorphism) {
  const GroupDescriptor q1 = GroupDescriptor::rationals(1, 1);
  AutNormalForm sigma = AutNormalForm::identity(q1, kQ);
  sigma.u.values = {parse_series("1 + t + O(t^2)", q1, kQ, Bound())};
  // σ(t^{1/2}) = t^{1/2}·(1 + t)^{1/2}
  EXPECT_EQ(str(puiseux_apply_aut(sigma, P(2, "t^(1/2)"))), "t^(1/2) + 1/2*t^(3/2) + O(t^(5/2))");

  AutNormalForm g = AutNormalForm::identity(q1, kQ);
  g.x.values = {FieldElement(4)};
  EXPECT_EQ(str(puiseux_apply_aut(g, P(1, "t + t^2"))), "4*t + 16*t^2");
  EXPECT_HAHN_ERROR(puiseux_apply_aut(g, P(2, "t^(1/2)")), LevelExceeded);
  EXPECT_HAHN_ERROR(puiseux_apply_aut(AutNormalForm::identity(kZ, kQ), P(1, "t")), DescriptorMismatch);
  EXPECT_EQ(str(puiseux_apply_aut(AutNormalForm::identity(q1, kQ), P(3, "t^(1/3)"))), "t^(1/3)");
}
