#include <gtest/gtest.h>

#include "hahn/exponents.hpp"
#include "hahn/random.hpp"
#include "hahn/verify.hpp"
#include "test_util.hpp"

using namespace hahn;

namespace {

ExpRational Q(std::int64_t p, std::int64_t q = 1) { return ExpRational(p, q); }

OrderAutMatrix uut(std::int64_t a) { return oaut_check({{1, a}, {0, 1}}, GroupKind::IntLattice); }

}  // namespace

TEST(Exponents, LexCompare) {
  EXPECT_EQ(exp_compare(Exponent{0, 0}, Exponent{0, 0}), Ordering::Equal);
  EXPECT_EQ(exp_compare(Exponent{0, 5}, Exponent{1, -100}), Ordering::Less);
  EXPECT_EQ(exp_compare(Exponent{Q(1, 2), 0}, Exponent{Q(1, 3), 7}), Ordering::Greater);
  EXPECT_HAHN_ERROR(exp_compare(Exponent{1}, Exponent{1, 0}), DimensionError);
}

TEST(Exponents, Arithmetic) {
  EXPECT_EQ(exp_add(Exponent{1, 2}, Exponent{3, -2}), (Exponent{4, 0}));
  EXPECT_EQ(exp_neg(Exponent{Q(1, 2), 0}), (Exponent{Q(-1, 2), 0}));
  EXPECT_EQ(exp_scale(Q(1, 2), Exponent{1, 0}, GroupDescriptor::rationals(2, 2)), (Exponent{Q(1, 2), 0}));
  EXPECT_HAHN_ERROR(exp_scale(Q(1, 2), Exponent{1, 0}, GroupDescriptor::rationals(2, 1)), LevelExceeded);
  EXPECT_HAHN_ERROR(exp_add(Exponent{1}, Exponent{1, 2}), DimensionError);
}

TEST(Exponents, LevelOfAnExponent) {
  EXPECT_EQ((Exponent{Q(1, 2), Q(2, 3)}).level(), 6);
  EXPECT_TRUE((Exponent{Q(1, 2)}).on_lattice(4));
  EXPECT_FALSE((Exponent{Q(1, 3)}).on_lattice(2));
}

TEST(Exponents, OautCheck) {
  EXPECT_TRUE(oaut_check({{1, 0}, {0, 1}}, GroupKind::IntLattice).is_identity());
  EXPECT_NO_THROW(uut(1));
  EXPECT_HAHN_ERROR(oaut_check({{2, 0}, {0, 1}}, GroupKind::IntLattice), BadDiagonal);
  EXPECT_HAHN_ERROR(oaut_check({{1, 0}, {1, 1}}, GroupKind::IntLattice), NotUpperTriangular);
  EXPECT_HAHN_ERROR(oaut_check({{1, Q(1, 2)}, {0, 1}}, GroupKind::IntLattice), NotIntegral);
  EXPECT_HAHN_ERROR(oaut_check({{Q(-1, 2)}}, GroupKind::RationalLattice), BadDiagonal);
  EXPECT_NO_THROW(oaut_check({{Q(1, 2), Q(7, 3)}, {0, 3}}, GroupKind::RationalLattice));
}

// Matrices act on row vectors: g ↦ g·M.
TEST(Exponents, OautApply) {
  const auto id = OrderAutMatrix::identity(GroupKind::IntLattice, 2);
  EXPECT_EQ(oaut_apply(id, Exponent{3, -1}), (Exponent{3, -1}));
  EXPECT_EQ(oaut_apply(uut(1), Exponent{1, 0}), (Exponent{1, 1}));
  EXPECT_EQ(oaut_apply(uut(1), Exponent{0, 1}), (Exponent{0, 1}));
  // A column action would send (1, -3) to (-2, -3) < 0.
  EXPECT_GT(oaut_apply(uut(1), Exponent{1, -3}), Exponent::zero(2));

  const auto half = oaut_check({{Q(1, 2)}}, GroupKind::RationalLattice);
  const Exponent image = oaut_apply(half, Exponent{1});
  EXPECT_EQ(image, (Exponent{Q(1, 2)}));
  EXPECT_EQ(image.level(), 2);
}

TEST(Exponents, ComposeAndInvert) {
  EXPECT_EQ(oaut_compose(uut(1), uut(2)), uut(3));
  EXPECT_EQ(oaut_invert(uut(1)), uut(-1));
  const auto id = OrderAutMatrix::identity(GroupKind::IntLattice, 2);
  EXPECT_EQ(oaut_invert(id), id);

  const auto m = oaut_check({{Q(1, 2), 1, Q(-1, 3)}, {0, 2, 5}, {0, 0, Q(3, 4)}}, GroupKind::RationalLattice);
  EXPECT_TRUE(oaut_compose(m, oaut_invert(m)).is_identity());
  EXPECT_TRUE(oaut_compose(oaut_invert(m), m).is_identity());
}

// Composition is "inner first": apply(compose(A, B), g) = apply(A, apply(B, g)).
TEST(Exponents, CompositionOrderOnNonCommutingPair) {
  const auto a = oaut_check({{2, 1}, {0, 1}}, GroupKind::RationalLattice);
  const auto b = oaut_check({{1, 0}, {0, 3}}, GroupKind::RationalLattice);
  ASSERT_NE(oaut_compose(a, b), oaut_compose(b, a));
  const Exponent g{1, 1};
  EXPECT_EQ(oaut_apply(oaut_compose(a, b), g), oaut_apply(a, oaut_apply(b, g)));
  EXPECT_EQ(oaut_apply(oaut_compose(b, a), g), oaut_apply(b, oaut_apply(a, g)));
}

TEST(Exponents, SeededOrderPreservation) {
  Rng rng(11);
  for (int k = 0; k < 200; ++k) {
    const GroupKind kind = k % 2 ? GroupKind::IntLattice : GroupKind::RationalLattice;
    const auto group = k % 2 ? GroupDescriptor::integers(2) : GroupDescriptor::rationals(2, 6);
    const auto m = random_oaut(rng, kind, 2);
    const Exponent g = random_positive_exponent(rng, group);
    ASSERT_GT(g, Exponent::zero(2));
    EXPECT_GT(oaut_apply(m, g), Exponent::zero(2)) << m << " " << g;
  }
}

TEST(Exponents, Reaches) {
  EXPECT_TRUE(reaches(Exponent{1, -5}, Exponent{8, 0}));
  EXPECT_FALSE(reaches(Exponent{0, 1}, Exponent{8, 0}));
}
