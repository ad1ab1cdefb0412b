#include <gtest/gtest.h>

#include "hahn/text.hpp"
#include "hahn/verify.hpp"
#include "test_util.hpp"

using namespace hahn;

namespace {

const GroupDescriptor kZ = GroupDescriptor::integers(1);
const FieldDescriptor kQ = FieldDescriptor::rationals();
const FieldDescriptor kQ2 = FieldDescriptor::quadratic(2);

std::size_t syntax_offset(const std::string& text) {
  try {
    parse_series(text, kZ, kQ, Bound());
  } catch (const SyntaxError& e) {
    return e.offset();
  }
  return std::string::npos;
}

}  // namespace

TEST(Text, ParseSimpleSeries) {
  const Series a = parse_series("1 + 2*t^1 - t^3", kZ, kQ, Bound());
  ASSERT_EQ(a.size(), 3u);
  EXPECT_EQ(a.coefficient(Exponent{1}), FieldElement(2));
  EXPECT_EQ(a.coefficient(Exponent{3}), FieldElement(-1));
  EXPECT_FALSE(a.cutoff().is_finite());
  EXPECT_EQ(format_series(a), "1 + 2*t - t^3");
}

TEST(Text, RationalExponents) {
  const Series m = parse_series("t^(1/2)", GroupDescriptor::rationals(1, 2), kQ, Bound());
  ASSERT_EQ(m.size(), 1u);
  EXPECT_EQ(m.terms()[0].exp, (Exponent{ExpRational(1, 2)}));
  EXPECT_HAHN_ERROR(parse_series("t^(1/3)", GroupDescriptor::integers(1), kQ, Bound()), LevelExceeded);
  EXPECT_EQ(format_series(parse_series("1 + t^(1/2) - t^(3/2) + O(t^2)", GroupDescriptor::rationals(1, 2), kQ, Bound())),
            "1 + t^(1/2) - t^(3/2) + O(t^2)");
}

TEST(Text, QuadraticCoefficientsAndVectorExponents) {
  const auto z2 = GroupDescriptor::integers(2);
  const Series a = parse_series("1 + 2*t^[0,1] - (1+1r)*t^[1,0]", z2, kQ2, Bound(Exponent{3, 0}));
  EXPECT_EQ(a.coefficient(Exponent{1, 0}), FieldElement(Rational(-1), Rational(-1), 2));
  EXPECT_EQ(format_series(a), "1 + 2*t^[0,1] + (-1-1r)*t^[1,0] + O(t^[3,0])");
  EXPECT_EQ(parse_field_element("(-1/2r)", kQ2), FieldElement(Rational(0), Rational(-1, 2), 2));
  EXPECT_EQ(parse_field_element("3/2", kQ2), FieldElement(Rational(3, 2)));
}

TEST(Text, DefaultCutoffAppliesWithoutOTerm) {
  const Series a = parse_series("1 + t + t^9", kZ, kQ, Bound(Exponent{8}));
  EXPECT_EQ(format_series(a), "1 + t + O(t^8)");
}

TEST(Text, SyntaxErrorsCarryOffsets) {
  EXPECT_EQ(syntax_offset("t^^2"), 2u);
  EXPECT_EQ(syntax_offset("1 + + t"), 4u);
  EXPECT_NE(syntax_offset("1 + t^"), std::string::npos);
  EXPECT_HAHN_ERROR(parse_series("1 + r*t", kZ, kQ, Bound()), SyntaxError);
}

TEST(Text, ExponentLiterals) {
  EXPECT_EQ(parse_exponent("3/2", 1), (Exponent{ExpRational(3, 2)}));
  EXPECT_EQ(parse_exponent("[1, -2/3]", 2), (Exponent{1, ExpRational(-2, 3)}));
  EXPECT_HAHN_ERROR(parse_exponent("[1, 2]", 3), DimensionError);
  EXPECT_EQ(format_exponent(Exponent{1, ExpRational(-2, 3)}), "[1, -2/3]");
}

TEST(Text, SeededRoundTrips) {
  Rng rng(99);
  const std::vector<GroupDescriptor> groups = {kZ, GroupDescriptor::integers(2), GroupDescriptor::rationals(1, 6)};
  for (int k = 0; k < 200; ++k) {
    const auto& g = groups[static_cast<std::size_t>(k) % groups.size()];
    const auto& f = k % 2 ? kQ : kQ2;
    const Bound cut = k % 3 ? Bound(Exponent::unit(g.dimension, 0, 7)) : Bound();
    const Series a = random_series(rng, g, f, cut);
    const std::string text = format_series(a);
    const Series back = parse_series(text, g, f, Bound());
    EXPECT_EQ(format_series(back), text);
    EXPECT_EQ(back.cutoff(), a.cutoff());
    EXPECT_TRUE(s_equal_to_cutoff(back, a)) << text;
  }
}
