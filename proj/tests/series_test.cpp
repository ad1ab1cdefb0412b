#include <gtest/gtest.h>

#include "hahn/series.hpp"
#include "hahn/text.hpp"
#include "hahn/verify.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace hahn;

namespace {

const GroupDescriptor kZ = GroupDescriptor::integers(1);
const GroupDescriptor kZ2 = GroupDescriptor::integers(2);
const FieldDescriptor kQ = FieldDescriptor::rationals();

Series S(const char* text, const GroupDescriptor& g = kZ, Bound cutoff = Bound::infinity()) {
  return parse_series(text, g, kQ, cutoff);
}

Bound cut(std::int64_t n) { return Bound(Exponent{n}); }

std::string F(const Series& a) { return format_series(a); }

}  // namespace

TEST(Series, Canonicalization) {
  const Series a = Series::from_terms(
      kZ, kQ, {{Exponent{3}, FieldElement(1)}, {Exponent{1}, FieldElement(2)}, {Exponent{3}, FieldElement(-1)},
               {Exponent{9}, FieldElement(5)}},
      cut(5));
  EXPECT_EQ(F(a), "2*t + O(t^5)");
  EXPECT_EQ(a.size(), 1u);
}

TEST(Series, RingOperations) {
  EXPECT_EQ(F(s_mul(S("1 + t"), S("1 - t"))), "1 - t^2");
  EXPECT_EQ(s_mul(S("t^2"), S("t^3")).valuation(), (Exponent{5}));
  const auto q2 = GroupDescriptor::rationals(1, 2);
  // (1 + s)² = 1 + 2s + s² with s = t^(1/2)
  EXPECT_EQ(F(s_pow_int(S("1 + t^(1/2)", q2), 2)), F(oracle::to_series({1, 2, 1}, 0, 2, true)));
  EXPECT_EQ(F(s_pow_int(S("1 + t^(1/2)", q2), 2)), "1 + 2*t^(1/2) + t");
}

TEST(Series, MultiplicationCutoff) {
  // min(v(a) + cut(b), v(b) + cut(a))
  const Series p = s_mul(S("t + O(t^4)"), S("t^-1 + 1 + O(t^2)"));
  EXPECT_EQ(p.cutoff(), cut(3));
  EXPECT_EQ(F(p), "1 + t + O(t^3)");
}

TEST(Series, InvertUnit) {
  EXPECT_EQ(F(s_invert_unit(S("1 - t + O(t^4)"))), "1 + t + t^2 + t^3 + O(t^4)");
  EXPECT_EQ(F(s_invert_unit(S("1"))), "1");
  EXPECT_HAHN_ERROR(s_invert_unit(S("t + O(t^4)")), NotAUnit);
  EXPECT_HAHN_ERROR(s_invert_unit(S("1 - t")), UnboundedPrecision);
  // Over Z² the increments must reach the cutoff.
  EXPECT_HAHN_ERROR(s_invert_unit(S("1 + t^[0,1] + O(t^[3,0])", kZ2)), UnreachableCutoff);
}

TEST(Series, InvertUnitMatchesReciprocalOracle) {
  const oracle::Poly a = {3, -1, 4, 0, mpq_class(1, 5), 9, -2, 6};
  const Series inv = s_invert_unit(oracle::to_series(a));
  EXPECT_EQ(F(inv), F(oracle::to_series(oracle::reciprocal(a, a.size()))));
}

TEST(Series, IntegerPowers) {
  EXPECT_EQ(F(s_pow_int(S("1 + t"), 2)), "1 + 2*t + t^2");
  EXPECT_EQ(F(s_pow_int(S("t"), -1)), "t^-1");
  // (t(1+t))^{-1} = t^{-1}(1 - t + t² - ...) truncated below 2
  const Series p = s_pow_int(S("t + t^2 + O(t^4)"), -1);
  EXPECT_EQ(F(p), "t^-1 - 1 + t + O(t^2)");
  const Series oracle_series =
      s_shift(oracle::to_series(oracle::reciprocal({1, 1}, 3)), Exponent{-1});
  EXPECT_EQ(F(p), F(oracle_series));
  EXPECT_HAHN_ERROR(s_pow_int(Series::zero(kZ, kQ), -1), ZeroToNegativePower);
}

TEST(Series, ValuationLeadingConstant) {
  EXPECT_EQ(s_valuation(S("t^2 + t^3")), (Exponent{2}));
  EXPECT_EQ(s_leading(S("3*t^2 + t^3")), FieldElement(3));
  EXPECT_EQ(s_constant_term(S("t")), FieldElement(0));
  EXPECT_FALSE(s_valuation(Series::zero(kZ, kQ)).has_value());
  EXPECT_HAHN_ERROR(s_leading(Series::zero(kZ, kQ)), ZeroSeries);
}

TEST(Series, RingPredicates) {
  EXPECT_TRUE(S("2 + t").is_unit());
  EXPECT_FALSE(S("2 + t").is_one_unit());
  EXPECT_TRUE(S("1 + t").is_one_unit());
  EXPECT_TRUE(S("t").in_maximal_ideal());
  EXPECT_FALSE(S("t^-1 + 1").in_valuation_ring());
}

TEST(Series, SquareRootMatchesBinomialSeries) {
  const Series root = s_nth_root_one_unit(S("1 + t + O(t^4)"), 2);
  EXPECT_EQ(F(root), "1 + 1/2*t - 1/8*t^2 + 1/16*t^3 + O(t^4)");
  EXPECT_EQ(F(root), F(oracle::to_series(oracle::binomial_series(mpq_class(1, 2), 4))));
  EXPECT_TRUE(s_equal_to_cutoff(s_pow_int(root, 2), S("1 + t + O(t^4)")));
}

TEST(Series, NthRootsMatchBinomialSeries) {
  const oracle::Poly u = {1, 2, -1, 3, 0, 0, 0, 0, 0, 0};
  for (long n : {2L, 3L, 5L, 7L}) {
    const Series root = s_nth_root_one_unit(oracle::to_series(u), n);
    // (1 + w)^{1/n} = Σ C(1/n, k) w^k with w = 2t - t² + 3t³
    oracle::Poly w = {0, 2, -1, 3}, acc(10, 0), wk = {1};
    for (std::size_t k = 0; k < 10; ++k) {
      const oracle::Poly term = oracle::mul({oracle::binomial(mpq_class(1, n), k)}, wk, 10);
      for (std::size_t i = 0; i < 10; ++i) acc[i] += term[i];
      wk = oracle::mul(wk, w, 10);
    }
    EXPECT_EQ(F(root), F(oracle::to_series(acc))) << "n = " << n;
  }
}

TEST(Series, RootErrorsAndTrivialRoots) {
  EXPECT_EQ(F(s_nth_root_one_unit(S("1 + O(t^5)"), 3)), "1 + O(t^5)");
  EXPECT_HAHN_ERROR(s_nth_root_one_unit(S("2 + t + O(t^5)"), 2), NotOneUnit);
  for (std::int64_t n : {1, 2, 5}) {
    const Series r = s_root_of_unity_solve(n, kZ, kQ, cut(12));
    EXPECT_EQ(F(r), "1 + O(t^12)");
  }
}

TEST(Series, SummableFamilies) {
  EXPECT_EQ(F(s_sum_family({{S("t"), S("t^2"), S("t^3")}})), "t + t^2 + t^3");

  const SummableFamily cancel{{S("1 + t"), S("-1")}};
  const Series c = s_sum_family(cancel);
  EXPECT_EQ(F(c), "t");
  EXPECT_GT(*c.valuation(), *cancel.min_valuation());

  const SummableFamily unique{{S("2*t"), S("t^2")}};
  const Series u = s_sum_family(unique);
  EXPECT_EQ(F(u), "2*t + t^2");
  EXPECT_EQ(u.valuation(), unique.min_valuation());
  EXPECT_EQ(s_leading(u), FieldElement(2));

  // The sum is only known below the least member cutoff.
  EXPECT_EQ(F(s_sum_family({{S("1 + O(t^3)"), S("t + t^4")}})), "1 + t + O(t^3)");
  EXPECT_HAHN_ERROR(s_sum_family({{S("1"), Series::zero(kZ2, kQ)}}), MixedDescriptors);
}

TEST(Series, EqualToCutoff) {
  const Series a = S("1 + t + O(t^5)");
  EXPECT_TRUE(s_equal_to_cutoff(a, a));
  EXPECT_TRUE(s_equal_to_cutoff(S("1 + t + t^5", kZ, cut(5)), a));
  EXPECT_FALSE(s_equal_to_cutoff(S("1 + O(t^2)"), S("1 + t + O(t^2)")));
}

TEST(Series, SeededRingLaws) {
  Rng rng(23);
  const Bound c(Exponent{6, 0});
  for (int k = 0; k < 50; ++k) {
    const Series a = random_series(rng, kZ2, kQ, c, {4, 0, 4, 3});
    const Series b = random_series(rng, kZ2, kQ, c, {4, 0, 4, 3});
    EXPECT_TRUE(s_equal_to_cutoff(s_mul(a, b), s_mul(b, a)));
    EXPECT_TRUE(s_equal_to_cutoff(s_sub(s_add(a, b), b), a));
  }
}
