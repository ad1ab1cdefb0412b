#include <gtest/gtest.h>

#include "hahn/autalg.hpp"
#include "hahn/error.hpp"
#include "hahn/text.hpp"
#include "hahn/verify.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace hahn;

namespace {

const GroupDescriptor kZ = GroupDescriptor::integers(1);
const FieldDescriptor kQ = FieldDescriptor::rationals();

Series S(const char* text, const GroupDescriptor& g = kZ, const FieldDescriptor& f = kQ,
         Bound cutoff = Bound::infinity()) {
  return parse_series(text, g, f, cutoff);
}

AutNormalForm sigma_u(const Series& u1) {
  AutNormalForm nf = AutNormalForm::identity(kZ, kQ);
  nf.u.values = {u1};
  return nf;
}

}  // namespace

TEST(Autalg, ApplyOneUnitOnMonomial) {
  const auto nf = sigma_u(S("1 + t + O(t^8)"));
  EXPECT_EQ(format_series(apply_aut(nf, S("t"))), "t + t^2 + O(t^9)");
  EXPECT_EQ(format_series(apply_aut(nf, S("t^-1 + O(t^2)"))), "t^-1 - 1 + t + O(t^2)");
}

TEST(Autalg, InvertOneUnit) {
  const auto nf = sigma_u(S("1 + t + O(t^4)"));
  const auto inv = invert_nf(nf);
  EXPECT_EQ(format_series(inv.u.values[0]), "1 - t + 2*t^2 - 5*t^3 + O(t^4)");
}

TEST(Autalg, DecomposeSeededZ2) {
  const auto z2 = GroupDescriptor::integers(2);
  const auto f = FieldDescriptor::quadratic(2);
  const Bound cut(Exponent{8, 0});
  AutNormalForm nf = AutNormalForm::identity(z2, f);
  nf.rho = FieldAut::Conjugation;
  nf.tau = oaut_check({{1, -2}, {0, 1}}, GroupKind::IntLattice);
  nf.x.values = {FieldElement(1, 1, 2), FieldElement(Rational(1, 3))};
  nf.u.values = {S("1 + 2*t^[1,-1] + O(t^[8,0])", z2, f), S("1 - (1+r)*t^[1,3] + t^[2,0] + O(t^[8,0])", z2, f)};
  const auto back = decompose(as_black_box(nf), cut);
  EXPECT_TRUE(equal_to_cutoff(back, nf)) << back;
  const auto inv = invert_nf(nf);
  const auto id = compose_nf(nf, inv);
  EXPECT_TRUE(id.is_identity()) << id;
}

namespace {

const FieldDescriptor kQ2 = FieldDescriptor::quadratic(2);

AutNormalForm g_exp(std::int64_t x1) {
  AutNormalForm nf = AutNormalForm::identity(kZ, kQ);
  nf.x.values = {FieldElement(x1)};
  return nf;
}

// The automorphism of Q((t)) with σ(t) = image.
BlackBoxAut substitution(const char* image) {
  return substitution_black_box(kZ, kQ, FieldAut::Identity, {S(image)});
}

}  // namespace

TEST(Autalg, HomEvaluation) {
  FieldUnitHom x = FieldUnitHom::trivial(kZ);
  x.values = {FieldElement(2)};
  EXPECT_EQ(hom_eval(x, Exponent{3}), FieldElement(8));
  EXPECT_EQ(hom_eval(x, Exponent{-1}), FieldElement(Rational(1, 2)));

  const auto q2 = GroupDescriptor::rationals(1, 2);
  OneUnitHom u = OneUnitHom::trivial(q2, kQ);
  u.values = {S("1 + t + O(t^4)", q2)};
  EXPECT_EQ(format_series(hom_eval(u, Exponent{1})), "1 + 2*t + t^2 + O(t^4)");
  EXPECT_HAHN_ERROR(hom_eval(u, Exponent{ExpRational(1, 3)}), LevelExceeded);
}

TEST(Autalg, GExponentiation) {
  FieldUnitHom x = FieldUnitHom::trivial(kZ);
  x.values = {FieldElement(2)};
  EXPECT_EQ(format_series(g_exponentiation(x, S("1 + t + t^2"))), "1 + 2*t + 4*t^2");
  EXPECT_EQ(format_series(g_exponentiation(FieldUnitHom::trivial(kZ), S("3 + t^-2"))), "t^-2 + 3");
  x.values = {FieldElement(-1)};
  EXPECT_EQ(format_series(g_exponentiation(x, S("t - t^3"))), "-t + t^3");
}

TEST(Autalg, CanonicalLift) {
  const auto id = canonical_lift(FieldAut::Identity, OrderAutMatrix::identity(GroupKind::IntLattice, 1), kZ, kQ);
  EXPECT_TRUE(id.is_identity());

  const auto conj = canonical_lift(FieldAut::Conjugation, OrderAutMatrix::identity(GroupKind::IntLattice, 1), kZ, kQ2);
  EXPECT_EQ(format_series(apply_aut(conj, S("(1+1r)*t", kZ, kQ2))), "(1-1r)*t");

  const auto z2 = GroupDescriptor::integers(2);
  const auto shear = canonical_lift(FieldAut::Identity, oaut_check({{1, 1}, {0, 1}}, GroupKind::IntLattice), z2, kQ);
  EXPECT_EQ(format_series(apply_aut(shear, S("t^[1,0]", z2))), "t^[1,1]");
  EXPECT_EQ(format_series(apply_aut(shear, S("t^[0,1]", z2))), "t^[0,1]");
}

TEST(Autalg, ApplyMatchesPowerOracle) {
  const auto nf = sigma_u(S("1 + t + O(t^8)"));
  const Series oracle = s_pow_int(S("t + t^2 + O(t^4)"), -1);
  EXPECT_TRUE(s_equal_to_cutoff(apply_aut(nf, S("t^-1 + O(t^2)")), oracle));
  const Series a = S("2 - t^3 + O(t^5)");
  EXPECT_EQ(format_series(apply_aut(AutNormalForm::identity(kZ, kQ), a)), format_series(a));
}

TEST(Autalg, Extraction) {
  const Bound cut(Exponent{6});
  const auto m = oaut_check({{1, -3}, {0, 1}}, GroupKind::IntLattice);
  const auto z2 = GroupDescriptor::integers(2);
  const auto [rho, tau] = extract_phi(as_black_box(canonical_lift(FieldAut::Conjugation, m, z2, kQ2)),
                                      Bound(Exponent{6, 0}));
  EXPECT_EQ(rho, FieldAut::Conjugation);
  EXPECT_EQ(tau, m);

  const auto phi_id = extract_phi(as_black_box(AutNormalForm::identity(kZ, kQ)), cut);
  EXPECT_EQ(phi_id.first, FieldAut::Identity);
  EXPECT_TRUE(phi_id.second.is_identity());
  const auto phi_gexp = extract_phi(as_black_box(g_exp(5)), cut);
  EXPECT_EQ(phi_gexp.first, FieldAut::Identity);
  EXPECT_TRUE(phi_gexp.second.is_identity());

  EXPECT_EQ(extract_x(as_black_box(g_exp(2)), cut).values[0], FieldElement(2));
  EXPECT_TRUE(extract_x(as_black_box(AutNormalForm::identity(kZ, kQ)), cut).is_trivial());
  const auto x1 = extract_x(substitution("t + t^2"), cut);
  EXPECT_TRUE(x1.is_trivial());
  EXPECT_EQ(format_series(extract_u(substitution("t + t^2"), x1, cut).values[0]), "1 + t + O(t^6)");
  EXPECT_TRUE(extract_u(as_black_box(g_exp(3)), extract_x(as_black_box(g_exp(3)), cut), cut).is_trivial());
}

TEST(Autalg, DecomposeSubstitution) {
  const auto nf = decompose(substitution("2*t + 2*t^2"), Bound(Exponent{6}));
  EXPECT_EQ(nf.x.values[0], FieldElement(2));
  EXPECT_EQ(format_series(nf.u.values[0]), "1 + t + O(t^6)");
  EXPECT_TRUE(decompose(as_black_box(AutNormalForm::identity(kZ, kQ)), Bound(Exponent{6})).is_identity());
}

TEST(Autalg, DecomposeRejectsNonValuationPreservingMaps) {
  EXPECT_HAHN_ERROR(decompose(substitution("t^2"), Bound(Exponent{6})), NotValuationPreserving);
  EXPECT_HAHN_ERROR(decompose(substitution("1 + t"), Bound(Exponent{6})), NotValuationPreserving);
  EXPECT_HAHN_ERROR(decompose(substitution("t^-1"), Bound(Exponent{6})), NotValuationPreserving);
}

TEST(Autalg, TwistedProduct) {
  const auto u = sigma_u(S("1 + t + O(t^4)"));
  const auto id = AutNormalForm::identity(kZ, kQ);
  EXPECT_TRUE(equal_to_cutoff(twisted_product(id, u.u), u.u));
  EXPECT_TRUE(equal_to_cutoff(twisted_product(u, id.u), u.u));

  // σ_{u1}∘σ_{u2}(t) = f(f(t)) for f = t + t²; the u-part is that image over t.
  const oracle::Poly f = {0, 1, 1};
  oracle::Poly ff = oracle::substitute(f, f, 5);
  ff.erase(ff.begin());
  const auto product = twisted_product(u, u.u);
  EXPECT_EQ(format_series(product.values[0]), format_series(oracle::to_series(ff)));
  EXPECT_EQ(format_series(product.values[0]), "1 + 2*t + 2*t^2 + t^3 + O(t^4)");
}

TEST(Autalg, CompositionExamples) {
  const auto sigma = sigma_u(S("1 - 2*t + t^3 + O(t^6)"));
  EXPECT_TRUE(equal_to_cutoff(compose_nf(sigma, AutNormalForm::identity(kZ, kQ)), sigma));

  const auto z2 = GroupDescriptor::integers(2);
  const auto m1 = oaut_check({{1, 2}, {0, 1}}, GroupKind::IntLattice);
  const auto m2 = oaut_check({{1, -5}, {0, 1}}, GroupKind::IntLattice);
  const auto lift = compose_nf(canonical_lift(FieldAut::Conjugation, m1, z2, kQ2),
                               canonical_lift(FieldAut::Conjugation, m2, z2, kQ2));
  EXPECT_EQ(lift.rho, FieldAut::Identity);
  EXPECT_EQ(lift.tau, oaut_compose(m1, m2));
  EXPECT_TRUE(lift.x.is_trivial());
  EXPECT_TRUE(lift.u.is_trivial());

  const auto prod = compose_nf(g_exp(2), g_exp(-3));
  EXPECT_EQ(prod.x.values[0], FieldElement(-6));
  EXPECT_TRUE(prod.u.is_trivial());
}

TEST(Autalg, InversionExamples) {
  EXPECT_TRUE(invert_nf(AutNormalForm::identity(kZ, kQ)).is_identity());
  EXPECT_EQ(invert_nf(g_exp(2)).x.values[0], FieldElement(Rational(1, 2)));

  // The compositional inverse of t + t² is Σ (-1)^k C_k t^{k+1}.
  const auto inv = invert_nf(sigma_u(S("1 + t + O(t^4)")));
  oracle::Poly catalan;
  for (unsigned k = 0; k < 4; ++k) catalan.push_back(mpq_class(oracle::catalan(k) * (k % 2 ? -1 : 1)));
  EXPECT_EQ(format_series(inv.u.values[0]), format_series(oracle::to_series(catalan)));
  EXPECT_TRUE(compose_nf(sigma_u(S("1 + t + O(t^4)")), inv).is_identity());
}

TEST(Autalg, InternalPartsOfSeededAutomorphisms) {
  Rng rng(3);
  const auto z2 = GroupDescriptor::integers(2);
  const Bound cut(Exponent{6, 0});
  for (int k = 0; k < 10; ++k) {
    const auto nf = random_nf(rng, z2, kQ2, cut, {true, false, 2});
    const Series a = random_nonzero_series(rng, z2, kQ2, cut, {3, 0, 3, 2});
    EXPECT_EQ(s_constant_term(apply_aut(nf, a)), s_constant_term(a));
  }
}
