#include <gtest/gtest.h>

#include "oracles.hpp"
#include "pi0/pi0.hpp"

using namespace pi0;

namespace {

Mat<Fp> upper_unipotent(std::uint64_t ell, std::int64_t t) {
  PrimeField F(ell);
  return Mat<Fp>(2, {F(1), F(t), F(0), F(1)});
}

std::vector<CharPoint<Fp>> charpoints_of_group(const GroupSpec& g) {
  std::vector<CharPoint<Fp>> out;
  g.for_each([&](const Mat<Fp>& m) { out.push_back(chi(m)); });
  return out;
}

}  // namespace

TEST(FiniteSubgroupTest, CyclicUnipotentGroup) {
  FiniteSubgroup G(5, 2, {upper_unipotent(5, 1)});
  const auto* els = G.elements(100);
  ASSERT_NE(els, nullptr);
  EXPECT_EQ(els->size(), 5u);
  auto unip = find_ell_elements(G);
  EXPECT_EQ(unip.size(), 4u);  // every nonidentity power
}

TEST(FiniteSubgroupTest, BudgetFailureIsRetryable) {
  FiniteSubgroup G(5, 2, sl2_generators(5));
  EXPECT_EQ(G.elements(10), nullptr);
  const auto* els = G.elements(1000);  // |SL_2(F_5)| = 120
  ASSERT_NE(els, nullptr);
  EXPECT_EQ(els->size(), 120u);
}

TEST(FiniteSubgroupTest, RejectsBadGenerators) {
  PrimeField F(5);
  Mat<Fp> singular(2, {F(1), F(2), F(2), F(4)});
  EXPECT_THROW(FiniteSubgroup(5, 2, {singular}), std::invalid_argument);
  EXPECT_THROW(FiniteSubgroup(6, 2, {upper_unipotent(5, 1)}), std::invalid_argument);
  Mat<Fp> wrong_mod(2, {Fp(7, 1), Fp(7, 0), Fp(7, 0), Fp(7, 1)});
  EXPECT_THROW(FiniteSubgroup(5, 2, {wrong_mod}), std::invalid_argument);
}

TEST(NilpotentLogTest, LogOfElementaryUnipotent) {
  Mat<Fp> x = upper_unipotent(7, 1);
  Mat<Fp> n = nilpotent_log(x);
  EXPECT_EQ(n.at(0, 0), Fp(7, 0));
  EXPECT_EQ(n.at(0, 1), Fp(7, 1));
  EXPECT_EQ(n.at(1, 0), Fp(7, 0));
  EXPECT_EQ(n.at(1, 1), Fp(7, 0));
  PrimeField F(7);
  EXPECT_THROW(nilpotent_log(Mat<Fp>(2, {F(2), F(0), F(0), F(1)})), std::domain_error);
}

TEST(NilpotentLogTest, ExpInvertsLogOnAllUnipotents) {
  // All 24 order-5 elements of SL_2(F_5), every conjugacy class included.
  FiniteSubgroup G(5, 2, sl2_generators(5));
  auto unip = find_ell_elements(G);
  ASSERT_EQ(unip.size(), 24u);
  for (const auto& x : unip) {
    Mat<Fp> n = nilpotent_log(x);
    Mat<Fp> sq = n * n;
    EXPECT_TRUE(is_zero(sq.at(0, 0)) && is_zero(sq.at(0, 1)) && is_zero(sq.at(1, 0)) &&
                is_zero(sq.at(1, 1)));
    EXPECT_EQ(exp_t(n, Fp(5, 1)), x);
  }
}

TEST(NilpotentLogTest, ExpLogRoundTripInRankThree) {
  PrimeField F(7);
  for (std::int64_t a = 0; a < 7; ++a)
    for (std::int64_t b = 0; b < 7; ++b)
      for (std::int64_t c = 0; c < 7; ++c) {
        Mat<Fp> x(3, {F(1), F(a), F(b), F(0), F(1), F(c), F(0), F(0), F(1)});
        EXPECT_EQ(exp_t(nilpotent_log(x), F(1)), x);
      }
}

TEST(NilpotentLogTest, ExpIsOneParameterGroup) {
  PrimeField F(11);
  Mat<Fp> n(3);
  n.at(0, 1) = F(3);
  n.at(1, 2) = F(5);
  n.at(0, 2) = F(2);
  for (std::int64_t s = 0; s < 11; ++s)
    for (std::int64_t t = 0; t < 11; ++t)
      EXPECT_EQ(exp_t(n, F(s)) * exp_t(n, F(t)), exp_t(n, F(s + t)));
  EXPECT_THROW(exp_t(Mat<Fp>::identity_like(2, Fp(7, 1)), Fp(7, 1)), std::domain_error);
}

TEST(NoriTest, FullSpecialLinearEnvelope) {
  for (std::uint64_t ell : {5ULL, 7ULL}) {
    FiniteSubgroup G(ell, 2, sl2_generators(ell));
    NoriReport rep = nori_lie_dimension(G);
    EXPECT_TRUE(rep.enumeration_complete);
    EXPECT_FALSE(rep.sampled);
    EXPECT_EQ(rep.lie_dimension, 3);
    ASSERT_TRUE(rep.group_order.has_value());
    EXPECT_EQ(*rep.group_order, GroupSpec::make(GroupFamily::SL, 2, ell).order());
    ASSERT_TRUE(rep.plus_subgroup_order.has_value());
    EXPECT_EQ(*rep.plus_subgroup_order, *rep.group_order);  // SL_2 is unipotently generated
    ASSERT_TRUE(rep.envelope_guess.has_value());
    EXPECT_EQ(rep.envelope_guess->family, GroupFamily::SL);
    EXPECT_EQ(rep.envelope_guess->param, 2);
  }
}

TEST(NoriTest, CountOfOrderEllElements) {
  // SL_2(F_5) has six subgroups of order 5, hence 24 elements of order 5.
  FiniteSubgroup G(5, 2, sl2_generators(5));
  NoriReport rep = nori_lie_dimension(G);
  EXPECT_EQ(rep.ell_element_count, 24u);
  EXPECT_EQ(rep.ell, 5u);
  EXPECT_EQ(rep.n, 2);
}

TEST(NoriTest, TorusHasTrivialEnvelopePart) {
  PrimeField F(7);
  Mat<Fp> d(2);
  d.at(0, 0) = F(3);
  d.at(1, 1) = F(5);
  FiniteSubgroup G(7, 2, {d});
  NoriReport rep = nori_lie_dimension(G);
  EXPECT_EQ(rep.ell_element_count, 0u);
  EXPECT_EQ(rep.lie_dimension, 0);
  ASSERT_TRUE(rep.plus_subgroup_order.has_value());
  EXPECT_EQ(*rep.plus_subgroup_order, BigInt(1));
  EXPECT_FALSE(rep.envelope_guess.has_value());
}

TEST(NoriTest, HeisenbergGroupInRankThree) {
  PrimeField F(7);
  Mat<Fp> e12 = Mat<Fp>::identity_like(3, F.one());
  e12.at(0, 1) = F(1);
  Mat<Fp> e23 = Mat<Fp>::identity_like(3, F.one());
  e23.at(1, 2) = F(1);
  FiniteSubgroup G(7, 3, {e12, e23});
  NoriReport rep = nori_lie_dimension(G);
  EXPECT_TRUE(rep.enumeration_complete);
  ASSERT_TRUE(rep.group_order.has_value());
  EXPECT_EQ(*rep.group_order, BigInt(343));
  EXPECT_EQ(rep.ell_element_count, 342u);
  EXPECT_EQ(rep.lie_dimension, 3);
  EXPECT_EQ(*rep.plus_subgroup_order, BigInt(343));
}

TEST(NoriTest, ConjugationInvariance) {
  PrimeField F(11);
  Mat<Fp> g(2, {F(2), F(3), F(1), F(2)});  // det = 1
  std::vector<Mat<Fp>> gens;
  for (const auto& x : sl2_generators(11)) gens.push_back(conjugate(g, x));
  NoriReport base = nori_lie_dimension(FiniteSubgroup(11, 2, sl2_generators(11)));
  NoriReport conj = nori_lie_dimension(FiniteSubgroup(11, 2, gens));
  EXPECT_EQ(base.lie_dimension, conj.lie_dimension);
  EXPECT_EQ(base.ell_element_count, conj.ell_element_count);
  EXPECT_EQ(*base.group_order, *conj.group_order);
}

TEST(NoriTest, SampledModeStillFindsElements) {
  // Budget too small for full enumeration of SL_2(F_13) (order 2184).
  FiniteSubgroup G(13, 2, sl2_generators(13));
  NoriReport rep = nori_lie_dimension(G, 500);
  EXPECT_FALSE(rep.enumeration_complete);
  EXPECT_TRUE(rep.sampled);
  EXPECT_FALSE(rep.group_order.has_value());
  EXPECT_GT(rep.ell_element_count, 0u);
  EXPECT_EQ(rep.lie_dimension, 3);
  EXPECT_EQ(rep.seed, kDefaultSeed);
}

TEST(NoriTest, SmallCharacteristicIsRejected) {
  FiniteSubgroup G(2, 2, {upper_unipotent(2, 1)});
  EXPECT_THROW(nori_lie_dimension(G), dimension_error);
  EXPECT_THROW(find_ell_elements(G), dimension_error);
  PrimeField F(3);
  FiniteSubgroup H(3, 3, {Mat<Fp>::identity_like(3, F.one())});
  EXPECT_THROW(nori_lie_dimension(H), dimension_error);
}

TEST(ClassifyTest, SplitCartanNormalizer) {
  PrimeField F(11);
  std::vector<CharPoint<Fp>> pts;
  for (std::int64_t a = 1; a < 11; ++a)
    for (std::int64_t b = 1; b < 11; ++b) {
      pts.push_back(chi(Mat<Fp>(2, {F(a), F(0), F(0), F(b)})));
      pts.push_back(chi(Mat<Fp>(2, {F(0), F(a), F(b), F(0)})));
    }
  ClassifyReport rep = classify_gl2_image(pts, 11);
  EXPECT_EQ(rep.cls, EnvelopeClass::SplitCartanNormalizer);
  ASSERT_TRUE(rep.pi0.has_value());
  EXPECT_EQ(*rep.pi0, 2);
  // 100 antidiagonal + 10 diagonal pairs (a, -a) out of 200 points.
  EXPECT_DOUBLE_EQ(rep.trace_zero_fraction, 0.55);
}

TEST(ClassifyTest, NonsplitCartanNormalizer) {
  const std::uint64_t ell = 7;
  PrimeField F(ell);
  const std::int64_t eps = static_cast<std::int64_t>(smallest_non_residue(ell));
  std::vector<CharPoint<Fp>> pts;
  for (std::int64_t x = 0; x < 7; ++x)
    for (std::int64_t y = 0; y < 7; ++y) {
      if (x == 0 && y == 0) continue;
      pts.push_back(chi(Mat<Fp>(2, {F(x), F(eps * y), F(y), F(x)})));
      pts.push_back(chi(Mat<Fp>(2, {F(x), F(eps * y), F(-y), F(-x)})));
    }
  ClassifyReport rep = classify_gl2_image(pts, ell);
  EXPECT_EQ(rep.cls, EnvelopeClass::NonsplitCartanNormalizer);
  EXPECT_EQ(*rep.pi0, 2);
}

TEST(ClassifyTest, FullGl2AndBorel) {
  ClassifyReport full = classify_gl2_image(
      charpoints_of_group(GroupSpec::make(GroupFamily::GL, 2, 11)), 11);
  EXPECT_EQ(full.cls, EnvelopeClass::FullGL2);
  EXPECT_EQ(*full.pi0, 1);

  PrimeField F(11);
  std::vector<CharPoint<Fp>> borel;
  for (std::int64_t a = 1; a < 11; ++a)
    for (std::int64_t d = 1; d < 11; ++d)
      for (std::int64_t b = 0; b < 11; ++b)
        borel.push_back(chi(Mat<Fp>(2, {F(a), F(b), F(0), F(d)})));
  ClassifyReport red = classify_gl2_image(borel, 11);
  EXPECT_EQ(red.cls, EnvelopeClass::BorelReducible);
  EXPECT_EQ(*red.pi0, 1);
}

TEST(ClassifyTest, SmallCharacteristicUndecided) {
  ClassifyReport rep = classify_gl2_image(
      charpoints_of_group(GroupSpec::make(GroupFamily::GL, 2, 3)), 3);
  EXPECT_EQ(rep.cls, EnvelopeClass::ExceptionalSmall);
  EXPECT_FALSE(rep.pi0.has_value());
  EXPECT_FALSE(rep.note.empty());
}

TEST(ClassifyTest, InputValidation) {
  EXPECT_THROW(classify_gl2_image({}, 11), std::invalid_argument);
  PrimeField F(7);
  std::vector<CharPoint<Fp>> wrong{chi(Mat<Fp>::identity_like(3, F.one()))};
  EXPECT_THROW(classify_gl2_image(wrong, 7), std::invalid_argument);
  std::vector<CharPoint<Fp>> mixed{chi(Mat<Fp>::identity_like(2, F.one()))};
  EXPECT_THROW(classify_gl2_image(mixed, 11), std::invalid_argument);
}

TEST(WeightsTest, DifferenceMultisetCountsAllOrderedPairs) {
  WeightMultiset std2 = weight_multiset({{1, 0}, {0, 1}});
  WeightMultiset diffs = difference_multiset(std2);
  EXPECT_EQ(diffs.size(), 4u);
  WeightMultiset expect = weight_multiset({{0, 0}, {0, 0}, {1, -1}, {-1, 1}});
  EXPECT_EQ(diffs, expect);
  EXPECT_TRUE(contains_roots(diffs, {{1, -1}, {-1, 1}}));
  EXPECT_FALSE(contains_roots(diffs, {{2, -2}}));
}

TEST(WeightsTest, SymmetricSquareSeparatesFromStandardPlusDet) {
  // Sym^2 of the standard rank-1 torus action: weights {2, 1, 0} after
  // twisting; its difference set contains +-1 and +-2.
  WeightMultiset sym2 = weight_multiset({{2}, {1}, {0}});
  WeightMultiset diffs = difference_multiset(sym2);
  EXPECT_EQ(diffs.size(), 9u);
  EXPECT_TRUE(contains_roots(diffs, {{1}, {-1}, {2}, {-2}}));
  WeightMultiset three_copies = weight_multiset({{1}, {1}, {1}});
  EXPECT_FALSE(contains_roots(difference_multiset(three_copies), {{1}}));
}

TEST(WeightsTest, ValidationErrors) {
  EXPECT_THROW(weight_multiset({}), std::invalid_argument);
  EXPECT_THROW(weight_multiset({{1, 0}, {1}}), std::invalid_argument);
  WeightMultiset w = weight_multiset({{1}, {0}});
  EXPECT_THROW(contains_roots(difference_multiset(w), {{1, 0}}), std::invalid_argument);
}

TEST(WeightsTest, DetCoordinates) {
  PrimeField F(7);
  Mat<Fp> m(3);
  m.at(0, 0) = F(2);
  m.at(1, 1) = F(3);
  m.at(1, 2) = F(1);
  m.at(2, 1) = F(4);
  m.at(2, 2) = F(5);
  auto dets = det_coordinates(std::vector<int>{1, 2}, m);
  ASSERT_EQ(dets.size(), 2u);
  EXPECT_EQ(dets[0], F(2));
  EXPECT_EQ(dets[1], F(3 * 5 - 4));  // 11 = 4 mod 7

  EXPECT_THROW(det_coordinates(std::vector<int>{2, 1}, m), std::invalid_argument);
  EXPECT_THROW(det_coordinates(std::vector<int>{1, 1}, m), std::invalid_argument);
}

TEST(WeightsTest, DetCoordinatesMultiplicative) {
  PrimeField F(5);
  auto bd = [&](std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d, std::int64_t e) {
    Mat<Fp> m(3);
    m.at(0, 0) = F(a);
    m.at(1, 1) = F(b);
    m.at(1, 2) = F(c);
    m.at(2, 1) = F(d);
    m.at(2, 2) = F(e);
    return m;
  };
  Mat<Fp> x = bd(2, 1, 2, 3, 4), y = bd(3, 2, 0, 1, 1);
  std::vector<int> blocks{1, 2};
  auto dx = det_coordinates(blocks, x), dy = det_coordinates(blocks, y),
       dxy = det_coordinates(blocks, x * y);
  for (std::size_t i = 0; i < 2; ++i) EXPECT_EQ(dxy[i], dx[i] * dy[i]);
}
