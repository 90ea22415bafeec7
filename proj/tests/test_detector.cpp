#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "pi0/pi0.hpp"

using namespace pi0;

namespace {

Fp reduce_int(const BigInt& x, std::uint64_t ell) {
  return Fp(ell, static_cast<std::int64_t>(mpz_fdiv_ui(x.get_mpz_t(), ell)));
}

RatPoly to_rat(const IntPoly& p) {
  return map_coeffs<BigRat>(p, [](const BigInt& v) { return BigRat(v); });
}

// Clearing power that makes denominators integral: c(0)^(b * n^(a+b-1)).
BigRat clearing_factor(const IntPoly& c, int a, int b) {
  unsigned long e = static_cast<unsigned long>(b);
  for (int i = 1; i < a + b; ++i) e *= static_cast<unsigned long>(c.degree());
  return ring_pow(BigRat(c.constant_term()), e);
}

}  // namespace

TEST(TensorSpecTest, PresetsAndParsing) {
  TensorSpec cartan2 = tensor_spec_preset("cartan2");
  ASSERT_EQ(cartan2.factors.size(), 1u);
  EXPECT_EQ(cartan2.factors[0].a, 1);
  EXPECT_EQ(cartan2.factors[0].b, 1);
  EXPECT_EQ(cartan2.factors[0].m, 2);

  TensorSpec order2 = tensor_spec_preset("order2");
  ASSERT_EQ(order2.factors.size(), 1u);
  EXPECT_EQ(order2.factors[0].a, 1);
  EXPECT_EQ(order2.factors[0].b, 0);
  EXPECT_EQ(order2.factors[0].m, 2);

  TensorSpec multi = parse_tensor_spec("1,1,2;2,1,3");
  ASSERT_EQ(multi.factors.size(), 2u);
  EXPECT_EQ(multi.factors[1].a, 2);
  EXPECT_EQ(multi.factors[1].m, 3);
  EXPECT_EQ(parse_tensor_spec("cartan2").str(), cartan2.str());

  EXPECT_THROW(parse_tensor_spec("bogus"), std::invalid_argument);
  EXPECT_THROW(parse_tensor_spec("1,1"), std::invalid_argument);
  EXPECT_THROW(parse_tensor_spec("0,0,2"), std::invalid_argument);
  EXPECT_THROW(parse_tensor_spec("1,1,1"), std::invalid_argument);
  EXPECT_THROW(parse_tensor_spec("-1,1,2"), std::invalid_argument);
}

TEST(ComposedProductTest, LinearFactorsMultiplyRoots) {
  // Roots 5 and 7 compose to the single root 35.
  IntPoly p{-5, 1}, q{-7, 1};
  EXPECT_EQ(composed_product(p, q), (IntPoly{-35, 1}));
  // Bilinearity of the root multiset in small factored cases.
  IntPoly a = IntPoly{-2, 1} * IntPoly{-3, 1};
  IntPoly b{-10, 1};
  EXPECT_EQ(composed_product(a, b), (IntPoly{-20, 1} * IntPoly{-30, 1}));
  EXPECT_THROW(composed_product(p, IntPoly{0, 1}), std::invalid_argument);
}

TEST(DualCharpolyTest, InverseRootsWithClearedContent) {
  DualCharpoly d = dual_charpoly(IntPoly{-2, 1});
  EXPECT_EQ(d.primitive, (IntPoly{-1, 2}));
  EXPECT_EQ(d.content, BigInt(2));

  // Monic with negative constant term: reversal gets sign-normalized.
  DualCharpoly e = dual_charpoly(IntPoly{-3, -2, 1});
  EXPECT_EQ(e.primitive.lead(), BigInt(3));
  EXPECT_EQ(e.content, BigInt(3));
  // 1/r is a root of the primitive dual whenever r is a root of c = (T-3)(T+1).
  EXPECT_EQ(to_rat(e.primitive).eval(BigRat(1, 3)), BigRat(0));
  EXPECT_EQ(to_rat(e.primitive).eval(BigRat(-1)), BigRat(0));

  EXPECT_THROW(dual_charpoly(IntPoly{0, 1, 1}), std::invalid_argument);
  EXPECT_THROW(dual_charpoly(IntPoly{1, 2}), std::invalid_argument);
}

TEST(TensorCharpolyTest, SquareOfQuadratic) {
  IntPoly c{-1, 0, 1};  // roots 1, -1
  EXPECT_EQ(tensor_charpoly(c, c), (IntPoly{1, 0, -2, 0, 1}));
}

TEST(TensorCharpolyTest, DegreeAndEvaluationAgainstKroneckerOracle) {
  IntPoly c{-1, -1, 1};  // T^2 - T - 1
  const std::pair<int, int> cases[] = {{1, 0}, {0, 1}, {1, 1}, {2, 0},
                                       {0, 2}, {2, 1}, {1, 2}, {2, 2}};
  for (auto [a, b] : cases) {
    IntPoly p = p_ab(c, a, b);
    const int n = c.degree();
    int dim = 1;
    for (int i = 0; i < a + b; ++i) dim *= n;
    EXPECT_EQ(p.degree(), dim);

    Mat<BigRat> w = oracle::tensor_construction_matrix(c, a, b);
    RatPoly expect = charpoly(w) * clearing_factor(c, a, b);
    EXPECT_EQ(to_rat(p), expect) << "a=" << a << " b=" << b;
  }
}

TEST(TensorCharpolyTest, KroneckerOracleOnCubicAndShiftedQuadratic) {
  const std::pair<int, int> cases[] = {{1, 1}, {2, 0}, {0, 2}};
  for (const IntPoly& c : {IntPoly{2, 3, 1}, IntPoly{-5, 1, -2, 1}}) {
    for (auto [a, b] : cases) {
      Mat<BigRat> w = oracle::tensor_construction_matrix(c, a, b);
      EXPECT_EQ(to_rat(p_ab(c, a, b)), charpoly(w) * clearing_factor(c, a, b))
          << to_string(c) << " a=" << a << " b=" << b;
    }
  }
}

TEST(QabTest, FrozenValues) {
  EXPECT_EQ(q_ab(IntPoly{1, -2, 1}, 1, 1, 2), BigInt(16));
  EXPECT_EQ(q_ab(IntPoly{-2, 1} * IntPoly{-3, 1}, 1, 1, 2), BigInt(600));
}

TEST(QabTest, RationalRootOracle) {
  // For c = (T-2)(T-3), q_ab is the clearing factor times the product of
  // Phi_m over all eigenvalue-ratio products; check m = 2, 3, 4 directly.
  IntPoly c = IntPoly{-2, 1} * IntPoly{-3, 1};
  std::vector<BigRat> roots{BigRat(2), BigRat(3)};
  for (int m : {2, 3, 4}) {
    RatPoly phi = to_rat(cyclotomic(static_cast<std::uint64_t>(m)));
    BigRat prod(1);
    for (const BigRat& r : roots)
      for (const BigRat& s : roots) prod *= phi.eval(r / s);
    // lc(p_ab)^deg(Phi_m); the cross sign product is +1 here (even counts).
    prod *= ring_pow(clearing_factor(c, 1, 1), static_cast<unsigned long>(phi.degree()));
    BigRat got(q_ab(c, 1, 1, m));
    EXPECT_EQ(got, prod) << "m = " << m;
  }
}

TEST(DetectorTest, VanishesOnOrderTwoRatio) {
  // Roots +-i have ratio -1, a primitive 2nd root of unity.
  EXPECT_EQ(serre_f_eval(IntPoly{1, 0, 1}, tensor_spec_preset("cartan2")), BigInt(0));
  // Eigenvalue -1 itself has order 2.
  EXPECT_EQ(serre_f_eval(IntPoly{-1, 1}, tensor_spec_preset("order2")), BigInt(-2));
  EXPECT_EQ(serre_f_eval(IntPoly{1, 1}, tensor_spec_preset("order2")), BigInt(0));
}

TEST(DetectorTest, NonzeroAtIdentity) {
  for (int n : {1, 2, 3}) {
    Mat<BigInt> id = Mat<BigInt>::identity(n);
    IntPoly c = charpoly(id);
    EXPECT_FALSE(is_zero(serre_f_eval(c, tensor_spec_preset("cartan2"))));
    EXPECT_FALSE(is_zero(serre_f_eval(c, parse_tensor_spec("1,1,2;1,1,3;2,1,4"))));
  }
  // Charpolys of singular matrices are rejected, not evaluated to zero.
  EXPECT_THROW(serre_f_eval(IntPoly{-1, 2, 1} * IntPoly{0, 0, 0, 1}, tensor_spec_preset("cartan2")),
               std::invalid_argument);
}

TEST(DetectorTest, MultiFactorProductStructure) {
  IntPoly c{-2, 0, 1};  // roots +-sqrt(2): ratio -1 kills the cartan2 factor
  TensorSpec both = parse_tensor_spec("1,0,2;1,1,2");
  EXPECT_EQ(serre_f_eval(c, both), BigInt(0));
  BigInt q1 = q_ab(c, 1, 0, 3);
  BigInt q2 = q_ab(c, 1, 1, 3);
  EXPECT_EQ(serre_f_eval(c, parse_tensor_spec("1,0,3;1,1,3")), q1 * q2);
}

TEST(DetectorTest, ReductionCommutesWithEvaluation) {
  std::mt19937_64 rng(2026);
  std::uniform_int_distribution<int> d(-6, 6);
  TensorSpec spec = tensor_spec_preset("cartan2");
  for (std::uint64_t ell : {5ULL, 7ULL, 11ULL}) {
    for (int trial = 0; trial < 25; ++trial) {
      std::vector<BigInt> cs{BigInt(d(rng)), BigInt(d(rng)), BigInt(1)};
      if (mpz_fdiv_ui(cs[0].get_mpz_t(), ell) == 0) cs[0] = 1;  // keep c(0) a unit mod ell
      IntPoly c(std::move(cs));
      BigInt over_z = serre_f_eval(c, spec);
      Fp over_fp = serre_f_eval(reduce_mod(c, ell), spec);
      EXPECT_EQ(over_fp, reduce_int(over_z, ell)) << to_string(c) << " mod " << ell;
    }
  }
}

TEST(DetectorTest, ExhaustiveTraceZeroCountInGl2) {
  // cartan2 vanishes on g in GL_2 exactly when tr(g) = 0 (odd ell), and the
  // number of such invertible matrices is ell^2 (ell - 1).
  TensorSpec spec = tensor_spec_preset("cartan2");
  for (std::uint64_t ell : {3ULL, 5ULL, 7ULL}) {
    GroupSpec g = GroupSpec::make(GroupFamily::GL, 2, ell);
    std::uint64_t zeros = 0, total = 0, trace_zero = 0;
    g.for_each([&](const Mat<Fp>& m) {
      ++total;
      if (is_zero(m.trace())) ++trace_zero;
      if (is_zero(serre_f_eval(chi(m), spec))) ++zeros;
    });
    EXPECT_EQ(BigInt(static_cast<unsigned long>(total)), g.order());
    EXPECT_EQ(zeros, trace_zero);
    EXPECT_EQ(zeros, ell * ell * (ell - 1));
    // Slice mass scales like a hyperplane section: zeros/|G| <= 1.2/ell.
    EXPECT_LE(BigRat(static_cast<unsigned long>(zeros)) * BigRat(static_cast<unsigned long>(ell)),
              BigRat(12, 10) * BigRat(g.order()));
  }
}

TEST(DetectorTest, ModReductionOfFrobeniusRecordsHitsDetector) {
  // (p, ap) = (7, 0): trace 0 mod 5, so the detector vanishes mod 5.
  FrobeniusRecord r{7, 0};
  CharPoint<Fp> c = reduce_record(r, 5);
  EXPECT_EQ(c.alpha[0], Fp(5, 0));
  EXPECT_EQ(c.alpha[1], Fp(5, 2));
  EXPECT_TRUE(is_zero(serre_f_eval(c, tensor_spec_preset("cartan2"))));

  FrobeniusRecord s{11, -4};
  CharPoint<Fp> cs = reduce_record(s, 3);
  EXPECT_EQ(cs.alpha[0], Fp(3, 1));
  EXPECT_EQ(cs.alpha[1], Fp(3, 2));
  EXPECT_FALSE(is_zero(serre_f_eval(cs, tensor_spec_preset("cartan2"))));
}
