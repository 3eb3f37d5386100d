#include "postlie/linalg.hpp"

#include "test_support.hpp"

using namespace postlie;
using namespace postlie::testing;

namespace {

const Mat3q kTraceMinus2 = mateq::representative(FamilyTag::trace_minus2());
const Mat3q kNonSym = mateq::representative(FamilyTag::nonsym_rank1());

}  // namespace

TEST(GaussianRational, CanonicalForm) {
  const auto x = GaussianRational::fraction(6, -4, 10, 20);
  EXPECT_EQ(rational_to_string(x.real()), "-3/2");
  EXPECT_EQ(rational_to_string(x.imag()), "1/2");
  EXPECT_EQ(GaussianRational::parse("-6/4", "2/4"), q(-3, 2, 1, 2));
  EXPECT_EQ(GaussianRational::parse(" 7 ", "0"), q(7));
  EXPECT_EQ(rational_to_string(mpq_class(5)), "5/1");
}

TEST(GaussianRational, ParseRejectsGarbage) {
  EXPECT_THROW(GaussianRational::parse("1/0", "0"), Error);
  try {
    GaussianRational::parse("1/0", "0");
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DivisionByZero);
  }
  EXPECT_THROW(GaussianRational::parse("abc", "0"), Error);
  EXPECT_THROW(GaussianRational::parse("1.5", "0"), Error);
}

TEST(GaussianRational, FieldAxioms) {
  Rng rng(11);
  for (int n = 0; n < 200; ++n) {
    const auto a = random_gaussian(rng), b = random_gaussian(rng), c = random_gaussian(rng);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    if (!b.is_zero()) EXPECT_EQ((a / b) * b, a);
  }
  EXPECT_EQ(I * I, q(-1));
  EXPECT_THROW(q(1) / q(0), Error);
}

TEST(Mat3, RejectsNonFiniteAndBadShape) {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  EXPECT_THROW((Mat3d{{nan, 0.0, 0.0}, {0.0, 0.0, 0.0}, {0.0, 0.0, 0.0}}), Error);
  EXPECT_THROW((Mat3d{{0.0, 0.0}, {0.0, 0.0, 0.0}, {0.0, 0.0, 0.0}}), Error);
  EXPECT_THROW((Mat3q{{0, 0, 0}, {0, 0, 0}}), Error);
}

TEST(Transpose, Examples) {
  EXPECT_EQ(transpose(Mat3q::identity()), Mat3q::identity());
  const Mat3q e01{{0, 1, 0}, {0, 0, 0}, {0, 0, 0}};
  const Mat3q e10{{0, 0, 0}, {1, 0, 0}, {0, 0, 0}};
  EXPECT_EQ(transpose(e01), e10);
  Rng rng(1);
  const Mat3q a = random_exact(rng);
  EXPECT_EQ(transpose(transpose(a)), a);
}

TEST(Adjugate, Examples) {
  EXPECT_EQ(adjugate(Mat3q::identity()), Mat3q::identity());
  EXPECT_EQ(adjugate(q(-1) * Mat3q::identity()), Mat3q::identity());
  EXPECT_EQ(adjugate(Mat3q::diag(q(2), q(3), q(5))), Mat3q::diag(q(15), q(10), q(6)));
}

TEST(Adjugate, MatchesSignedMinorsAndDeterminantIdentity) {
  Rng rng(2);
  for (int n = 0; n < 100; ++n) {
    const Mat3q a = random_exact(rng);
    const Mat3q adj = adjugate(a);
    EXPECT_EQ(adj, cofactor_adjugate(a));
    const GaussianRational d = det(a);
    EXPECT_EQ(a * adj, Mat3q::diag(d, d, d));
    EXPECT_EQ(adj * a, Mat3q::diag(d, d, d));
    EXPECT_EQ(adjugate(transpose(a)), transpose(adj));
  }
}

TEST(Det, LeibnizOracleAndMultiplicativity) {
  EXPECT_EQ(det(q(-1) * Mat3q::identity()), q(-1));
  EXPECT_EQ(trace(q(-1) * Mat3q::identity()), q(-3));
  EXPECT_EQ(trace(mateq::representative(FamilyTag::k_family(q(7, 1, 1, 1)))), q(6, 1, 1, 1));
  Rng rng(3);
  for (int n = 0; n < 100; ++n) {
    const Mat3q a = random_exact(rng), b = random_exact(rng);
    EXPECT_EQ(det(a), leibniz_det(a));
    EXPECT_EQ(det(a * b), det(a) * det(b));
    EXPECT_EQ(trace(a * b), trace(b * a));
  }
}

TEST(CharPoly, Examples) {
  EXPECT_EQ(char_poly(Mat3q::zero()), (CharPoly<GaussianRational>{0, 0, 0}));
  EXPECT_EQ(char_poly(q(-1) * Mat3q::identity()), (CharPoly<GaussianRational>{3, 3, 1}));
  EXPECT_EQ(char_poly(Mat3q::diag(q(1), q(2), q(3))), (CharPoly<GaussianRational>{-6, 11, -6}));
}

TEST(CharPoly, AgreesWithDeterminantAtSamplePointsAndCayleyHamilton) {
  Rng rng(4);
  for (int n = 0; n < 50; ++n) {
    const Mat3q a = random_exact(rng);
    const auto cp = char_poly(a);
    for (const GaussianRational& x : {q(0), q(1), q(-2, 3), q(1, 2, 3, 1)}) {
      const GaussianRational poly = x * x * x + cp.c2 * x * x + cp.c1 * x + cp.c0;
      EXPECT_EQ(poly, leibniz_det(Mat3q::diag(x, x, x) - a));
    }
    const Mat3q a2 = a * a;
    EXPECT_EQ(a2 * a + cp.c2 * a2 + cp.c1 * a + cp.c0 * Mat3q::identity(), Mat3q::zero());
  }
}

TEST(Rank, Examples) {
  EXPECT_EQ(rank(Mat3q::zero()), 0);
  EXPECT_EQ(rank(kTraceMinus2), 2);
  EXPECT_EQ(rank(kNonSym), 1);
  // row 2 is a multiple of row 1: (-1/2 - i)(-1/2 + i) = 5/4 = (1 + i/2)(1 - i/2)
  EXPECT_EQ((q(-1, 2) - I) * (q(-1, 2) + I), q(5, 4));
  EXPECT_EQ((q(1) + I * q(1, 2)) * (q(1) - I * q(1, 2)), q(5, 4));
  EXPECT_EQ(rank(to_numeric(kTraceMinus2)), 2);
  EXPECT_EQ(rank(Mat3d{}), 0);
}

TEST(Rank, ExactAgreesWithFloatingOnScaledLowRankMatrices) {
  Rng rng(5);
  std::uniform_int_distribution<int> pick_rank(0, 3), pick_exp(-2, 2);
  for (int n = 0; n < 300; ++n) {
    const int r = pick_rank(rng);
    Mat3q a;
    for (int k = 0; k < r; ++k) {
      Vec3q u{random_gaussian(rng, 3), random_gaussian(rng, 3), random_gaussian(rng, 3)};
      Vec3q v{random_gaussian(rng, 3), random_gaussian(rng, 3), random_gaussian(rng, 3)};
      a = a + outer(u, v);
    }
    const long e = pick_exp(rng);
    const GaussianRational s = e >= 0 ? q(static_cast<long>(std::pow(10, e))) : q(1, static_cast<long>(std::pow(10, -e)));
    a = s * a;
    EXPECT_EQ(rank(a), rank(to_numeric(a), 1e-8)) << "trial " << n;
  }
}

TEST(Eigenvalues, Examples) {
  auto sorted = [](std::array<ComplexDouble, 3> v) {
    std::sort(v.begin(), v.end(), [](auto x, auto y) { return x.real() < y.real(); });
    return v;
  };
  for (auto z : eigenvalues(-1.0 * Mat3d::identity())) EXPECT_NEAR(std::abs(z + 1.0), 0.0, 1e-12);
  const auto t2 = sorted(eigenvalues(to_numeric(kTraceMinus2)));
  EXPECT_NEAR(std::abs(t2[0] + 1.0), 0.0, 1e-7);
  EXPECT_NEAR(std::abs(t2[1] + 1.0), 0.0, 1e-7);
  EXPECT_NEAR(std::abs(t2[2]), 0.0, 1e-12);
  const auto d = sorted(eigenvalues(Mat3d::diag(1.0, 2.0, 3.0)));
  for (int k = 0; k < 3; ++k) EXPECT_NEAR(std::abs(d[k] - double(k + 1)), 0.0, 1e-12);
}

TEST(Eigenvalues, RootsOfCharacteristicPolynomial) {
  Rng rng(6);
  for (int n = 0; n < 100; ++n) {
    const Mat3d a = random_floating(rng, 2.0);
    for (auto z : eigenvalues(a)) {
      // det(zI - A) evaluated directly
      const ComplexDouble value = leibniz_det(Mat3d::diag(z, z, z) - a);
      EXPECT_LT(std::abs(value), 1e-10);
    }
  }
}

TEST(JordanSignature, Examples) {
  const auto minus = jordan_signature(-1.0 * Mat3d::identity());
  ASSERT_EQ(minus.groups.size(), 1u);
  EXPECT_NEAR(std::abs(minus.groups[0].eigenvalue.value + 1.0), 0.0, 1e-12);
  EXPECT_EQ(minus.groups[0].block_sizes, (std::vector<int>{1, 1, 1}));

  const ComplexDouble i(0, 1);
  const Mat3d nil{{i, 1.0, 0.0}, {1.0, -i, 0.0}, {0.0, 0.0, 0.0}};
  // the block squares to zero, so it is nilpotent of index 2
  EXPECT_LT(max_abs(nil * nil), 1e-15);
  const auto sn = jordan_signature(nil);
  ASSERT_EQ(sn.groups.size(), 1u);
  EXPECT_LT(std::abs(sn.groups[0].eigenvalue.value), 1e-12);
  EXPECT_EQ(sn.groups[0].block_sizes, (std::vector<int>{2, 1}));

  const auto d = jordan_signature(Mat3d::diag(1.0, 2.0, 3.0));
  ASSERT_EQ(d.groups.size(), 3u);
  for (int k = 0; k < 3; ++k) {
    EXPECT_NEAR(std::abs(d.groups[k].eigenvalue.value - double(k + 1)), 0.0, 1e-10);
    EXPECT_EQ(d.groups[k].block_sizes, std::vector<int>{1});
  }
}

TEST(JordanSignature, ExactPathMatchesFloatingPath) {
  const std::vector<Mat3q> cases = {kTraceMinus2, kNonSym, Mat3q::diag(q(1), q(2), q(3)),
                                    mateq::representative(FamilyTag::k_family(q(0))),
                                    Mat3q{{0, q(1) + I, 0}, {q(1) + I, 0, q(1) - I}, {0, q(1) - I, 0}}};
  for (const auto& m : cases) {
    const auto ev = exact_eigenvalues(m);
    ASSERT_TRUE(ev.has_value());
    const auto exact = jordan_signature(m, *ev);
    const auto numeric = jordan_signature(to_numeric(m));
    EXPECT_TRUE(exact.matches(numeric, 1e-8));
    for (const auto& g : exact.groups) EXPECT_TRUE(g.eigenvalue.is_exact());
  }
}

TEST(JordanSignature, StableUnderSimilarityAndFlagsAmbiguity) {
  const ComplexDouble i(0, 1);
  const Mat3d block = Mat3d{{2.0 + i, 1.0, 0.0}, {1.0, 2.0 - i, 0.0}, {0.0, 0.0, 3.0}};
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto sig = jordan_signature(floating_congruate(block, seed));
    ASSERT_EQ(sig.groups.size(), 2u);
    EXPECT_EQ(sig.groups[0].block_sizes, std::vector<int>{2});
    EXPECT_EQ(sig.groups[1].block_sizes, std::vector<int>{1});
  }
  // a tiny split collapses into one eigenvalue; a moderate one is refused
  EXPECT_EQ(jordan_signature(Mat3d::diag(1.0, 1.0 + 1e-10, 3.0)).groups.size(), 2u);
  try {
    jordan_signature(Mat3d::diag(1.0, 1.0 + 1e-4, 3.0));
    FAIL() << "expected IllConditioned";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::IllConditioned);
  }
}

TEST(Rank1Factorization, Examples) {
  const auto [alpha, beta] = rank1_factorization(mateq::representative(FamilyTag::k_family(q(0))));
  EXPECT_EQ(alpha, (Vec3q{0, 1, I}));
  EXPECT_EQ(beta, (Vec3q{0, q(-1, 2), I * q(1, 2)}));
  const Mat3q e11 = Mat3q::diag(1, 0, 0);
  const auto [a1, b1] = rank1_factorization(e11);
  EXPECT_EQ(a1, (Vec3q{1, 0, 0}));
  EXPECT_EQ(b1, (Vec3q{1, 0, 0}));
  try {
    rank1_factorization(Mat3q::identity());
    FAIL() << "expected RankMismatch";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::RankMismatch);
  }
}

TEST(Rank1Factorization, ReproducesRandomRankOneMatrices) {
  Rng rng(8);
  for (int n = 0; n < 100; ++n) {
    Vec3q u{random_gaussian(rng), random_gaussian(rng), random_gaussian(rng)};
    Vec3q v{random_gaussian(rng), random_gaussian(rng), random_gaussian(rng)};
    if (u == Vec3q{} || v == Vec3q{}) continue;
    const Mat3q a = outer(u, v);
    const auto [alpha, beta] = rank1_factorization(a);
    EXPECT_EQ(outer(alpha, beta), a);
    const Mat3d ad = to_numeric(a);
    const auto [fa, fb] = rank1_factorization(ad);
    EXPECT_LT(frobenius_norm(outer(fa, fb) - ad), 1e-12 * std::max(1.0, frobenius_norm(ad)));
  }
}

TEST(SymPart, ExamplesAndRankOneSymmetry) {
  const Mat3q s{{1, 2, 3}, {2, 4, 5}, {3, 5, 6}};
  EXPECT_EQ(sym_part(s), s);
  EXPECT_EQ(sym_part(kNonSym), (Mat3q{{q(-1, 2) + I, 1, 0}, {1, q(-1, 2) - I, 0}, {0, 0, 0}}));
  EXPECT_EQ(antisym_part(Mat3q::identity()), Mat3q::zero());
  Rng rng(9);
  for (int n = 0; n < 100; ++n) {
    const Mat3q a = random_exact(rng);
    EXPECT_EQ(sym_part(a) + antisym_part(a), a);
  }
  // rank-1: symmetric <=> antisym_part = 0 <=> alpha parallel to beta
  for (int n = 0; n < 100; ++n) {
    Vec3q u{random_gaussian(rng, 2), random_gaussian(rng, 2), random_gaussian(rng, 2)};
    if (u == Vec3q{}) continue;
    const bool parallel = n % 2 == 0;
    const Vec3q v = parallel ? random_gaussian(rng) * u : Vec3q{random_gaussian(rng), random_gaussian(rng), random_gaussian(rng)};
    const Mat3q a = outer(u, v);
    if (rank(a) != 1) continue;
    EXPECT_GE(rank(sym_part(a)), 1);
    const auto [alpha, beta] = rank1_factorization(a);
    bool ab_parallel = true;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) ab_parallel = ab_parallel && alpha[i] * beta[j] == alpha[j] * beta[i];
    const bool symmetric = a == transpose(a);
    EXPECT_EQ(symmetric, antisym_part(a) == Mat3q::zero());
    EXPECT_EQ(symmetric, ab_parallel);
  }
}
