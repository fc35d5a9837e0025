#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "helpers.hpp"
#include "oracles.hpp"
#include "photodissim/dissipation.hpp"
#include "photodissim/generators.hpp"

using namespace photodissim;

TEST(Combos, Examples) {
  const DissipationCombos k = combos({1, 0, 0, 1, 0, 1});
  EXPECT_EQ(k.A, 2.0);
  EXPECT_EQ(k.B, cplx(0.0, 0.0));
  EXPECT_EQ(k.C, cplx(0.0, 0.0));
  EXPECT_EQ(k.D, 1.0);

  const DissipationCombos kb = combos({0, 1, 0, 0, 0, 0});
  EXPECT_EQ(kb.B, cplx(0.0, 2.0));
  EXPECT_NEAR(kb.phiB, kPi / 2, 1e-15);

  const DissipationCombos kc = combos({0, 0, 1, 0, 1, 0});
  EXPECT_EQ(kc.C, cplx(1.0, 1.0));
  EXPECT_NEAR(kc.phiC, kPi / 4, 1e-15);
}

TEST(Combos, RoundtripThroughParams) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 100; ++i) {
    const DissipationParams p = testing_helpers::random_params(rng, 2.0);
    const DissipationParams q = combos(p).params();
    EXPECT_NEAR(q.a, p.a, 1e-14);
    EXPECT_NEAR(q.b, p.b, 1e-14);
    EXPECT_NEAR(q.c, p.c, 1e-14);
    EXPECT_NEAR(q.alpha, p.alpha, 1e-14);
    EXPECT_NEAR(q.beta, p.beta, 1e-14);
    EXPECT_NEAR(q.gamma, p.gamma, 1e-14);
  }
}

TEST(Combos, PhaseOfZeroIsZero) { EXPECT_EQ(phase(cplx(0.0, 0.0)), 0.0); }

TEST(ValidateCp, ZeroPassesAll) {
  const ValidationReport r = validate_cp({});
  EXPECT_EQ(r.conditions.size(), 10u);
  EXPECT_TRUE(r.all_passed());
}

TEST(ValidateCp, BalancedSetPasses) {
  const ValidationReport r = validate_cp({1, 0, 0, 1, 0, 1});
  EXPECT_TRUE(r.all_passed());
  const DissipationCombos k = combos({1, 0, 0, 1, 0, 1});
  EXPECT_DOUBLE_EQ(k.R, 0.5);
  EXPECT_DOUBLE_EQ(k.S, 0.5);
  EXPECT_DOUBLE_EQ(k.T, 0.5);
  EXPECT_DOUBLE_EQ(r.conditions.back().residual, 0.125);
}

TEST(ValidateCp, FailsExactlyTwoS) {
  const ValidationReport r = validate_cp({1, 0, 0, 2, 0, 0});
  const auto bad = r.violated();
  ASSERT_EQ(bad.size(), 1u);
  EXPECT_NE(bad[0].find("2S"), std::string::npos);
  for (const auto& c : r.conditions)
    if (c.name.find("2S") != std::string::npos) EXPECT_DOUBLE_EQ(c.residual, -1.0);
  EXPECT_NE(r.summary().find("2S"), std::string::npos);
  // S < 0 drags the minors that contain it below zero; those are reported as consequences
  int dependent = 0;
  for (const auto& c : r.conditions)
    if (!c.passed && c.name.find("2S") == std::string::npos) {
      ASSERT_EQ(c.follows_from.size(), 1u) << c.name;
      EXPECT_EQ(c.follows_from[0], bad[0]);
      ++dependent;
    }
  EXPECT_EQ(dependent, 3);
}

TEST(ValidateCp, IndependentMinorFailureIsReported) {
  // R = S = T = 1/2 but b^2 > RS
  const auto bad = validate_cp({1, 0.6, 0, 1, 0, 1}).violated();
  ASSERT_FALSE(bad.empty());
  EXPECT_EQ(bad[0], "RS - b^2 >= 0");
}

TEST(ValidateCp, NegativeDiagonalFlagged) {
  EXPECT_FALSE(validate_cp({-0.1, 0, 0, 0, 0, 0}).all_passed());
  EXPECT_FALSE(validate_cp({0, 0, 0, 0, 0, -0.1}).all_passed());
}

TEST(ValidateCp, AgreesWithChoiMatrix) {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> kick(-0.15, 0.15);
  int pass = 0, fail = 0;
  for (int i = 0; i < 6000; ++i) {
    // alternate arbitrary sets with CP sets nudged across the boundary
    DissipationParams p = testing_helpers::random_params(rng, 1.0);
    if (i % 2) {
      p = testing_helpers::random_cp(rng, 1.0);
      p.a += kick(rng);
      p.b += kick(rng);
      p.c += kick(rng);
      p.alpha += kick(rng);
      p.beta += kick(rng);
      p.gamma += kick(rng);
    }
    const double choi = oracle::conditional_choi_min(dissipator_superop(p));
    const bool cp = validate_cp(p).all_passed();
    if (std::abs(choi) < 1e-9) continue;
    EXPECT_EQ(cp, choi > 0.0) << p.a << ' ' << p.b << ' ' << p.c << ' ' << p.alpha << ' ' << p.beta << ' '
                              << p.gamma;
    (cp ? pass : fail)++;
  }
  EXPECT_GT(pass, 1000);
  EXPECT_GT(fail, 1000);

  for (int i = 0; i < 1000; ++i) {
    const DissipationParams p = testing_helpers::random_cp(rng, 1.0);
    EXPECT_TRUE(validate_cp(p, 1e-12).all_passed());
    EXPECT_GT(oracle::conditional_choi_min(dissipator_superop(p)), -1e-12);
  }
}

TEST(ValidateCp, ScalingPreservesVerdict) {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 500; ++i) {
    const DissipationParams p = testing_helpers::random_params(rng, 1.0);
    const bool cp = validate_cp(p).all_passed();
    for (double s : {0.01, 3.0, 100.0}) EXPECT_EQ(validate_cp(p.scaled(s), 1e-14 * s * s * s).all_passed(), cp);
  }
}

TEST(ValidateCp, GammaZeroForcesAEqualsAlpha) {
  // gamma = 0 leaves 2S = a - alpha >= 0 and 2R = alpha - a >= 0
  EXPECT_TRUE(validate_cp({0.3, 0, 0, 0.3, 0, 0}).all_passed());
  EXPECT_FALSE(validate_cp({0.3, 0, 0, 0.31, 0, 0}).all_passed());
  EXPECT_FALSE(validate_cp({0.31, 0, 0, 0.3, 0, 0}).all_passed());
  // and with a = alpha, R = S = 0 so b, c, beta must vanish
  EXPECT_FALSE(validate_cp({0.3, 0.01, 0, 0.3, 0, 0}).all_passed());
  EXPECT_FALSE(validate_cp({0.3, 0, 0.01, 0.3, 0, 0}).all_passed());
  EXPECT_FALSE(validate_cp({0.3, 0, 0, 0.3, 0.01, 0}).all_passed());
}

TEST(DissipatorSuperop, Examples) {
  EXPECT_EQ(dissipator_superop(DissipationCombos{}), Matrix4::Zero());
  const Matrix4 m = dissipator_superop(DissipationParams{1, 0, 0, 1, 0, 1});
  EXPECT_EQ(m.row(0), Eigen::RowVector4cd(-1, 1, 0, 0));
  EXPECT_EQ(m.row(2), Eigen::RowVector4cd(0, 0, -2, 0));
}

TEST(DissipatorSuperop, TraceAndHermiticityPreserving) {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 100; ++i) {
    const Matrix4 m = dissipator_superop(testing_helpers::random_params(rng, 1.0));
    EXPECT_LT((m.row(0) + m.row(1)).norm(), 1e-15);
    const Matrix2 rho = oracle::random_mixed(rng);
    const Matrix2 out = oracle::unvec(m * oracle::vec(rho));
    EXPECT_LT((out - out.adjoint()).norm(), 1e-15);
  }
}

TEST(DissipatorSuperop, PhaseDampingMatchesLindbladForm) {
  // sigma3 dephasing at rate k is the a = alpha = k family
  for (double k : {0.05, 0.4}) {
    Matrix2 s3;
    s3 << 1, 0, 0, -1;
    const std::vector<Matrix2> jumps{std::sqrt(k) * s3};
    EXPECT_LT((dissipator_superop(DissipationParams{k, 0, 0, k, 0, 0}) - oracle::lindblad_superop(jumps)).norm(),
              1e-15);
  }
}

TEST(ReadDissipator, InvertsSuperop) {
  std::mt19937_64 rng(37);
  for (int i = 0; i < 50; ++i) {
    const DissipationCombos k = combos(testing_helpers::random_params(rng, 1.0));
    const DissipationCombos r = read_dissipator(dissipator_superop(k));
    EXPECT_NEAR(r.A, k.A, 1e-15);
    EXPECT_NEAR(r.D, k.D, 1e-15);
    EXPECT_NEAR(std::abs(r.B - k.B), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(r.C - k.C), 0.0, 1e-15);
  }
}
