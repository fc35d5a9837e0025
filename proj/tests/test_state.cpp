#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "photodissim/error.hpp"
#include "photodissim/state.hpp"

using namespace photodissim;

namespace {

void expect_code(ErrorCode code, const auto& fn) {
  try {
    fn();
    ADD_FAILURE() << "expected " << to_string(code);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

}  // namespace

TEST(Vectorize, PureCircularStates) {
  const StateVector4 r = vectorize(DensityMatrix::right());
  EXPECT_EQ(r.vec(), Vector4(1.0, 0.0, 0.0, 0.0));
  const StateVector4 l = vectorize(DensityMatrix::left());
  EXPECT_EQ(l.vec(), Vector4(0.0, 1.0, 0.0, 0.0));
}

TEST(Vectorize, OffDiagonalConjugatePair) {
  const StateVector4 v = vectorize(DensityMatrix::from_entries(0.5, 0.5, cplx(0.1, 0.2)));
  EXPECT_EQ(v.rho3(), cplx(0.1, 0.2));
  EXPECT_EQ(v.rho4(), cplx(0.1, -0.2));
}

TEST(Devectorize, Roundtrip) {
  EXPECT_EQ(devectorize(StateVector4(1.0, 0.0, 0.0, 0.0)), DensityMatrix::right());
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    const DensityMatrix rho = DensityMatrix::from_matrix(oracle::random_mixed(rng));
    EXPECT_LT((devectorize(vectorize(rho)).matrix() - rho.matrix()).norm(), 1e-15);
  }
}

TEST(Devectorize, LinearProjector) {
  const DensityMatrix rho = devectorize(StateVector4(0.5, 0.5, 0.5, 0.5));
  EXPECT_NEAR(rho.eigenvalues()[1], 1.0, 1e-15);
  EXPECT_NEAR(rho.eigenvalues()[0], 0.0, 1e-15);
  EXPECT_NEAR(purity(rho), 1.0, 1e-15);
}

TEST(Devectorize, RejectsTraceViolation) {
  expect_code(ErrorCode::NonPhysicalState, [] { devectorize(StateVector4(0.6, 0.5, 0.0, 0.0)); });
}

TEST(Devectorize, ResymmetrizesSmallDrift) {
  const DensityMatrix rho = devectorize(StateVector4(0.5, 0.5, cplx(0.1, 1e-8), cplx(0.1, 1e-8)));
  EXPECT_EQ(rho.rho3(), cplx(0.1, 0.0));
  EXPECT_EQ(rho.rho4(), std::conj(rho.rho3()));
}

TEST(DensityMatrix, RejectsNegativeEigenvalue) {
  expect_code(ErrorCode::NonPhysicalState, [] { DensityMatrix::from_entries(0.5, 0.5, 0.7); });
  expect_code(ErrorCode::NonPhysicalState, [] { DensityMatrix::from_bloch(1.0, 1.0, 0.0); });
}

TEST(DensityMatrix, BlochMatchesPauliExpansion) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-0.57, 0.57);
  for (int i = 0; i < 20; ++i) {
    const double s1 = u(rng), s2 = u(rng), s3 = u(rng);
    Matrix2 m;
    m << 0.5 * (1.0 + s3), cplx(0.5 * s1, -0.5 * s2), cplx(0.5 * s1, 0.5 * s2), 0.5 * (1.0 - s3);
    EXPECT_LT((DensityMatrix::from_bloch(s1, s2, s3).matrix() - m).norm(), 1e-16);
  }
}

TEST(Projector, Examples) {
  Matrix2 half;
  half << 0.5, 0.5, 0.5, 0.5;
  EXPECT_LT((projector({0.0, 0.0}).matrix() - half).norm(), 1e-16);

  Matrix2 up = Matrix2::Zero();
  up(0, 0) = 1.0;
  EXPECT_LT((projector({kPi / 4, kPi / 2}).matrix() - up).norm(), 1e-15);

  Matrix2 down = Matrix2::Zero();
  down(1, 1) = 1.0;
  EXPECT_LT((projector({kPi / 4, -kPi / 2}).matrix() - down).norm(), 1e-15);
}

TEST(Projector, IdempotentRankOne) {
  for (double th : {0.0, 0.3, 1.1, 2.5})
    for (double ph : {0.0, 0.7, -1.2}) {
      const Matrix2 p = projector({th, ph}).matrix();
      EXPECT_LT((p * p - p).norm(), 1e-15);
      EXPECT_NEAR(p.trace().real(), 1.0, 1e-15);
    }
}

TEST(Expectation, Examples) {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 20; ++i) {
    const StateVector4 s = vectorize(DensityMatrix::from_matrix(oracle::random_mixed(rng)));
    EXPECT_NEAR(expectation(Observable::identity(), s), 1.0, 1e-15);
  }
  const StateVector4 l = vectorize(DensityMatrix::left());
  for (double th : {0.0, 0.4, 1.3}) EXPECT_NEAR(expectation(projector({th, 0.0}), l), 0.5, 1e-15);

  const Matrix2 psi = oracle::random_pure(rng);
  EXPECT_NEAR(expectation(Observable(psi), vectorize(DensityMatrix::from_matrix(psi))), 1.0, 1e-14);
}

TEST(Expectation, MatchesTraceFormula) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    const Matrix2 rho = oracle::random_mixed(rng);
    const Matrix2 o = oracle::random_mixed(rng) * 3.0 - Matrix2::Identity();
    const double expect = (o * rho).trace().real();
    EXPECT_NEAR(expectation(Observable(o), StateVector4(oracle::vec(rho))), expect, 1e-14);
  }
}

TEST(Expectation, RejectsComplexValue) {
  // non-hermitian "state" with a large imaginary cross term
  expect_code(ErrorCode::NonRealExpectation,
              [] { expectation(projector({0.3, 0.0}), StateVector4(0.5, 0.5, cplx(0.0, 0.1), cplx(0.0, 0.1))); });
}

TEST(Observable, RejectsNonHermitian) {
  Matrix2 m;
  m << 1.0, 1.0, 0.0, 0.0;
  expect_code(ErrorCode::NonPhysicalState, [&] { Observable o(m); });
}

TEST(Purity, Examples) {
  EXPECT_DOUBLE_EQ(purity(DensityMatrix::right()), 1.0);
  EXPECT_DOUBLE_EQ(purity(DensityMatrix::maximally_mixed()), 0.5);
  EXPECT_DOUBLE_EQ(purity(DensityMatrix::from_entries(0.5, 0.5, 0.25)), 5.0 / 8.0);
}

TEST(Purity, MatchesTraceOfSquare) {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 50; ++i) {
    const Matrix2 rho = oracle::random_mixed(rng);
    EXPECT_NEAR(purity(DensityMatrix::from_matrix(rho)), (rho * rho).trace().real(), 1e-15);
  }
}

TEST(StateVector4, Diagnostics) {
  const StateVector4 s(0.7, 0.4, cplx(0.1, 0.1), cplx(0.1, 0.2));
  EXPECT_NEAR(s.trace_error(), 0.1, 1e-15);
  EXPECT_NEAR(s.hermiticity_error(), 0.3, 1e-15);
  EXPECT_NEAR(min_eigenvalue(StateVector4(0.5, 0.5, 0.7, 0.7)), -0.2, 1e-15);
}
