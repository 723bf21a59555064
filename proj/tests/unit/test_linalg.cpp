#include <gtest/gtest.h>

#include <random>

#include "quadform/error.hpp"
#include "quadform/linalg.hpp"
#include "support/reference.hpp"

using namespace quadform;
namespace ref = quadform::reference;

namespace {

Mat3 random_symmetric(std::mt19937_64& rng, double lo = -5.0, double hi = 5.0) {
  std::uniform_real_distribution<double> u(lo, hi);
  Mat3 m;
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = r; c < 3; ++c) {
      const double x = u(rng);
      m(r, c) = x;
      m(c, r) = x;
    }
  return m;
}

}  // namespace

TEST(Linalg, DeterminantMatchesLeibniz) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int n = 0; n < 1000; ++n) {
    Mat3 a;
    for (double& x : a.m) x = u(rng);
    EXPECT_NEAR(determinant(a), ref::leibniz_det(a), 1e-12 * std::max(1.0, max_abs(a) * max_abs(a) * max_abs(a)));
  }
  EXPECT_DOUBLE_EQ(determinant(ref::kEllipsoidMetric), 1.0);
}

TEST(Linalg, MinorHasNoCofactorSign) {
  const Mat3& m = ref::kEllipsoidMetric;
  EXPECT_DOUBLE_EQ(minor(m, 0, 0), 2.0);
  EXPECT_DOUBLE_EQ(minor(m, 0, 1), 5.0);
  EXPECT_DOUBLE_EQ(minor(m, 0, 2), 2.0);
  EXPECT_DOUBLE_EQ(minor(m, 1, 1), 14.0);
  EXPECT_DOUBLE_EQ(minor(m, 1, 2), 6.0);
  EXPECT_DOUBLE_EQ(minor(m, 2, 2), 3.0);
}

TEST(Linalg, InverseMatchesGaussJordan) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  int checked = 0;
  while (checked < 1000) {
    Mat3 a;
    for (double& x : a.m) x = u(rng);
    if (std::abs(ref::leibniz_det(a)) < 1e-2) continue;
    const Mat3 inv = inverse(a);
    const Mat3 want = ref::gauss_jordan_inverse(a);
    EXPECT_LE(ref::matrix_gap(inv, want), 1e-9 * std::max(1.0, max_abs(want)));
    EXPECT_LE(ref::matrix_gap(a * inv, Mat3::identity()), 1e-9 * std::max(1.0, max_abs(a) * max_abs(inv)));
    ++checked;
  }
}

TEST(Linalg, AdjugateTimesMatrixIsDeterminant) {
  const Mat3& m = ref::kEllipsoidMetric;
  EXPECT_EQ(adjugate(m) * m, determinant(m) * Mat3::identity());
}

TEST(Linalg, SingularInverseThrows) {
  const Mat3 s = Mat3::from_rows({{1, 2, 3}, {2, 4, 6}, {0, 1, 1}});
  try {
    (void)inverse(s);
    FAIL() << "expected SingularMatrix";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SingularMatrix);
  }
}

TEST(Linalg, CrossMatrixActsAsCrossProduct) {
  const Vec3 a{{1.5, -2.0, 0.25}}, b{{-0.5, 3.0, 2.0}};
  EXPECT_EQ(cross_matrix(a) * b, cross(a, b));
  EXPECT_EQ(cross(Vec3{{1, 0, 0}}, Vec3{{0, 1, 0}}), (Vec3{{0, 0, 1}}));
}

TEST(Linalg, EigenvaluesMatchJacobi) {
  std::mt19937_64 rng(3);
  for (int n = 0; n < 1000; ++n) {
    const Mat3 a = random_symmetric(rng);
    const Vec3 got = symmetric_eigenvalues(a);
    const Vec3 want = ref::jacobi_eigenvalues(a);
    const double scale = std::max(1.0, max_abs(want));
    for (std::size_t i = 0; i < 3; ++i) EXPECT_NEAR(got[i], want[i], 1e-9 * scale);
  }
}

TEST(Linalg, EigenbasisReconstructs) {
  std::mt19937_64 rng(5);
  for (int n = 0; n < 1000; ++n) {
    const Mat3 a = random_symmetric(rng);
    const SymmetricEigen e = symmetric_eigen(a);
    const Mat3 v = e.vectors;
    EXPECT_LE(ref::matrix_gap(v.transposed() * v, Mat3::identity()), 1e-9);
    EXPECT_LE(ref::matrix_gap(v * Mat3::diagonal(e.values) * v.transposed(), a), 1e-9 * std::max(1.0, max_abs(a)));
  }
}

TEST(Linalg, RepeatedEigenvalues) {
  for (const Mat3& a : {Mat3::identity(), Mat3::diagonal(Vec3{{2, 2, 5}}), Mat3::diagonal(Vec3{{-1, 4, 4}})}) {
    const SymmetricEigen e = symmetric_eigen(a);
    const Vec3 want = ref::jacobi_eigenvalues(a);
    for (std::size_t i = 0; i < 3; ++i) EXPECT_NEAR(e.values[i], want[i], 1e-12);
    EXPECT_LE(ref::matrix_gap(e.vectors * Mat3::diagonal(e.values) * e.vectors.transposed(), a), 1e-12);
  }
}

TEST(Linalg, GershgorinAndSymmetry) {
  EXPECT_DOUBLE_EQ(gershgorin_scale(ref::kEllipsoidMetric), 11.0);
  EXPECT_TRUE(is_symmetric(ref::kEllipsoidMetric, 0.0));
  Mat3 b = ref::kEllipsoidMetric;
  b(0, 1) += 1e-6;
  EXPECT_FALSE(is_symmetric(b, 1e-12));
}
