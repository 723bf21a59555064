#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "quadform/error.hpp"
#include "quadform/oracle.hpp"
#include "quadform/rotations.hpp"
#include "support/reference.hpp"

using namespace quadform;
namespace ref = quadform::reference;

namespace {

constexpr double kPi = std::numbers::pi;

SystemPtr sphere() { return make_system(euclidean_form()); }
SystemPtr lorentz() { return make_system(lorentz_form()); }
SystemPtr ellipsoid() { return make_system(QuadraticForm::from_metric(ref::kEllipsoidMetric)); }

template <class F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InvalidInput;
}

Mat3 block(const Mat4& m) {
  Mat3 b;
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) b(r, c) = m(r + 1, c + 1);
  return b;
}

}  // namespace

TEST(Rotations, UnitHasIdentityMatrices) {
  const QuadNumber one = QuadNumber::scalar(ellipsoid(), 1.0);
  EXPECT_EQ(left_matrix(one), Mat4::identity());
  EXPECT_EQ(right_matrix(one), Mat4::identity());
  EXPECT_EQ(sandwich_matrix(one), Mat4::identity());
}

TEST(Rotations, LeftRightActAsProducts) {
  const SystemPtr s = ellipsoid();
  const QuadNumber q(s, 0.5, 1, -2, 0.25), p(s, -1, 0.5, 3, 2);
  EXPECT_LE(max_abs(left_matrix(q) * p.components() - (q * p).components()), 1e-13);
  EXPECT_LE(max_abs(right_matrix(q) * p.components() - (p * q).components()), 1e-13);
}

TEST(Rotations, QuaternionSandwichRotatesPlane) {
  const SystemPtr s = sphere();
  const double theta = 0.7;
  const QuadNumber q(s, std::cos(theta / 2), 0, 0, std::sin(theta / 2));
  const QuadNumber out = sandwich_apply(q, QuadNumber::basis(s, 1));
  EXPECT_NEAR(out.s(), 0.0, 1e-15);
  EXPECT_NEAR(out.i(), std::cos(theta), 1e-15);
  EXPECT_NEAR(out.j(), std::sin(theta), 1e-15);
  EXPECT_NEAR(out.k(), 0.0, 1e-15);
  const RotationMatrix3 r = sandwich_rotation(q);
  EXPECT_LE(ref::matrix_gap(r.matrix, ref::quaternion_rotation(q.s(), q.i(), q.j(), q.k())), 1e-15);
}

TEST(Rotations, SandwichRejectsNonUnit) {
  EXPECT_EQ(code_of([] { (void)sandwich_matrix(QuadNumber(sphere(), 1, 1, 0, 0)); }), ErrorCode::NotUnit);
  EXPECT_EQ(code_of([] { (void)sandwich_rotation(QuadNumber::scalar(sphere(), 2)); }), ErrorCode::NotUnit);
}

TEST(Rotations, SkewMatrixExamples) {
  const System& s = *sphere();
  EXPECT_EQ(skew_matrix(s, Vec3{{0, 0, 1}}), Mat3::from_rows({{0, -1, 0}, {1, 0, 0}, {0, 0, 0}}));
  EXPECT_EQ(skew_matrix(s, Vec3{}), Mat3{});
  const System& e = *ellipsoid();
  const Vec3 v{{0, 0, 1 / std::sqrt(3.0)}};
  Sampler g(3);
  for (int n = 0; n < 100; ++n) {
    const Vec3 w = g.vector();
    EXPECT_LE(max_abs(skew_matrix(e, v) * w - vector_product(e, v, w)), 1e-12 * 20);
  }
}

TEST(Rotations, SigmaTableMatchesSquaredSkew) {
  Sampler g(5);
  for (const SystemPtr& sp : {sphere(), lorentz(), ellipsoid()}) {
    for (int n = 0; n < 50; ++n) {
      const Vec3 v = g.vector(-1, 1);
      const Mat3 s2 = skew_matrix(*sp, v) * skew_matrix(*sp, v);
      const Mat3 sigma = sigma_coefficients(*sp, v);
      for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c) {
          const double want = r == c ? s2(r, c) : -s2(r, c);
          EXPECT_NEAR(sigma(r, c), want, 1e-10 * std::max(1.0, max_abs(s2)));
        }
    }
  }
}

TEST(Rotations, RodriguesZeroAngleIsIdentity) {
  const System& l = *lorentz();
  for (const Vec3& v : {Vec3{{1, 0, 0}}, Vec3{{0, 1, 0}}, Vec3{{1, 1, 0}}}) {
    const RotationMatrix3 r = rodrigues(l, v, 0.0);
    EXPECT_EQ(r.matrix, Mat3::identity());
    EXPECT_TRUE(r.diagnostics.passed);
  }
}

TEST(Rotations, SphereRodriguesIsClassical) {
  const System& s = *sphere();
  const RotationMatrix3 r = rodrigues(s, Vec3{{0, 0, 1}}, kPi / 2);
  EXPECT_EQ(r.branch, RodriguesBranch::Circular);
  EXPECT_LE(max_abs(r.matrix * Vec3{{1, 0, 0}} - Vec3{{0, 1, 0}}), 1e-15);
  Sampler g(7);
  for (int n = 0; n < 200; ++n) {
    const Vec3 axis = g.unit_axis(s, -1.0);
    const double theta = g.uniform(-kPi, kPi);
    EXPECT_LE(ref::matrix_gap(rodrigues(s, axis, theta).matrix, ref::classical_rodrigues(axis, theta)), 1e-12);
  }
}

TEST(Rotations, LorentzSpacelikeAxisIsBoost) {
  const double theta = 0.8;
  const Mat3 m = rodrigues(*lorentz(), Vec3{{0, 0, 1}}, theta).matrix;
  EXPECT_NEAR(m(0, 0), std::cosh(theta), 1e-14);
  EXPECT_NEAR(m(1, 1), std::cosh(theta), 1e-14);
  EXPECT_NEAR(std::abs(m(0, 1)), std::sinh(theta), 1e-14);
  EXPECT_DOUBLE_EQ(m(0, 1), m(1, 0));
  EXPECT_DOUBLE_EQ(m(2, 2), 1.0);
}

TEST(Rotations, LightlikeAxisIsNilpotent) {
  const System& l = *lorentz();
  const Vec3 v{{1, 1, 0}};
  const Mat3 s = skew_matrix(l, v);
  EXPECT_EQ(s * s * s, Mat3{});
  const RotationMatrix3 r = rodrigues(l, v, 0.6);
  EXPECT_EQ(r.branch, RodriguesBranch::Nilpotent);
  EXPECT_LE(ref::matrix_gap(r.matrix, series_exponential(s, -0.6)), 1e-14);
  EXPECT_TRUE(r.diagnostics.passed);
}

TEST(Rotations, RodriguesAxisMustBeUnit) {
  const System& s = *sphere();
  EXPECT_EQ(code_of([&] { (void)rodrigues(s, Vec3{{2, 0, 0}}, 0.3); }), ErrorCode::AxisNotUnit);
  const RotationMatrix3 r = rodrigues(s, Vec3{{2, 0, 0}}, 0.3, true);
  EXPECT_LE(ref::matrix_gap(r.matrix, ref::classical_rodrigues(Vec3{{1, 0, 0}}, 0.3)), 1e-15);
}

TEST(Rotations, ExpandedRodriguesMatchesFactored) {
  Sampler g(11);
  const SystemPtr l = make_system(g.form(FormClass::Hyperboloid21));
  const SystemPtr e = ellipsoid();
  for (int n = 0; n < 100; ++n) {
    const double theta = g.uniform(-kPi, kPi);
    const Vec3 c = g.unit_axis(*e, -1.0), h = g.unit_axis(*l, 1.0), z = g.lightlike_axis(*l);
    const auto gap = [&](const System& s, const Vec3& v, RodriguesBranch b) {
      return ref::matrix_gap(expanded_rodrigues(s, v, theta, b), rodrigues_matrix(s, v, theta, b));
    };
    EXPECT_LE(gap(*e, c, RodriguesBranch::Circular), 1e-9);
    EXPECT_LE(gap(*l, h, RodriguesBranch::Hyperbolic), 1e-9 * std::cosh(theta) * 10);
    EXPECT_LE(gap(*l, z, RodriguesBranch::Nilpotent), 1e-9 * std::max(1.0, max_abs(z) * max_abs(z)) * 100);
  }
}

TEST(Rotations, CayleyZeroAxisIsIdentity) {
  const RotationMatrix3 r = cayley(*ellipsoid(), Vec3{});
  EXPECT_EQ(r.matrix, Mat3::identity());
  EXPECT_EQ(r.angle, 0.0);
}

TEST(Rotations, CayleyCircularAngle) {
  const System& s = *sphere();
  for (double t : {0.1, 0.5, 1.0, 3.0}) {
    const RotationMatrix3 r = cayley(s, Vec3{{0, 0, t}});
    const CayleyAngle a = cayley_angle(s, Vec3{{0, 0, t}});
    EXPECT_EQ(a.kind, CayleyAngleKind::Circular);
    EXPECT_NEAR(a.angle, 2 * std::atan(t), 1e-15);
    // The rotation is by −2 arctan t about the axis.
    EXPECT_LE(ref::matrix_gap(r.matrix, ref::classical_rodrigues(Vec3{{0, 0, 1}}, -2 * std::atan(t))), 1e-14);
    if (t != 1.0) EXPECT_NEAR(std::tan(a.angle), 2 * t / (1 - t * t), 1e-12 * std::max(1.0, std::abs(std::tan(a.angle))));
  }
}

TEST(Rotations, CayleyHyperbolicAngle) {
  const System& l = *lorentz();
  const Vec3 v{{0, 0.5, 0}};
  const CayleyAngle a = cayley_angle(l, v);
  EXPECT_EQ(a.kind, CayleyAngleKind::Hyperbolic);
  EXPECT_NEAR(std::cosh(a.angle), (1 + 0.25) / (1 - 0.25), 1e-14);
  EXPECT_EQ(cayley_angle(l, Vec3{{0, 2, 0}}).kind, CayleyAngleKind::Undefined);
  EXPECT_EQ(cayley_angle(l, Vec3{{1, 1, 0}}).kind, CayleyAngleKind::Lightlike);
}

TEST(Rotations, CayleyEigenvalues) {
  // Spacelike axis with 𝔙 = 1/4: the two non-unit eigenvalues are 3 and 1/3.
  const Mat3 r = cayley(*lorentz(), Vec3{{0, 0.5, 0}}).matrix;
  EXPECT_NEAR(r.trace(), 1 + 3 + 1.0 / 3, 1e-14);
  EXPECT_NEAR(determinant(r), 1.0, 1e-14);
}

TEST(Rotations, CayleyRejectsUnitSpacelikeAxis) {
  EXPECT_EQ(code_of([] { (void)cayley(*lorentz(), Vec3{{0, 1, 0}}); }), ErrorCode::UnitSpacelikeAxis);
  EXPECT_EQ(code_of([] { (void)cayley_matrix(*lorentz(), Vec3{{0, 1, 0}}); }), ErrorCode::SingularMatrix);
}

TEST(Rotations, CayleyClosedFormCrossCheck) {
  EXPECT_LE(ref::matrix_gap(cayley_closed_form(*sphere(), Vec3{}), Mat3::identity()), 1e-15);
  EXPECT_LE(closed_form_cayley_check(*sphere(), Vec3{{0.1, 0, 0}}), 1e-8);
}

TEST(Rotations, RotatePointsPreservesForm) {
  const SystemPtr sp = sphere();
  const System& s = *sp;
  Sampler g(13);
  std::vector<Vec3> pts;
  for (int n = 0; n < 1000; ++n) pts.push_back(g.unit_axis(s, -1.0));
  const RotationMatrix3 id = rodrigues(s, Vec3{{1, 0, 0}}, 0.0);
  const RotatedPoints same = rotate_points(s, id, pts);
  EXPECT_EQ(same.points, pts);
  EXPECT_EQ(same.max_form_drift, 0.0);
  const RotationMatrix3 r = rodrigues(s, g.unit_axis(s, -1.0), 1.234);
  EXPECT_LE(rotate_points(s, r, pts).max_form_drift, 1e-9);
}

TEST(Rotations, RotatePointsRequiresPassingDiagnostics) {
  const System& s = *sphere();
  RotationMatrix3 bad;
  bad.matrix = 2.0 * Mat3::identity();
  bad.diagnostics = diagnose_rotation(s, bad.matrix, Vec3{{1, 0, 0}});
  EXPECT_FALSE(bad.diagnostics.passed);
  const std::vector<Vec3> pts{Vec3{{1, 0, 0}}};
  EXPECT_EQ(code_of([&] { (void)rotate_points(s, bad, pts); }), ErrorCode::DiagnosticsFailed);
}

TEST(RotationsProperty, SandwichDoublesTheAngle) {
  Sampler g(19);
  for (int n = 0; n < 300; ++n) {
    const SystemPtr sp = make_system(g.form(n % 2 ? FormClass::Ellipsoid : FormClass::Hyperboloid21));
    const System& s = *sp;
    const Vec3 v = g.unit_axis(s, -1.0);
    const double theta = g.uniform(-kPi / 2, kPi / 2);
    const QuadNumber q(sp, Vec4{{std::cos(theta), 0, 0, 0}} + Vec4{{0, v[0], v[1], v[2]}} * std::sin(theta));
    const Mat3 want = rodrigues(s, v, 2 * theta).matrix;
    EXPECT_LE(ref::matrix_gap(block(sandwich_matrix(q)), want), 1e-8 * std::max(1.0, max_abs(want)));
  }
}

TEST(RotationsProperty, GroupClosure) {
  Sampler g(47);
  const SystemPtr sp = make_system(g.form(FormClass::Hyperboloid21));
  const System& s = *sp;
  for (int n = 0; n < 200; ++n) {
    const double a = g.uniform(-1, 1), b = g.uniform(-1, 1);
    const Vec3 c = g.unit_axis(s, -1.0), h = g.unit_axis(s, 1.0);
    const Mat3 cc = rodrigues(s, c, a).matrix * rodrigues(s, c, b).matrix;
    EXPECT_LE(ref::matrix_gap(cc, rodrigues(s, c, a + b).matrix), 1e-8 * std::max(1.0, max_abs(cc)));
    const Mat3 hh = rodrigues(s, h, a).matrix * rodrigues(s, h, b).matrix;
    EXPECT_LE(ref::matrix_gap(hh, rodrigues(s, h, a + b).matrix), 1e-8 * std::max(1.0, max_abs(hh)));
  }
}
