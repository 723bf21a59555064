#include "quadform/rotations.hpp"

#include <sstream>

#include "quadform/error.hpp"

namespace quadform {

namespace {
constexpr double kUnitTolerance = 1e-9;

std::string describe(double value) {
  std::ostringstream os;
  os.precision(17);
  os << value;
  return os.str();
}
}  // namespace

Mat4 left_matrix(const QuadNumber& q) { return product_matrix(q.system(), q.components()); }

Mat4 right_matrix(const QuadNumber& q) {
  const Coefficients c = q.system().form.number_coefficients();
  const StructureConstants& k = q.system().constants;
  const double s = q.s(), x = q.i(), y = q.j(), z = q.k();
  return Mat4::from_rows({
      {s, y * c.D + z * c.E + c.A * x, x * c.D + c.B * y + c.F * z, x * c.E + c.C * z + c.F * y},
      {x, s + y * k.alpha1 + z * k.beta1, z * k.lambda1 - x * k.alpha1, -x * k.beta1 - y * k.lambda1},
      {y, y * k.alpha2 + z * k.beta2, s - x * k.alpha2 - z * k.beta1, y * k.beta1 - x * k.beta2},
      {z, y * k.alpha3 - z * k.alpha2, z * k.alpha1 - x * k.alpha3, s + x * k.alpha2 - y * k.alpha1},
  });
}

Mat4 sandwich_matrix(const QuadNumber& q) {
  const double c = character(q);
  if (!(std::abs(c - 1.0) <= kUnitTolerance)) {
    throw Error(ErrorCode::NotUnit, "sandwich needs 𝓒(q) = 1, got " + describe(c));
  }
  return left_matrix(q) * right_matrix(conjugate(q));
}

QuadNumber sandwich_apply(const QuadNumber& q, const QuadNumber& p) {
  return multiply(multiply(q, p), conjugate(q));
}

Mat3 skew_matrix(const System& system, const Vec3& v) {
  const StructureConstants& k = system.constants;
  const double x = v[0], y = v[1], z = v[2];
  return Mat3::from_rows({
      {-k.alpha1 * y - k.beta1 * z, k.alpha1 * x - k.lambda1 * z, k.beta1 * x + k.lambda1 * y},
      {-k.beta2 * z - k.alpha2 * y, k.alpha2 * x + k.beta1 * z, k.beta2 * x - k.beta1 * y},
      {k.alpha2 * z - k.alpha3 * y, k.alpha3 * x - k.alpha1 * z, k.alpha1 * y - k.alpha2 * x},
  });
}

Mat3 sigma_coefficients(const System& system, const Vec3& v) {
  const Coefficients c = system.form.number_coefficients();
  const double x = v[0], y = v[1], z = v[2];
  return Mat3::from_rows({
      {c.B * y * y + c.C * z * z + c.D * x * y + c.E * x * z + 2 * c.F * y * z,
       c.D * x * x + c.B * x * y + c.F * x * z, c.E * x * x + c.F * x * y + c.C * x * z},
      {c.D * y * y + c.E * y * z + c.A * x * y,
       c.A * x * x + c.C * z * z + c.D * x * y + 2 * c.E * x * z + c.F * y * z,
       c.F * y * y + c.C * y * z + c.E * x * y},
      {c.E * z * z + c.D * y * z + c.A * x * z, c.F * z * z + c.D * x * z + c.B * y * z,
       c.A * x * x + c.B * y * y + 2 * c.D * x * y + c.E * x * z + c.F * y * z},
  });
}

std::string_view to_string(RotationMethod m) {
  switch (m) {
    case RotationMethod::Sandwich: return "sandwich";
    case RotationMethod::Rodrigues: return "rodrigues";
    case RotationMethod::Cayley: return "cayley";
  }
  return "unknown";
}

std::string_view to_string(RodriguesBranch b) {
  switch (b) {
    case RodriguesBranch::Circular: return "circular";
    case RodriguesBranch::Hyperbolic: return "hyperbolic";
    case RodriguesBranch::Nilpotent: return "nilpotent";
  }
  return "unknown";
}

RotationDiagnostics diagnose_rotation(const System& system, const Mat3& r, const Vec3& axis) {
  const Mat3& metric = system.form.metric();
  const double r_scale = std::max(1.0, max_abs(r));
  RotationDiagnostics d;
  d.congruence_residual =
      max_abs(r.transposed() * metric * r - metric) / (max_abs(metric) * r_scale * r_scale);
  d.determinant = determinant(r);
  d.determinant_residual = std::abs(d.determinant - 1.0) / (r_scale * r_scale * r_scale);
  const double axis_scale = max_abs(axis);
  d.axis_residual = axis_scale > 0.0 ? max_abs(r * axis - axis) / (r_scale * axis_scale) : 0.0;
  d.passed = d.congruence_residual <= kRotationTolerance &&
             d.determinant_residual <= kRotationTolerance && d.axis_residual <= kRotationTolerance;
  return d;
}

namespace {
RotationMatrix3 finish(const System& system, RotationMatrix3 r) {
  r.diagnostics = diagnose_rotation(system, r.matrix, r.axis);
  if (!r.diagnostics.passed) {
    std::ostringstream os;
    os << to_string(r.method) << " rotation failed its postconditions: congruence "
       << r.diagnostics.congruence_residual << ", det " << r.diagnostics.determinant << ", axis "
       << r.diagnostics.axis_residual;
    throw Error(ErrorCode::DiagnosticsFailed, os.str());
  }
  return r;
}
}  // namespace

RotationMatrix3 sandwich_rotation(const QuadNumber& q) {
  const Mat4 full = sandwich_matrix(q);
  RotationMatrix3 r;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) r.matrix(i, j) = full(i + 1, j + 1);
  r.method = RotationMethod::Sandwich;
  r.axis = q.vector_part();
  return finish(q.system(), r);
}

std::optional<RodriguesBranch> rodrigues_branch(const System& system, const Vec3& v) {
  const double value = system.form.evaluate(v);
  if (std::abs(value) <= kUnitTolerance * system.form.evaluate_scale(v)) {
    return RodriguesBranch::Nilpotent;
  }
  if (std::abs(value + 1.0) <= kUnitTolerance) return RodriguesBranch::Circular;
  if (std::abs(value - 1.0) <= kUnitTolerance) return RodriguesBranch::Hyperbolic;
  return std::nullopt;
}

RotationMatrix3 rodrigues(const System& system, const Vec3& v, double theta, bool normalize) {
  Vec3 axis = v;
  if (normalize && rodrigues_branch(system, axis) != RodriguesBranch::Nilpotent) {
    axis = axis / std::sqrt(std::abs(system.form.evaluate(axis)));
  }
  const auto branch = rodrigues_branch(system, axis);
  if (!branch) {
    throw Error(ErrorCode::AxisNotUnit,
                "rotation axis has form value " + describe(system.form.evaluate(axis)) +
                    "; expected -1, 1 or 0");
  }
  RotationMatrix3 r;
  r.matrix = rodrigues_matrix(system, axis, theta, *branch);
  r.method = RotationMethod::Rodrigues;
  r.axis = axis;
  r.angle = theta;
  r.branch = branch;
  return finish(system, r);
}

Mat3 rodrigues_matrix(const System& system, const Vec3& v, double theta, RodriguesBranch branch) {
  const Mat3 s = skew_matrix(system, v);
  const Mat3 s2 = s * s;
  const Mat3 id = Mat3::identity();
  switch (branch) {
    case RodriguesBranch::Circular:
      return id + std::sin(theta) * s + (1.0 - std::cos(theta)) * s2;
    case RodriguesBranch::Hyperbolic:
      return id + std::sinh(theta) * s - (1.0 - std::cosh(theta)) * s2;
    case RodriguesBranch::Nilpotent:
      return id - theta * s + (0.5 * theta * theta) * s2;
  }
  throw Error(ErrorCode::InvalidInput, "unknown Rodrigues branch");
}

Mat3 expanded_rodrigues(const System& system, const Vec3& v, double theta, RodriguesBranch branch) {
  const StructureConstants& k = system.constants;
  const Mat3 sg = sigma_coefficients(system, v);
  const double x = v[0], y = v[1], z = v[2];
  const auto sigma = [&](int i, int j) { return sg(i - 1, j - 1); };
  switch (branch) {
    case RodriguesBranch::Circular: {
      const double s = std::sin(theta), c = std::cos(theta);
      return Mat3::from_rows({
          {(1 - c) * sigma(1, 1) - s * (y * k.alpha1 + z * k.beta1) + 1,
           (c - 1) * sigma(1, 2) + x * k.alpha1 * s - z * k.lambda1 * s,
           (c - 1) * sigma(1, 3) + x * k.beta1 * s + y * k.lambda1 * s},
          {sigma(2, 1) * (c - 1) - s * (y * k.alpha2 + z * k.beta2),
           (1 - c) * sigma(2, 2) + x * k.alpha2 * s + z * k.beta1 * s + 1,
           sigma(2, 3) * (c - 1) + x * k.beta2 * s - y * k.beta1 * s},
          {(c - 1) * sigma(3, 1) + (z * k.alpha2 - y * k.alpha3) * s,
           (c - 1) * sigma(3, 2) + (x * k.alpha3 - z * k.alpha1) * s,
           sigma(3, 3) * (1 - c) + (y * k.alpha1 - x * k.alpha2) * s + 1},
      });
    }
    case RodriguesBranch::Hyperbolic: {
      const double s = std::sinh(theta), c = std::cosh(theta);
      return Mat3::from_rows({
          {sigma(1, 1) * (c - 1) - s * (y * k.alpha1 + z * k.beta1) + 1,
           sigma(1, 2) * (1 - c) + x * k.alpha1 * s - z * k.lambda1 * s,
           sigma(1, 3) * (1 - c) + (x * k.beta1 + y * k.lambda1) * s},
          {sigma(2, 1) * (1 - c) - (y * k.alpha2 + z * k.beta2) * s,
           sigma(2, 2) * (c - 1) + (x * k.alpha2 + z * k.beta1) * s + 1,
           sigma(2, 3) * (1 - c) + (x * k.beta2 - y * k.beta1) * s},
          {sigma(3, 1) * (1 - c) + (z * k.alpha2 - y * k.alpha3) * s,
           sigma(3, 2) * (1 - c) + (x * k.alpha3 - z * k.alpha1) * s,
           sigma(3, 3) * (c - 1) + (y * k.alpha1 - x * k.alpha2) * s + 1},
      });
    }
    case RodriguesBranch::Nilpotent: {
      const double t = theta, h = 0.5 * theta * theta;
      return Mat3::from_rows({
          {h * sigma(1, 1) + (y * k.alpha1 + z * k.beta1) * t + 1,
           -h * sigma(1, 2) + (z * k.lambda1 - x * k.alpha1) * t,
           -h * sigma(1, 3) - y * t * k.lambda1 - x * t * k.beta1},
          {-h * sigma(2, 1) + t * (y * k.alpha2 + z * k.beta2),
           h * sigma(2, 2) - (x * k.alpha2 + z * k.beta1) * t + 1,
           -h * sigma(2, 3) + y * t * k.beta1 - x * t * k.beta2},
          {-h * sigma(3, 1) + (y * k.alpha3 - z * k.alpha2) * t,
           -h * sigma(3, 2) + (z * k.alpha1 - x * k.alpha3) * t,
           h * sigma(3, 3) + x * t * k.alpha2 - y * t * k.alpha1 + 1},
      });
    }
  }
  throw Error(ErrorCode::InvalidInput, "unknown Rodrigues branch");
}

RotationMatrix3 cayley(const System& system, const Vec3& v) {
  const double value = system.form.evaluate(v);
  if (std::abs(value - 1.0) <= kUnitTolerance) {
    throw Error(ErrorCode::UnitSpacelikeAxis, "I + 𝔖 is singular for a unit spacelike axis");
  }
  RotationMatrix3 r;
  r.matrix = cayley_matrix(system, v);
  r.method = RotationMethod::Cayley;
  r.axis = v;
  const CayleyAngle a = cayley_angle(system, v);
  r.angle = a.angle;
  return finish(system, r);
}

Mat3 cayley_matrix(const System& system, const Vec3& v) {
  const Mat3 s = skew_matrix(system, v);
  const Mat3 id = Mat3::identity();
  return (id - s) * inverse(id + s);
}

Mat3 cayley_closed_form(const System& system, const Vec3& v) {
  const Coefficients c = system.form.number_coefficients();
  const StructureConstants& k = system.constants;
  const double x = v[0], y = v[1], z = v[2];
  const double A = c.A, B = c.B, C = c.C, D = c.D, E = c.E, F = c.F;
  const double rho = 1.0 / (system.delta() * system.form.bilinear(v, v) - 1.0);
  const Mat3 m = Mat3::from_rows({
      {A * x * x - B * y * y - C * z * z - 2 * F * y * z - 2 * z * k.beta1 - 2 * y * k.alpha1 - 1,
       2 * (F * x * z + B * x * y + D * x * x + x * k.alpha1 - z * k.lambda1),
       2 * (E * x * x + F * x * y + C * x * z + x * k.beta1 + y * k.lambda1)},
      {2 * (A * x * y + D * y * y + E * y * z - z * k.beta2 - y * k.alpha2),
       -A * x * x + B * y * y - C * z * z - 2 * E * x * z + 2 * z * k.beta1 + 2 * x * k.alpha2 - 1,
       2 * (F * y * y + E * x * y + C * y * z + x * k.beta2 - y * k.beta1)},
      {2 * (A * x * z + E * z * z + D * y * z + z * k.alpha2 - y * k.alpha3),
       2 * (F * z * z + D * x * z + B * y * z + x * k.alpha3 - z * k.alpha1),
       -A * x * x - B * y * y + C * z * z - 2 * x * y * D + 2 * y * k.alpha1 - 2 * x * k.alpha2 - 1},
  });
  return rho * m;
}

double closed_form_cayley_check(const System& system, const Vec3& v) {
  return max_abs(cayley_closed_form(system, v) - cayley_matrix(system, v));
}

CayleyAngle cayley_angle(const System& system, const Vec3& v) {
  const double value = system.form.evaluate(v);
  if (v == Vec3{}) return {CayleyAngleKind::Circular, 0.0};
  if (system.is_ellipsoid() || value < -kUnitTolerance * system.form.evaluate_scale(v)) {
    return {CayleyAngleKind::Circular, 2.0 * std::atan(std::sqrt(std::abs(value)))};
  }
  if (std::abs(value) <= kUnitTolerance * system.form.evaluate_scale(v)) {
    return {CayleyAngleKind::Lightlike, 1.0};
  }
  if (value < 1.0) {
    return {CayleyAngleKind::Hyperbolic, std::acosh((1.0 + value) / (1.0 - value))};
  }
  return {CayleyAngleKind::Undefined, 0.0};
}

RotatedPoints rotate_points(const System& system, const RotationMatrix3& r,
                            std::span<const Vec3> points) {
  if (!r.diagnostics.passed) {
    throw Error(ErrorCode::DiagnosticsFailed, "refusing to apply a rotation with failed diagnostics");
  }
  RotatedPoints out;
  out.points.reserve(points.size());
  for (const Vec3& p : points) {
    const Vec3 q = r.matrix * p;
    out.max_form_drift =
        std::max(out.max_form_drift, std::abs(system.form.evaluate(q) - system.form.evaluate(p)));
    out.points.push_back(q);
  }
  return out;
}

}  // namespace quadform
