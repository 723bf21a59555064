#include "quadform/algebra.hpp"

#include <numbers>
#include <sstream>

#include "quadform/error.hpp"

namespace quadform {

namespace {
constexpr double kClassifyRelTol = 1e-10;
constexpr double kInvertRelTol = 1e-12;

Vec4 join(double s, const Vec3& v) { return Vec4{{s, v[0], v[1], v[2]}}; }
}  // namespace

SystemPtr make_system(const QuadraticForm& form) {
  StructureConstants sc = derive_constants(form);
  validate_constants(sc, form);
  return std::make_shared<const System>(System{form, sc});
}

QuadNumber::QuadNumber(SystemPtr system, double s, double i, double j, double k)
    : QuadNumber(std::move(system), Vec4{{s, i, j, k}}) {}

QuadNumber::QuadNumber(SystemPtr system, const Vec4& components)
    : system_(std::move(system)), c_(components) {
  if (!system_) throw Error(ErrorCode::InvalidInput, "number without a system");
}

QuadNumber QuadNumber::scalar(SystemPtr system, double s) {
  return QuadNumber(std::move(system), s, 0, 0, 0);
}

QuadNumber QuadNumber::pure(SystemPtr system, const Vec3& v) {
  return QuadNumber(std::move(system), join(0.0, v));
}

QuadNumber QuadNumber::basis(SystemPtr system, std::size_t index) {
  if (index > 3) throw Error(ErrorCode::InvalidInput, "basis index out of range");
  Vec4 e;
  e[index] = 1.0;
  return QuadNumber(std::move(system), e);
}

bool same_system(const QuadNumber& a, const QuadNumber& b) {
  return a.system_ptr() == b.system_ptr() || a.system().form == b.system().form;
}

void require_same_system(const QuadNumber& a, const QuadNumber& b) {
  if (!same_system(a, b)) {
    throw Error(ErrorCode::SystemMismatch, "operands belong to different number systems");
  }
}

QuadNumber operator+(const QuadNumber& a, const QuadNumber& b) {
  require_same_system(a, b);
  return QuadNumber(a.system_, a.c_ + b.c_);
}

QuadNumber operator-(const QuadNumber& a, const QuadNumber& b) {
  require_same_system(a, b);
  return QuadNumber(a.system_, a.c_ - b.c_);
}

QuadNumber operator*(const QuadNumber& a, const QuadNumber& b) { return multiply(a, b); }

Mat4 product_matrix(const System& system, const Vec4& q) {
  const Coefficients c = system.form.number_coefficients();
  const StructureConstants& k = system.constants;
  const double q0 = q[0], q1 = q[1], q2 = q[2], q3 = q[3];
  return Mat4::from_rows({
      {q0, c.A * q1 + c.D * q2 + c.E * q3, c.B * q2 + c.D * q1 + c.F * q3,
       c.C * q3 + c.E * q1 + c.F * q2},
      {q1, q0 - q2 * k.alpha1 - q3 * k.beta1, q1 * k.alpha1 - q3 * k.lambda1,
       k.lambda1 * q2 + q1 * k.beta1},
      {q2, -q2 * k.alpha2 - k.beta2 * q3, q0 + q1 * k.alpha2 + q3 * k.beta1,
       k.beta2 * q1 - k.beta1 * q2},
      {q3, -k.alpha3 * q2 + q3 * k.alpha2, k.alpha3 * q1 - q3 * k.alpha1,
       q0 - q1 * k.alpha2 + q2 * k.alpha1},
  });
}

QuadNumber multiply(const QuadNumber& a, const QuadNumber& b) {
  require_same_system(a, b);
  return QuadNumber(a.system_ptr(), product_matrix(a.system(), a.components()) * b.components());
}

QuadNumber conjugate(const QuadNumber& q) {
  return QuadNumber(q.system_ptr(), q.s(), -q.i(), -q.j(), -q.k());
}

double character(const QuadNumber& q) {
  return q.s() * q.s() - q.system().form.evaluate(q.vector_part());
}

double norm(const QuadNumber& q) { return std::sqrt(std::abs(character(q))); }

double character_scale(const QuadNumber& q) {
  return q.s() * q.s() + q.system().form.evaluate_scale(q.vector_part());
}

QuadNumber invert(const QuadNumber& q) {
  const double c = character(q);
  if (!(std::abs(c) > kInvertRelTol * character_scale(q))) {
    std::ostringstream os;
    os << "character " << c << " vanishes";
    throw Error(ErrorCode::LightlikeNotInvertible, os.str());
  }
  return conjugate(q) * (1.0 / c);
}

double scalar_product(const QuadNumber& q, const QuadNumber& p) {
  require_same_system(q, p);
  return p.s() * q.s() - quadratic(p.vector_part(), q.system().form.number_matrix(), q.vector_part());
}

Vec3 vector_product(const System& system, const Vec3& u, const Vec3& v) {
  return system.constants.cross_matrix() * cross(u, v);
}

QuadNumber commutator_product(const QuadNumber& q, const QuadNumber& p) {
  require_same_system(q, p);
  return (multiply(q, conjugate(p)) - multiply(p, conjugate(q))) * 0.5;
}

double product_decomposition_check(const QuadNumber& q, const QuadNumber& p) {
  require_same_system(q, p);
  const System& sys = q.system();
  const Vec3 vq = q.vector_part(), vp = p.vector_part();
  const double s = q.s() * p.s() + sys.delta() * sys.form.bilinear(vq, vp);
  const Vec3 v = p.vector_part() * q.s() + vq * p.s() + vector_product(sys, vq, vp);
  return max_abs(multiply(q, p).components() - join(s, v));
}

double triple_product_check(const System& system, const Vec3& u, const Vec3& v, const Vec3& w) {
  const Vec3 lhs = vector_product(system, vector_product(system, u, v), w);
  const double d = system.delta();
  const Vec3 rhs = u * (d * system.form.bilinear(v, w)) - v * (d * system.form.bilinear(u, w));
  return max_abs(lhs - rhs);
}

std::string_view to_string(CausalType t) {
  switch (t) {
    case CausalType::Spacelike: return "Spacelike";
    case CausalType::Timelike: return "Timelike";
    case CausalType::Lightlike: return "Lightlike";
    case CausalType::Ellipsoid: return "Ellipsoid";
  }
  return "Unknown";
}

CausalType classify_number(const QuadNumber& q) {
  const double c = character(q);
  const double tol = kClassifyRelTol * character_scale(q);
  if (q.system().is_ellipsoid()) {
    return c > tol ? CausalType::Ellipsoid : CausalType::Lightlike;
  }
  if (c > tol) return CausalType::Timelike;
  if (c < -tol) return CausalType::Spacelike;
  return CausalType::Lightlike;
}

CausalType classify_vector(const System& system, const Vec3& v) {
  if (system.is_ellipsoid()) return CausalType::Ellipsoid;
  const double value = system.form.evaluate(v);
  const double tol = kClassifyRelTol * system.form.evaluate_scale(v);
  if (value > tol) return CausalType::Spacelike;
  if (value < -tol) return CausalType::Timelike;
  return CausalType::Lightlike;
}

namespace {
bool form_value_is(const System& system, const Vec3& v, double target) {
  const double tol = kClassifyRelTol * std::max(1.0, system.form.evaluate_scale(v));
  return std::abs(system.form.evaluate(v) - target) <= tol;
}
bool is_zero(const Vec3& v) { return v[0] == 0.0 && v[1] == 0.0 && v[2] == 0.0; }
}  // namespace

bool on_one_sheet(const System& system, const Vec3& v) {
  return is_zero(v) || form_value_is(system, v, 1.0);
}

bool on_two_sheet(const System& system, const Vec3& v) { return form_value_is(system, v, -1.0); }

bool on_cone(const System& system, const Vec3& v) {
  return !is_zero(v) && classify_vector(system, v) == CausalType::Lightlike;
}

std::string_view to_string(PolarCase c) {
  switch (c) {
    case PolarCase::EllipsoidPolar: return "EllipsoidPolar";
    case PolarCase::SpacelikePolar: return "SpacelikePolar";
    case PolarCase::TimelikeSpacelikeAxis: return "TimelikeSpacelikeAxis";
    case PolarCase::TimelikeTimelikeAxis: return "TimelikeTimelikeAxis";
    case PolarCase::TimelikeLightlikeAxis: return "TimelikeLightlikeAxis";
    case PolarCase::LightlikeSpacelikeAxis: return "LightlikeSpacelikeAxis";
    case PolarCase::LightlikeLightlikeAxis: return "LightlikeLightlikeAxis";
  }
  return "Unknown";
}

PolarForm polar_decompose(const QuadNumber& q) {
  const Vec3 v = q.vector_part();
  const double q0 = q.s();
  if (q0 == 0.0 && is_zero(v)) throw Error(ErrorCode::ZeroNumber, "zero has no polar form");

  const System& sys = q.system();
  const double c = character(q);
  const double form_value = sys.form.evaluate(v);

  PolarForm pf;
  pf.epsilon = q0 < 0.0 ? -1 : 1;
  pf.axis_defined = !is_zero(v);

  // q = ‖q‖(cos θ + v sin θ), θ = arctan(‖v_q‖/|q₀|) or π − arctan(...) for q₀ < 0
  const auto circular = [&](PolarCase which) {
    const double vn = std::sqrt(std::abs(form_value));
    pf.polar_case = which;
    pf.magnitude = std::sqrt(std::abs(c));
    pf.axis = vn > 0.0 ? v / vn : Vec3{};
    pf.angle = std::atan2(vn, q0);
    return pf;
  };
  // θ = ln((|q₀| + ‖v_q‖)/‖q‖)
  const auto hyperbolic = [&](PolarCase which) {
    const double vn = std::sqrt(std::abs(form_value));
    pf.polar_case = which;
    pf.magnitude = std::sqrt(std::abs(c));
    pf.axis = v / vn;
    pf.angle = std::log((std::abs(q0) + vn) / pf.magnitude);
    return pf;
  };
  // q = |q₀|(ε + v), v = v_q/|q₀|
  const auto null_axis = [&](PolarCase which, double angle) {
    pf.polar_case = which;
    pf.magnitude = std::abs(q0);
    pf.axis = v / std::abs(q0);
    pf.angle = angle;
    return pf;
  };

  if (sys.is_ellipsoid()) return circular(PolarCase::EllipsoidPolar);

  const CausalType number_type = classify_number(q);
  const CausalType vector_type = classify_vector(sys, v);
  switch (number_type) {
    case CausalType::Spacelike:
      return hyperbolic(PolarCase::SpacelikePolar);
    case CausalType::Timelike:
      if (vector_type == CausalType::Spacelike) return hyperbolic(PolarCase::TimelikeSpacelikeAxis);
      if (vector_type == CausalType::Timelike) return circular(PolarCase::TimelikeTimelikeAxis);
      return null_axis(PolarCase::TimelikeLightlikeAxis, 0.0);
    default:
      break;
  }
  if (vector_type == CausalType::Lightlike || q0 == 0.0) {
    pf.polar_case = PolarCase::LightlikeLightlikeAxis;
    pf.magnitude = 0.0;
    pf.axis = v;
    pf.angle = 1.0;
    return pf;
  }
  return null_axis(PolarCase::LightlikeSpacelikeAxis, 1.0);
}

QuadNumber from_polar(const SystemPtr& system, const PolarForm& pf) {
  const double m = pf.magnitude, t = pf.angle, e = pf.epsilon;
  switch (pf.polar_case) {
    case PolarCase::EllipsoidPolar:
    case PolarCase::TimelikeTimelikeAxis:
      return QuadNumber(system, join(m * std::cos(t), pf.axis * (m * std::sin(t))));
    case PolarCase::SpacelikePolar:
      return QuadNumber(system, join(e * m * std::sinh(t), pf.axis * (m * std::cosh(t))));
    case PolarCase::TimelikeSpacelikeAxis:
      return QuadNumber(system, join(e * m * std::cosh(t), pf.axis * (m * std::sinh(t))));
    case PolarCase::TimelikeLightlikeAxis:
    case PolarCase::LightlikeSpacelikeAxis:
      return QuadNumber(system, join(e * m, pf.axis * m));
    case PolarCase::LightlikeLightlikeAxis:
      return QuadNumber::pure(system, pf.axis);
  }
  throw Error(ErrorCode::InvalidInput, "unknown polar case");
}

}  // namespace quadform
