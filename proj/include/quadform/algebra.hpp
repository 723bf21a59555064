#pragma once

#include <memory>
#include <string_view>

#include "quadform/form.hpp"
#include "quadform/linalg.hpp"
#include "quadform/structure.hpp"

namespace quadform {

/// A quadratic form together with the number system built on it.
struct System {
  QuadraticForm form;
  StructureConstants constants;

  int delta() const { return form.delta(); }
  bool is_ellipsoid() const { return form.is_ellipsoid(); }
};

using SystemPtr = std::shared_ptr<const System>;

/// Derives and validates the structure constants of `form`.
SystemPtr make_system(const QuadraticForm& form);

/// q₀ + q₁i + q₂j + q₃k in a specific system. Immutable.
class QuadNumber {
 public:
  QuadNumber(SystemPtr system, double s, double i, double j, double k);
  QuadNumber(SystemPtr system, const Vec4& components);

  static QuadNumber scalar(SystemPtr system, double s);
  static QuadNumber pure(SystemPtr system, const Vec3& v);
  /// Basis element 1, i, j or k for index 0..3.
  static QuadNumber basis(SystemPtr system, std::size_t index);

  double s() const { return c_[0]; }
  double i() const { return c_[1]; }
  double j() const { return c_[2]; }
  double k() const { return c_[3]; }
  double operator[](std::size_t n) const { return c_[n]; }

  /// S(q)
  double scalar_part() const { return c_[0]; }
  /// v_q
  Vec3 vector_part() const { return Vec3{{c_[1], c_[2], c_[3]}}; }
  const Vec4& components() const { return c_; }

  const System& system() const { return *system_; }
  const SystemPtr& system_ptr() const { return system_; }

  friend QuadNumber operator+(const QuadNumber& a, const QuadNumber& b);
  friend QuadNumber operator-(const QuadNumber& a, const QuadNumber& b);
  friend QuadNumber operator-(const QuadNumber& a) { return QuadNumber(a.system_, -a.c_); }
  friend QuadNumber operator*(const QuadNumber& a, double s) { return QuadNumber(a.system_, a.c_ * s); }
  friend QuadNumber operator*(double s, const QuadNumber& a) { return a * s; }
  friend QuadNumber operator*(const QuadNumber& a, const QuadNumber& b);

 private:
  SystemPtr system_;
  Vec4 c_;
};

/// Numbers compose only within one system: same object or identical form.
bool same_system(const QuadNumber& a, const QuadNumber& b);
/// Throws SystemMismatch unless same_system(a, b).
void require_same_system(const QuadNumber& a, const QuadNumber& b);

/// 4×4 matrix X(q) with X(q)·p = q·p, the explicit expansion of the product.
Mat4 product_matrix(const System& system, const Vec4& q);

QuadNumber multiply(const QuadNumber& a, const QuadNumber& b);

QuadNumber conjugate(const QuadNumber& q);

/// 𝓒(q) = q·q̄ = q₀² − 𝔙(v_q).
double character(const QuadNumber& q);

/// sqrt(|𝓒(q)|)
double norm(const QuadNumber& q);

/// Magnitude scale of the terms in 𝓒(q), used for relative tolerances.
double character_scale(const QuadNumber& q);

/// q̄/𝓒(q); throws LightlikeNotInvertible when |𝓒| <= 1e-12·scale.
QuadNumber invert(const QuadNumber& q);

/// ⟨q,p⟩ = (q p̄ + p q̄)/2 in closed form.
double scalar_product(const QuadNumber& q, const QuadNumber& p);

/// Determinant-form vector product u × v = K·(u ×_E v).
Vec3 vector_product(const System& system, const Vec3& u, const Vec3& v);

/// (q p̄ − p q̄)/2. For pure q, p this is vector_product(v_p, v_q).
QuadNumber commutator_product(const QuadNumber& q, const QuadNumber& p);

/// Max component difference between q·p and
/// S_qS_p + S_q v_p + S_p v_q + Δ⟨v_q,v_p⟩ + v_q × v_p.
double product_decomposition_check(const QuadNumber& q, const QuadNumber& p);

/// Max component difference of (u×v)×w and Δ⟨v,w⟩u − Δ⟨u,w⟩v.
double triple_product_check(const System& system, const Vec3& u, const Vec3& v, const Vec3& w);

enum class CausalType { Spacelike, Timelike, Lightlike, Ellipsoid };

std::string_view to_string(CausalType t);

/// Spacelike if 𝓒 < −tol, Lightlike if |𝓒| <= tol, Timelike if 𝓒 > tol, with
/// tol = 1e-10·max(1, character_scale(q)). Nonzero numbers of ellipsoid
/// systems are Ellipsoid.
CausalType classify_number(const QuadNumber& q);

/// Sign of 𝔙(v): Timelike if negative, Spacelike if positive. Ellipsoid
/// systems report Ellipsoid.
CausalType classify_vector(const System& system, const Vec3& v);

/// 𝔙(v) = 1 (1-sheeted hyperboloid, or the origin).
bool on_one_sheet(const System& system, const Vec3& v);
/// 𝔙(v) = −1 (2-sheeted hyperboloid, or the unit ellipsoid in ellipsoid systems).
bool on_two_sheet(const System& system, const Vec3& v);
/// 𝔙(v) = 0, v ≠ 0.
bool on_cone(const System& system, const Vec3& v);

enum class PolarCase {
  EllipsoidPolar,
  SpacelikePolar,
  TimelikeSpacelikeAxis,
  TimelikeTimelikeAxis,
  TimelikeLightlikeAxis,
  LightlikeSpacelikeAxis,
  LightlikeLightlikeAxis,
};

std::string_view to_string(PolarCase c);

struct PolarForm {
  /// ‖q‖, or |q₀| when the number or its vector is lightlike (0 when both are).
  double magnitude = 0;
  /// Unit axis, v_q/|q₀| for a lightlike axis with q₀ ≠ 0, raw v_q when q is a
  /// pure lightlike vector.
  Vec3 axis;
  /// Argument: radians, rapidity, or 1 for lightlike numbers.
  double angle = 0;
  /// sign(q₀), +1 when q₀ = 0.
  int epsilon = 1;
  PolarCase polar_case = PolarCase::EllipsoidPolar;
  /// False when v_q = 0 and the axis is meaningless.
  bool axis_defined = true;
};

/// Throws ZeroNumber for q = 0.
PolarForm polar_decompose(const QuadNumber& q);

QuadNumber from_polar(const SystemPtr& system, const PolarForm& pf);

}  // namespace quadform
