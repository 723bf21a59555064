#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "quadform/algebra.hpp"
#include "quadform/linalg.hpp"

namespace quadform {

/// L(q) with L(q)·p = q·p.
Mat4 left_matrix(const QuadNumber& q);
/// R(q) with R(q)·p = p·q.
Mat4 right_matrix(const QuadNumber& q);

/// L(q)·R(q̄) for a unit q (𝓒(q) = 1 within 1e-9); throws NotUnit otherwise.
/// The result is 1 ⊕ M where M preserves the metric and fixes v_q.
Mat4 sandwich_matrix(const QuadNumber& q);

/// q·p·q̄
QuadNumber sandwich_apply(const QuadNumber& q, const QuadNumber& p);

/// The operator w ↦ v × w. Equals K·[v]× with K the structure cross matrix.
Mat3 skew_matrix(const System& system, const Vec3& v);

/// Signed entries σ_ij of the expanded Rodrigues matrices: σ_ii = (𝔖²)_ii and
/// σ_ij = −(𝔖²)_ij off the diagonal, written out in terms of A..F.
Mat3 sigma_coefficients(const System& system, const Vec3& v);

enum class RotationMethod { Sandwich, Rodrigues, Cayley };
enum class RodriguesBranch { Circular, Hyperbolic, Nilpotent };

std::string_view to_string(RotationMethod m);
std::string_view to_string(RodriguesBranch b);

struct RotationDiagnostics {
  /// max|Rᵀ𝔐R − 𝔐| / (max|𝔐|·max(1, max|R|²))
  double congruence_residual = 0;
  double determinant = 0;
  /// |det R − 1| / max(1, max|R|³)
  double determinant_residual = 0;
  /// max|R·v − v| / (max(1, max|R|)·max|v|); 0 for a zero axis
  double axis_residual = 0;
  bool passed = false;
};

/// Relative tolerance applied to every rotation diagnostic.
inline constexpr double kRotationTolerance = 1e-9;

struct RotationMatrix3 {
  Mat3 matrix;
  RotationMethod method = RotationMethod::Rodrigues;
  Vec3 axis;
  double angle = 0;
  std::optional<RodriguesBranch> branch;
  RotationDiagnostics diagnostics;
};

RotationDiagnostics diagnose_rotation(const System& system, const Mat3& r, const Vec3& axis);

/// Lower-right block of sandwich_matrix(q) with diagnostics; throws NotUnit or
/// DiagnosticsFailed.
RotationMatrix3 sandwich_rotation(const QuadNumber& q);

/// Branch implied by 𝔙(v): −1 circular, +1 hyperbolic, 0 nilpotent (1e-9).
/// Empty when v is none of these.
std::optional<RodriguesBranch> rodrigues_branch(const System& system, const Vec3& v);

/// e^{θ𝔖} for unit ellipsoid/timelike (𝔙 = −1) and unit spacelike (𝔙 = 1)
/// axes, e^{−θ𝔖} for lightlike axes. With normalize, non-lightlike axes are
/// rescaled to |𝔙| = 1 first. Throws AxisNotUnit or DiagnosticsFailed.
RotationMatrix3 rodrigues(const System& system, const Vec3& v, double theta,
                          bool normalize = false);

/// The branch formula alone, without dispatch or diagnostics.
Mat3 rodrigues_matrix(const System& system, const Vec3& v, double theta, RodriguesBranch branch);

/// The expanded circular/hyperbolic/nilpotent matrices written with σ_ij.
Mat3 expanded_rodrigues(const System& system, const Vec3& v, double theta, RodriguesBranch branch);

/// (I − 𝔖)(I + 𝔖)⁻¹. Throws UnitSpacelikeAxis when 𝔙(v) = 1 within 1e-9.
RotationMatrix3 cayley(const System& system, const Vec3& v);

/// (I − 𝔖)(I + 𝔖)⁻¹ without diagnostics; throws SingularMatrix.
Mat3 cayley_matrix(const System& system, const Vec3& v);

/// ρ·ℳ with ρ = 1/(Δ⟨v,v⟩ − 1), the entrywise closed form of the Cayley map.
Mat3 cayley_closed_form(const System& system, const Vec3& v);

/// max|ρℳ − (I − 𝔖)(I + 𝔖)⁻¹|
double closed_form_cayley_check(const System& system, const Vec3& v);

enum class CayleyAngleKind { Circular, Hyperbolic, Lightlike, Undefined };

struct CayleyAngle {
  CayleyAngleKind kind = CayleyAngleKind::Undefined;
  /// θ from tan θ = 2‖v‖/(1 − ‖v‖²) (taken as 2·arctan‖v‖), from
  /// cosh θ = (1 + ⟨v,v⟩)/(1 − ⟨v,v⟩), or 1 for lightlike axes.
  double angle = 0;
};

/// Rotation angle of cayley(v). Hyperbolic angles are defined for 0 < 𝔙 < 1.
CayleyAngle cayley_angle(const System& system, const Vec3& v);

struct RotatedPoints {
  std::vector<Vec3> points;
  /// max |𝔙(p') − 𝔙(p)|
  double max_form_drift = 0;
};

/// Throws DiagnosticsFailed if r does not carry passing diagnostics.
RotatedPoints rotate_points(const System& system, const RotationMatrix3& r,
                            std::span<const Vec3> points);

}  // namespace quadform
