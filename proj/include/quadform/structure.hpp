#pragma once

#include <array>
#include <string_view>

#include "quadform/form.hpp"
#include "quadform/linalg.hpp"

namespace quadform {

/// Structure constants of the number system:
///   ij = D + α₁i + α₂j + α₃k,  ik = E + β₁i + β₂j + β₃k,  jk = F + λ₁i + λ₂j + λ₃k
/// with λ₂ = −β₁, λ₃ = α₁, β₃ = −α₂.
struct StructureConstants {
  double alpha1 = 0, alpha2 = 0, alpha3 = 0;
  double beta1 = 0, beta2 = 0, lambda1 = 0;
  double lambda2 = 0, lambda3 = 0, beta3 = 0;
  /// |Γ| = sqrt(|det 𝔐|)
  double gamma = 0;

  /// Builds the dependent constants from the six free ones.
  static StructureConstants from_free(double alpha1, double alpha2, double alpha3, double beta1,
                                      double beta2, double lambda1, double gamma = 0.0);

  /// True when λ₂ = −β₁, λ₃ = α₁ and β₃ = −α₂ hold exactly.
  bool dependents_consistent() const;

  Vec3 alpha() const { return Vec3{{alpha1, alpha2, alpha3}}; }
  Vec3 beta() const { return Vec3{{beta1, beta2, beta3}}; }
  Vec3 lambda() const { return Vec3{{lambda1, lambda2, lambda3}}; }

  /// Symmetric matrix K with u × v = K·(u ×_E v): rows
  /// (λ₁, −β₁, α₁), (−β₁, −β₂, α₂), (α₁, α₂, α₃).
  Mat3 cross_matrix() const;
};

/// Constants from the minors of 𝔐 (no cofactor sign):
///   α₁ = −M₁₃/(Δ|Γ|), α₂ = M₂₃/(Δ|Γ|), α₃ = −M₃₃/(Δ|Γ|),
///   β₁ = −M₁₂/(Δ|Γ|), β₂ = M₂₂/(Δ|Γ|), λ₁ = −M₁₁/(Δ|Γ|).
StructureConstants derive_constants(const QuadraticForm& form);

/// The six identities A = α₂²+α₃β₂, B = α₁²−λ₁α₃, C = β₁²+λ₁β₂,
/// D = −(α₁α₂+α₃β₁), E = −(β₂α₁−α₂β₁), F = α₁β₁+λ₁α₂.
Coefficients implied_coefficients(const StructureConstants& sc);

struct ConstantResiduals {
  /// |lhs − rhs| for A, B, C, D, E, F.
  std::array<double, 6> residuals{};
  double tolerance = 0;
  bool ok = false;

  double max() const;
};

/// Residuals against the form's number-system coefficients. Accepted when
/// every residual is <= 1e-8·max(1, max|A..F|).
ConstantResiduals constant_residuals(const StructureConstants& sc, const QuadraticForm& form);

/// As constant_residuals but throws InconsistentConstants when not ok.
ConstantResiduals validate_constants(const StructureConstants& sc, const QuadraticForm& form);

/// Products of the basis {1, i, j, k}; entry (r, c) is e_r·e_c as (s, i, j, k).
struct MultiplicationTable {
  std::array<std::array<Vec4, 4>, 4> entries{};

  const Vec4& at(std::size_t r, std::size_t c) const { return entries[r][c]; }
};

MultiplicationTable multiplication_table(const StructureConstants& sc, const QuadraticForm& form);

std::string_view basis_name(std::size_t index);

}  // namespace quadform
