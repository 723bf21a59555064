#pragma once

#include <string_view>

#include "quadform/linalg.hpp"

namespace quadform {

/// Counts of positive, zero and negative eigenvalues.
struct Signature {
  int positive = 0;
  int zero = 0;
  int negative = 0;

  friend constexpr bool operator==(const Signature&, const Signature&) = default;
};

enum class FormClass { Ellipsoid, Hyperboloid21, Hyperboloid12, Degenerate };

std::string_view to_string(FormClass c);

/// Coefficients of A x² + B y² + C z² + 2D xy + 2E xz + 2F yz.
struct Coefficients {
  double A = 0, B = 0, C = 0, D = 0, E = 0, F = 0;

  Mat3 matrix() const;
  static Coefficients from_matrix(const Mat3& m);
};

/// Signature of a symmetric matrix. An eigenvalue counts as zero when
/// |λ| <= 1e-10 · max(1, gershgorin_scale(m)).
Signature signature(const Mat3& m);

/// Zero-eigenvalue threshold used by signature().
double zero_eigenvalue_tolerance(const Mat3& m);

/// A non-degenerate ternary quadratic form.
///
/// The caller supplies the metric 𝔐 whose quadric is to be preserved. The sign
/// Δ is -1 for positive definite metrics and +1 for Lorentz-type metrics, and
/// the number system is built on M = Δ·𝔐. Negative definite and (1,0,2)
/// inputs are negated to (3,0,0) and (2,0,1) respectively; the quadric family
/// is the same and flags record the normalization.
class QuadraticForm {
 public:
  /// Rejects matrices that are not symmetric to 1e-12 per entry (NotSymmetric)
  /// and matrices with a zero eigenvalue (DegenerateForm).
  static QuadraticForm from_metric(const Mat3& metric);

  /// Coefficients in the surface convention, i.e. they describe 𝔐.
  static QuadraticForm from_coefficients(const Coefficients& surface);

  /// Stored metric 𝔐 (after any normalization).
  const Mat3& metric() const { return metric_; }
  /// M = Δ·𝔐, the matrix of the number system's form.
  const Mat3& number_matrix() const { return number_matrix_; }
  /// A..F of the number system (entries of number_matrix()).
  Coefficients number_coefficients() const { return Coefficients::from_matrix(number_matrix_); }

  int delta() const { return delta_; }
  bool is_ellipsoid() const { return delta_ < 0; }

  /// Signature of the stored metric: (3,0,0) or (2,0,1).
  Signature signature() const { return signature_; }
  /// Signature of the matrix as supplied.
  Signature input_signature() const { return input_signature_; }
  /// Class of the supplied matrix.
  FormClass form_class() const { return form_class_; }

  /// Input was negative definite and has been negated.
  bool negated_negative_definite() const { return negated_negative_definite_; }
  /// Input had signature (1,0,2) and has been negated.
  bool negated_hyperboloid12() const { return negated_hyperboloid12_; }
  bool negated() const { return negated_negative_definite_ || negated_hyperboloid12_; }

  /// Ascending eigenvalues of the stored metric.
  const Vec3& eigenvalues() const { return eigenvalues_; }

  /// vᵀ·M·v, the number-system form value (Δ·vᵀ𝔐v).
  double evaluate(const Vec3& v) const { return quadratic(v, number_matrix_, v); }

  /// uᵀ·𝔐·v.
  double bilinear(const Vec3& u, const Vec3& v) const { return quadratic(u, metric_, v); }

  /// Sum of |M_ij·v_i·v_j|: the magnitude scale of evaluate(v).
  double evaluate_scale(const Vec3& v) const;

  friend bool operator==(const QuadraticForm& a, const QuadraticForm& b) {
    return a.metric_ == b.metric_ && a.delta_ == b.delta_;
  }

 private:
  QuadraticForm() = default;

  Mat3 metric_;
  Mat3 number_matrix_;
  Vec3 eigenvalues_;
  int delta_ = -1;
  Signature signature_;
  Signature input_signature_;
  FormClass form_class_ = FormClass::Ellipsoid;
  bool negated_negative_definite_ = false;
  bool negated_hyperboloid12_ = false;
};

/// Convenience constructors for the two classical systems.
QuadraticForm euclidean_form();
QuadraticForm lorentz_form();

}  // namespace quadform
