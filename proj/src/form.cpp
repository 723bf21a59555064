#include "quadform/form.hpp"

#include <sstream>

#include "quadform/error.hpp"

namespace quadform {

namespace {
constexpr double kSymmetryTolerance = 1e-12;
constexpr double kZeroEigenvalueRelTol = 1e-10;

Signature count_signs(const Vec3& ev, double tol) {
  Signature s;
  for (double x : ev.v) {
    if (x > tol) ++s.positive;
    else if (x < -tol) ++s.negative;
    else ++s.zero;
  }
  return s;
}
}  // namespace

std::string_view to_string(FormClass c) {
  switch (c) {
    case FormClass::Ellipsoid: return "Ellipsoid";
    case FormClass::Hyperboloid21: return "Hyperboloid21";
    case FormClass::Hyperboloid12: return "Hyperboloid12";
    case FormClass::Degenerate: return "Degenerate";
  }
  return "Unknown";
}

Mat3 Coefficients::matrix() const {
  return Mat3::from_rows({{A, D, E}, {D, B, F}, {E, F, C}});
}

Coefficients Coefficients::from_matrix(const Mat3& m) {
  return Coefficients{m(0, 0), m(1, 1), m(2, 2), m(0, 1), m(0, 2), m(1, 2)};
}

double zero_eigenvalue_tolerance(const Mat3& m) {
  return kZeroEigenvalueRelTol * std::max(1.0, gershgorin_scale(m));
}

Signature signature(const Mat3& m) {
  return count_signs(symmetric_eigenvalues(m), zero_eigenvalue_tolerance(m));
}

QuadraticForm QuadraticForm::from_metric(const Mat3& input) {
  if (!is_symmetric(input, kSymmetryTolerance)) {
    std::ostringstream os;
    os << "metric differs from its transpose by more than " << kSymmetryTolerance;
    throw Error(ErrorCode::NotSymmetric, os.str());
  }
  // Use the upper triangle so the stored matrix is exactly symmetric.
  Mat3 sym = input;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j) sym(j, i) = sym(i, j);

  const Vec3 ev = symmetric_eigenvalues(sym);
  const Signature sig = count_signs(ev, zero_eigenvalue_tolerance(sym));
  if (sig.zero != 0) {
    std::ostringstream os;
    os << "signature (" << sig.positive << "," << sig.zero << "," << sig.negative
       << ") has a zero eigenvalue";
    throw Error(ErrorCode::DegenerateForm, os.str());
  }

  QuadraticForm f;
  f.input_signature_ = sig;
  f.metric_ = sym;
  f.eigenvalues_ = ev;
  if (sig.negative == 3 || sig.negative == 2) {
    f.metric_ = -sym;
    f.eigenvalues_ = Vec3{{-ev[2], -ev[1], -ev[0]}};
    f.negated_negative_definite_ = sig.negative == 3;
    f.negated_hyperboloid12_ = sig.negative == 2;
  }
  const bool definite = sig.positive == 3 || sig.negative == 3;
  f.signature_ = definite ? Signature{3, 0, 0} : Signature{2, 0, 1};
  if (definite) {
    f.delta_ = -1;
    f.form_class_ = FormClass::Ellipsoid;
  } else {
    f.delta_ = 1;
    f.form_class_ = f.negated_hyperboloid12_ ? FormClass::Hyperboloid12 : FormClass::Hyperboloid21;
  }
  f.number_matrix_ = static_cast<double>(f.delta_) * f.metric_;
  return f;
}

QuadraticForm QuadraticForm::from_coefficients(const Coefficients& surface) {
  return from_metric(surface.matrix());
}

double QuadraticForm::evaluate_scale(const Vec3& v) const {
  double s = 0.0;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) s += std::abs(number_matrix_(i, j) * v[i] * v[j]);
  return s;
}

QuadraticForm euclidean_form() { return QuadraticForm::from_metric(Mat3::identity()); }

QuadraticForm lorentz_form() {
  return QuadraticForm::from_metric(Mat3::diagonal(Vec3{{-1.0, 1.0, 1.0}}));
}

}  // namespace quadform
