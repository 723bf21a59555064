#include "quadform/structure.hpp"

#include <algorithm>
#include <sstream>

#include "quadform/error.hpp"

namespace quadform {

namespace {
constexpr double kIdentityRelTol = 1e-8;
}

StructureConstants StructureConstants::from_free(double alpha1, double alpha2, double alpha3,
                                                 double beta1, double beta2, double lambda1,
                                                 double gamma) {
  StructureConstants sc;
  sc.alpha1 = alpha1;
  sc.alpha2 = alpha2;
  sc.alpha3 = alpha3;
  sc.beta1 = beta1;
  sc.beta2 = beta2;
  sc.lambda1 = lambda1;
  sc.lambda2 = -beta1;
  sc.lambda3 = alpha1;
  sc.beta3 = -alpha2;
  sc.gamma = gamma;
  return sc;
}

bool StructureConstants::dependents_consistent() const {
  return lambda2 == -beta1 && lambda3 == alpha1 && beta3 == -alpha2;
}

Mat3 StructureConstants::cross_matrix() const {
  return Mat3::from_rows({{lambda1, -beta1, alpha1}, {lambda2, -beta2, alpha2}, {lambda3, -beta3, alpha3}});
}

StructureConstants derive_constants(const QuadraticForm& form) {
  const Mat3& n = form.metric();
  const double gamma = std::sqrt(std::abs(determinant(n)));
  if (!(gamma > 0.0)) throw Error(ErrorCode::DegenerateForm, "|Γ| = 0");
  const double scale = form.delta() * gamma;
  return StructureConstants::from_free(-minor(n, 0, 2) / scale, minor(n, 1, 2) / scale,
                                       -minor(n, 2, 2) / scale, -minor(n, 0, 1) / scale,
                                       minor(n, 1, 1) / scale, -minor(n, 0, 0) / scale, gamma);
}

Coefficients implied_coefficients(const StructureConstants& sc) {
  const double a1 = sc.alpha1, a2 = sc.alpha2, a3 = sc.alpha3;
  const double b1 = sc.beta1, b2 = sc.beta2, l1 = sc.lambda1;
  return Coefficients{a2 * a2 + a3 * b2,         a1 * a1 - l1 * a3,   b1 * b1 + l1 * b2,
                      -(a1 * a2 + a3 * b1),      -(b2 * a1 - a2 * b1), a1 * b1 + l1 * a2};
}

double ConstantResiduals::max() const {
  return *std::max_element(residuals.begin(), residuals.end());
}

ConstantResiduals constant_residuals(const StructureConstants& sc, const QuadraticForm& form) {
  const Coefficients want = form.number_coefficients();
  const Coefficients got = implied_coefficients(sc);
  ConstantResiduals r;
  r.residuals = {std::abs(got.A - want.A), std::abs(got.B - want.B), std::abs(got.C - want.C),
                 std::abs(got.D - want.D), std::abs(got.E - want.E), std::abs(got.F - want.F)};
  r.tolerance = kIdentityRelTol * std::max(1.0, max_abs(form.number_matrix()));
  r.ok = sc.dependents_consistent() &&
         std::all_of(r.residuals.begin(), r.residuals.end(),
                     [&](double x) { return x <= r.tolerance; });
  return r;
}

ConstantResiduals validate_constants(const StructureConstants& sc, const QuadraticForm& form) {
  ConstantResiduals r = constant_residuals(sc, form);
  if (!r.ok) {
    std::ostringstream os;
    os << "max identity residual " << r.max() << " exceeds " << r.tolerance;
    if (!sc.dependents_consistent()) os << " (dependent constants inconsistent)";
    throw Error(ErrorCode::InconsistentConstants, os.str());
  }
  return r;
}

MultiplicationTable multiplication_table(const StructureConstants& sc, const QuadraticForm& form) {
  const Coefficients c = form.number_coefficients();
  const auto with_scalar = [](double s, const Vec3& v) { return Vec4{{s, v[0], v[1], v[2]}}; };
  MultiplicationTable t;
  for (std::size_t n = 0; n < 4; ++n) {
    Vec4 e;
    e[n] = 1.0;
    t.entries[0][n] = e;
    t.entries[n][0] = e;
  }
  t.entries[1][1] = Vec4{{c.A, 0, 0, 0}};
  t.entries[2][2] = Vec4{{c.B, 0, 0, 0}};
  t.entries[3][3] = Vec4{{c.C, 0, 0, 0}};
  t.entries[1][2] = with_scalar(c.D, sc.alpha());
  t.entries[2][1] = with_scalar(c.D, -sc.alpha());
  t.entries[1][3] = with_scalar(c.E, sc.beta());
  t.entries[3][1] = with_scalar(c.E, -sc.beta());
  t.entries[2][3] = with_scalar(c.F, sc.lambda());
  t.entries[3][2] = with_scalar(c.F, -sc.lambda());
  return t;
}

std::string_view basis_name(std::size_t index) {
  static constexpr std::string_view names[] = {"1", "i", "j", "k"};
  return index < 4 ? names[index] : "?";
}

}  // namespace quadform
