#include "quadform/linalg.hpp"

#include <numbers>
#include <utility>

#include "quadform/error.hpp"

namespace quadform {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::DegenerateForm: return "DegenerateForm";
    case ErrorCode::InconsistentConstants: return "InconsistentConstants";
    case ErrorCode::SystemMismatch: return "SystemMismatch";
    case ErrorCode::LightlikeNotInvertible: return "LightlikeNotInvertible";
    case ErrorCode::ZeroNumber: return "ZeroNumber";
    case ErrorCode::NotUnit: return "NotUnit";
    case ErrorCode::AxisNotUnit: return "AxisNotUnit";
    case ErrorCode::UnitSpacelikeAxis: return "UnitSpacelikeAxis";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::DiagnosticsFailed: return "DiagnosticsFailed";
    case ErrorCode::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

double determinant(const Mat3& a) {
  return a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) -
         a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
         a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
}

double minor(const Mat3& a, std::size_t r, std::size_t c) {
  std::size_t rows[2], cols[2];
  for (std::size_t i = 0, k = 0; i < 3; ++i)
    if (i != r) rows[k++] = i;
  for (std::size_t j = 0, k = 0; j < 3; ++j)
    if (j != c) cols[k++] = j;
  return a(rows[0], cols[0]) * a(rows[1], cols[1]) - a(rows[0], cols[1]) * a(rows[1], cols[0]);
}

Mat3 adjugate(const Mat3& a) {
  Mat3 adj;
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) {
      const double sign = ((r + c) % 2 == 0) ? 1.0 : -1.0;
      adj(c, r) = sign * minor(a, r, c);
    }
  return adj;
}

Mat3 inverse(const Mat3& a, double min_abs_det) {
  const double det = determinant(a);
  if (!(std::abs(det) > min_abs_det)) {
    throw Error(ErrorCode::SingularMatrix, "determinant " + std::to_string(det));
  }
  return adjugate(a) * (1.0 / det);
}

double gershgorin_scale(const Mat3& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < 3; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < 3; ++j) row += std::abs(a(i, j));
    s = std::max(s, row);
  }
  return s;
}

bool is_symmetric(const Mat3& a, double abs_tol) {
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j)
      if (!(std::abs(a(i, j) - a(j, i)) <= abs_tol)) return false;
  return true;
}

// Smith, "Eigenvalues of a symmetric 3x3 matrix", CACM 4(4), 1961.
namespace {

// Roots of the characteristic cubic by the trigonometric method. Accurate for
// well separated roots; a double root carries an error of order sqrt(eps).
Vec3 cubic_roots(const Mat3& a) {
  const double mean = a.trace() / 3.0;
  const double b00 = a(0, 0) - mean, b11 = a(1, 1) - mean, b22 = a(2, 2) - mean;
  const double a01 = a(0, 1), a02 = a(0, 2), a12 = a(1, 2);
  const double p =
      (b00 * b00 + b11 * b11 + b22 * b22 + 2.0 * (a01 * a01 + a02 * a02 + a12 * a12)) / 6.0;
  if (p <= 0.0) return Vec3{{mean, mean, mean}};
  // half determinant of the shifted matrix
  const double q = 0.5 * (b00 * (b11 * b22 - a12 * a12) - a01 * (a01 * b22 - a12 * a02) +
                          a02 * (a01 * a12 - b11 * a02));
  const double sqrt_p = std::sqrt(p);
  const double disc = p * p * p - q * q;
  const double phi = std::atan2(std::sqrt(std::max(0.0, disc)), q) / 3.0;
  const double c = sqrt_p * std::cos(phi);
  const double s = std::sqrt(3.0) * sqrt_p * std::sin(phi);
  Vec3 ev{{mean + 2.0 * c, mean - c - s, mean - c + s}};
  std::sort(ev.v.begin(), ev.v.end());
  return ev;
}

// Column of the adjugate of (a - λI) with the largest norm, normalized. For a
// simple eigenvalue every nonzero column is an eigenvector.
bool null_vector(const Mat3& a, double lambda, Vec3& out) {
  Mat3 shifted = a;
  for (std::size_t i = 0; i < 3; ++i) shifted(i, i) -= lambda;
  // columns of adj(shifted) are cross products of pairs of rows
  const Vec3 r0 = shifted.row(0), r1 = shifted.row(1), r2 = shifted.row(2);
  const Vec3 cands[3] = {cross(r0, r1), cross(r0, r2), cross(r1, r2)};
  double best = 0.0;
  for (const auto& c : cands) {
    const double n = dot(c, c);
    if (n > best) {
      best = n;
      out = c;
    }
  }
  if (best <= 0.0) return false;
  out = out / std::sqrt(best);
  return true;
}

Vec3 any_orthogonal(const Vec3& v) {
  const Vec3 e = (std::abs(v[0]) < 0.57) ? Vec3{{1, 0, 0}} : Vec3{{0, 1, 0}};
  const Vec3 w = cross(v, e);
  return w / euclidean_norm(w);
}

}  // namespace

Vec3 symmetric_eigenvalues(const Mat3& a) { return symmetric_eigen(a).values; }

SymmetricEigen symmetric_eigen(const Mat3& a) {
  SymmetricEigen out;
  const Vec3 roots = cubic_roots(a);

  // The root farthest from the others is simple and its null vector is well
  // conditioned; the remaining pair is resolved as a 2×2 problem on the
  // orthogonal complement, which stays accurate when the pair coincides.
  const bool low_isolated = (roots[1] - roots[0]) >= (roots[2] - roots[1]);
  Vec3 v0;
  if (!null_vector(a, roots[low_isolated ? 0 : 2], v0)) {
    // a is a multiple of the identity
    out.values = roots;
    out.vectors = Mat3::identity();
    return out;
  }
  const Vec3 u = any_orthogonal(v0);
  const Vec3 w = cross(v0, u);
  const double r00 = quadratic(u, a, u), r01 = quadratic(u, a, w), r11 = quadratic(w, a, w);
  const double t = 0.5 * std::atan2(2.0 * r01, r00 - r11);
  const double c = std::cos(t), s = std::sin(t);
  const Vec3 v1 = u * c + w * s;
  const Vec3 v2 = w * c - u * s;

  std::array<std::pair<double, Vec3>, 3> pairs{{{quadratic(v0, a, v0), v0},
                                                 {quadratic(v1, a, v1), v1},
                                                 {quadratic(v2, a, v2), v2}}};
  std::sort(pairs.begin(), pairs.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  for (std::size_t k = 0; k < 3; ++k) {
    out.values[k] = pairs[k].first;
    for (std::size_t i = 0; i < 3; ++i) out.vectors(i, k) = pairs[k].second[i];
  }
  if (determinant(out.vectors) < 0.0) {
    for (std::size_t i = 0; i < 3; ++i) out.vectors(i, 2) = -out.vectors(i, 2);
  }
  return out;
}

}  // namespace quadform
