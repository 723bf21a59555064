#pragma once

// Fixed-size vector and matrix kernel for the 3- and 4-dimensional objects the
// library works with. Row-major, value types, no allocation.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <initializer_list>

namespace quadform {

template <std::size_t N>
struct Vector {
  std::array<double, N> v{};

  constexpr double& operator[](std::size_t i) { return v[i]; }
  constexpr double operator[](std::size_t i) const { return v[i]; }

  static constexpr std::size_t size() { return N; }

  constexpr Vector& operator+=(const Vector& o) {
    for (std::size_t i = 0; i < N; ++i) v[i] += o.v[i];
    return *this;
  }
  constexpr Vector& operator-=(const Vector& o) {
    for (std::size_t i = 0; i < N; ++i) v[i] -= o.v[i];
    return *this;
  }
  constexpr Vector& operator*=(double s) {
    for (auto& x : v) x *= s;
    return *this;
  }

  friend constexpr Vector operator+(Vector a, const Vector& b) { return a += b; }
  friend constexpr Vector operator-(Vector a, const Vector& b) { return a -= b; }
  friend constexpr Vector operator*(Vector a, double s) { return a *= s; }
  friend constexpr Vector operator*(double s, Vector a) { return a *= s; }
  friend constexpr Vector operator/(Vector a, double s) { return a *= (1.0 / s); }
  friend constexpr Vector operator-(Vector a) { return a *= -1.0; }
  friend constexpr bool operator==(const Vector&, const Vector&) = default;
};

using Vec3 = Vector<3>;
using Vec4 = Vector<4>;

template <std::size_t N>
constexpr double dot(const Vector<N>& a, const Vector<N>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < N; ++i) s += a[i] * b[i];
  return s;
}

template <std::size_t N>
double max_abs(const Vector<N>& a) {
  double m = 0.0;
  for (double x : a.v) m = std::max(m, std::abs(x));
  return m;
}

template <std::size_t N>
double euclidean_norm(const Vector<N>& a) {
  return std::sqrt(dot(a, a));
}

/// Ordinary (Euclidean) cross product.
constexpr Vec3 cross(const Vec3& a, const Vec3& b) {
  return Vec3{{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
               a[0] * b[1] - a[1] * b[0]}};
}

template <std::size_t N>
struct Matrix {
  std::array<double, N * N> m{};

  constexpr double& operator()(std::size_t r, std::size_t c) { return m[r * N + c]; }
  constexpr double operator()(std::size_t r, std::size_t c) const { return m[r * N + c]; }

  static constexpr std::size_t size() { return N; }

  static constexpr Matrix identity() {
    Matrix r;
    for (std::size_t i = 0; i < N; ++i) r(i, i) = 1.0;
    return r;
  }

  static constexpr Matrix diagonal(const Vector<N>& d) {
    Matrix r;
    for (std::size_t i = 0; i < N; ++i) r(i, i) = d[i];
    return r;
  }

  static constexpr Matrix from_rows(std::initializer_list<std::initializer_list<double>> rows) {
    Matrix r;
    std::size_t i = 0;
    for (const auto& row : rows) {
      std::size_t j = 0;
      for (double x : row) {
        if (i < N && j < N) r(i, j) = x;
        ++j;
      }
      ++i;
    }
    return r;
  }

  constexpr Vector<N> row(std::size_t r) const {
    Vector<N> out;
    for (std::size_t c = 0; c < N; ++c) out[c] = (*this)(r, c);
    return out;
  }
  constexpr Vector<N> col(std::size_t c) const {
    Vector<N> out;
    for (std::size_t r = 0; r < N; ++r) out[r] = (*this)(r, c);
    return out;
  }

  constexpr Matrix transposed() const {
    Matrix t;
    for (std::size_t r = 0; r < N; ++r)
      for (std::size_t c = 0; c < N; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  constexpr double trace() const {
    double s = 0.0;
    for (std::size_t i = 0; i < N; ++i) s += (*this)(i, i);
    return s;
  }

  constexpr Matrix& operator+=(const Matrix& o) {
    for (std::size_t i = 0; i < N * N; ++i) m[i] += o.m[i];
    return *this;
  }
  constexpr Matrix& operator-=(const Matrix& o) {
    for (std::size_t i = 0; i < N * N; ++i) m[i] -= o.m[i];
    return *this;
  }
  constexpr Matrix& operator*=(double s) {
    for (auto& x : m) x *= s;
    return *this;
  }

  friend constexpr Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend constexpr Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend constexpr Matrix operator*(Matrix a, double s) { return a *= s; }
  friend constexpr Matrix operator*(double s, Matrix a) { return a *= s; }
  friend constexpr Matrix operator-(Matrix a) { return a *= -1.0; }
  friend constexpr bool operator==(const Matrix&, const Matrix&) = default;

  friend constexpr Matrix operator*(const Matrix& a, const Matrix& b) {
    Matrix r;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t k = 0; k < N; ++k) {
        const double aik = a(i, k);
        for (std::size_t j = 0; j < N; ++j) r(i, j) += aik * b(k, j);
      }
    return r;
  }

  friend constexpr Vector<N> operator*(const Matrix& a, const Vector<N>& x) {
    Vector<N> r;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) r[i] += a(i, j) * x[j];
    return r;
  }
};

using Mat3 = Matrix<3>;
using Mat4 = Matrix<4>;

template <std::size_t N>
double max_abs(const Matrix<N>& a) {
  double m = 0.0;
  for (double x : a.m) m = std::max(m, std::abs(x));
  return m;
}

template <std::size_t N>
double frobenius_norm(const Matrix<N>& a) {
  double s = 0.0;
  for (double x : a.m) s += x * x;
  return std::sqrt(s);
}

/// uᵀ·M·v
template <std::size_t N>
constexpr double quadratic(const Vector<N>& u, const Matrix<N>& m, const Vector<N>& v) {
  return dot(u, m * v);
}

/// Matrix [a]× with [a]×·b = a × b.
constexpr Mat3 cross_matrix(const Vec3& a) {
  return Mat3::from_rows({{0.0, -a[2], a[1]}, {a[2], 0.0, -a[0]}, {-a[1], a[0], 0.0}});
}

double determinant(const Mat3& a);

/// Determinant of `a` with row `r` and column `c` deleted (no cofactor sign).
double minor(const Mat3& a, std::size_t r, std::size_t c);

/// Classical adjugate (transposed cofactor matrix).
Mat3 adjugate(const Mat3& a);

/// Inverse via the adjugate; throws SingularMatrix when |det| <= min_abs_det.
Mat3 inverse(const Mat3& a, double min_abs_det = 1e-12);

/// Largest absolute Gershgorin bound, max_i (|a_ii| + sum_{j!=i} |a_ij|).
double gershgorin_scale(const Mat3& a);

bool is_symmetric(const Mat3& a, double abs_tol);

struct SymmetricEigen {
  /// Ascending.
  Vec3 values;
  /// Column i is the unit eigenvector of values[i].
  Mat3 vectors;
};

/// Eigenvalues of a symmetric 3×3 matrix, ascending. Rayleigh quotients of the
/// symmetric_eigen basis, so repeated eigenvalues keep full precision.
Vec3 symmetric_eigenvalues(const Mat3& a);

/// Eigenvalues plus a right-handed orthonormal eigenbasis.
SymmetricEigen symmetric_eigen(const Mat3& a);

}  // namespace quadform
