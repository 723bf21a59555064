#include "quadform/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <optional>

#include "quadform/error.hpp"
#include "quadform/rotations.hpp"
#include "quadform/structure.hpp"

namespace quadform {

Mat3 series_exponential(const Mat3& s, double t, int n_terms) {
  if (n_terms < 20) throw Error(ErrorCode::InvalidInput, "series needs at least 20 terms");
  const Mat3 ts = t * s;
  const Mat3 id = Mat3::identity();
  // I + tS/1 (I + tS/2 (I + ... (I + tS/(n−1))))
  Mat3 acc = id;
  for (int n = n_terms - 1; n >= 1; --n) acc = id + (1.0 / n) * (ts * acc);
  return acc;
}

Vec4 table_product(const System& system, const Vec4& a, const Vec4& b) {
  const MultiplicationTable table = multiplication_table(system.constants, system.form);
  Vec4 out;
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) out += (a[r] * b[c]) * table.at(r, c);
  return out;
}

Vec4 hamilton_product(const Vec4& a, const Vec4& b) {
  return Vec4{{a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
               a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
               a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
               a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0]}};
}

Vec4 split_product(const Vec4& a, const Vec4& b) {
  return Vec4{{a[0] * b[0] - a[1] * b[1] + a[2] * b[2] + a[3] * b[3],
               a[0] * b[1] + a[1] * b[0] - a[2] * b[3] + a[3] * b[2],
               a[0] * b[2] + a[2] * b[0] - a[1] * b[3] + a[3] * b[1],
               a[0] * b[3] + a[3] * b[0] + a[1] * b[2] - a[2] * b[1]}};
}

double determinant4(const Mat4& a) {
  double det = 0.0;
  for (std::size_t c = 0; c < 4; ++c) {
    Mat3 sub;
    for (std::size_t r = 1; r < 4; ++r) {
      std::size_t k = 0;
      for (std::size_t j = 0; j < 4; ++j)
        if (j != c) sub(r - 1, k++) = a(r, j);
    }
    det += (c % 2 == 0 ? 1.0 : -1.0) * a(0, c) * determinant(sub);
  }
  return det;
}

std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 finalizer over the pair
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double Sampler::uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng_);
}

Vec3 Sampler::vector(double lo, double hi) {
  return Vec3{{uniform(lo, hi), uniform(lo, hi), uniform(lo, hi)}};
}

Vec4 Sampler::components(double lo, double hi) {
  return Vec4{{uniform(lo, hi), uniform(lo, hi), uniform(lo, hi), uniform(lo, hi)}};
}

Mat3 Sampler::metric(FormClass target) {
  Signature want;
  switch (target) {
    case FormClass::Ellipsoid: want = {3, 0, 0}; break;
    case FormClass::Hyperboloid21: want = {2, 0, 1}; break;
    case FormClass::Hyperboloid12: want = {1, 0, 2}; break;
    case FormClass::Degenerate:
      throw Error(ErrorCode::InvalidInput, "degenerate forms are not sampled");
  }
  for (;;) {
    Mat3 m;
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t c = r; c < 3; ++c) m(r, c) = m(c, r) = uniform(-5.0, 5.0);
    if (std::abs(determinant(m)) > 1e-3 && signature(m) == want) return m;
  }
}

QuadraticForm Sampler::form(FormClass target) { return QuadraticForm::from_metric(metric(target)); }

QuadNumber Sampler::number(const SystemPtr& system) { return QuadNumber(system, components()); }

QuadNumber Sampler::unit_number(const SystemPtr& system) {
  for (;;) {
    const QuadNumber q = number(system);
    const double c = character(q);
    if (std::abs(c) >= 1e-3) return q * (1.0 / std::sqrt(std::abs(c)));
  }
}

QuadNumber Sampler::unit_timelike(const SystemPtr& system) {
  for (;;) {
    const QuadNumber q = number(system);
    const double c = character(q);
    if (c >= 1e-3) return q * (1.0 / std::sqrt(c));
  }
}

Vec3 Sampler::unit_axis(const System& system, double form_value) {
  if (form_value > 0 && system.is_ellipsoid()) {
    throw Error(ErrorCode::InvalidInput, "ellipsoid systems have no spacelike axes");
  }
  for (;;) {
    const Vec3 v = vector();
    const double value = system.form.evaluate(v);
    if (value * form_value >= 1e-3) return v / std::sqrt(std::abs(value));
  }
}

Vec3 Sampler::lightlike_axis(const System& system) {
  if (system.is_ellipsoid()) {
    throw Error(ErrorCode::InvalidInput, "ellipsoid systems have no lightlike axes");
  }
  const SymmetricEigen eig = symmetric_eigen(system.form.metric());
  const Vec3& l = eig.values;
  const Vec3 u0 = eig.vectors.col(0) / std::sqrt(std::abs(l[0]));
  const double phi = uniform(0.0, 2.0 * std::numbers::pi);
  const Vec3 w = eig.vectors.col(1) * (std::cos(phi) / std::sqrt(l[1])) +
                 eig.vectors.col(2) * (std::sin(phi) / std::sqrt(l[2]));
  // Solve 𝔙(t·u0 + w) = 0 for t so that eigenvector error does not leave a
  // residual form value.
  const Mat3& m = system.form.number_matrix();
  const double a = quadratic(u0, m, u0), b = quadratic(u0, m, w), c = quadratic(w, m, w);
  const double root = std::sqrt(b * b - a * c);
  const double t = uniform(0.0, 1.0) < 0.5 ? (-b + root) / a : (-b - root) / a;
  const double sign = uniform(0.0, 1.0) < 0.5 ? -1.0 : 1.0;
  return (u0 * t + w) * (sign * uniform(0.5, 2.0));
}

QuadNumber Sampler::number_of_type(const SystemPtr& system, CausalType type) {
  const System& sys = *system;
  if (sys.is_ellipsoid()) {
    if (type != CausalType::Ellipsoid && type != CausalType::Timelike) {
      throw Error(ErrorCode::InvalidInput, "ellipsoid systems only have ellipsoid numbers");
    }
    return number(system);
  }
  switch (type) {
    case CausalType::Timelike:
    case CausalType::Spacelike: {
      const double sign = type == CausalType::Timelike ? 1.0 : -1.0;
      for (;;) {
        const QuadNumber q = number(system);
        if (sign * character(q) >= 1e-3 * character_scale(q)) return q;
      }
    }
    case CausalType::Lightlike: {
      if (uniform(0.0, 1.0) < 0.25) return QuadNumber::pure(system, lightlike_axis(sys));
      const double sign = uniform(0.0, 1.0) < 0.5 ? -1.0 : 1.0;
      const double q0 = sign * uniform(0.25, 2.0);
      const Vec3 v = unit_axis(sys, 1.0) * q0;
      return QuadNumber(system, Vec4{{q0, v[0], v[1], v[2]}});
    }
    case CausalType::Ellipsoid:
      break;
  }
  throw Error(ErrorCode::InvalidInput, "indefinite systems have no ellipsoid numbers");
}

QuadNumber Sampler::polar_sample(const SystemPtr& system, PolarCase which) {
  const System& sys = *system;
  const auto join = [&](double s, const Vec3& v) {
    return QuadNumber(system, Vec4{{s, v[0], v[1], v[2]}});
  };
  const auto signed_uniform = [&](double lo, double hi) {
    const double sign = uniform(0.0, 1.0) < 0.5 ? -1.0 : 1.0;
    return sign * uniform(lo, hi);
  };
  if (sys.is_ellipsoid() != (which == PolarCase::EllipsoidPolar)) {
    throw Error(ErrorCode::InvalidInput, "polar case not available in this system");
  }
  switch (which) {
    case PolarCase::EllipsoidPolar:
      for (;;) {
        const QuadNumber q = number(system);
        if (max_abs(q.components()) > 0.0) return q;
      }
    case PolarCase::SpacelikePolar:
      return number_of_type(system, CausalType::Spacelike);
    case PolarCase::TimelikeSpacelikeAxis: {
      const double r = uniform(0.2, 2.0);
      const double q0 = signed_uniform(1.1 * r, 3.0 * r);
      return join(q0, unit_axis(sys, 1.0) * r);
    }
    case PolarCase::TimelikeTimelikeAxis:
    {
      const double q0 = uniform(-2.0, 2.0);
      const Vec3 v = unit_axis(sys, -1.0);
      return join(q0, v * uniform(0.2, 2.0));
    }
    case PolarCase::TimelikeLightlikeAxis: {
      const double q0 = signed_uniform(0.25, 2.0);
      return join(q0, lightlike_axis(sys));
    }
    case PolarCase::LightlikeSpacelikeAxis: {
      const double q0 = signed_uniform(0.25, 2.0);
      return join(q0, unit_axis(sys, 1.0) * q0);
    }
    case PolarCase::LightlikeLightlikeAxis:
      return QuadNumber::pure(system, lightlike_axis(sys));
  }
  throw Error(ErrorCode::InvalidInput, "unknown polar case");
}

bool all_passed(const std::vector<PropertyReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const PropertyReport& r) { return r.passed; });
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

template <std::size_t N>
Matrix<N> entrywise_abs(Matrix<N> a) {
  for (double& x : a.m) x = std::abs(x);
  return a;
}

template <std::size_t N>
Vector<N> entrywise_abs(Vector<N> a) {
  for (double& x : a.v) x = std::abs(x);
  return a;
}

Vec3 abs_cross(const Vec3& a, const Vec3& b) {
  return Vec3{{a[1] * b[2] + a[2] * b[1], a[2] * b[0] + a[0] * b[2], a[0] * b[1] + a[1] * b[0]}};
}

/// Magnitude of the terms summed in a·b.
double product_scale(const QuadNumber& a, const QuadNumber& b) {
  return std::max(1.0, max_abs(entrywise_abs(product_matrix(a.system(), a.components())) *
                               entrywise_abs(b.components())));
}

double unit_max(double x) { return std::max(1.0, x); }

/// e^{tS} from the series oracle, halving t until the series argument is small
/// and squaring back.
Mat3 series_exp_scaled(const Mat3& s, double t) {
  double norm = 0.0;
  for (std::size_t r = 0; r < 3; ++r) {
    double row = 0.0;
    for (std::size_t c = 0; c < 3; ++c) row += std::abs(s(r, c));
    norm = std::max(norm, row);
  }
  int halvings = 0;
  double arg = std::abs(t) * norm;
  while (arg > 1.0) {
    arg *= 0.5;
    ++halvings;
  }
  Mat3 e = series_exponential(s, std::ldexp(t, -halvings), 30);
  for (int i = 0; i < halvings; ++i) e = e * e;
  return e;
}

struct Context {
  SystemPtr system;
  int samples;
};

struct Tracker {
  int samples = 0;
  double max_residual = 0.0;

  void add(double residual) {
    ++samples;
    if (std::isnan(residual)) residual = kInf;
    max_residual = std::max(max_residual, residual);
  }
};

struct Property {
  std::string name;
  double tolerance;
  std::function<bool(const System&)> applies;
  std::function<void(const Context&, Sampler&, Tracker&)> run;
};

bool always(const System&) { return true; }
bool indefinite(const System& s) { return !s.is_ellipsoid(); }
bool is_sphere(const System& s) { return s.form.metric() == Mat3::identity(); }
bool is_lorentz(const System& s) {
  return s.form.metric() == Mat3::diagonal(Vec3{{-1.0, 1.0, 1.0}});
}

std::vector<RodriguesBranch> branches(const System& s) {
  if (s.is_ellipsoid()) return {RodriguesBranch::Circular};
  return {RodriguesBranch::Circular, RodriguesBranch::Hyperbolic, RodriguesBranch::Nilpotent};
}

Vec3 branch_axis(const System& s, Sampler& g, RodriguesBranch b) {
  switch (b) {
    case RodriguesBranch::Circular: return g.unit_axis(s, -1.0);
    case RodriguesBranch::Hyperbolic: return g.unit_axis(s, 1.0);
    case RodriguesBranch::Nilpotent: return g.lightlike_axis(s);
  }
  return {};
}

std::vector<PolarCase> polar_cases(const System& s) {
  if (s.is_ellipsoid()) return {PolarCase::EllipsoidPolar};
  return {PolarCase::SpacelikePolar,        PolarCase::TimelikeSpacelikeAxis,
          PolarCase::TimelikeTimelikeAxis,  PolarCase::TimelikeLightlikeAxis,
          PolarCase::LightlikeSpacelikeAxis, PolarCase::LightlikeLightlikeAxis};
}

double diagnostics_residual(const RotationDiagnostics& d) {
  return std::max({d.congruence_residual, d.determinant_residual, d.axis_residual});
}

/// A Cayley axis away from the singular set 𝔙 = 1; lightlike for a quarter of
/// the draws in indefinite systems.
Vec3 cayley_axis(const System& s, Sampler& g) {
  if (!s.is_ellipsoid() && g.uniform(0.0, 1.0) < 0.25) return g.lightlike_axis(s);
  for (;;) {
    const Vec3 v = g.vector(-1.5, 1.5);
    if (std::abs(s.form.evaluate(v) - 1.0) > 1e-3) return v;
  }
}

std::vector<Property> properties() {
  std::vector<Property> p;

  // structure
  for (FormClass cls : {FormClass::Ellipsoid, FormClass::Hyperboloid21, FormClass::Hyperboloid12}) {
    std::string name = "structure.constants_round_trip.";
    name += to_string(cls);
    p.push_back({name, 1e-8, always, [cls](const Context& ctx, Sampler& g, Tracker& t) {
                   const auto residual = [](const QuadraticForm& f) {
                     const ConstantResiduals r = constant_residuals(derive_constants(f), f);
                     return r.max() / unit_max(max_abs(f.number_matrix()));
                   };
                   if (ctx.system->form.form_class() == cls) t.add(residual(ctx.system->form));
                   while (t.samples < ctx.samples) t.add(residual(g.form(cls)));
                 }});
  }
  p.push_back({"structure.associativity", 1e-8, always,
               [](const Context& ctx, Sampler& g, Tracker& t) {
                 for (int n = 0; n < ctx.samples; ++n) {
                   const QuadNumber a = g.number(ctx.system), b = g.number(ctx.system),
                                    c = g.number(ctx.system);
                   const Mat4 la = entrywise_abs(product_matrix(*ctx.system, a.components()));
                   const Mat4 lb = entrywise_abs(product_matrix(*ctx.system, b.components()));
                   const double scale = unit_max(max_abs(la * (lb * entrywise_abs(c.components()))));
                   t.add(max_abs(((a * b) * c).components() - (a * (b * c)).components()) / scale);
                 }
               }});
  p.push_back({"structure.antisymmetric_split", 0.0, always,
               [](const Context& ctx, Sampler&, Tracker& t) {
                 const Coefficients c = ctx.system->form.number_coefficients();
                 const double cross_scalar[4][4] = {
                     {0, 0, 0, 0}, {0, c.A, c.D, c.E}, {0, c.D, c.B, c.F}, {0, c.E, c.F, c.C}};
                 for (std::size_t a = 1; a < 4; ++a)
                   for (std::size_t b = 1; b < 4; ++b) {
                     const Vec4 ab = multiply(QuadNumber::basis(ctx.system, a), QuadNumber::basis(ctx.system, b)).components();
                     const Vec4 ba = multiply(QuadNumber::basis(ctx.system, b), QuadNumber::basis(ctx.system, a)).components();
                     double r = std::abs(ab[0] - cross_scalar[a][b]) + std::abs(ba[0] - cross_scalar[a][b]);
                     for (std::size_t n = 1; n < 4; ++n) r += std::abs(ab[n] + ba[n]);
                     t.add(r);
                   }
               }});
  p.push_back({"structure.table_invariants", 0.0, always,
               [](const Context& ctx, Sampler&, Tracker& t) {
                 const System& s = *ctx.system;
                 const MultiplicationTable tab = multiplication_table(s.constants, s.form);
                 const Coefficients c = s.form.number_coefficients();
                 for (std::size_t n = 0; n < 4; ++n) {
                   Vec4 e;
                   e[n] = 1.0;
                   t.add(max_abs(tab.at(0, n) - e) + max_abs(tab.at(n, 0) - e));
                 }
                 const double squares[3] = {c.A, c.B, c.C};
                 for (std::size_t n = 1; n < 4; ++n)
                   t.add(max_abs(tab.at(n, n) - Vec4{{squares[n - 1], 0, 0, 0}}));
                 const std::size_t pairs[3][2] = {{1, 2}, {1, 3}, {2, 3}};
                 const double doubled[3] = {2 * c.D, 2 * c.E, 2 * c.F};
                 for (int n = 0; n < 3; ++n) {
                   const auto [a, b] = pairs[n];
                   t.add(max_abs(tab.at(a, b) + tab.at(b, a) - Vec4{{doubled[n], 0, 0, 0}}));
                 }
               }});
  p.push_back({"structure.scale_covariance", 1e-10, always,
               [](const Context& ctx, Sampler& g, Tracker& t) {
                 const QuadraticForm& f = ctx.system->form;
                 const StructureConstants base = ctx.system->constants;
                 const auto free = [](const StructureConstants& k) {
                   return std::array<double, 6>{k.alpha1, k.alpha2, k.alpha3, k.beta1, k.beta2, k.lambda1};
                 };
                 for (int n = 0; n < ctx.samples; ++n) {
                   const double s = g.uniform(0.5, 2.0);
                   const auto scaled = free(derive_constants(QuadraticForm::from_metric((s * s) * f.metric())));
                   const auto want = free(base);
                   double r = 0.0, scale = 1.0;
                   for (int i = 0; i < 6; ++i) {
                     r = std::max(r, std::abs(scaled[i] - s * want[i]));
                     scale = std::max(scale, std::abs(s * want[i]));
                   }
                   t.add(r / scale);
                 }
               }});

  // algebra
  p.push_back({"algebra.multiply_matches_table", 1e-12, always,
               [](const Context& ctx, Sampler& g, Tracker& t) {
                 for (int n = 0; n < ctx.samples; ++n) {
                   const QuadNumber a = g.number(ctx.system), b = g.number(ctx.system);
                   t.add(max_abs((a * b).components() - table_product(*ctx.system, a.components(), b.components())) /
                         product_scale(a, b));
                 }
               }});
  p.push_back({"algebra.character_multiplicative", 1e-10, always,
               [](const Context& ctx, Sampler& g, Tracker& t) {
                 for (int n = 0; n < ctx.samples; ++n) {
                   const QuadNumber a = g.number(ctx.system), b = g.number(ctx.system);
                   const double scale = unit_max(character_scale(a) * character_scale(b));
                   t.add(std::abs(character(a * b) - character(a) * character(b)) / scale);
                 }
               }});
  p.push_back({"algebra.conjugation_antiautomorphism", 1e-10, always,
               [](const Context& ctx, Sampler& g, Tracker& t) {
                 for (int n = 0; n < ctx.samples; ++n) {
                   const QuadNumber a = g.number(ctx.system), b = g.number(ctx.system);
                   t.add(max_abs(conjugate(a * b).components() - (conjugate(b) * conjugate(a)).components()) /
                         product_scale(a, b));
                 }
               }});
  p.push_back({"algebra.character_is_q_conj_q", 1e-12, always,
               [](const Context& ctx, Sampler& g, Tracker& t) {
                 for (int n = 0; n < ctx.samples; ++n) {
                   const QuadNumber q = g.number(ctx.system);
                   const QuadNumber c = QuadNumber::scalar(ctx.system, character(q));
                   const double scale = product_scale(q, conjugate(q));
                   t.add(std::max(max_abs((q * conjugate(q) - c).components()),
                                  max_abs((conjugate(q) * q - c).components())) / scale);
                 }
               }});
  p.push_back({"algebra.scalar_product", 1e-12, always,
               [](const Context& ctx, Sampler& g, Tracker& t) {
                 for (int n = 0; n < ctx.samples; ++n) {
                   const QuadNumber q = g.number(ctx.system), r = g.number(ctx.system);
                   const QuadNumber sym = (q * conjugate(r) + r * conjugate(q)) * 0.5;
                   const double scale = std::max(product_scale(q, conjugate(r)), product_scale(r, conjugate(q)));
                   double res = std::abs(sym.s() - scalar_product(q, r));
                   res = std::max(res, max_abs(sym.vector_part()));
                   res = std::max(res, std::abs(scalar_product(q, r) - scalar_product(r, q)));
                   res = std::max(res, std::abs(scalar_product(q, q) - character(q)));
                   t.add(res / scale);
                 }
               }});
  p.push_back({"algebra.inverse", 1e-10, always, [](const Context& ctx, Sampler& g, Tracker& t) {
                 while (t.samples < ctx.samples) {
                   const QuadNumber q = g.number(ctx.system);
                   const double c = character(q);
                   if (std::abs(c) < 1e-3 * character_scale(q)) continue;
                   const QuadNumber inv = invert(q);
                   const double scale = product_scale(q, conjugate(q)) / std::abs(c);
                   t.add(max_abs((q * inv - QuadNumber::scalar(ctx.system, 1.0)).components()) / unit_max(scale));
                 }
               }});
  p.push_back({"algebra.product_decomposition", 1e-10, always,
               [](const Context& ctx, Sampler& g, Tracker& t) {
                 for (int n = 0; n < ctx.samples; ++n) {
                   const QuadNumber a = g.number(ctx.system), b = g.number(ctx.system);
                   t.add(product_decomposition_check(a, b) / product_scale(a, b));
                 }
               }});
  p.push_back({"algebra.triple_product", 1e-9, always, [](const Context& ctx, Sampler& g, Tracker& t) {
                 const System& s = *ctx.system;
                 const Mat3 k = entrywise_abs(s.constants.cross_matrix());
                 const double m = max_abs(s.form.metric());
                 for (int n = 0; n < ctx.samples; ++n) {
                   const Vec3 u = g.vector(), v = g.vector(), w = g.vector();
                   const Vec3 au = entrywise_abs(u), av = entrywise_abs(v), aw = entrywise_abs(w);
                   const double scale = unit_max(std::max(max_abs(k * abs_cross(k * abs_cross(au, av), aw)),
                                                          9.0 * m * max_abs(au) * max_abs(av) * max_abs(aw)));
                   t.add(triple_product_check(s, u, v, w) / scale);
                 }
               }});
  p.push_back({"algebra.commutator_vs_vector_product", 1e-12, always,
               [](const Context& ctx, Sampler& g, Tracker& t) {
                 for (int n = 0; n < ctx.samples; ++n) {
                   const QuadNumber q = QuadNumber::pure(ctx.system, g.vector());
                   const QuadNumber r = QuadNumber::pure(ctx.system, g.vector());
                   const QuadNumber c = commutator_product(q, r);
                   const Vec3 want = vector_product(*ctx.system, r.vector_part(), q.vector_part());
                   const double scale = std::max(product_scale(q, conjugate(r)), product_scale(r, conjugate(q)));
                   t.add(std::max(std::abs(c.s()), max_abs(c.vector_part() - want)) / scale);
                 }
               }});
  p.push_back({"algebra.causal_closure", 0.0, always, [](const Context& ctx, Sampler& g, Tracker& t) {
                 const System& s = *ctx.system;
                 if (s.is_ellipsoid()) {
                   for (int n = 0; n < ctx.samples; ++n) {
                     const QuadNumber a = g.number(ctx.system), b = g.number(ctx.system);
                     t.add(classify_number(a * b) == CausalType::Ellipsoid ? 0.0 : 1.0);
                   }
                   return;
                 }
                 const CausalType types[3] = {CausalType::Timelike, CausalType::Spacelike, CausalType::Lightlike};
                 for (int n = 0; n < ctx.samples; ++n) {
                   const CausalType ta = types[n % 3], tb = types[(n / 3) % 3];
                   const QuadNumber a = g.number_of_type(ctx.system, ta);
                   const QuadNumber b = g.number_of_type(ctx.system, tb);
                   CausalType want = ta == tb ? CausalType::Timelike : CausalType::Spacelike;
                   if (ta == CausalType::Lightlike || tb == CausalType::Lightlike) want = CausalType::Lightlike;
                   const bool ok = classify_number(a) == ta && classify_number(b) == tb &&
                                   classify_number(a * b) == want;
                   t.add(ok ? 0.0 : 1.0);
                 }
               }});
  p.push_back({"algebra.vector_type_table", 0.0, indefinite,
               [](const Context& ctx, Sampler& g, Tracker& t) {
                 const System& s = *ctx.system;
                 for (int n = 0; n < ctx.samples; ++n) {
                   const CausalType type = n % 2 == 0 ? CausalType::Spacelike : CausalType::Lightlike;
                   const QuadNumber q = g.number_of_type(ctx.system, type);
                   const CausalType vt = classify_vector(s, q.vector_part());
                   CausalType want = CausalType::Spacelike;
                   if (type == CausalType::Lightlike && q.s() == 0.0) want = CausalType::Lightlike;
                   t.add(classify_number(q) == type && vt == want ? 0.0 : 1.0);
                 }
               }});
  p.push_back({"algebra.polar_round_trip", 1e-9, always,
               [](const Context& ctx, Sampler& g, Tracker& t) {
                 const std::vector<PolarCase> cases = polar_cases(*ctx.system);
                 for (int n = 0; n < ctx.samples; ++n) {
                   const PolarCase which = cases[n % cases.size()];
                   const QuadNumber q = g.polar_sample(ctx.system, which);
                   const PolarForm pf = polar_decompose(q);
                   if (pf.polar_case != which) {
                     t.add(kInf);
                     continue;
                   }
                   const QuadNumber back = from_polar(ctx.system, pf);
                   t.add(max_abs((back - q).components()) / unit_max(max_abs(q.components())));
                 }
               }});
  p.push_back({"algebra.left_right_eigenvalues", 1e-8, indefinite,
               [](const Context& ctx, Sampler& g, Tracker& t) {
                 const System& s = *ctx.system;
                 for (int n = 0; n < ctx.samples; ++n) {
                   const double q0 = g.uniform(-2.0, 2.0);
                   Vec3 v = n % 4 == 3 ? g.lightlike_axis(s) : g.unit_axis(s, 1.0);
                   if (n % 4 != 3) v = v * g.uniform(0.1, 2.0);
                   const QuadNumber q(ctx.system, Vec4{{q0, v[0], v[1], v[2]}});
                   const double root = std::sqrt(std::max(0.0, s.form.evaluate(q.vector_part())));
                   for (const Mat4& op : {left_matrix(q), right_matrix(q)}) {
                     const double scale = std::pow(unit_max(max_abs(op) + std::abs(q.s()) + root), 4);
                     for (double lambda : {q.s() + root, q.s() - root})
                       t.add(std::abs(determinant4(op - lambda * Mat4::identity())) / scale);
                   }
                 }
               }});

  // rotations
  p.push_back({"rotations.left_right_matrices", 1e-12, always,
               [](const Context& ctx, Sampler& g, Tracker& t) {
                 for (int n = 0; n < ctx.samples; ++n) {
                   const QuadNumber q = g.number(ctx.system), r = g.number(ctx.system);
                   const double res = std::max(max_abs(left_matrix(q) * r.components() - (q * r).components()),
                                               max_abs(right_matrix(q) * r.components() - (r * q).components()));
                   t.add(res / std::max(product_scale(q, r), product_scale(r, q)));
                 }
               }});
  p.push_back({"rotations.skew_cross_operator", 1e-12, always,
               [](const Context& ctx, Sampler& g, Tracker& t) {
                 const Mat3 k = entrywise_abs(ctx.system->constants.cross_matrix());
                 for (int n = 0; n < ctx.samples; ++n) {
                   const Vec3 v = g.vector(), w = g.vector();
                   const double scale = unit_max(max_abs(k * abs_cross(entrywise_abs(v), entrywise_abs(w))));
                   t.add(max_abs(skew_matrix(*ctx.system, v) * w - vector_product(*ctx.system, v, w)) / scale);
                 }
               }});
  p.push_back({"rotations.skew_metric_adjoint", 1e-12, always,
               [](const Context& ctx, Sampler& g, Tracker& t) {
                 const Mat3& m = ctx.system->form.metric();
                 for (int n = 0; n < ctx.samples; ++n) {
                   const Mat3 s = skew_matrix(*ctx.system, g.vector());
                   const double scale = unit_max(3.0 * max_abs(m) * max_abs(s));
                   t.add(max_abs(s.transposed() * m + m * s) / scale);
                 }
               }});
  p.push_back({"rotations.skew_cayley_hamilton", 1e-10, always,
               [](const Context& ctx, Sampler& g, Tracker& t) {
                 for (int n = 0; n < ctx.samples; ++n) {
                   const Vec3 v = g.vector();
                   const Mat3 s = skew_matrix(*ctx.system, v);
                   const double value = ctx.system->form.evaluate(v);
                   t.add(max_abs(s * s * s - value * s) / std::pow(unit_max(max_abs(s)), 3));
                 }
               }});
  p.push_back({"rotations.lightlike_nilpotency", 1e-12, indefinite,
               [](const Context& ctx, Sampler& g, Tracker& t) {
                 for (int n = 0; n < ctx.samples; ++n) {
                   const Mat3 s = skew_matrix(*ctx.system, g.lightlike_axis(*ctx.system));
                   t.add(max_abs(s * s * s) / std::pow(unit_max(max_abs(s)), 3));
                 }
               }});
  p.push_back({"rotations.sandwich_congruence", 1e-9, always,
               [](const Context& ctx, Sampler& g, Tracker& t) {
                 for (int n = 0; n < ctx.samples; ++n) {
                   const QuadNumber q = g.unit_timelike(ctx.system);
                   const Mat4 full = sandwich_matrix(q);
                   Mat3 block;
                   for (std::size_t i = 0; i < 3; ++i)
                     for (std::size_t j = 0; j < 3; ++j) block(i, j) = full(i + 1, j + 1);
                   double border = std::abs(full(0, 0) - 1.0);
                   for (std::size_t i = 1; i < 4; ++i) border = std::max({border, std::abs(full(0, i)), std::abs(full(i, 0))});
                   const double scale = unit_max(max_abs(left_matrix(q)) * max_abs(right_matrix(conjugate(q))));
                   const RotationDiagnostics d = diagnose_rotation(*ctx.system, block, q.vector_part());
                   t.add(std::max(diagnostics_residual(d), border / scale));
                 }
               }});
  p.push_back({"rotations.sandwich_vs_rodrigues", 1e-8, always,
               [](const Context& ctx, Sampler& g, Tracker& t) {
                 const System& s = *ctx.system;
                 const std::vector<RodriguesBranch> bs = branches(s);
                 for (int n = 0; n < ctx.samples; ++n) {
                   const RodriguesBranch b = bs[n % bs.size()];
                   const Vec3 v = branch_axis(s, g, b);
                   const double th = g.uniform(-std::numbers::pi / 2, std::numbers::pi / 2);
                   double q0 = 1.0, vs = th, angle = -2.0 * th;
                   if (b == RodriguesBranch::Circular) q0 = std::cos(th), vs = std::sin(th), angle = 2.0 * th;
                   if (b == RodriguesBranch::Hyperbolic) q0 = std::cosh(th), vs = std::sinh(th), angle = 2.0 * th;
                   const QuadNumber q(ctx.system, Vec4{{q0, v[0] * vs, v[1] * vs, v[2] * vs}});
                   const Mat4 full = sandwich_matrix(q);
                   Mat3 block;
                   for (std::size_t i = 0; i < 3; ++i)
                     for (std::size_t j = 0; j < 3; ++j) block(i, j) = full(i + 1, j + 1);
                   const Mat3 r = rodrigues_matrix(s, v, angle, b);
                   t.add(max_abs(block - r) / unit_max(max_abs(r)));
                 }
               }});
  for (RodriguesBranch b : {RodriguesBranch::Circular, RodriguesBranch::Hyperbolic, RodriguesBranch::Nilpotent}) {
    p.push_back({"rotations.rodrigues_vs_series." + std::string(to_string(b)), 1e-8,
                 [b](const System& s) { return b == RodriguesBranch::Circular || !s.is_ellipsoid(); },
                 [b](const Context& ctx, Sampler& g, Tracker& t) {
                   const System& s = *ctx.system;
                   for (int n = 0; n < ctx.samples; ++n) {
                     const Vec3 v = branch_axis(s, g, b);
                     const double th = g.uniform(-std::numbers::pi, std::numbers::pi);
                     const Mat3 sk = skew_matrix(s, v);
                     const double sign = b == RodriguesBranch::Nilpotent ? -1.0 : 1.0;
                     const Mat3 want = series_exp_scaled(sk, sign * th);
                     const Mat3 got = rodrigues_matrix(s, v, th, b);
                     t.add(max_abs(got - want) / unit_max(max_abs(sk * sk)));
                   }
                 }});
  }
  p.push_back({"rotations.rodrigues_postconditions", 1e-9, always,
               [](const Context& ctx, Sampler& g, Tracker& t) {
                 const System& s = *ctx.system;
                 const std::vector<RodriguesBranch> bs = branches(s);
                 for (int n = 0; n < ctx.samples; ++n) {
                   const RodriguesBranch b = bs[n % bs.size()];
                   const Vec3 v = branch_axis(s, g, b);
                   const Mat3 r = rodrigues_matrix(s, v, g.uniform(-std::numbers::pi, std::numbers::pi), b);
                   t.add(diagnostics_residual(diagnose_rotation(s, r, v)));
                 }
               }});
  p.push_back({"rotations.expanded_rodrigues", 1e-8, always,
               [](const Context& ctx, Sampler& g, Tracker& t) {
                 const System& s = *ctx.system;
                 const std::vector<RodriguesBranch> bs = branches(s);
                 for (int n = 0; n < ctx.samples; ++n) {
                   const RodriguesBranch b = bs[n % bs.size()];
                   const Vec3 v = branch_axis(s, g, b);
                   const double th = g.uniform(-std::numbers::pi, std::numbers::pi);
                   const Mat3 sk = skew_matrix(s, v);
                   t.add(max_abs(expanded_rodrigues(s, v, th, b) - rodrigues_matrix(s, v, th, b)) /
                         unit_max(max_abs(sk * sk)));
                 }
               }});
  p.push_back({"rotations.group_closure", 1e-8, always,
               [](const Context& ctx, Sampler& g, Tracker& t) {
                 const System& s = *ctx.system;
                 const std::vector<RodriguesBranch> bs = branches(s);
                 for (int n = 0; n < ctx.samples; ++n) {
                   const RodriguesBranch b = bs[n % bs.size()];
                   const Vec3 v = branch_axis(s, g, b);
                   const double x = g.uniform(-std::numbers::pi / 2, std::numbers::pi / 2);
                   const double y = g.uniform(-std::numbers::pi / 2, std::numbers::pi / 2);
                   const Mat3 rx = rodrigues_matrix(s, v, x, b), ry = rodrigues_matrix(s, v, y, b);
                   t.add(max_abs(rx * ry - rodrigues_matrix(s, v, x + y, b)) /
                         unit_max(max_abs(rx) * max_abs(ry)));
                 }
               }});
  p.push_back({"rotations.cayley_postconditions", 1e-9, always,
               [](const Context& ctx, Sampler& g, Tracker& t) {
                 const System& s = *ctx.system;
                 const Mat3 id = Mat3::identity();
                 for (int n = 0; n < ctx.samples; ++n) {
                   const Vec3 v = cayley_axis(s, g);
                   const Mat3 r = cayley_matrix(s, v);
                   const Mat3 sk = skew_matrix(s, v);
                   const double order = max_abs(inverse(id + sk) * (id - sk) - r) / unit_max(max_abs(r));
                   t.add(std::max(diagnostics_residual(diagnose_rotation(s, r, v)), order));
                 }
               }});
  p.push_back({"rotations.cayley_angle", 1e-8, always, [](const Context& ctx, Sampler& g, Tracker& t) {
                 const System& s = *ctx.system;
                 for (int n = 0; n < ctx.samples; ++n) {
                   const Vec3 v = cayley_axis(s, g);
                   const double value = s.form.evaluate(v);
                   const CayleyAngle a = cayley_angle(s, v);
                   const Mat3 r = cayley_matrix(s, v);
                   double res = 0.0;
                   switch (a.kind) {
                     case CayleyAngleKind::Circular: {
                       const double nv = std::sqrt(-value);
                       // tan θ = 2‖v‖/(1 − ‖v‖²)
                       res = std::abs(std::remainder(a.angle - std::atan2(2 * nv, 1 - nv * nv), 2 * std::numbers::pi));
                       res = std::max(res, max_abs(r - rodrigues_matrix(s, v / nv, -a.angle, RodriguesBranch::Circular)) /
                                               unit_max(max_abs(r)));
                       break;
                     }
                     case CayleyAngleKind::Hyperbolic: {
                       const double nv = std::sqrt(value);
                       // cosh θ = (1 + ⟨v,v⟩)/(1 − ⟨v,v⟩)
                       res = std::abs(std::cosh(a.angle) - (1 + value) / (1 - value)) / std::cosh(a.angle);
                       res = std::max(res, max_abs(r - rodrigues_matrix(s, v / nv, -a.angle, RodriguesBranch::Hyperbolic)) /
                                               unit_max(max_abs(r)));
                       break;
                     }
                     case CayleyAngleKind::Lightlike:
                       res = max_abs(r - rodrigues_matrix(s, 2.0 * v, a.angle, RodriguesBranch::Nilpotent)) /
                             unit_max(max_abs(r));
                       break;
                     case CayleyAngleKind::Undefined:
                       continue;
                   }
                   t.add(res);
                 }
               }});
  p.push_back({"rotations.cayley_eigenvalues", 1e-8, indefinite,
               [](const Context& ctx, Sampler& g, Tracker& t) {
                 const System& s = *ctx.system;
                 while (t.samples < ctx.samples) {
                   const Vec3 v = cayley_axis(s, g);
                   const double value = s.form.evaluate(v);
                   if (value < 0.0) continue;
                   const double root = std::sqrt(value);
                   const Mat3 r = cayley_matrix(s, v);
                   double res = 0.0;
                   for (double e : {1.0, (1 + root) / (1 - root), (1 - root) / (1 + root)}) {
                     const double scale = std::pow(unit_max(max_abs(r) + std::abs(e)), 3);
                     res = std::max(res, std::abs(determinant(r - e * Mat3::identity())) / scale);
                   }
                   t.add(res);
                 }
               }});
  p.push_back({"rotations.cayley_closed_form", 1e-8, always,
               [](const Context& ctx, Sampler& g, Tracker& t) {
                 for (int n = 0; n < ctx.samples; ++n) {
                   const Vec3 v = cayley_axis(*ctx.system, g);
                   t.add(closed_form_cayley_check(*ctx.system, v) /
                         unit_max(max_abs(cayley_matrix(*ctx.system, v))));
                 }
               }});
  p.push_back({"rotations.rotate_points_drift", 1e-9, always,
               [](const Context& ctx, Sampler& g, Tracker& t) {
                 const System& s = *ctx.system;
                 const RotationMatrix3 r =
                     rodrigues(s, g.unit_axis(s, -1.0), g.uniform(-std::numbers::pi, std::numbers::pi));
                 std::vector<Vec3> points;
                 for (int n = 0; n < ctx.samples; ++n) points.push_back(g.vector());
                 const RotatedPoints out = rotate_points(s, r, points);
                 const double rs = unit_max(max_abs(r.matrix));
                 for (std::size_t n = 0; n < points.size(); ++n) {
                   const double scale = unit_max(s.form.evaluate_scale(points[n])) * rs * rs;
                   t.add(std::abs(s.form.evaluate(out.points[n]) - s.form.evaluate(points[n])) / scale);
                 }
               }});

  // classical specializations
  p.push_back({"specialization.hamilton_product", 1e-12, is_sphere,
               [](const Context& ctx, Sampler& g, Tracker& t) {
                 for (int n = 0; n < ctx.samples; ++n) {
                   const QuadNumber a = g.number(ctx.system), b = g.number(ctx.system);
                   t.add(max_abs((a * b).components() - hamilton_product(a.components(), b.components())) /
                         product_scale(a, b));
                 }
               }});
  p.push_back({"specialization.quaternion_rotation", 1e-12, is_sphere,
               [](const Context& ctx, Sampler& g, Tracker& t) {
                 for (int n = 0; n < ctx.samples; ++n) {
                   const QuadNumber q = g.unit_timelike(ctx.system);
                   const double w = q.s(), x = q.i(), y = q.j(), z = q.k();
                   const Mat3 classical = Mat3::from_rows({
                       {1 - 2 * (y * y + z * z), 2 * (x * y - w * z), 2 * (x * z + w * y)},
                       {2 * (x * y + w * z), 1 - 2 * (x * x + z * z), 2 * (y * z - w * x)},
                       {2 * (x * z - w * y), 2 * (y * z + w * x), 1 - 2 * (x * x + y * y)},
                   });
                   const Mat4 full = sandwich_matrix(q);
                   double res = 0.0;
                   for (std::size_t i = 0; i < 3; ++i)
                     for (std::size_t j = 0; j < 3; ++j)
                       res = std::max(res, std::abs(full(i + 1, j + 1) - classical(i, j)));
                   t.add(res);
                 }
               }});
  p.push_back({"specialization.classical_rodrigues", 1e-12, is_sphere,
               [](const Context& ctx, Sampler& g, Tracker& t) {
                 for (int n = 0; n < ctx.samples; ++n) {
                   const Vec3 v = g.unit_axis(*ctx.system, -1.0);
                   const double th = g.uniform(-std::numbers::pi, std::numbers::pi);
                   const Mat3 k = cross_matrix(v);
                   const Mat3 classical = Mat3::identity() + std::sin(th) * k + (1 - std::cos(th)) * (k * k);
                   t.add(max_abs(rodrigues_matrix(*ctx.system, v, th, RodriguesBranch::Circular) - classical));
                 }
               }});
  p.push_back({"specialization.split_quaternion_product", 1e-12, is_lorentz,
               [](const Context& ctx, Sampler& g, Tracker& t) {
                 for (int n = 0; n < ctx.samples; ++n) {
                   const QuadNumber a = g.number(ctx.system), b = g.number(ctx.system);
                   t.add(max_abs((a * b).components() - split_product(a.components(), b.components())) /
                         product_scale(a, b));
                 }
               }});
  return p;
}

const std::vector<Property>& property_list() {
  static const std::vector<Property> list = properties();
  return list;
}

}  // namespace

std::vector<PropertyReport> run_property_suite(const QuadraticForm& form, int samples,
                                               std::uint64_t seed) {
  const SystemPtr system = make_system(form);
  const Context ctx{system, std::max(1, samples)};
  std::vector<PropertyReport> reports;
  const std::vector<Property>& list = property_list();
  for (std::size_t index = 0; index < list.size(); ++index) {
    const Property& prop = list[index];
    if (!prop.applies(*system)) continue;
    PropertyReport report;
    report.name = prop.name;
    report.tolerance = prop.tolerance;
    report.seed = stream_seed(seed, index);
    Sampler sampler(report.seed);
    Tracker tracker;
    try {
      prop.run(ctx, sampler, tracker);
    } catch (const std::exception&) {
      tracker.add(kInf);
    }
    report.samples = tracker.samples;
    report.max_residual = tracker.max_residual;
    report.passed = tracker.max_residual <= prop.tolerance;
    reports.push_back(std::move(report));
  }
  return reports;
}

}  // namespace quadform
