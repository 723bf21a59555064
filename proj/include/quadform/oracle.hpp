#pragma once

// Brute-force oracles and the randomized property harness. Nothing in here is
// used by the library's own computations.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "quadform/algebra.hpp"
#include "quadform/form.hpp"
#include "quadform/linalg.hpp"

namespace quadform {

/// Horner partial sum of Σ_{n<n_terms} (tS)ⁿ/n!. Throws InvalidInput for
/// n_terms < 20.
Mat3 series_exponential(const Mat3& s, double t, int n_terms = 30);

/// a·b expanded bilinearly over the basis multiplication table.
Vec4 table_product(const System& system, const Vec4& a, const Vec4& b);

/// Hamilton quaternion product, i² = j² = k² = ijk = −1.
Vec4 hamilton_product(const Vec4& a, const Vec4& b);

/// Split-quaternion product, i² = −1, j² = k² = 1, ij = k, jk = −i, ki = j.
Vec4 split_product(const Vec4& a, const Vec4& b);

/// Laplace expansion along the first row.
double determinant4(const Mat4& a);

/// Seed of the generator stream owned by property `index` under `seed`.
std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t index);

/// Random forms, numbers and axes for property tests.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi);
  Vec3 vector(double lo = -2.0, double hi = 2.0);
  Vec4 components(double lo = -2.0, double hi = 2.0);

  /// Symmetric entries in [−5,5], resampled until |det| > 1e-3 and the input
  /// signature matches: Ellipsoid (3,0,0), Hyperboloid21 (2,0,1),
  /// Hyperboloid12 (1,0,2).
  Mat3 metric(FormClass target);
  QuadraticForm form(FormClass target);

  /// Components in [−2,2].
  QuadNumber number(const SystemPtr& system);
  /// Components in [−2,2] with |𝓒| ≥ 1e-3, scaled to 𝓒 = ±1.
  QuadNumber unit_number(const SystemPtr& system);
  /// A unit number with 𝓒 = +1.
  QuadNumber unit_timelike(const SystemPtr& system);

  /// v with 𝔙(v) = −1 (any system) or +1 (indefinite systems only), by
  /// rescaling a random vector of the right sign.
  Vec3 unit_axis(const System& system, double form_value);
  /// Nonzero v with 𝔙(v) = 0 built on the eigenbasis of 𝔐. Indefinite only.
  Vec3 lightlike_axis(const System& system);

  /// A number whose polar decomposition falls into `which`. Cases not
  /// available in the system's class throw InvalidInput.
  QuadNumber polar_sample(const SystemPtr& system, PolarCase which);

  /// A number of the given causal type; lightlike numbers are constructed
  /// exactly, other types keep |𝓒| ≥ 1e-3·scale away from the cone.
  QuadNumber number_of_type(const SystemPtr& system, CausalType type);

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

struct PropertyReport {
  std::string name;
  int samples = 0;
  double max_residual = 0;
  double tolerance = 0;
  bool passed = true;
  std::uint64_t seed = 0;
};

/// Runs every structure, algebra and rotation invariant on `form`, plus
/// quaternion and split-quaternion cross-checks when the metric is the
/// identity or diag(−1,1,1). Deterministic in (form, samples, seed).
std::vector<PropertyReport> run_property_suite(const QuadraticForm& form, int samples,
                                               std::uint64_t seed);

bool all_passed(const std::vector<PropertyReport>& reports);

}  // namespace quadform
