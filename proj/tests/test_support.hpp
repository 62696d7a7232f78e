#ifndef QAM_TESTS_TEST_SUPPORT_HPP
#define QAM_TESTS_TEST_SUPPORT_HPP

// Test-only oracles. Nothing here calls into the sampling or projection
// paths that the tests check: the sphere sampler has its own generator and
// Gaussian transform, and unitaries are built from explicit rotations.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "qam/state.hpp"

namespace qam::testing {

inline double binomial_sigma(double p, std::size_t n) {
  return std::sqrt(p * (1.0 - p) / static_cast<double>(n));
}

/// SplitMix64 with a hand-rolled Box-Muller transform.
class OracleGaussian {
 public:
  explicit OracleGaussian(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // (0, 1]
  double uniform() { return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53; }

  double gaussian() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    const double r = std::sqrt(-2.0 * std::log(uniform()));
    const double t = 2.0 * std::numbers::pi * uniform();
    spare_ = r * std::sin(t);
    has_spare_ = true;
    return r * std::cos(t);
  }

 private:
  std::uint64_t state_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

/// Brute-force estimate of dim * E|(w, v)|^2 over random unit pairs.
struct OracleOverlap {
  double mean_abs;
  double scaled_mean_sq;
};

inline OracleOverlap oracle_overlap(std::size_t dim, std::size_t trials, bool complex_field,
                                    std::uint64_t seed) {
  OracleGaussian g(seed);
  double sum_abs = 0.0;
  double sum_sq = 0.0;
  std::vector<double> w_re(dim), w_im(dim), v_re(dim), v_im(dim);
  for (std::size_t t = 0; t < trials; ++t) {
    double nw = 0.0;
    double nv = 0.0;
    for (std::size_t i = 0; i < dim; ++i) {
      w_re[i] = g.gaussian();
      w_im[i] = complex_field ? g.gaussian() : 0.0;
      v_re[i] = g.gaussian();
      v_im[i] = complex_field ? g.gaussian() : 0.0;
      nw += w_re[i] * w_re[i] + w_im[i] * w_im[i];
      nv += v_re[i] * v_re[i] + v_im[i] * v_im[i];
    }
    double re = 0.0;
    double im = 0.0;
    for (std::size_t i = 0; i < dim; ++i) {
      // w_i * conj(v_i)
      re += w_re[i] * v_re[i] + w_im[i] * v_im[i];
      im += w_im[i] * v_re[i] - w_re[i] * v_im[i];
    }
    const double sq = (re * re + im * im) / (nw * nv);
    sum_abs += std::sqrt(sq);
    sum_sq += sq;
  }
  const double n = static_cast<double>(trials);
  return {sum_abs / n, static_cast<double>(dim) * sum_sq / n};
}

/// Unitary as a product of random Givens rotations followed by diagonal
/// phases. Applied explicitly, never materialized.
class RandomUnitary {
 public:
  RandomUnitary(std::size_t dim, std::uint64_t seed, std::size_t rotations = 0) : dim_(dim) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> index(0, dim - 1);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    if (rotations == 0) rotations = 4 * dim * dim;
    for (std::size_t r = 0; r < rotations && dim > 1; ++r) {
      std::size_t i = index(rng);
      std::size_t j = index(rng);
      while (j == i) j = index(rng);
      givens_.push_back({i, j, angle(rng), angle(rng)});
    }
    for (std::size_t i = 0; i < dim; ++i) phases_.push_back(std::polar(1.0, angle(rng)));
  }

  StateVector apply(const StateVector& v) const {
    std::vector<Complex> a(v.amplitudes().begin(), v.amplitudes().end());
    for (const Givens& g : givens_) {
      const double c = std::cos(g.theta);
      const Complex s = std::polar(std::sin(g.theta), g.phi);
      const Complex ai = a[g.i];
      const Complex aj = a[g.j];
      a[g.i] = c * ai - std::conj(s) * aj;
      a[g.j] = s * ai + c * aj;
    }
    for (std::size_t i = 0; i < dim_; ++i) a[i] *= phases_[i];
    return StateVector(std::move(a));
  }

  UnitState apply(const UnitState& v) const { return UnitState(apply(v.vector())); }

 private:
  struct Givens {
    std::size_t i, j;
    double theta, phi;
  };
  std::size_t dim_;
  std::vector<Givens> givens_;
  std::vector<Complex> phases_;
};

/// k orthonormal vectors in dim: the rotated computational basis.
inline std::vector<UnitState> orthonormal_set(std::size_t dim, std::size_t k, std::uint64_t seed) {
  const RandomUnitary u(dim, seed, 2 * dim * dim);
  std::vector<UnitState> out;
  for (std::size_t i = 0; i < k; ++i) out.push_back(u.apply(UnitState(StateVector::basis(dim, i))));
  return out;
}

/// Gaussian vector from the oracle generator, unnormalized.
inline StateVector oracle_vector(std::size_t dim, bool complex_field, OracleGaussian& g) {
  std::vector<Complex> a(dim);
  for (Complex& x : a) x = Complex(g.gaussian(), complex_field ? g.gaussian() : 0.0);
  return StateVector(std::move(a));
}

inline double max_abs_diff(const StateVector& a, const StateVector& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace qam::testing

#endif  // QAM_TESTS_TEST_SUPPORT_HPP
