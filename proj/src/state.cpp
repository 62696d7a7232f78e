#include "qam/state.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>

#include "qam/error.hpp"
#include "qam/tolerances.hpp"

namespace qam {

std::string_view to_string(Field field) {
  return field == Field::kReal ? "REAL" : "COMPLEX";
}

Field parse_field(std::string_view text) {
  std::string upper(text);
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  if (upper == "REAL") return Field::kReal;
  if (upper == "COMPLEX") return Field::kComplex;
  throw FormatError("unknown field '" + std::string(text) + "', expected REAL or COMPLEX");
}

StateVector::StateVector(std::vector<Complex> amplitudes) : amps_(std::move(amplitudes)) {
  if (amps_.empty()) throw DimensionError("state vector must have dimension >= 1");
  for (const Complex& a : amps_) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
      throw PreconditionError("state vector amplitudes must be finite");
    }
  }
}

StateVector::StateVector(std::initializer_list<Complex> amplitudes)
    : StateVector(std::vector<Complex>(amplitudes)) {}

StateVector StateVector::zeros(std::size_t dim) {
  return StateVector(std::vector<Complex>(dim));
}

StateVector StateVector::basis(std::size_t dim, std::size_t index) {
  if (index >= dim) throw DimensionError("basis index out of range");
  std::vector<Complex> amps(dim);
  amps[index] = 1.0;
  return StateVector(std::move(amps));
}

StateVector StateVector::from_real(std::span<const double> values) {
  return StateVector(std::vector<Complex>(values.begin(), values.end()));
}

bool StateVector::is_real() const {
  return std::all_of(amps_.begin(), amps_.end(), [](const Complex& a) { return a.imag() == 0.0; });
}

StateVector& StateVector::operator+=(const StateVector& other) {
  require_same_dim(*this, other);
  for (std::size_t i = 0; i < amps_.size(); ++i) amps_[i] += other.amps_[i];
  return *this;
}

StateVector& StateVector::operator-=(const StateVector& other) {
  require_same_dim(*this, other);
  for (std::size_t i = 0; i < amps_.size(); ++i) amps_[i] -= other.amps_[i];
  return *this;
}

StateVector& StateVector::operator*=(Complex scale) {
  for (Complex& a : amps_) a *= scale;
  return *this;
}

UnitState::UnitState(StateVector v) : v_(std::move(v)) {
  const double n = norm(v_);
  if (std::abs(n - 1.0) > kNormTol) {
    throw NormError("state is not unit norm (norm " + std::to_string(n) + ")");
  }
}

void require_same_dim(const StateVector& a, const StateVector& b) {
  if (a.dim() != b.dim()) {
    throw DimensionError("dimension mismatch: " + std::to_string(a.dim()) + " vs " +
                         std::to_string(b.dim()));
  }
}

Complex inner_product(const StateVector& a, const StateVector& b) {
  require_same_dim(a, b);
  Complex sum = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) sum += a[i] * std::conj(b[i]);
  return sum;
}

double norm(const StateVector& a) {
  double sum = 0.0;
  for (const Complex& x : a.amplitudes()) sum += std::norm(x);
  return std::sqrt(sum);
}

UnitState normalize(const StateVector& a) {
  const double n = norm(a);
  if (n <= kZeroTol) throw ZeroVectorError("cannot normalize a zero vector");
  std::vector<Complex> amps(a.amplitudes().begin(), a.amplitudes().end());
  for (Complex& x : amps) x /= n;
  return UnitState(StateVector(std::move(amps)));
}

double transition_probability(const StateVector& phi, const StateVector& psi) {
  require_same_dim(phi, psi);
  const double ff = inner_product(phi, phi).real();
  const double psi_sq = inner_product(psi, psi).real();
  if (ff <= kZeroTol * kZeroTol || psi_sq <= kZeroTol * kZeroTol) {
    throw ZeroVectorError("transition probability of a zero vector");
  }
  const double p = std::norm(inner_product(phi, psi)) / (psi_sq * ff);
  return std::clamp(p, 0.0, 1.0);
}

StateVector apply_projector(const UnitState& psi, const StateVector& phi) {
  return psi.vector() * inner_product(phi, psi);
}

bool ray_equal(const StateVector& a, const StateVector& b, double tol) {
  return transition_probability(normalize(a), normalize(b)) >= 1.0 - tol;
}

StateVector canonical_ray(const StateVector& a) {
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const double modulus = std::abs(a[i]);
    if (modulus > kZeroTol) {
      const Complex phase = std::conj(a[i]) / modulus;
      StateVector out = a * phase;
      std::vector<Complex> amps(out.amplitudes().begin(), out.amplitudes().end());
      amps[i] = Complex(modulus, 0.0);
      if (a.is_real()) {
        for (Complex& x : amps) x.imag(0.0);
      }
      return StateVector(std::move(amps));
    }
  }
  return a;
}

}  // namespace qam
