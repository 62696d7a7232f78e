#ifndef QAM_STATE_HPP
#define QAM_STATE_HPP

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string_view>
#include <vector>

namespace qam {

using Complex = std::complex<double>;

/// Scalar field of a register. REAL is a constrained view of COMPLEX: the
/// arithmetic is shared and only the imaginary parts are pinned to zero.
enum class Field { kReal, kComplex };

std::string_view to_string(Field field);
/// Accepts "REAL" or "COMPLEX" (case-insensitive); throws FormatError.
Field parse_field(std::string_view text);

/// Dense complex amplitude vector of fixed dimension >= 1 with finite entries.
class StateVector {
 public:
  explicit StateVector(std::vector<Complex> amplitudes);
  StateVector(std::initializer_list<Complex> amplitudes);

  static StateVector zeros(std::size_t dim);
  /// Computational basis vector |index> of the given dimension.
  static StateVector basis(std::size_t dim, std::size_t index);
  static StateVector from_real(std::span<const double> values);

  std::size_t dim() const { return amps_.size(); }
  const Complex& operator[](std::size_t i) const { return amps_[i]; }
  std::span<const Complex> amplitudes() const { return amps_; }

  /// True iff every imaginary part is exactly zero.
  bool is_real() const;
  bool in_field(Field field) const { return field == Field::kComplex || is_real(); }

  StateVector& operator+=(const StateVector& other);
  StateVector& operator-=(const StateVector& other);
  StateVector& operator*=(Complex scale);

  friend StateVector operator+(StateVector a, const StateVector& b) { return a += b; }
  friend StateVector operator-(StateVector a, const StateVector& b) { return a -= b; }
  friend StateVector operator*(Complex s, StateVector a) { return a *= s; }
  friend StateVector operator*(StateVector a, Complex s) { return a *= s; }

  friend bool operator==(const StateVector&, const StateVector&) = default;

 private:
  std::vector<Complex> amps_;
};

/// A StateVector whose norm is 1 within kNormTol. Converts implicitly to
/// the underlying vector so every vector operation accepts it.
class UnitState {
 public:
  /// Throws NormError when | ||v|| - 1 | > kNormTol. Does not rescale.
  explicit UnitState(StateVector v);

  const StateVector& vector() const { return v_; }
  operator const StateVector&() const { return v_; }  // NOLINT(google-explicit-constructor)

  std::size_t dim() const { return v_.dim(); }
  const Complex& operator[](std::size_t i) const { return v_[i]; }
  std::span<const Complex> amplitudes() const { return v_.amplitudes(); }

  friend bool operator==(const UnitState&, const UnitState&) = default;

 private:
  StateVector v_;
};

/// Hermitian scalar product (a, b) = sum_i a_i * conj(b_i), i.e. <b|a>.
/// Linear in the first argument, conjugate-linear in the second.
Complex inner_product(const StateVector& a, const StateVector& b);

double norm(const StateVector& a);

/// a / ||a||. Throws ZeroVectorError when ||a|| <= kZeroTol.
UnitState normalize(const StateVector& a);

/// Registration probability |<psi|phi>|^2 / (<psi|psi><phi|phi>), clamped
/// to [0, 1]. Inputs need not be unit norm; zero vectors throw.
double transition_probability(const StateVector& phi, const StateVector& psi);

/// P_psi |phi> = |psi><psi|phi>.
StateVector apply_projector(const UnitState& psi, const StateVector& phi);

/// Same ray up to `tol` in transition probability.
bool ray_equal(const StateVector& a, const StateVector& b, double tol);

/// Representative of the ray of `a` whose first amplitude with modulus above
/// kZeroTol is real and positive. The zero vector is returned unchanged.
StateVector canonical_ray(const StateVector& a);

void require_same_dim(const StateVector& a, const StateVector& b);

}  // namespace qam

#endif  // QAM_STATE_HPP
