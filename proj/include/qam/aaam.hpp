#ifndef QAM_AAAM_HPP
#define QAM_AAAM_HPP

#include <cstddef>
#include <vector>

#include "qam/state.hpp"
#include "qam/tolerances.hpp"

namespace qam {

/// Orthonormal basis q_1..q_r of the linear span of the stored images.
class Subspace {
 public:
  /// Adopts an already orthonormal basis. Throws BasisError when empty or
  /// not orthonormal within kOrthoTol, DimensionError on mixed dimensions.
  Subspace(std::vector<UnitState> basis, std::size_t source_count);

  std::size_t rank() const { return basis_.size(); }
  std::size_t ambient_dim() const { return basis_.front().dim(); }
  std::size_t source_count() const { return source_count_; }
  const std::vector<UnitState>& basis() const { return basis_; }

 private:
  std::vector<UnitState> basis_;
  std::size_t source_count_;
};

/// Modified Gram-Schmidt with one re-orthogonalization pass. An image whose
/// residual norm falls below tol * ||image|| is dropped as dependent.
/// Throws AllDegenerateError when nothing survives.
Subspace build_span(const std::vector<StateVector>& images, double tol = kDependenceTol);

/// x_hat = sum_k q_k <q_k|x>.
StateVector project_onto_span(const Subspace& sub, const StateVector& x);

struct CorrectionReport {
  UnitState corrected;
  double in_span_fraction;  // ||x_hat||^2 for the normalized input
  double residual_norm;     // ||x - x_hat|| for the normalized input
};

/// Normalizes x, projects it onto the span and renormalizes. Throws
/// ZeroVectorError for a zero input and OutOfSpanError when the projection
/// norm is at most kSpanTol.
CorrectionReport correct(const Subspace& sub, const StateVector& x);

/// 1 - |<reference|candidate>|^2.
double recall_error(const UnitState& reference, const UnitState& candidate);

}  // namespace qam

#endif  // QAM_AAAM_HPP
