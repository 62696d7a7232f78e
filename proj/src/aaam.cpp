#include "qam/aaam.hpp"

#include <algorithm>
#include <cmath>

#include "qam/error.hpp"
#include "qam/format.hpp"

namespace qam {

Subspace::Subspace(std::vector<UnitState> basis, std::size_t source_count)
    : basis_(std::move(basis)), source_count_(source_count) {
  if (basis_.empty()) throw BasisError("subspace basis must be non-empty");
  for (const UnitState& q : basis_) require_same_dim(basis_.front(), q);
  if (basis_.size() > basis_.front().dim()) throw BasisError("subspace rank exceeds dimension");
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    for (std::size_t j = i + 1; j < basis_.size(); ++j) {
      const double overlap = std::abs(inner_product(basis_[i], basis_[j]));
      if (overlap > kOrthoTol) {
        throw BasisError("subspace basis vectors " + std::to_string(i) + " and " +
                         std::to_string(j) + " overlap by " + format_double(overlap));
      }
    }
  }
  source_count_ = std::max(source_count_, basis_.size());
}

Subspace build_span(const std::vector<StateVector>& images, double tol) {
  if (images.empty()) throw AllDegenerateError("no images to span");
  for (const StateVector& img : images) require_same_dim(images.front(), img);

  std::vector<UnitState> basis;
  for (const StateVector& img : images) {
    const double img_norm = norm(img);
    if (img_norm <= kZeroTol) continue;
    StateVector r = img;
    for (int pass = 0; pass < 2; ++pass) {
      for (const UnitState& q : basis) r -= apply_projector(q, r);
    }
    const double r_norm = norm(r);
    if (r_norm < tol * img_norm || r_norm <= kZeroTol) continue;
    basis.push_back(normalize(r));
  }
  if (basis.empty()) throw AllDegenerateError("every image is zero or linearly dependent");
  return Subspace(std::move(basis), images.size());
}

StateVector project_onto_span(const Subspace& sub, const StateVector& x) {
  require_same_dim(sub.basis().front(), x);
  StateVector out = StateVector::zeros(x.dim());
  for (const UnitState& q : sub.basis()) out += apply_projector(q, x);
  return out;
}

CorrectionReport correct(const Subspace& sub, const StateVector& x) {
  const UnitState unit = normalize(x);
  const StateVector projected = project_onto_span(sub, unit);
  const double projected_norm = norm(projected);
  if (projected_norm <= kSpanTol) {
    throw OutOfSpanError("input has no component in the memory span (projection norm " +
                         format_double(projected_norm) + ")");
  }
  const double residual = norm(unit.vector() - projected);
  return {normalize(projected), projected_norm * projected_norm, residual};
}

double recall_error(const UnitState& reference, const UnitState& candidate) {
  return 1.0 - transition_probability(candidate, reference);
}

}  // namespace qam
