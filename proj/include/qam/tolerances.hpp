#ifndef QAM_TOLERANCES_HPP
#define QAM_TOLERANCES_HPP

namespace qam {

// Admission tolerance for unit-norm states: | ||v|| - 1 | <= kNormTol.
inline constexpr double kNormTol = 1e-9;
// Norms at or below this are treated as the zero vector.
inline constexpr double kZeroTol = 1e-12;
// Pairwise overlap bound for a set to count as orthonormal.
inline constexpr double kOrthoTol = 1e-8;
// Projections shorter than this carry no usable direction.
inline constexpr double kSpanTol = 1e-6;
// Relative residual below which Gram-Schmidt drops an image as dependent.
inline constexpr double kDependenceTol = 1e-10;

}  // namespace qam

#endif  // QAM_TOLERANCES_HPP
