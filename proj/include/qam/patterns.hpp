#ifndef QAM_PATTERNS_HPP
#define QAM_PATTERNS_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qam/measurement.hpp"
#include "qam/random.hpp"
#include "qam/state.hpp"

namespace qam {

struct Pattern {
  std::string label;
  UnitState weights;
};

/// CVPNC memory: labelled unit-norm pattern rays w(k), one per channel.
class PatternBank {
 public:
  /// Throws BankError for an empty list, duplicate or blank labels, or
  /// labels containing whitespace; DimensionError on mixed dimensions;
  /// FieldError when a REAL bank holds a complex amplitude.
  PatternBank(std::vector<Pattern> patterns, Field field);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return patterns_.size(); }
  Field field() const { return field_; }
  /// Pairwise |<w(i)|w(j)>| <= kOrthoTol for all i != j.
  bool orthogonal() const { return orthogonal_; }

  const Pattern& operator[](std::size_t k) const { return patterns_[k]; }
  const std::vector<Pattern>& patterns() const { return patterns_; }
  std::vector<std::string> labels() const;

  /// The patterns as a measurement device. Throws OrthogonalityError when
  /// the bank is not orthogonal.
  const MeasurementBasis& as_basis() const;

 private:
  std::vector<Pattern> patterns_;
  std::size_t dim_;
  Field field_;
  bool orthogonal_;
  std::optional<MeasurementBasis> basis_;
};

enum class RecognitionMode { kDeterministic, kSampled, kMultiCopy };

struct RecognitionResult {
  std::string label;          // "RESIDUAL" when a sampled shot leaves the span
  std::size_t channel_index;  // kResidual in that case
  double score;               // probability or empirical rate in [0, 1]
  RecognitionMode mode;
};

std::string_view to_string(RecognitionMode mode);

/// Formal neuron A = (w, s) = sum_i w_i s_i. Throws FieldError when either
/// input has a nonzero imaginary part.
double neuron_activation(const StateVector& w, const StateVector& s);

/// theta(A - A0): 1 if A > A0, else 0.
int threshold_output(double activation, double threshold);

/// Deterministic CVPNC: score(k) = |<w(k)|s>|^2 / ||s||^2, argmax with ties
/// to the lowest channel. Invariant under s -> alpha s.
RecognitionResult classify_max_channel(const PatternBank& bank, const StateVector& s);

/// One measurement with the bank as basis. Requires an orthogonal bank.
RecognitionResult recognize_sampled(const PatternBank& bank, const UnitState& s, Rng& rng);

struct MultiCopyResult {
  RecognitionResult result;
  std::vector<std::size_t> copies;  // per channel
  std::vector<std::size_t> passes;  // per channel
  std::vector<double> pass_rates;   // passes / copies
};

/// Distributes m copies of s round-robin over the K filters P_w(k) (copy c
/// goes to channel c mod K) and picks the channel with the highest
/// empirical pass rate, ties to the lowest index. Works for non-orthogonal
/// banks. Throws InsufficientCopiesError when m < K.
MultiCopyResult multi_copy_recognize(const PatternBank& bank, const UnitState& s, std::size_t m,
                                     Rng& rng);

}  // namespace qam

#endif  // QAM_PATTERNS_HPP
