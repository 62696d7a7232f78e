#ifndef QAM_MEASUREMENT_HPP
#define QAM_MEASUREMENT_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <string>
#include <vector>

#include "qam/random.hpp"
#include "qam/state.hpp"

namespace qam {

/// Outcome index reported when the state lands outside the span of the
/// basis (the complement of a partial basis, or the absorbed branch of a
/// filter).
inline constexpr std::size_t kResidual = std::numeric_limits<std::size_t>::max();
/// Filter outcomes: PASS is outcome 0 of the one-element basis, ABSORB is
/// the residual channel.
inline constexpr std::size_t kPass = 0;
inline constexpr std::size_t kAbsorb = kResidual;

/// Ordered, mutually orthonormal outcome states psi_1..psi_K with
/// 1 <= K <= dim. A partial basis leaves a residual channel.
class MeasurementBasis {
 public:
  /// Throws DimensionError on mixed dimensions, BasisError when empty,
  /// overcomplete, or when some |<psi_i|psi_j>| > kOrthoTol.
  explicit MeasurementBasis(std::vector<UnitState> outcomes);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return outcomes_.size(); }
  bool complete() const { return outcomes_.size() == dim_; }
  const UnitState& operator[](std::size_t i) const { return outcomes_[i]; }
  const std::vector<UnitState>& outcomes() const { return outcomes_; }

  /// The computational basis |0>, ..., |dim-1>.
  static MeasurementBasis computational(std::size_t dim);

 private:
  std::vector<UnitState> outcomes_;
  std::size_t dim_;
};

struct MeasurementRecord {
  std::size_t outcome_index;  // kResidual for the residual channel
  UnitState post_state;
  double probability;

  bool is_residual() const { return outcome_index == kResidual; }
  bool passed() const { return outcome_index == kPass; }
};

/// Pr_i = |<psi_i|chi>|^2 for each outcome, followed by the residual slot
/// 1 - sum Pr_i clamped to [0, 1]. Length is basis.size() + 1.
std::vector<double> outcome_distribution(const MeasurementBasis& basis, const UnitState& chi);

/// One projective measurement: a single uniform draw inverted through the
/// cumulative distribution, then collapse onto the selected outcome.
MeasurementRecord measure(const MeasurementBasis& basis, const UnitState& chi, Rng& rng);

/// Two-outcome device P_psi. PASS collapses to psi; ABSORB leaves the
/// normalized component of chi orthogonal to psi.
MeasurementRecord filter(const UnitState& psi, const UnitState& chi, Rng& rng);

/// Survival probability of a beam prepared in chi through the ordered
/// filters: |<f_1|chi>|^2 * prod_k |<f_k|f_{k-1}>|^2.
double filter_chain(const std::vector<UnitState>& filters, const UnitState& chi);

struct ChainSample {
  std::size_t particles;
  std::size_t survived;
  double frequency() const { return static_cast<double>(survived) / static_cast<double>(particles); }
};

/// Per-particle simulation of filter_chain: each particle walks the chain
/// through filter() and stops at the first absorption.
ChainSample filter_chain_sampled(const std::vector<UnitState>& filters, const UnitState& chi,
                                 std::size_t particles, std::uint64_t seed, unsigned threads = 1);

struct Histogram {
  std::vector<std::size_t> counts;  // per outcome, residual last
  std::vector<double> exact;        // outcome_distribution
  std::size_t shots;

  double frequency(std::size_t slot) const {
    return static_cast<double>(counts[slot]) / static_cast<double>(shots);
  }
};

/// n measurements of fresh copies of chi. Shots are cut into fixed-size
/// sub-streams (see kTrialsPerStream), so the result depends only on the
/// seed, never on `threads`. Throws PreconditionError when n == 0.
Histogram sample_counts(const MeasurementBasis& basis, const UnitState& chi, std::size_t n,
                        std::uint64_t seed, unsigned threads = 1);

/// CSV with columns outcome_label,count,empirical_frequency,exact_probability.
/// `labels` names the basis outcomes; the residual row is labelled RESIDUAL.
void write_histogram_csv(std::ostream& out, const Histogram& hist,
                         const std::vector<std::string>& labels);

}  // namespace qam

#endif  // QAM_MEASUREMENT_HPP
