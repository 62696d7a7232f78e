#include "qam/patterns.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <set>

#include "qam/error.hpp"
#include "qam/tolerances.hpp"

namespace qam {

PatternBank::PatternBank(std::vector<Pattern> patterns, Field field)
    : patterns_(std::move(patterns)), dim_(0), field_(field), orthogonal_(true) {
  if (patterns_.empty()) throw BankError("pattern bank must hold at least one pattern");
  dim_ = patterns_.front().weights.dim();
  std::set<std::string> seen;
  for (const Pattern& p : patterns_) {
    if (p.label.empty() ||
        std::any_of(p.label.begin(), p.label.end(),
                    [](unsigned char c) { return std::isspace(c) || c == ','; })) {
      throw BankError("invalid pattern label '" + p.label + "'");
    }
    if (!seen.insert(p.label).second) throw BankError("duplicate pattern label '" + p.label + "'");
    require_same_dim(patterns_.front().weights, p.weights);
    if (!p.weights.vector().in_field(field_)) {
      throw FieldError("pattern '" + p.label + "' has complex amplitudes in a REAL bank");
    }
  }
  for (std::size_t i = 0; i < patterns_.size() && orthogonal_; ++i) {
    for (std::size_t j = i + 1; j < patterns_.size(); ++j) {
      if (std::abs(inner_product(patterns_[i].weights, patterns_[j].weights)) > kOrthoTol) {
        orthogonal_ = false;
        break;
      }
    }
  }
  if (orthogonal_) {
    std::vector<UnitState> outcomes;
    outcomes.reserve(patterns_.size());
    for (const Pattern& p : patterns_) outcomes.push_back(p.weights);
    basis_.emplace(std::move(outcomes));
  }
}

std::vector<std::string> PatternBank::labels() const {
  std::vector<std::string> out;
  out.reserve(patterns_.size());
  for (const Pattern& p : patterns_) out.push_back(p.label);
  return out;
}

const MeasurementBasis& PatternBank::as_basis() const {
  if (!basis_) {
    throw OrthogonalityError(
        "pattern bank is not orthogonal; a single measurement cannot separate its channels");
  }
  return *basis_;
}

std::string_view to_string(RecognitionMode mode) {
  switch (mode) {
    case RecognitionMode::kDeterministic:
      return "deterministic";
    case RecognitionMode::kSampled:
      return "sampled";
    case RecognitionMode::kMultiCopy:
      return "multicopy";
  }
  return "unknown";
}

double neuron_activation(const StateVector& w, const StateVector& s) {
  require_same_dim(w, s);
  if (!w.is_real() || !s.is_real()) {
    throw FieldError("the formal neuron is defined on real signals only");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < w.dim(); ++i) sum += w[i].real() * s[i].real();
  return sum;
}

int threshold_output(double activation, double threshold) {
  return activation > threshold ? 1 : 0;
}

RecognitionResult classify_max_channel(const PatternBank& bank, const StateVector& s) {
  require_same_dim(bank[0].weights, s);
  const UnitState signal = normalize(s);
  std::size_t best = 0;
  double best_score = -1.0;
  for (std::size_t k = 0; k < bank.size(); ++k) {
    const double score = transition_probability(signal, bank[k].weights);
    if (score > best_score) {
      best = k;
      best_score = score;
    }
  }
  return {bank[best].label, best, best_score, RecognitionMode::kDeterministic};
}

RecognitionResult recognize_sampled(const PatternBank& bank, const UnitState& s, Rng& rng) {
  const MeasurementBasis& basis = bank.as_basis();
  const MeasurementRecord rec = measure(basis, s, rng);
  if (rec.is_residual()) {
    return {"RESIDUAL", kResidual, rec.probability, RecognitionMode::kSampled};
  }
  return {bank[rec.outcome_index].label, rec.outcome_index, rec.probability,
          RecognitionMode::kSampled};
}

MultiCopyResult multi_copy_recognize(const PatternBank& bank, const UnitState& s, std::size_t m,
                                     Rng& rng) {
  require_same_dim(bank[0].weights, s);
  const std::size_t k_count = bank.size();
  if (m < k_count) {
    throw InsufficientCopiesError(std::to_string(m) + " copies cannot cover " +
                                  std::to_string(k_count) + " filters");
  }
  MultiCopyResult out{{}, std::vector<std::size_t>(k_count, 0),
                      std::vector<std::size_t>(k_count, 0), std::vector<double>(k_count, 0.0)};
  for (std::size_t copy = 0; copy < m; ++copy) {
    const std::size_t k = copy % k_count;
    ++out.copies[k];
    if (filter(bank[k].weights, s, rng).passed()) ++out.passes[k];
  }
  std::size_t best = 0;
  for (std::size_t k = 0; k < k_count; ++k) {
    out.pass_rates[k] = static_cast<double>(out.passes[k]) / static_cast<double>(out.copies[k]);
    if (out.pass_rates[k] > out.pass_rates[best]) best = k;
  }
  out.result = {bank[best].label, best, out.pass_rates[best], RecognitionMode::kMultiCopy};
  return out;
}

}  // namespace qam
