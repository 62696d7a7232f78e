#include "qam/measurement.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <string>

#include "qam/error.hpp"
#include "qam/format.hpp"
#include "qam/tolerances.hpp"

namespace qam {

MeasurementBasis::MeasurementBasis(std::vector<UnitState> outcomes)
    : outcomes_(std::move(outcomes)), dim_(0) {
  if (outcomes_.empty()) throw BasisError("measurement basis needs at least one outcome");
  dim_ = outcomes_.front().dim();
  for (const UnitState& psi : outcomes_) require_same_dim(outcomes_.front(), psi);
  if (outcomes_.size() > dim_) {
    throw BasisError("measurement basis has " + std::to_string(outcomes_.size()) +
                     " outcomes in dimension " + std::to_string(dim_));
  }
  for (std::size_t i = 0; i < outcomes_.size(); ++i) {
    for (std::size_t j = i + 1; j < outcomes_.size(); ++j) {
      const double overlap = std::abs(inner_product(outcomes_[i], outcomes_[j]));
      if (overlap > kOrthoTol) {
        throw BasisError("outcomes " + std::to_string(i) + " and " + std::to_string(j) +
                         " are not orthogonal (|overlap| = " + format_double(overlap) + ")");
      }
    }
  }
}

MeasurementBasis MeasurementBasis::computational(std::size_t dim) {
  std::vector<UnitState> outcomes;
  outcomes.reserve(dim);
  for (std::size_t i = 0; i < dim; ++i) outcomes.emplace_back(StateVector::basis(dim, i));
  return MeasurementBasis(std::move(outcomes));
}

std::vector<double> outcome_distribution(const MeasurementBasis& basis, const UnitState& chi) {
  require_same_dim(basis[0], chi);
  std::vector<double> probs;
  probs.reserve(basis.size() + 1);
  double total = 0.0;
  for (const UnitState& psi : basis.outcomes()) {
    const double p = std::norm(inner_product(chi, psi));
    probs.push_back(p);
    total += p;
  }
  probs.push_back(std::clamp(1.0 - total, 0.0, 1.0));
  return probs;
}

namespace {

StateVector residual_component(const MeasurementBasis& basis, const UnitState& chi) {
  StateVector r = chi.vector();
  for (const UnitState& psi : basis.outcomes()) r -= apply_projector(psi, r);
  return r;
}

}  // namespace

MeasurementRecord measure(const MeasurementBasis& basis, const UnitState& chi, Rng& rng) {
  const std::vector<double> probs = outcome_distribution(basis, chi);
  const double u = uniform01(rng);
  double cumulative = 0.0;
  std::size_t last_positive = kResidual;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (probs[i] > 0.0) last_positive = i;
    cumulative += probs[i];
    if (u < cumulative) return {i, basis[i], probs[i]};
  }
  const StateVector r = residual_component(basis, chi);
  if (norm(r) > kZeroTol || last_positive == kResidual) {
    return {kResidual, normalize(r), probs.back()};
  }
  // u landed in a residual slot that is only rounding noise.
  return {last_positive, basis[last_positive], probs[last_positive]};
}

MeasurementRecord filter(const UnitState& psi, const UnitState& chi, Rng& rng) {
  return measure(MeasurementBasis({psi}), chi, rng);
}

double filter_chain(const std::vector<UnitState>& filters, const UnitState& chi) {
  if (filters.empty()) throw PreconditionError("filter chain must contain at least one filter");
  for (const UnitState& f : filters) require_same_dim(f, chi);
  double survival = std::norm(inner_product(chi, filters[0]));
  for (std::size_t k = 1; k < filters.size(); ++k) {
    survival *= std::norm(inner_product(filters[k - 1], filters[k]));
  }
  return survival;
}

ChainSample filter_chain_sampled(const std::vector<UnitState>& filters, const UnitState& chi,
                                 std::size_t particles, std::uint64_t seed, unsigned threads) {
  if (particles == 0) throw PreconditionError("need at least one particle");
  filter_chain(filters, chi);  // validation
  const std::size_t chunks = stream_count(particles);
  std::vector<std::size_t> survived(chunks, 0);
  run_chunks(chunks, threads, [&](std::size_t c) {
    Rng rng = make_stream(seed, c);
    const std::size_t begin = c * kTrialsPerStream;
    const std::size_t end = std::min(particles, begin + kTrialsPerStream);
    for (std::size_t p = begin; p < end; ++p) {
      UnitState state = chi;
      bool alive = true;
      for (const UnitState& f : filters) {
        MeasurementRecord rec = filter(f, state, rng);
        if (!rec.passed()) {
          alive = false;
          break;
        }
        state = std::move(rec.post_state);
      }
      if (alive) ++survived[c];
    }
  });
  ChainSample out{particles, 0};
  for (std::size_t s : survived) out.survived += s;
  return out;
}

Histogram sample_counts(const MeasurementBasis& basis, const UnitState& chi, std::size_t n,
                        std::uint64_t seed, unsigned threads) {
  if (n == 0) throw PreconditionError("sample count must be >= 1");
  Histogram hist{std::vector<std::size_t>(basis.size() + 1, 0), outcome_distribution(basis, chi), n};
  const std::size_t chunks = stream_count(n);
  std::vector<std::vector<std::size_t>> partial(chunks);
  run_chunks(chunks, threads, [&](std::size_t c) {
    Rng rng = make_stream(seed, c);
    std::vector<std::size_t> counts(basis.size() + 1, 0);
    const std::size_t begin = c * kTrialsPerStream;
    const std::size_t end = std::min(n, begin + kTrialsPerStream);
    for (std::size_t shot = begin; shot < end; ++shot) {
      const MeasurementRecord rec = measure(basis, chi, rng);
      ++counts[rec.is_residual() ? basis.size() : rec.outcome_index];
    }
    partial[c] = std::move(counts);
  });
  for (const auto& counts : partial) {
    for (std::size_t i = 0; i < counts.size(); ++i) hist.counts[i] += counts[i];
  }
  return hist;
}

void write_histogram_csv(std::ostream& out, const Histogram& hist,
                         const std::vector<std::string>& labels) {
  if (labels.size() + 1 != hist.counts.size()) {
    throw DimensionError("histogram has " + std::to_string(hist.counts.size() - 1) +
                         " outcomes but " + std::to_string(labels.size()) + " labels");
  }
  out << "outcome_label,count,empirical_frequency,exact_probability\n";
  for (std::size_t i = 0; i < hist.counts.size(); ++i) {
    const std::string& label = i < labels.size() ? labels[i] : std::string("RESIDUAL");
    out << label << ',' << hist.counts[i] << ',' << format_double(hist.frequency(i)) << ','
        << format_double(hist.exact[i]) << '\n';
  }
}

}  // namespace qam
