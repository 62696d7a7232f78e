#ifndef QAM_STATS_HPP
#define QAM_STATS_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "qam/patterns.hpp"
#include "qam/state.hpp"

namespace qam {

struct OverlapSummary {
  std::size_t dim;
  std::size_t trials;
  double mean_abs_overlap;  // E|(w, v)|
  double mean_sq_overlap;   // E|(w, v)|^2
  double scaled_mean_sq;    // dim * mean_sq_overlap; 1 in expectation
};

/// Monte Carlo over `trials` independent pairs of random unit vectors.
/// Deterministic per seed and independent of `threads`.
OverlapSummary overlap_statistic(std::size_t dim, std::size_t trials, Field field,
                                 std::uint64_t seed, unsigned threads = 1);

/// CSV header plus one row per summary:
/// dim,trials,mean_abs_overlap,mean_sq_overlap,scaled_mean_sq,seed
void write_overlap_csv(std::ostream& out, const std::vector<OverlapSummary>& rows,
                       std::uint64_t seed);

struct GramReport {
  std::size_t size;
  std::vector<double> abs_overlap;  // row-major size x size, |<w(i)|w(j)>|
  double max_off_diagonal;

  double at(std::size_t i, std::size_t j) const { return abs_overlap[i * size + j]; }
};

GramReport gram_report(const PatternBank& bank);

/// Matrix CSV (header row of labels), a blank line, then
/// max_off_diagonal,<value>.
void write_gram_csv(std::ostream& out, const GramReport& report,
                    const std::vector<std::string>& labels);

}  // namespace qam

#endif  // QAM_STATS_HPP
