#include "qam/stats.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "qam/error.hpp"
#include "qam/format.hpp"
#include "qam/random.hpp"

namespace qam {

namespace {

struct OverlapAccumulator {
  double sum_abs = 0.0;
  double sum_sq = 0.0;
};

}  // namespace

OverlapSummary overlap_statistic(std::size_t dim, std::size_t trials, Field field,
                                 std::uint64_t seed, unsigned threads) {
  if (dim < 2) throw PreconditionError("overlap statistic needs dim >= 2");
  if (trials < 1) throw PreconditionError("overlap statistic needs trials >= 1");
  const std::size_t chunks = stream_count(trials);
  std::vector<OverlapAccumulator> partial(chunks);
  run_chunks(chunks, threads, [&](std::size_t c) {
    Rng rng = make_stream(seed, c);
    const std::size_t begin = c * kTrialsPerStream;
    const std::size_t end = std::min(trials, begin + kTrialsPerStream);
    OverlapAccumulator acc;
    for (std::size_t t = begin; t < end; ++t) {
      const UnitState w = random_unit_vector(dim, field, rng);
      const UnitState v = random_unit_vector(dim, field, rng);
      const Complex overlap = inner_product(w, v);
      acc.sum_abs += std::abs(overlap);
      acc.sum_sq += std::norm(overlap);
    }
    partial[c] = acc;
  });
  OverlapAccumulator total;
  for (const OverlapAccumulator& acc : partial) {
    total.sum_abs += acc.sum_abs;
    total.sum_sq += acc.sum_sq;
  }
  const double n = static_cast<double>(trials);
  const double mean_sq = total.sum_sq / n;
  return {dim, trials, total.sum_abs / n, mean_sq, static_cast<double>(dim) * mean_sq};
}

void write_overlap_csv(std::ostream& out, const std::vector<OverlapSummary>& rows,
                       std::uint64_t seed) {
  out << "dim,trials,mean_abs_overlap,mean_sq_overlap,scaled_mean_sq,seed\n";
  for (const OverlapSummary& r : rows) {
    out << r.dim << ',' << r.trials << ',' << format_double(r.mean_abs_overlap) << ','
        << format_double(r.mean_sq_overlap) << ',' << format_double(r.scaled_mean_sq) << ','
        << seed << '\n';
  }
}

GramReport gram_report(const PatternBank& bank) {
  const std::size_t k = bank.size();
  GramReport report{k, std::vector<double>(k * k, 0.0), 0.0};
  for (std::size_t i = 0; i < k; ++i) {
    report.abs_overlap[i * k + i] = std::abs(inner_product(bank[i].weights, bank[i].weights));
    for (std::size_t j = i + 1; j < k; ++j) {
      const double overlap = std::abs(inner_product(bank[i].weights, bank[j].weights));
      report.abs_overlap[i * k + j] = overlap;
      report.abs_overlap[j * k + i] = overlap;
      report.max_off_diagonal = std::max(report.max_off_diagonal, overlap);
    }
  }
  return report;
}

void write_gram_csv(std::ostream& out, const GramReport& report,
                    const std::vector<std::string>& labels) {
  if (labels.size() != report.size) throw DimensionError("gram report label count mismatch");
  out << "label";
  for (const std::string& l : labels) out << ',' << l;
  out << '\n';
  for (std::size_t i = 0; i < report.size; ++i) {
    out << labels[i];
    for (std::size_t j = 0; j < report.size; ++j) out << ',' << format_double(report.at(i, j));
    out << '\n';
  }
  out << "\nmax_off_diagonal," << format_double(report.max_off_diagonal) << '\n';
}

}  // namespace qam
