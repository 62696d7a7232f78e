#include "qam/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>
#include <sstream>

#include "qam/aaam.hpp"
#include "qam/error.hpp"
#include "qam/files.hpp"
#include "qam/format.hpp"
#include "qam/measurement.hpp"
#include "qam/patterns.hpp"
#include "qam/stats.hpp"

namespace qam {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string channel_text(std::size_t index) {
  return index == kResidual ? std::string("-1") : std::to_string(index);
}

void write_recognition(std::ostream& out, const RecognitionResult& r) {
  out << "label,channel,score,mode\n"
      << r.label << ',' << channel_text(r.channel_index) << ',' << format_double(r.score) << ','
      << to_string(r.mode) << '\n';
}

std::vector<std::size_t> parse_dims(const std::string& list) {
  std::vector<std::size_t> dims;
  std::stringstream ss(list);
  for (std::string item; std::getline(ss, item, ',');) {
    try {
      std::size_t used = 0;
      const unsigned long long d = std::stoull(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      dims.push_back(static_cast<std::size_t>(d));
    } catch (const std::logic_error&) {
      throw UsageError("--dims: '" + item + "' is not a positive integer");
    }
  }
  if (dims.empty()) throw UsageError("--dims needs at least one dimension");
  return dims;
}

Field field_of(const StateVector& v) { return v.is_real() ? Field::kReal : Field::kComplex; }

}  // namespace

int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quantum analogue memory: pattern banks, recognition, correction and statistics",
               "qam"};
  app.require_subcommand(1);

  std::uint64_t seed = 0;
  unsigned threads = 1;
  auto add_seed = [&](CLI::App* sub) {
    sub->add_option("--seed", seed, "Master seed (default: $QAM_SEED, else 0)")->envname("QAM_SEED");
  };
  auto add_threads = [&](CLI::App* sub) {
    sub->add_option("--threads", threads, "Worker threads; output does not depend on it")
        ->check(CLI::PositiveNumber);
  };

  // bank-build
  std::string out_path;
  std::vector<std::string> labels;
  std::vector<std::string> images;
  std::string field_name = "REAL";
  CLI::App* bank_build = app.add_subcommand("bank-build", "Store labelled images as a pattern bank");
  bank_build->add_option("--out", out_path, "Bank file to write")->required();
  bank_build->add_option("--label", labels, "Label for the image at the same position")
      ->required()
      ->allow_extra_args(false);
  bank_build->add_option("images", images, "PGM images or QAMSTATE files")->required();
  bank_build->add_option("--field", field_name, "REAL or COMPLEX");

  // recognize
  std::string bank_path;
  std::string input_path;
  std::string mode = "deterministic";
  std::size_t copies = 1000;
  std::size_t samples = 1;
  CLI::App* recognize = app.add_subcommand("recognize", "Recognize an input against a bank");
  recognize->add_option("--bank", bank_path, "Bank file")->required();
  recognize->add_option("--input", input_path, "PGM image or QAMSTATE file")->required();
  recognize->add_option("--mode", mode, "deterministic, sampled or multicopy")
      ->check(CLI::IsMember({"deterministic", "sampled", "multicopy"}));
  recognize->add_option("--copies", copies, "Copies for multicopy mode")->check(CLI::PositiveNumber);
  recognize->add_option("--samples", samples, "Shots for sampled mode")->check(CLI::PositiveNumber);
  add_seed(recognize);

  // correct
  double tol = kDependenceTol;
  std::string span_path;
  CLI::App* correct_cmd = app.add_subcommand("correct", "Correct an input by projection onto the span of images");
  correct_cmd->add_option("--images", images, "Stored images")->required();
  correct_cmd->add_option("--input", input_path, "Noisy input")->required();
  correct_cmd->add_option("--tol", tol, "Relative dependence tolerance")->check(CLI::PositiveNumber);
  correct_cmd->add_option("--out", out_path, "Write the corrected state here instead of stdout");
  correct_cmd->add_option("--save-span", span_path, "Also write the span basis (QAMSPAN)");

  // measure
  CLI::App* measure_cmd = app.add_subcommand("measure", "Sample measurements in the bank basis");
  measure_cmd->add_option("--bank", bank_path, "Orthogonal bank file")->required();
  measure_cmd->add_option("--input", input_path, "PGM image or QAMSTATE file")->required();
  measure_cmd->add_option("--samples", samples, "Number of shots")->required()->check(CLI::PositiveNumber);
  add_seed(measure_cmd);
  add_threads(measure_cmd);

  // chain
  std::vector<std::string> filter_paths;
  std::size_t particles = 0;
  CLI::App* chain = app.add_subcommand("chain", "Survival probability through a filter chain");
  chain->add_option("--filters", filter_paths, "Filter states in beam order")->required();
  chain->add_option("--input", input_path, "Beam state")->required();
  chain->add_option("--samples", particles, "Also simulate this many particles");
  add_seed(chain);
  add_threads(chain);

  // stats
  std::string dims_list;
  std::size_t trials = 10000;
  CLI::App* stats = app.add_subcommand("stats", "Overlap statistics of random unit vectors");
  stats->add_option("--dims", dims_list, "Comma-separated dimensions")->required();
  stats->add_option("--trials", trials, "Pairs per dimension")->check(CLI::PositiveNumber);
  stats->add_option("--field", field_name, "REAL or COMPLEX");
  add_seed(stats);
  add_threads(stats);

  // gram
  CLI::App* gram = app.add_subcommand("gram", "Absolute Gram matrix of a bank");
  gram->add_option("--bank", bank_path, "Bank file")->required();

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (bank_build->parsed()) {
      if (labels.size() != images.size()) {
        throw UsageError("got " + std::to_string(labels.size()) + " labels for " +
                         std::to_string(images.size()) + " images");
      }
      const Field field = parse_field(field_name);
      std::vector<Pattern> patterns;
      for (std::size_t i = 0; i < images.size(); ++i) {
        patterns.push_back({labels[i], load_input_state(images[i])});
      }
      const PatternBank bank(std::move(patterns), field);
      save_bank(out_path, bank);
      out << "wrote " << bank.size() << " patterns (dim " << bank.dim() << ", "
          << (bank.orthogonal() ? "orthogonal" : "non-orthogonal") << ") to " << out_path << '\n';
    } else if (recognize->parsed()) {
      const PatternBank bank = load_bank(bank_path);
      const UnitState s = load_input_state(input_path);
      if (mode == "deterministic") {
        write_recognition(out, classify_max_channel(bank, s));
      } else if (mode == "sampled") {
        const Histogram hist = sample_counts(bank.as_basis(), s, samples, seed);
        std::size_t best = 0;
        for (std::size_t i = 1; i < hist.counts.size(); ++i) {
          if (hist.counts[i] > hist.counts[best]) best = i;
        }
        const bool residual = best == bank.size();
        write_recognition(out, {residual ? "RESIDUAL" : bank[best].label,
                                residual ? kResidual : best, hist.frequency(best),
                                RecognitionMode::kSampled});
      } else {
        Rng rng = make_stream(seed);
        const MultiCopyResult r = multi_copy_recognize(bank, s, copies, rng);
        write_recognition(out, r.result);
        out << "\nchannel,label,copies,passes,pass_rate,exact_probability\n";
        for (std::size_t k = 0; k < bank.size(); ++k) {
          out << k << ',' << bank[k].label << ',' << r.copies[k] << ',' << r.passes[k] << ','
              << format_double(r.pass_rates[k]) << ','
              << format_double(transition_probability(s, bank[k].weights)) << '\n';
        }
      }
    } else if (correct_cmd->parsed()) {
      std::vector<StateVector> stored;
      for (const std::string& path : images) stored.push_back(load_input_state(path));
      const Subspace sub = build_span(stored, tol);
      const CorrectionReport report = correct(sub, load_input_state(input_path));
      out << "in_span_fraction,residual_norm,rank\n"
          << format_double(report.in_span_fraction) << ',' << format_double(report.residual_norm)
          << ',' << sub.rank() << '\n';
      const Field field = field_of(report.corrected);
      if (!span_path.empty()) {
        std::ofstream span_out(span_path, std::ios::binary);
        if (!span_out) throw FormatError("cannot write '" + span_path + "'");
        bool real = true;
        for (const UnitState& q : sub.basis()) real = real && q.vector().is_real();
        write_span(span_out, sub, real ? Field::kReal : Field::kComplex);
      }
      if (out_path.empty()) {
        out << '\n';
        write_state(out, "corrected", report.corrected, field);
      } else {
        std::ofstream state_out(out_path, std::ios::binary);
        if (!state_out) throw FormatError("cannot write '" + out_path + "'");
        write_state(state_out, "corrected", report.corrected, field);
      }
    } else if (measure_cmd->parsed()) {
      const PatternBank bank = load_bank(bank_path);
      const UnitState s = load_input_state(input_path);
      write_histogram_csv(out, sample_counts(bank.as_basis(), s, samples, seed, threads),
                          bank.labels());
    } else if (chain->parsed()) {
      std::vector<UnitState> filters;
      for (const std::string& path : filter_paths) filters.push_back(load_input_state(path));
      const UnitState beam = load_input_state(input_path);
      const double p = filter_chain(filters, beam);
      if (particles == 0) {
        out << "survival_probability\n" << format_double(p) << '\n';
      } else {
        const ChainSample sample = filter_chain_sampled(filters, beam, particles, seed, threads);
        const double sigma = std::sqrt(p * (1.0 - p) / static_cast<double>(particles));
        const bool agrees = std::abs(sample.frequency() - p) <= 3.0 * sigma;
        out << "survival_probability,particles,survived,sampled_frequency,sigma,within_3sigma\n"
            << format_double(p) << ',' << sample.particles << ',' << sample.survived << ','
            << format_double(sample.frequency()) << ',' << format_double(sigma) << ','
            << (agrees ? "true" : "false") << '\n';
      }
    } else if (stats->parsed()) {
      const Field field = parse_field(field_name);
      std::vector<OverlapSummary> rows;
      for (std::size_t dim : parse_dims(dims_list)) {
        rows.push_back(overlap_statistic(dim, trials, field, seed, threads));
      }
      write_overlap_csv(out, rows, seed);
    } else if (gram->parsed()) {
      const PatternBank bank = load_bank(bank_path);
      write_gram_csv(out, gram_report(bank), bank.labels());
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.name() << ": " << e.what() << '\n';
    return kExitData;
  }
  return kExitOk;
}

}  // namespace qam
