#include "qam/files.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "qam/error.hpp"
#include "qam/pgm.hpp"
#include "qam/tolerances.hpp"

namespace qam {

namespace {

constexpr std::string_view kBankMagic = "QAMBANK";
constexpr std::string_view kSpanMagic = "QAMSPAN";
constexpr std::string_view kStateMagic = "QAMSTATE";

struct Row {
  std::string label;
  StateVector state;
};

struct VectorFile {
  std::size_t dim;
  Field field;
  std::vector<Row> rows;
};

void write_header(std::ostream& out, std::string_view magic, std::size_t dim, Field field) {
  out << magic << " v1 dim=" << dim << " field=" << to_string(field) << '\n';
}

void write_row(std::ostream& out, const std::string& label, const StateVector& state, Field field) {
  if (!state.in_field(field)) throw FieldError("complex amplitudes in a REAL file");
  const StateVector canonical = canonical_ray(state);
  out << label;
  for (const Complex& a : canonical.amplitudes()) {
    out << ' ' << format_double(a.real()) << ' ' << format_double(a.imag());
  }
  out << '\n';
}

std::string_view strip_key(std::string_view token, std::string_view key) {
  if (token.substr(0, key.size()) != key) {
    throw FormatError("expected '" + std::string(key) + "...' in header, got '" +
                      std::string(token) + "'");
  }
  return token.substr(key.size());
}

double parse_double(const std::string& token, std::size_t line_no) {
  char* end = nullptr;
  const double value = std::strtod(token.c_str(), &end);
  if (token.empty() || end != token.c_str() + token.size() || !std::isfinite(value)) {
    throw FormatError("line " + std::to_string(line_no) + ": bad amplitude '" + token + "'");
  }
  return value;
}

VectorFile read_vector_file(std::istream& in, std::string_view magic) {
  std::string line;
  if (!std::getline(in, line)) throw FormatError("empty file, expected " + std::string(magic));
  std::istringstream header(line);
  std::string got_magic, version, dim_token, field_token;
  header >> got_magic >> version >> dim_token >> field_token;
  if (got_magic != magic) {
    throw FormatError("expected " + std::string(magic) + " header, got '" + got_magic + "'");
  }
  if (version != "v1") throw FormatError("unsupported version '" + version + "'");
  const std::string dim_text(strip_key(dim_token, "dim="));
  char* end = nullptr;
  const unsigned long long dim = std::strtoull(dim_text.c_str(), &end, 10);
  if (dim_text.empty() || *end != '\0' || dim == 0) {
    throw FormatError("bad dimension '" + dim_text + "'");
  }
  VectorFile file{static_cast<std::size_t>(dim), parse_field(strip_key(field_token, "field=")), {}};

  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream row(line);
    std::string label;
    if (!(row >> label)) continue;
    std::vector<std::string> tokens;
    for (std::string t; row >> t;) tokens.push_back(t);
    if (tokens.size() != 2 * file.dim) {
      throw FormatError("line " + std::to_string(line_no) + ": expected " +
                        std::to_string(2 * file.dim) + " numbers, found " +
                        std::to_string(tokens.size()));
    }
    std::vector<Complex> amps(file.dim);
    for (std::size_t i = 0; i < file.dim; ++i) {
      amps[i] = Complex(parse_double(tokens[2 * i], line_no), parse_double(tokens[2 * i + 1], line_no));
    }
    StateVector v(std::move(amps));
    if (!v.in_field(file.field)) {
      throw FieldError("line " + std::to_string(line_no) + ": complex amplitude in a REAL file");
    }
    file.rows.push_back({std::move(label), std::move(v)});
  }
  if (file.rows.empty()) throw FormatError(std::string(magic) + " file holds no vectors");
  return file;
}

UnitState admit_unit(const StateVector& v) {
  if (std::abs(norm(v) - 1.0) <= kNormTol) return UnitState(v);
  return normalize(v);
}

}  // namespace

void write_bank(std::ostream& out, const PatternBank& bank) {
  write_header(out, kBankMagic, bank.dim(), bank.field());
  for (const Pattern& p : bank.patterns()) write_row(out, p.label, p.weights, bank.field());
}

PatternBank read_bank(std::istream& in) {
  VectorFile file = read_vector_file(in, kBankMagic);
  std::vector<Pattern> patterns;
  patterns.reserve(file.rows.size());
  for (Row& row : file.rows) patterns.push_back({std::move(row.label), UnitState(std::move(row.state))});
  return PatternBank(std::move(patterns), file.field);
}

void write_span(std::ostream& out, const Subspace& sub, Field field) {
  write_header(out, kSpanMagic, sub.ambient_dim(), field);
  for (std::size_t k = 0; k < sub.rank(); ++k) {
    write_row(out, "q" + std::to_string(k), sub.basis()[k], field);
  }
}

Subspace read_span(std::istream& in) {
  VectorFile file = read_vector_file(in, kSpanMagic);
  std::vector<UnitState> basis;
  basis.reserve(file.rows.size());
  for (Row& row : file.rows) basis.emplace_back(std::move(row.state));
  const std::size_t rank = basis.size();
  return Subspace(std::move(basis), rank);
}

void write_state(std::ostream& out, const std::string& label, const StateVector& state,
                 Field field) {
  write_header(out, kStateMagic, state.dim(), field);
  write_row(out, label, state, field);
}

UnitState read_state(std::istream& in) {
  VectorFile file = read_vector_file(in, kStateMagic);
  if (file.rows.size() != 1) throw FormatError("QAMSTATE file must hold exactly one vector");
  return admit_unit(file.rows.front().state);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void save_bank(const std::filesystem::path& path, const PatternBank& bank) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot write '" + path.string() + "'");
  write_bank(out, bank);
}

PatternBank load_bank(const std::filesystem::path& path) {
  std::istringstream in(read_file(path));
  return read_bank(in);
}

UnitState load_input_state(const std::filesystem::path& path) {
  const std::string bytes = read_file(path);
  if (bytes.starts_with("P2") || bytes.starts_with("P5")) return image_to_state(read_pgm(bytes));
  if (bytes.starts_with(kStateMagic)) {
    std::istringstream in(bytes);
    return read_state(in);
  }
  throw FormatError("'" + path.string() + "' is neither a PGM image nor a QAMSTATE file");
}

}  // namespace qam
