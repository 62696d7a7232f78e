#ifndef QAM_FILES_HPP
#define QAM_FILES_HPP

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "qam/aaam.hpp"
#include "qam/format.hpp"
#include "qam/patterns.hpp"
#include "qam/state.hpp"

// Text formats share one layout: a header line
//   <MAGIC> v1 dim=<d> field=<REAL|COMPLEX>
// followed by one row per vector
//   <label> <re_0> <im_0> ... <re_{d-1}> <im_{d-1}>
// with amplitudes in canonical ray form printed to 17 significant digits.
// MAGIC is QAMBANK (pattern bank), QAMSPAN (subspace basis, rows q0..) or
// QAMSTATE (a single state).

namespace qam {

void write_bank(std::ostream& out, const PatternBank& bank);
PatternBank read_bank(std::istream& in);

void write_span(std::ostream& out, const Subspace& sub, Field field);
Subspace read_span(std::istream& in);

void write_state(std::ostream& out, const std::string& label, const StateVector& state,
                 Field field);
/// Reads a QAMSTATE file and normalizes the stored vector.
UnitState read_state(std::istream& in);

void save_bank(const std::filesystem::path& path, const PatternBank& bank);
PatternBank load_bank(const std::filesystem::path& path);

/// Loads a unit state from either a PGM image (P2/P5, via image_to_state)
/// or a QAMSTATE file, chosen by the leading magic.
UnitState load_input_state(const std::filesystem::path& path);

std::string read_file(const std::filesystem::path& path);

}  // namespace qam

#endif  // QAM_FILES_HPP
