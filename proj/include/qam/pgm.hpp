#ifndef QAM_PGM_HPP
#define QAM_PGM_HPP

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "qam/state.hpp"

namespace qam {

struct GrayImage {
  std::size_t width = 0;
  std::size_t height = 0;
  std::uint32_t maxval = 0;
  std::vector<std::uint32_t> pixels;  // row-major
};

/// Parses Netpbm P2 (ASCII) or P5 (binary) graymaps. '#' comments may
/// appear between header tokens. P5 samples are one byte for maxval < 256
/// and two big-endian bytes otherwise. Throws FormatError on a bad magic,
/// header or truncated raster and RangeError for a sample above maxval.
GrayImage read_pgm(std::string_view bytes);
GrayImage read_pgm_file(const std::filesystem::path& path);

/// Serializes as P2 or P5; used for fixtures and round trips.
std::string write_pgm(const GrayImage& image, bool binary);

/// Row-major flatten with amplitude pixel / maxval, normalized. REAL field.
/// Throws ZeroVectorError for an all-black image.
UnitState image_to_state(const GrayImage& image);

}  // namespace qam

#endif  // QAM_PGM_HPP
