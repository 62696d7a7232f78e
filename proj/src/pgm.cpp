#include "qam/pgm.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <limits>
#include <sstream>

#include "qam/error.hpp"
#include "qam/files.hpp"

namespace qam {

namespace {

class HeaderReader {
 public:
  explicit HeaderReader(std::string_view bytes) : bytes_(bytes) {}

  std::size_t position() const { return pos_; }

  // Skips whitespace and '#' comments, then reads an unsigned decimal token.
  // Returns false at end of input.
  bool next_number(std::uint64_t& value) {
    skip_separators();
    if (pos_ >= bytes_.size()) return false;
    if (!std::isdigit(static_cast<unsigned char>(bytes_[pos_]))) {
      throw FormatError("unexpected character '" + std::string(1, bytes_[pos_]) +
                        "' in PGM at byte " + std::to_string(pos_));
    }
    value = 0;
    while (pos_ < bytes_.size() && std::isdigit(static_cast<unsigned char>(bytes_[pos_]))) {
      const std::uint64_t digit = static_cast<std::uint64_t>(bytes_[pos_] - '0');
      if (value > (std::numeric_limits<std::uint32_t>::max() - digit) / 10) {
        throw RangeError("PGM number too large at byte " + std::to_string(pos_));
      }
      value = value * 10 + digit;
      ++pos_;
    }
    return true;
  }

  std::uint64_t require_number(const char* what) {
    std::uint64_t value = 0;
    if (!next_number(value)) throw FormatError(std::string("truncated PGM: missing ") + what);
    return value;
  }

  // The single whitespace byte that ends a binary header.
  void consume_raster_separator() {
    if (pos_ >= bytes_.size() || !std::isspace(static_cast<unsigned char>(bytes_[pos_]))) {
      throw FormatError("truncated PGM: missing whitespace before raster");
    }
    ++pos_;
  }

 private:
  void skip_separators() {
    while (pos_ < bytes_.size()) {
      const unsigned char c = static_cast<unsigned char>(bytes_[pos_]);
      if (std::isspace(c)) {
        ++pos_;
      } else if (c == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n' && bytes_[pos_] != '\r') ++pos_;
      } else {
        break;
      }
    }
  }

  std::string_view bytes_;
  std::size_t pos_ = 2;
};

}  // namespace

GrayImage read_pgm(std::string_view bytes) {
  if (bytes.size() < 2 || bytes[0] != 'P' || (bytes[1] != '2' && bytes[1] != '5')) {
    throw FormatError("not a PGM file (expected magic P2 or P5)");
  }
  const bool binary = bytes[1] == '5';
  HeaderReader reader(bytes);
  GrayImage img;
  img.width = reader.require_number("width");
  img.height = reader.require_number("height");
  const std::uint64_t maxval = reader.require_number("maxval");
  if (img.width == 0 || img.height == 0) throw FormatError("PGM dimensions must be positive");
  if (maxval == 0 || maxval > 65535) throw FormatError("PGM maxval must be in [1, 65535]");
  img.maxval = static_cast<std::uint32_t>(maxval);
  const std::size_t count = img.width * img.height;
  img.pixels.reserve(std::min(count, bytes.size()));

  if (binary) {
    reader.consume_raster_separator();
    const std::size_t bytes_per_sample = img.maxval < 256 ? 1 : 2;
    const std::size_t start = reader.position();
    if (bytes.size() - start < count * bytes_per_sample) {
      throw FormatError("truncated PGM raster: expected " + std::to_string(count * bytes_per_sample) +
                        " bytes, found " + std::to_string(bytes.size() - start));
    }
    for (std::size_t i = 0; i < count; ++i) {
      const auto* p = reinterpret_cast<const unsigned char*>(bytes.data() + start + i * bytes_per_sample);
      const std::uint32_t v = bytes_per_sample == 1 ? p[0] : (std::uint32_t{p[0]} << 8) | p[1];
      if (v > img.maxval) {
        throw RangeError("PGM sample " + std::to_string(v) + " exceeds maxval " +
                         std::to_string(img.maxval));
      }
      img.pixels.push_back(v);
    }
  } else {
    for (std::size_t i = 0; i < count; ++i) {
      std::uint64_t v = 0;
      if (!reader.next_number(v)) {
        throw FormatError("truncated PGM raster: expected " + std::to_string(count) +
                          " samples, found " + std::to_string(i));
      }
      if (v > img.maxval) {
        throw RangeError("PGM sample " + std::to_string(v) + " exceeds maxval " +
                         std::to_string(img.maxval));
      }
      img.pixels.push_back(static_cast<std::uint32_t>(v));
    }
  }
  return img;
}

GrayImage read_pgm_file(const std::filesystem::path& path) { return read_pgm(read_file(path)); }

std::string write_pgm(const GrayImage& image, bool binary) {
  std::ostringstream out;
  out << (binary ? "P5" : "P2") << '\n' << image.width << ' ' << image.height << '\n'
      << image.maxval << '\n';
  if (binary) {
    for (std::uint32_t v : image.pixels) {
      if (image.maxval >= 256) out.put(static_cast<char>((v >> 8) & 0xff));
      out.put(static_cast<char>(v & 0xff));
    }
  } else {
    for (std::size_t i = 0; i < image.pixels.size(); ++i) {
      out << image.pixels[i] << ((i + 1) % image.width == 0 ? '\n' : ' ');
    }
  }
  return out.str();
}

UnitState image_to_state(const GrayImage& image) {
  std::vector<double> values;
  values.reserve(image.pixels.size());
  for (std::uint32_t v : image.pixels) {
    values.push_back(static_cast<double>(v) / static_cast<double>(image.maxval));
  }
  try {
    return normalize(StateVector::from_real(values));
  } catch (const ZeroVectorError&) {
    throw ZeroVectorError("image has no nonzero pixel");
  }
}

}  // namespace qam
