#include "chaoswm/netpbm.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "chaoswm/errors.hpp"

namespace chaoswm {

namespace {

class HeaderReader {
 public:
  explicit HeaderReader(const std::string& data) : data_(data) {}

  std::string magic() {
    if (data_.size() < 2 || data_[0] != 'P') throw FormatError("not a netpbm file");
    pos_ = 2;
    return data_.substr(0, 2);
  }

  void skip_space_and_comments() {
    while (pos_ < data_.size()) {
      const char c = data_[pos_];
      if (c == '#') {
        while (pos_ < data_.size() && data_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  std::size_t number() {
    skip_space_and_comments();
    if (pos_ >= data_.size() || !std::isdigit(static_cast<unsigned char>(data_[pos_]))) {
      throw FormatError("netpbm: expected a decimal number");
    }
    std::size_t v = 0;
    while (pos_ < data_.size() && std::isdigit(static_cast<unsigned char>(data_[pos_]))) {
      v = v * 10 + static_cast<std::size_t>(data_[pos_] - '0');
      if (v > (1u << 28)) throw FormatError("netpbm: number too large");
      ++pos_;
    }
    return v;
  }

  /// PBM plain format allows bits without separators.
  int pbm_ascii_bit() {
    skip_space_and_comments();
    if (pos_ >= data_.size()) throw FormatError("netpbm: truncated pixel data");
    const char c = data_[pos_++];
    if (c != '0' && c != '1') throw FormatError("pbm: pixel must be 0 or 1");
    return c - '0';
  }

  /// Exactly one whitespace byte separates the header from raw data.
  void raw_separator() {
    if (pos_ >= data_.size() || !std::isspace(static_cast<unsigned char>(data_[pos_]))) {
      throw FormatError("netpbm: missing separator before raster");
    }
    ++pos_;
  }

  std::size_t remaining() const { return data_.size() - pos_; }
  const char* cursor() const { return data_.data() + pos_; }

 private:
  const std::string& data_;
  std::size_t pos_ = 0;
};

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot write " + path.string());
  out.write(data.data(), static_cast<std::streamsize>(data.size()));
  if (!out) throw FormatError("write failed for " + path.string());
}

void check_dims(std::size_t w, std::size_t h) {
  if (w == 0 || h == 0) throw FormatError("netpbm: zero image dimension");
}

}  // namespace

GrayImage decode_pgm(const std::string& data) {
  HeaderReader r(data);
  const auto magic = r.magic();
  if (magic != "P2" && magic != "P5") throw FormatError("expected PGM (P2 or P5), got " + magic);
  const auto w = r.number();
  const auto h = r.number();
  check_dims(w, h);
  const auto maxval = r.number();
  if (maxval != 255) throw FormatError("PGM maxval must be 255");

  std::vector<std::uint8_t> px(w * h);
  if (magic == "P5") {
    r.raw_separator();
    if (r.remaining() < px.size()) throw FormatError("PGM: truncated raster");
    std::copy_n(reinterpret_cast<const std::uint8_t*>(r.cursor()), px.size(), px.begin());
  } else {
    for (auto& p : px) {
      const auto v = r.number();
      if (v > 255) throw FormatError("PGM: sample exceeds maxval");
      p = static_cast<std::uint8_t>(v);
    }
  }
  return GrayImage(w, h, std::move(px));
}

std::string encode_pgm(const GrayImage& img, PnmEncoding encoding) {
  std::string out = (encoding == PnmEncoding::kRaw ? "P5\n" : "P2\n") +
                    std::to_string(img.width()) + " " + std::to_string(img.height()) + "\n255\n";
  if (encoding == PnmEncoding::kRaw) {
    out.append(img.pixels().begin(), img.pixels().end());
    return out;
  }
  for (std::size_t y = 0; y < img.height(); ++y) {
    for (std::size_t x = 0; x < img.width(); ++x) {
      if (x) out += ' ';
      out += std::to_string(img(x, y));
    }
    out += '\n';
  }
  return out;
}

BinaryImage decode_pbm(const std::string& data) {
  HeaderReader r(data);
  const auto magic = r.magic();
  if (magic != "P1" && magic != "P4") throw FormatError("expected PBM (P1 or P4), got " + magic);
  BinaryImage img;
  img.width = r.number();
  img.height = r.number();
  check_dims(img.width, img.height);
  std::vector<std::uint8_t> bits(img.width * img.height);

  if (magic == "P4") {
    r.raw_separator();
    const std::size_t row_bytes = (img.width + 7) / 8;
    if (r.remaining() < row_bytes * img.height) throw FormatError("PBM: truncated raster");
    const auto* raw = reinterpret_cast<const std::uint8_t*>(r.cursor());
    for (std::size_t y = 0; y < img.height; ++y) {
      for (std::size_t x = 0; x < img.width; ++x) {
        bits[y * img.width + x] = (raw[y * row_bytes + x / 8] >> (7 - x % 8)) & 1u;
      }
    }
  } else {
    for (auto& b : bits) b = static_cast<std::uint8_t>(r.pbm_ascii_bit());
  }
  img.bits = BitVector::from_bytes(std::move(bits));
  return img;
}

std::string encode_pbm(const BinaryImage& img, PnmEncoding encoding) {
  if (img.bits.size() != img.width * img.height) {
    throw DimensionMismatchError("PBM bit count does not match dimensions");
  }
  std::string out = (encoding == PnmEncoding::kRaw ? "P4\n" : "P1\n") +
                    std::to_string(img.width) + " " + std::to_string(img.height) + "\n";
  if (encoding == PnmEncoding::kRaw) {
    const std::size_t row_bytes = (img.width + 7) / 8;
    for (std::size_t y = 0; y < img.height; ++y) {
      for (std::size_t byte = 0; byte < row_bytes; ++byte) {
        unsigned char v = 0;
        for (std::size_t k = 0; k < 8; ++k) {
          const std::size_t x = byte * 8 + k;
          if (x < img.width && img.bits[y * img.width + x]) v |= static_cast<unsigned char>(0x80u >> k);
        }
        out += static_cast<char>(v);
      }
    }
    return out;
  }
  for (std::size_t y = 0; y < img.height; ++y) {
    for (std::size_t x = 0; x < img.width; ++x) out += img.bits[y * img.width + x] ? '1' : '0';
    out += '\n';
  }
  return out;
}

GrayImage read_pgm(const std::filesystem::path& path) { return decode_pgm(read_file(path)); }

void write_pgm(const std::filesystem::path& path, const GrayImage& img, PnmEncoding encoding) {
  write_file(path, encode_pgm(img, encoding));
}

BinaryImage read_pbm(const std::filesystem::path& path) { return decode_pbm(read_file(path)); }

void write_pbm(const std::filesystem::path& path, const BinaryImage& img, PnmEncoding encoding) {
  write_file(path, encode_pbm(img, encoding));
}

}  // namespace chaoswm
