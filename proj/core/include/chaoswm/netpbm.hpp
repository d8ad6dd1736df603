#pragma once

#include <cstddef>
#include <filesystem>
#include <string>

#include "chaoswm/bit_vector.hpp"
#include "chaoswm/media_plane.hpp"

namespace chaoswm {

/// Binary image as cells: bit 1 is a black PBM pixel. Row-major.
struct BinaryImage {
  std::size_t width = 0;
  std::size_t height = 0;
  BitVector bits;

  bool operator==(const BinaryImage&) const = default;
};

enum class PnmEncoding { kAscii, kRaw };

// PGM: P2/P5 with maxval 255. PBM: P1/P4. Header comments are skipped.
// Malformed input throws FormatError.

GrayImage decode_pgm(const std::string& data);
std::string encode_pgm(const GrayImage& img, PnmEncoding encoding = PnmEncoding::kRaw);
BinaryImage decode_pbm(const std::string& data);
std::string encode_pbm(const BinaryImage& img, PnmEncoding encoding = PnmEncoding::kRaw);

GrayImage read_pgm(const std::filesystem::path& path);
void write_pgm(const std::filesystem::path& path, const GrayImage& img,
               PnmEncoding encoding = PnmEncoding::kRaw);
BinaryImage read_pbm(const std::filesystem::path& path);
void write_pbm(const std::filesystem::path& path, const BinaryImage& img,
               PnmEncoding encoding = PnmEncoding::kRaw);

}  // namespace chaoswm
