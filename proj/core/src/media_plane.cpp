#include "chaoswm/media_plane.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "chaoswm/errors.hpp"

namespace chaoswm {

GrayImage::GrayImage(std::size_t width, std::size_t height, std::uint8_t fill)
    : width_(width), height_(height), pixels_(width * height, fill) {}

GrayImage::GrayImage(std::size_t width, std::size_t height, std::vector<std::uint8_t> pixels)
    : width_(width), height_(height), pixels_(std::move(pixels)) {
  if (pixels_.size() != width_ * height_) {
    throw DimensionMismatchError("pixel buffer of " + std::to_string(pixels_.size()) +
                                 " does not match " + std::to_string(width_) + "x" +
                                 std::to_string(height_));
  }
}

CoefficientPlan::CoefficientPlan() : CoefficientPlan({7, 6, 5, 4}, {2, 1, 0}) {}

CoefficientPlan::CoefficientPlan(std::vector<int> msc_bit_positions,
                                 std::vector<int> lsc_bit_positions)
    : msc_(std::move(msc_bit_positions)), lsc_(std::move(lsc_bit_positions)) {
  if (lsc_.empty()) throw DomainError("coefficient plan needs at least one LSC bit");
  unsigned used = 0;
  auto claim = [&used](int bit) {
    if (bit < 0 || bit > 7) throw DomainError("bit position must lie in [0, 7]");
    if (used & (1u << bit)) {
      throw DomainError("bit position " + std::to_string(bit) + " used twice in plan");
    }
    used |= 1u << bit;
  };
  for (int b : msc_) claim(b);
  for (int b : lsc_) claim(b);
  std::sort(msc_.begin(), msc_.end(), std::greater<>());
}

CoefficientPlan CoefficientPlan::upper_lsc() { return CoefficientPlan({7, 6, 5, 4}, {3, 2, 1}); }

int CoefficientPlan::max_distortion() const noexcept {
  int total = 0;
  for (int b : lsc_) total += 1 << b;
  return total;
}

namespace {

BitVector extract_planes(const GrayImage& img, const std::vector<int>& positions) {
  std::vector<std::uint8_t> bits;
  bits.reserve(img.pixel_count() * positions.size());
  for (auto px : img.pixels()) {
    for (int b : positions) bits.push_back(static_cast<std::uint8_t>((px >> b) & 1u));
  }
  return BitVector::from_bytes(std::move(bits));
}

}  // namespace

BitVector extract_msc(const GrayImage& img, const CoefficientPlan& plan) {
  return extract_planes(img, plan.msc_bit_positions());
}

BitVector extract_lsc(const GrayImage& img, const CoefficientPlan& plan) {
  return extract_planes(img, plan.lsc_bit_positions());
}

bool read_lsc(const GrayImage& img, const CoefficientPlan& plan, std::size_t index) {
  const auto per_pixel = plan.lsc_bit_positions().size();
  if (index >= plan.lsc_count(img)) throw IndexError("LSC index out of range");
  const int bit = plan.lsc_bit_positions()[index % per_pixel];
  return (img.pixels()[index / per_pixel] >> bit) & 1u;
}

void write_lsc(GrayImage& img, const CoefficientPlan& plan, std::size_t index, bool bit) {
  const auto per_pixel = plan.lsc_bit_positions().size();
  if (index >= plan.lsc_count(img)) {
    throw IndexError("LSC index " + std::to_string(index) + " out of range (" +
                     std::to_string(plan.lsc_count(img)) + " LSCs)");
  }
  const auto mask = static_cast<std::uint8_t>(1u << plan.lsc_bit_positions()[index % per_pixel]);
  auto& px = img.pixels()[index / per_pixel];
  px = bit ? static_cast<std::uint8_t>(px | mask) : static_cast<std::uint8_t>(px & ~mask);
}

GrayImage replace_lsc(GrayImage img, const CoefficientPlan& plan, std::size_t index, bool bit) {
  write_lsc(img, plan, index, bit);
  return img;
}

}  // namespace chaoswm
