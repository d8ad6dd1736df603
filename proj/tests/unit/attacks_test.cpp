#include "chaoswm/attacks.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>

#include "chaoswm/errors.hpp"
#include "support/fixtures.hpp"

namespace chaoswm {
namespace {

double mean_abs_error(const GrayImage& a, const GrayImage& b) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.pixel_count(); ++i) {
    sum += std::abs(int{a.pixels()[i]} - int{b.pixels()[i]});
  }
  return sum / static_cast<double>(a.pixel_count());
}

std::size_t zero_count(const GrayImage& img) {
  std::size_t n = 0;
  for (auto p : img.pixels()) n += p == 0;
  return n;
}

TEST(CropAttack, ZeroesTheSquare) {
  const GrayImage img(256, 256, 50);
  EXPECT_EQ(crop_attack(img, 0), img);
  EXPECT_EQ(zero_count(crop_attack(img, 100)), 10000u);
  EXPECT_EQ(crop_attack(img, 256), GrayImage(256, 256, 0));
  const auto offset = crop_attack(img, 10, 5, 7);
  EXPECT_EQ(offset(5, 7), 0);
  EXPECT_EQ(offset(14, 16), 0);
  EXPECT_EQ(offset(15, 16), 50);
  EXPECT_EQ(offset(4, 7), 50);
}

TEST(CropAttack, ClampsToImageBounds) {
  const GrayImage img(256, 256, 50);
  EXPECT_EQ(zero_count(crop_attack(img, 100, 200, 200)), 56u * 56u);
  EXPECT_EQ(crop_attack(img, 100, 300, 0), img);
  EXPECT_EQ(crop_attack(img, 1000), GrayImage(256, 256, 0));
}

TEST(RotationAttack, ZeroAngleIsIdentity) {
  const auto img = testing::make_carrier(64, 48);
  EXPECT_EQ(rotation_attack(img, 0.0), img);
  EXPECT_EQ(rotation_attack(img, 0.0, Interpolation::kBilinear), img);
}

TEST(RotationAttack, QuarterTurnNearestIsExact) {
  const auto img = testing::make_carrier(64, 64);
  EXPECT_EQ(rotation_attack(img, 90.0), img);
}

TEST(RotationAttack, ConstantImageStaysConstantAwayFromBorder) {
  const GrayImage img(128, 128, 77);
  for (const auto interp : {Interpolation::kNearest, Interpolation::kBilinear}) {
    const auto out = rotation_attack(img, 25.0, interp);
    for (std::size_t y = 0; y < 128; ++y) {
      for (std::size_t x = 0; x < 128; ++x) {
        const double dx = static_cast<double>(x) - 63.5, dy = static_cast<double>(y) - 63.5;
        if (std::sqrt(dx * dx + dy * dy) < 60.0) ASSERT_EQ(out(x, y), 77) << x << "," << y;
      }
    }
  }
}

TEST(RotationAttack, DamageGrowsWithAngle) {
  const auto img = testing::make_carrier();
  EXPECT_LT(mean_abs_error(img, rotation_attack(img, 2.0)),
            mean_abs_error(img, rotation_attack(img, 25.0)));
}

TEST(JpegQuantization, LevelFiftyIsTheStandardTable) {
  EXPECT_EQ(jpeg_quantization_table(50), jpeg_luminance_table());
  const auto fine = jpeg_quantization_table(1);
  for (int q : fine) EXPECT_GE(q, 1);
  EXPECT_EQ(jpeg_quantization_table(100)[0], 32);
  EXPECT_THROW(jpeg_quantization_table(0), DomainError);
}

TEST(JpegAttack, MidGrayIsUnchanged) {
  const GrayImage img(24, 16, 128);
  for (int level : {1, 2, 5, 50, 100}) EXPECT_EQ(jpeg_attack(img, level), img);
}

TEST(JpegAttack, ConstantBlocksFollowDcQuantization) {
  // A constant block c has only DC = 8 (c - 128); it reconstructs as
  // 128 + round(8 (c - 128) / q0) * q0 / 8.
  for (int level : {1, 10, 20, 50}) {
    const int q0 = jpeg_quantization_table(level)[0];
    for (int c : {0, 37, 100, 129, 200, 255}) {
      const double dc = 8.0 * (c - 128);
      const double rec = 128.0 + std::round(dc / q0) * q0 / 8.0;
      const auto expected = static_cast<std::uint8_t>(std::clamp(std::lround(rec), 0L, 255L));
      const auto out = jpeg_attack(GrayImage(8, 8, static_cast<std::uint8_t>(c)), level);
      EXPECT_EQ(out, GrayImage(8, 8, expected)) << "level " << level << " c " << c;
    }
  }
}

TEST(JpegAttack, ErrorGrowsWithLevel) {
  const auto img = testing::make_carrier();
  EXPECT_LT(mean_abs_error(img, jpeg_attack(img, 1)), mean_abs_error(img, jpeg_attack(img, 20)));
  EXPECT_THROW(jpeg_attack(img, 0), DomainError);
}

TEST(JpegAttack, HandlesPartialBlocks) {
  const auto img = testing::make_carrier(13, 9);
  const auto out = jpeg_attack(img, 2);
  EXPECT_EQ(out.width(), 13u);
  EXPECT_EQ(out.height(), 9u);
  EXPECT_LT(mean_abs_error(img, out), 3.0);
}

TEST(GaussianAttack, ZeroSigmaIsIdentity) {
  const auto img = testing::make_carrier(32, 32);
  EXPECT_EQ(gaussian_attack(img, 0.0, 9), img);
  EXPECT_THROW(gaussian_attack(img, -1.0, 9), DomainError);
}

TEST(GaussianAttack, SeededAndReproducible) {
  const auto img = testing::make_carrier(64, 64);
  EXPECT_EQ(gaussian_attack(img, 5.0, 123), gaussian_attack(img, 5.0, 123));
  EXPECT_NE(gaussian_attack(img, 5.0, 123), gaussian_attack(img, 5.0, 124));
}

TEST(GaussianAttack, NoiseHasRequestedMoments) {
  // Rounding adds variance 1/12; 65536 samples put the estimates within ~0.03.
  const GrayImage img(256, 256, 128);
  const auto out = gaussian_attack(img, 5.0, 2);
  double sum = 0.0, sq = 0.0;
  for (auto p : out.pixels()) {
    const double d = int{p} - 128;
    sum += d;
    sq += d * d;
  }
  const double n = static_cast<double>(out.pixel_count());
  EXPECT_NEAR(sum / n, 0.0, 0.1);
  EXPECT_NEAR(std::sqrt(sq / n - (sum / n) * (sum / n)), std::sqrt(25.0 + 1.0 / 12.0), 0.1);
}

TEST(ApplyAttack, PreservesDimensionsAndValidates) {
  const auto img = testing::make_carrier(40, 24);
  for (const auto kind :
       {AttackKind::kCrop, AttackKind::kRotation, AttackKind::kJpeg, AttackKind::kGaussian}) {
    const auto out = apply_attack(img, {kind, 5.0, 1, 3, 3});
    EXPECT_EQ(out.width(), img.width());
    EXPECT_EQ(out.height(), img.height());
    EXPECT_EQ(apply_attack(img, {kind, 5.0, 1, 3, 3}), out);
  }
  EXPECT_THROW(apply_attack(img, {AttackKind::kCrop, -1.0, 0, 0, 0}), DomainError);
  EXPECT_THROW(parse_attack_kind("shear"), DomainError);
  EXPECT_EQ(parse_attack_kind("jpeg"), AttackKind::kJpeg);
}

}  // namespace
}  // namespace chaoswm
