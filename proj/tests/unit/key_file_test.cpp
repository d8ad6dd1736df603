#include "chaoswm/key_file.hpp"

#include <gtest/gtest.h>

#include <random>

#include "chaoswm/errors.hpp"
#include "support/fixtures.hpp"

namespace chaoswm {
namespace {

TEST(KeyFile, ParsesAllFields) {
  const auto key = parse_key("# case study\nmu=4\nu0=0.61\nburn_in=5000\nmode=auth\n");
  EXPECT_EQ(key.mu, 4.0);
  EXPECT_EQ(key.u0, 0.61);
  EXPECT_EQ(key.burn_in, 5000u);
  EXPECT_EQ(key.mode, Mode::kAuthenticated);
}

TEST(KeyFile, ToleratesWhitespaceAndCrlf) {
  const auto key = parse_key("mu = 3.9\r\n u0=0.25 \r\n\r\nburn_in=0\r\nmode=noauth\r\n");
  EXPECT_EQ(key.mu, 3.9);
  EXPECT_EQ(key.u0, 0.25);
  EXPECT_EQ(key.mode, Mode::kUnauthenticated);
}

TEST(KeyFile, RejectsMalformedInput) {
  EXPECT_THROW(parse_key("mu=4\nu0=0.61\nburn_in=1\nmode=auth\nsalt=3\n"), FormatError);
  EXPECT_THROW(parse_key("mu=4\nu0=0.61\nburn_in=1\n"), FormatError);
  EXPECT_THROW(parse_key("mu=4\nmu=4\nu0=0.61\nburn_in=1\nmode=auth\n"), FormatError);
  EXPECT_THROW(parse_key("mu=four\nu0=0.61\nburn_in=1\nmode=auth\n"), FormatError);
  EXPECT_THROW(parse_key("mu=4\nu0=0.61\nburn_in=-1\nmode=auth\n"), FormatError);
  EXPECT_THROW(parse_key("mu=4\nu0=0.61\nburn_in=1\nmode=maybe\n"), FormatError);
  EXPECT_THROW(parse_key("mu=4\nu0=1.5\nburn_in=1\nmode=auth\n"), FormatError);
  EXPECT_THROW(parse_key("mu 4\n"), FormatError);
}

TEST(KeyFile, FormatRoundTripsExactly) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 200; ++i) {
    auto key = testing::random_key(rng, i % 2 ? Mode::kAuthenticated : Mode::kUnauthenticated);
    key.mu = 3.57 + 0.43 * std::generate_canonical<double, 53>(rng);
    EXPECT_EQ(parse_key(format_key(key)), key);
  }
}

TEST(KeyFile, FingerprintDependsOnEveryField) {
  const auto base = testing::case_study_key();
  auto other = base;
  other.burn_in += 1;
  EXPECT_EQ(key_fingerprint(base), key_fingerprint(base));
  EXPECT_NE(key_fingerprint(base), key_fingerprint(other));
  EXPECT_NE(key_fingerprint(base), key_fingerprint(base.with_mode(Mode::kAuthenticated)));
  EXPECT_EQ(key_fingerprint(base).size(), 16u);
}

}  // namespace
}  // namespace chaoswm
