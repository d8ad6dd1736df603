#include "chaoswm/chaos_verify.hpp"

#include <gtest/gtest.h>

#include <bit>
#include <cmath>
#include <random>

#include "chaoswm/errors.hpp"
#include "support/fixtures.hpp"

namespace chaoswm {
namespace {

PhasePoint point(BitVector state, std::vector<std::size_t> strategy) {
  return PhasePoint{std::move(state), std::move(strategy), false};
}

PhasePoint random_point(std::size_t n, std::size_t terms, std::mt19937_64& rng) {
  PhasePoint p{testing::random_bits(n, rng), {}, false};
  for (std::size_t i = 0; i < terms; ++i) p.strategy.push_back(rng() % n);
  return p;
}

TEST(Distance, FormulaExamples) {
  const auto p = point(BitVector{0, 1, 1, 0}, {0, 2, 3});
  EXPECT_EQ(distance(p, p, 3), 0.0);
  EXPECT_EQ(distance(p, point(BitVector{1, 0, 1, 0}, {0, 2, 3}), 3), 2.0);
  // |0 - 3| / (4 * 10) = 0.075.
  EXPECT_DOUBLE_EQ(distance(point(BitVector(4), {0}), point(BitVector(4), {3}), 1), 0.075);
  EXPECT_THROW(distance(p, point(BitVector(3), {0}), 1), DimensionMismatchError);
  EXPECT_THROW(distance(p, p, 4), InsufficientStrategyError);
}

TEST(Distance, IsAMetricOnTruncations) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t n = 1 + rng() % 6;
    const auto a = random_point(n, 8, rng);
    const auto b = random_point(n, 8, rng);
    const auto c = random_point(n, 8, rng);
    const std::size_t h = rng() % 9;
    const double ab = distance(a, b, h), bc = distance(b, c, h), ac = distance(a, c, h);
    ASSERT_GE(ab, 0.0);
    ASSERT_EQ(ab, distance(b, a, h));
    ASSERT_LE(ac, ab + bc + 1e-12);
    ASSERT_EQ(distance(a, a, h), 0.0);
    // Strategy part is always below 1, so the integer part is the Hamming distance.
    ASSERT_EQ(std::floor(ab), static_cast<double>(a.state.hamming_distance(b.state)));
  }
}

TEST(AgreementHorizon, DecimalPowers) {
  EXPECT_EQ(agreement_horizon(1.0), 1u);
  EXPECT_EQ(agreement_horizon(0.1), 1u);
  EXPECT_EQ(agreement_horizon(0.05), 2u);
  EXPECT_EQ(agreement_horizon(1e-3), 3u);
  EXPECT_THROW(agreement_horizon(0.0), DomainError);
}

TEST(TransitionGraph, NegationHypercubeIsStronglyConnected) {
  for (std::size_t n = 1; n <= 10; ++n) {
    const auto r = transition_graph_strongly_connected(IterationFunction::negation(), n, n);
    ASSERT_TRUE(r.strongly_connected) << "N=" << n;
    // The witness path uses single-cell flips only.
    ASSERT_EQ(r.path.front(), r.from);
    ASSERT_EQ(r.path.back(), r.to);
    for (std::size_t i = 1; i < r.path.size(); ++i) {
      ASSERT_EQ(std::popcount(r.path[i - 1] ^ r.path[i]), 1);
    }
  }
}

TEST(TransitionGraph, IdentityIsNotConnected) {
  const auto r = transition_graph_strongly_connected(IterationFunction::identity(), 2);
  EXPECT_FALSE(r.strongly_connected);
  EXPECT_NE(r.from, r.to);
  EXPECT_TRUE(r.path.empty());
}

TEST(TransitionGraph, RejectsLargeN) {
  EXPECT_THROW(transition_graph_strongly_connected(IterationFunction::negation(), 13),
               CapacityError);
}

TEST(PeriodicWitness, EvenPrefixNeedsNoCompletion) {
  const auto p = point(BitVector{1, 0}, {0, 0, 1, 1, 0, 1});
  const auto w = periodic_witness(p, 1e-4);
  EXPECT_EQ(w.period, 4u);
  EXPECT_EQ(w.point.strategy, (std::vector<std::size_t>{0, 0, 1, 1}));
  EXPECT_TRUE(w.verified);
}

TEST(PeriodicWitness, HandTracedCompletion) {
  // Prefix (0, 1, 0) leaves cell 1 odd; completion (1) restores (0, 0).
  const auto p = point(BitVector{0, 0}, {0, 1, 0, 1, 1});
  const auto w = periodic_witness(p, 1e-3);
  EXPECT_EQ(w.point.strategy, (std::vector<std::size_t>{0, 1, 0, 1}));
  EXPECT_EQ(w.period, 4u);
  EXPECT_TRUE(w.verified);
  EXPECT_LT(distance(p, w.point, 5), 1e-3);
}

TEST(PeriodicWitness, SampledWitnessesReturnToTheirState) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 10;
    const double eps = std::pow(10.0, -static_cast<double>(1 + rng() % 6));
    const auto p = random_point(n, 12, rng);
    const auto w = periodic_witness(p, eps);
    ASSERT_TRUE(w.verified);
    ASSERT_LT(distance(p, w.point, 12), eps);
    // Two periods later the state is back again; each cell occurs evenly.
    const auto twice = iterate(w.point, IterationFunction::negation(), 2 * w.period);
    ASSERT_EQ(twice.state, w.point.state);
    ASSERT_EQ(parity_vector(Strategy(n, w.point.strategy), w.period, n), BitVector(n));
  }
}

TEST(SensitivityWitness, DivergesAfterTheChangedTerm) {
  const auto p = point(BitVector{0, 1, 0, 1}, {3, 1, 2, 0, 0});
  const auto w = sensitivity_witness(p, 1e-2, 1.0);
  EXPECT_EQ(w.steps, 3u);
  EXPECT_NE(w.point.strategy, p.strategy);
  EXPECT_LT(w.initial_distance, 1e-2);
  EXPECT_EQ(w.final_hamming, 2u);
  EXPECT_TRUE(w.verified);
}

TEST(SensitivityWitness, SampledWitnessesVerify) {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + rng() % 9;
    const double eps = std::pow(10.0, -static_cast<double>(1 + rng() % 6));
    const auto p = random_point(n, 10, rng);
    const auto w = sensitivity_witness(p, eps, 1.0);
    ASSERT_TRUE(w.verified);
    ASSERT_LT(distance(p, w.point, w.steps), eps);
    ASSERT_GE(w.final_hamming, 1u);
  }
}

TEST(SensitivityWitness, RejectsDegenerateInputs) {
  EXPECT_THROW(sensitivity_witness(point(BitVector{0}, {0, 0, 0}), 0.1, 1.0), DomainError);
  EXPECT_THROW(sensitivity_witness(point(BitVector{0, 1}, {0, 0, 0}), 0.1, 1.5), DomainError);
  EXPECT_THROW(sensitivity_witness(point(BitVector{0, 1}, {0}), 1e-3, 1.0),
               InsufficientStrategyError);
}

TEST(SensitivityWitness, AcceptsCyclicPoints) {
  const PhasePoint p{BitVector{0, 0, 1}, {2, 1}, true};
  const auto w = sensitivity_witness(p, 1e-3, 0.5);
  EXPECT_TRUE(w.verified);
  EXPECT_FALSE(w.point.cyclic);
}

}  // namespace
}  // namespace chaoswm
