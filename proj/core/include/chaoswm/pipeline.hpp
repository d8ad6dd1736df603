#pragma once

// Watermark encryption, embedding and extraction.
//
// One strategy stream over the watermark's cells drives both stages: the first
// |wm| terms are the encryption strategy (chaotic iterations with vectorial
// negation), the next |wm| terms seed the position recurrence
//   U^0 = S^0,  U^{n+1} = S^{n+1} + 2 U^n + n   (mod number of LSCs).
// Payload bit k is written to LSC U^k.

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "chaoswm/bit_vector.hpp"
#include "chaoswm/chaotic_iterations.hpp"
#include "chaoswm/keystream.hpp"
#include "chaoswm/media_plane.hpp"
#include "chaoswm/netpbm.hpp"

namespace chaoswm {

/// Binary watermark; bits.size() == width * height.
using Watermark = BinaryImage;

enum class CollisionPolicy {
  /// Repeated U^k are written again; later writes win.
  kFaithful,
  /// A repeated U^k moves to the next unused LSC, scanning forward cyclically.
  kSkipDuplicates,
};

std::string_view to_string(CollisionPolicy policy);

struct EmbedParams {
  CoefficientPlan plan;
  Mode mode = Mode::kUnauthenticated;
  bool encrypt = true;
  CollisionPolicy collision_policy = CollisionPolicy::kFaithful;
};

using PositionSequence = std::vector<std::size_t>;

/// Ciphertext = last state of the negation chaotic iterations started from wm.bits,
/// run for |wm| steps. Applying it twice with the same inputs is the identity.
Watermark encrypt_watermark(const Watermark& wm, const SecretKey& key,
                            const std::optional<BitVector>& msc = std::nullopt);

/// Throws InsufficientStrategyError when S has fewer than `count` terms.
PositionSequence embed_positions(const Strategy& strategy, std::size_t count, std::size_t n_lsc);

struct ResolvedPositions {
  PositionSequence positions;
  /// Number of k with U^k equal to an earlier U^j.
  std::size_t collisions = 0;
};

ResolvedPositions resolve_collisions(const PositionSequence& raw, std::size_t n_lsc,
                                     CollisionPolicy policy);

/// Everything both embed and extract derive from the key and the carrier's MSCs.
struct EmbeddingLayout {
  Strategy encryption_strategy;
  PositionSequence positions;
  std::size_t collisions = 0;
};

/// Throws ModeMismatchError if params.mode != key.mode, CapacityError if the
/// payload exceeds the LSC count.
EmbeddingLayout plan_embedding(const GrayImage& image, const SecretKey& key,
                               std::size_t payload_bits, const EmbedParams& params);

struct EmbedResult {
  GrayImage image;
  std::size_t collisions = 0;
};

EmbedResult embed_with_report(const GrayImage& carrier, const Watermark& wm, const SecretKey& key,
                              const EmbedParams& params);
GrayImage embed(const GrayImage& carrier, const Watermark& wm, const SecretKey& key,
                const EmbedParams& params);

Watermark extract(const GrayImage& watermarked, const SecretKey& key, std::size_t wm_width,
                  std::size_t wm_height, const EmbedParams& params);

}  // namespace chaoswm
