#include "chaoswm/pipeline.hpp"

#include <string>

#include "chaoswm/errors.hpp"

namespace chaoswm {

namespace {

void check_watermark(const Watermark& wm) {
  if (wm.width == 0 || wm.height == 0) throw DomainError("watermark must not be empty");
  if (wm.bits.size() != wm.width * wm.height) {
    throw DimensionMismatchError("watermark bit count does not match its dimensions");
  }
}

std::optional<BitVector> authentication_msc(const GrayImage& image, const EmbedParams& params) {
  if (params.mode != Mode::kAuthenticated) return std::nullopt;
  return extract_msc(image, params.plan);
}

}  // namespace

std::string_view to_string(CollisionPolicy policy) {
  return policy == CollisionPolicy::kFaithful ? "faithful" : "skip_duplicates";
}

Watermark encrypt_watermark(const Watermark& wm, const SecretKey& key,
                            const std::optional<BitVector>& msc) {
  check_watermark(wm);
  const auto n = wm.bits.size();
  auto stream = strategy_stream(key, n, msc);
  Watermark out = wm;
  out.bits = ci_run(wm.bits, IterationFunction::negation(), stream.take(n), n);
  return out;
}

PositionSequence embed_positions(const Strategy& strategy, std::size_t count, std::size_t n_lsc) {
  if (count == 0) throw DomainError("position count must be >= 1");
  if (n_lsc == 0) throw DomainError("LSC count must be >= 1");
  if (strategy.size() < count) {
    throw InsufficientStrategyError("strategy exhausted after " + std::to_string(strategy.size()) +
                                    " of " + std::to_string(count) + " positions");
  }
  PositionSequence u(count);
  u[0] = strategy[0] % n_lsc;
  for (std::size_t n = 0; n + 1 < count; ++n) {
    u[n + 1] = (strategy[n + 1] % n_lsc + 2 * u[n] + n % n_lsc) % n_lsc;
  }
  return u;
}

ResolvedPositions resolve_collisions(const PositionSequence& raw, std::size_t n_lsc,
                                     CollisionPolicy policy) {
  if (raw.size() > n_lsc) throw CapacityError("more positions than LSCs");
  ResolvedPositions out;
  out.positions.reserve(raw.size());
  std::vector<bool> used(n_lsc, false);
  for (auto p : raw) {
    if (p >= n_lsc) throw IndexError("position outside LSC range");
    if (used[p]) {
      ++out.collisions;
      if (policy == CollisionPolicy::kSkipDuplicates) {
        while (used[p]) p = (p + 1) % n_lsc;
      }
    }
    used[p] = true;
    out.positions.push_back(p);
  }
  return out;
}

EmbeddingLayout plan_embedding(const GrayImage& image, const SecretKey& key,
                               std::size_t payload_bits, const EmbedParams& params) {
  if (params.mode != key.mode) {
    throw ModeMismatchError("embed params mode '" + std::string(to_string(params.mode)) +
                            "' differs from key mode '" + std::string(to_string(key.mode)) + "'");
  }
  if (image.empty()) throw DomainError("carrier image is empty");
  if (payload_bits == 0) throw DomainError("watermark must not be empty");
  const auto n_lsc = params.plan.lsc_count(image);
  if (payload_bits > n_lsc) {
    throw CapacityError("watermark of " + std::to_string(payload_bits) + " bits exceeds " +
                        std::to_string(n_lsc) + " LSCs");
  }
  auto stream = strategy_stream(key, payload_bits, authentication_msc(image, params));
  // Encryption terms are always drawn so positions do not depend on params.encrypt.
  Strategy encryption = stream.take(payload_bits);
  const Strategy position_terms = stream.take(payload_bits);
  auto resolved = resolve_collisions(embed_positions(position_terms, payload_bits, n_lsc), n_lsc,
                                     params.collision_policy);
  return {std::move(encryption), std::move(resolved.positions), resolved.collisions};
}

EmbedResult embed_with_report(const GrayImage& carrier, const Watermark& wm, const SecretKey& key,
                              const EmbedParams& params) {
  check_watermark(wm);
  const auto n = wm.bits.size();
  const auto layout = plan_embedding(carrier, key, n, params);
  const BitVector payload =
      params.encrypt ? ci_run(wm.bits, IterationFunction::negation(), layout.encryption_strategy, n)
                     : wm.bits;
  EmbedResult result{carrier, layout.collisions};
  for (std::size_t k = 0; k < n; ++k) {
    write_lsc(result.image, params.plan, layout.positions[k], payload[k]);
  }
  return result;
}

GrayImage embed(const GrayImage& carrier, const Watermark& wm, const SecretKey& key,
                const EmbedParams& params) {
  return embed_with_report(carrier, wm, key, params).image;
}

Watermark extract(const GrayImage& watermarked, const SecretKey& key, std::size_t wm_width,
                  std::size_t wm_height, const EmbedParams& params) {
  if (wm_width == 0 || wm_height == 0) throw DomainError("watermark dimensions must be positive");
  const auto n = wm_width * wm_height;
  const auto layout = plan_embedding(watermarked, key, n, params);
  BitVector read(n);
  for (std::size_t k = 0; k < n; ++k) {
    read.set(k, read_lsc(watermarked, params.plan, layout.positions[k]));
  }
  Watermark out{wm_width, wm_height, std::move(read)};
  if (params.encrypt) {
    out.bits = ci_run(out.bits, IterationFunction::negation(), layout.encryption_strategy, n);
  }
  return out;
}

}  // namespace chaoswm
