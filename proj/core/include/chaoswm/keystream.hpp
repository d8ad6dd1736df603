#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "chaoswm/bit_vector.hpp"
#include "chaoswm/chaotic_iterations.hpp"

namespace chaoswm {

enum class Mode { kUnauthenticated, kAuthenticated };

std::string_view to_string(Mode mode);

/// Private parameters of the logistic keystream.
struct SecretKey {
  double mu = 4.0;
  double u0 = 0.61;
  /// Logistic iterates discarded before the first emitted bit.
  std::uint64_t burn_in = 5000;
  Mode mode = Mode::kUnauthenticated;

  /// Checks 3.57 <= mu <= 4 and 0 < u0 < 1; throws DomainError.
  void validate() const;
  SecretKey with_mode(Mode m) const;

  bool operator==(const SecretKey&) const = default;
};

/// mu * u * (1 - u) in binary64, evaluated without contraction so the result
/// is bit-identical on every IEEE-754 platform. Throws DomainError unless 0 <= u <= 1.
double logistic_next(double mu, double u);

/// Unbounded logistic-map bit source: bit k is 1 iff iterate (burn_in + k + 1) >= 0.5.
class LogisticBitStream {
 public:
  explicit LogisticBitStream(const SecretKey& key);

  bool next();
  double state() const noexcept { return u_; }

 private:
  double mu_;
  double u_;
};

LogisticBitStream keystream_bits(const SecretKey& key);

/// Folds every MSC bit into a logistic seed: u <- mu*u*(1-u), then, for a set bit,
/// u <- frac(u + 0.6180339887498949). A single flipped MSC bit sends the seed onto an
/// unrelated orbit, so the whole authenticated strategy depends on the whole MSC vector.
double absorb_msc(double mu, double u0, const BitVector& msc);

/// Group width w = ceil(log2(cell_count)); 0 when cell_count == 1.
unsigned strategy_group_width(std::size_t cell_count);

/// Groups source bits w at a time (MSB first) into terms g mod cell_count.
/// Trailing bits that do not fill a group are ignored.
std::vector<std::size_t> strategy_terms_from_bits(const BitVector& source, std::size_t cell_count);

/// XOR of `bits` with `msc` cycled from `offset`: out_k = bits_k ^ msc[(offset + k) mod |msc|].
BitVector xor_cycled(const BitVector& bits, const BitVector& msc, std::size_t offset = 0);

/// Lazily evaluated chaotic strategy over cells [0, cell_count).
///
/// Unauthenticated: source bits are the key's logistic bits.
/// Authenticated: source bits come from the stream seeded by absorb_msc(mu, u0, msc),
/// each XORed with msc[k mod |msc|] where k counts post-burn-in bits.
/// Bits are consumed w at a time, MSB first; each group g yields g mod cell_count.
class StrategyStream {
 public:
  /// Throws ModeMismatchError if `msc` presence disagrees with key.mode.
  StrategyStream(const SecretKey& key, std::size_t cell_count,
                 const std::optional<BitVector>& msc = std::nullopt);

  std::size_t next();
  Strategy take(std::size_t count);

  std::size_t cell_count() const noexcept { return cell_count_; }
  unsigned group_width() const noexcept { return width_; }

 private:
  bool next_source_bit();

  std::size_t cell_count_;
  unsigned width_;
  LogisticBitStream bits_;
  std::optional<BitVector> msc_;
  std::size_t consumed_ = 0;
};

StrategyStream strategy_stream(const SecretKey& key, std::size_t cell_count,
                               const std::optional<BitVector>& msc = std::nullopt);

}  // namespace chaoswm
