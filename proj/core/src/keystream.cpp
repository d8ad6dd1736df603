#include "chaoswm/keystream.hpp"

#include <cmath>
#include <string>

#include "chaoswm/errors.hpp"

namespace chaoswm {

namespace {

constexpr double kAbsorbShift = 0.6180339887498949;

}  // namespace

std::string_view to_string(Mode mode) {
  return mode == Mode::kAuthenticated ? "auth" : "noauth";
}

void SecretKey::validate() const {
  if (!(mu >= 3.57 && mu <= 4.0)) {
    throw DomainError("mu must lie in [3.57, 4], got " + std::to_string(mu));
  }
  if (!(u0 > 0.0 && u0 < 1.0)) {
    throw DomainError("u0 must lie in (0, 1), got " + std::to_string(u0));
  }
}

SecretKey SecretKey::with_mode(Mode m) const {
  SecretKey k = *this;
  k.mode = m;
  return k;
}

double logistic_next(double mu, double u) {
  if (!(u >= 0.0 && u <= 1.0)) throw DomainError("logistic state outside [0, 1]");
  // Two separately rounded products; the target is built with -ffp-contract=off.
  const double a = mu * u;
  const double b = 1.0 - u;
  return a * b;
}

LogisticBitStream::LogisticBitStream(const SecretKey& key) : mu_(key.mu), u_(key.u0) {
  key.validate();
  for (std::uint64_t i = 0; i < key.burn_in; ++i) u_ = logistic_next(mu_, u_);
}

bool LogisticBitStream::next() {
  u_ = logistic_next(mu_, u_);
  return u_ >= 0.5;
}

LogisticBitStream keystream_bits(const SecretKey& key) { return LogisticBitStream(key); }

double absorb_msc(double mu, double u0, const BitVector& msc) {
  double u = u0;
  for (std::size_t i = 0; i < msc.size(); ++i) {
    u = logistic_next(mu, u);
    if (msc[i]) {
      u += kAbsorbShift;
      if (u >= 1.0) u -= 1.0;
    }
    // 0 and 1 are absorbing (1 -> 0 -> 0); restart off the fixed point.
    if (u <= 0.0 || u >= 1.0) u = kAbsorbShift;
  }
  return u;
}

unsigned strategy_group_width(std::size_t cell_count) {
  if (cell_count == 0) throw DomainError("cell count must be >= 1");
  unsigned w = 0;
  while ((std::size_t{1} << w) < cell_count) ++w;
  return w;
}

std::vector<std::size_t> strategy_terms_from_bits(const BitVector& source, std::size_t cell_count) {
  const unsigned w = strategy_group_width(cell_count);
  std::vector<std::size_t> terms;
  if (w == 0) return terms;
  for (std::size_t start = 0; start + w <= source.size(); start += w) {
    std::size_t g = 0;
    for (unsigned i = 0; i < w; ++i) g = (g << 1) | (source[start + i] ? 1u : 0u);
    terms.push_back(g % cell_count);
  }
  return terms;
}

BitVector xor_cycled(const BitVector& bits, const BitVector& msc, std::size_t offset) {
  if (msc.empty()) throw DomainError("MSC vector must not be empty");
  BitVector out = bits;
  for (std::size_t k = 0; k < bits.size(); ++k) {
    out.set(k, bits[k] != msc[(offset + k) % msc.size()]);
  }
  return out;
}

namespace {

SecretKey seeded_key(const SecretKey& key, const std::optional<BitVector>& msc) {
  key.validate();
  const bool authenticated = key.mode == Mode::kAuthenticated;
  if (authenticated != msc.has_value()) {
    throw ModeMismatchError(authenticated ? "authenticated key requires MSC bits"
                                          : "MSC bits supplied to an unauthenticated key");
  }
  if (!authenticated) return key;
  if (msc->empty()) throw DomainError("MSC vector must not be empty");
  SecretKey seeded = key;
  seeded.u0 = absorb_msc(key.mu, key.u0, *msc);
  return seeded;
}

}  // namespace

StrategyStream::StrategyStream(const SecretKey& key, std::size_t cell_count,
                               const std::optional<BitVector>& msc)
    : cell_count_(cell_count),
      width_(strategy_group_width(cell_count)),
      bits_(seeded_key(key, msc)),
      msc_(msc) {}

bool StrategyStream::next_source_bit() {
  bool b = bits_.next();
  if (msc_) b = b != (*msc_)[consumed_ % msc_->size()];
  ++consumed_;
  return b;
}

std::size_t StrategyStream::next() {
  std::size_t g = 0;
  for (unsigned i = 0; i < width_; ++i) g = (g << 1) | (next_source_bit() ? 1u : 0u);
  return g % cell_count_;
}

Strategy StrategyStream::take(std::size_t count) {
  std::vector<std::size_t> terms;
  terms.reserve(count);
  for (std::size_t i = 0; i < count; ++i) terms.push_back(next());
  return Strategy(cell_count_, std::move(terms));
}

StrategyStream strategy_stream(const SecretKey& key, std::size_t cell_count,
                               const std::optional<BitVector>& msc) {
  return StrategyStream(key, cell_count, msc);
}

}  // namespace chaoswm
