#include "chaoswm/bit_vector.hpp"

#include <algorithm>

#include "chaoswm/errors.hpp"

namespace chaoswm {

BitVector::BitVector(std::size_t size, bool value) : bits_(size, value ? 1 : 0) {}

BitVector::BitVector(std::initializer_list<int> bits) {
  bits_.reserve(bits.size());
  for (int b : bits) {
    if (b != 0 && b != 1) throw DomainError("bit value must be 0 or 1");
    bits_.push_back(static_cast<std::uint8_t>(b));
  }
}

BitVector BitVector::from_bytes(std::vector<std::uint8_t> bits) {
  for (auto b : bits) {
    if (b > 1) throw DomainError("bit value must be 0 or 1");
  }
  BitVector v;
  v.bits_ = std::move(bits);
  return v;
}

bool BitVector::at(std::size_t i) const {
  if (i >= bits_.size()) {
    throw IndexError("bit index " + std::to_string(i) + " out of range for length " +
                     std::to_string(bits_.size()));
  }
  return bits_[i] != 0;
}

void BitVector::set(std::size_t i, bool value) {
  if (i >= bits_.size()) throw IndexError("bit index " + std::to_string(i) + " out of range");
  bits_[i] = value ? 1 : 0;
}

void BitVector::flip(std::size_t i) {
  if (i >= bits_.size()) throw IndexError("bit index " + std::to_string(i) + " out of range");
  bits_[i] ^= 1;
}

std::size_t BitVector::count() const noexcept {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
}

std::size_t BitVector::hamming_distance(const BitVector& other) const {
  if (other.size() != size()) throw DimensionMismatchError("bit vector lengths differ");
  std::size_t d = 0;
  for (std::size_t i = 0; i < bits_.size(); ++i) d += bits_[i] != other.bits_[i];
  return d;
}

BitVector BitVector::operator^(const BitVector& other) const {
  BitVector out = *this;
  out ^= other;
  return out;
}

BitVector& BitVector::operator^=(const BitVector& other) {
  if (other.size() != size()) throw DimensionMismatchError("bit vector lengths differ");
  for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] ^= other.bits_[i];
  return *this;
}

BitVector BitVector::operator~() const {
  BitVector out = *this;
  for (auto& b : out.bits_) b ^= 1;
  return out;
}

std::string BitVector::to_string() const {
  std::string s;
  s.reserve(bits_.size());
  for (auto b : bits_) s.push_back(b ? '1' : '0');
  return s;
}

}  // namespace chaoswm
