#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace chaoswm {

/// Fixed-length boolean cell state. Cells are indexed 0..size()-1.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t size, bool value = false);
  /// Accepts only 0 and 1; anything else throws DomainError.
  BitVector(std::initializer_list<int> bits);
  static BitVector from_bytes(std::vector<std::uint8_t> bits);

  std::size_t size() const noexcept { return bits_.size(); }
  bool empty() const noexcept { return bits_.empty(); }

  bool operator[](std::size_t i) const noexcept { return bits_[i] != 0; }
  /// Bounds-checked read; throws IndexError.
  bool at(std::size_t i) const;
  void set(std::size_t i, bool value);
  void flip(std::size_t i);

  std::size_t count() const noexcept;
  std::size_t hamming_distance(const BitVector& other) const;

  BitVector operator^(const BitVector& other) const;
  BitVector& operator^=(const BitVector& other);
  BitVector operator~() const;

  bool operator==(const BitVector& other) const = default;

  const std::vector<std::uint8_t>& raw() const noexcept { return bits_; }
  std::string to_string() const;

 private:
  std::vector<std::uint8_t> bits_;
};

}  // namespace chaoswm
