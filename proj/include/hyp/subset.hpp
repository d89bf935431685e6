#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>

namespace hyp {

// Subset of a carrier, one bit per element index. The carrier size is
// carried by the surrounding structure, not by the subset itself.
class Subset {
 public:
  constexpr Subset() = default;

  static constexpr Subset from_bits(std::uint32_t bits) { return Subset(bits); }
  static constexpr Subset single(int index) { return Subset(std::uint32_t{1} << index); }
  static constexpr Subset full(int order) {
    return Subset(order >= 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << order) - 1);
  }
  static constexpr Subset of(std::initializer_list<int> indices) {
    std::uint32_t bits = 0;
    for (int i : indices) bits |= std::uint32_t{1} << i;
    return Subset(bits);
  }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int index) const { return (bits_ >> index) & 1u; }
  constexpr bool subset_of(Subset other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(Subset other) const { return (bits_ & other.bits_) != 0; }

  constexpr Subset operator|(Subset other) const { return Subset(bits_ | other.bits_); }
  constexpr Subset operator&(Subset other) const { return Subset(bits_ & other.bits_); }
  constexpr Subset& operator|=(Subset other) {
    bits_ |= other.bits_;
    return *this;
  }

  friend constexpr bool operator==(Subset, Subset) = default;

 private:
  explicit constexpr Subset(std::uint32_t bits) : bits_(bits) {}

  std::uint32_t bits_ = 0;
};

}  // namespace hyp
