#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace ellspin {

/// Vector over GF(2) of length at most 32, stored as a bit mask (bit i-1 is coordinate i).
class Gf2Vector {
 public:
  Gf2Vector() = default;
  Gf2Vector(int size, std::uint32_t bits) : bits_(bits & mask(size)), size_(size) {}

  static Gf2Vector zero(int size) { return {size, 0}; }
  static Gf2Vector unit(int size, int index1) { return {size, 1u << (index1 - 1)}; }
  /// Build from 1-based indices, e.g. {1, 3, 5} -> e1 + e3 + e5.
  static Gf2Vector fromIndices(int size, const std::vector<int>& indices1) {
    std::uint32_t b = 0;
    for (int i : indices1) b ^= 1u << (i - 1);
    return {size, b};
  }
  /// Reduce an integer vector modulo 2.
  static Gf2Vector fromIntegers(const std::vector<int>& v) {
    std::uint32_t b = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i] % 2 != 0) b |= 1u << i;
    return {static_cast<int>(v.size()), b};
  }

  int size() const { return size_; }
  std::uint32_t bits() const { return bits_; }
  bool get(int index1) const { return (bits_ >> (index1 - 1)) & 1u; }
  bool isZero() const { return bits_ == 0; }
  int weight() const { return std::popcount(bits_); }

  std::vector<int> indices() const {
    std::vector<int> out;
    for (int i = 1; i <= size_; ++i)
      if (get(i)) out.push_back(i);
    return out;
  }
  std::vector<int> toIntegers() const {
    std::vector<int> out(size_);
    for (int i = 1; i <= size_; ++i) out[i - 1] = get(i) ? 1 : 0;
    return out;
  }

  Gf2Vector& operator+=(const Gf2Vector& o) {
    bits_ ^= o.bits_;
    return *this;
  }
  friend Gf2Vector operator+(Gf2Vector a, const Gf2Vector& b) { return a += b; }
  friend bool operator==(const Gf2Vector&, const Gf2Vector&) = default;
  friend bool operator<(const Gf2Vector& a, const Gf2Vector& b) {
    return a.size_ != b.size_ ? a.size_ < b.size_ : a.bits_ < b.bits_;
  }

  /// Bit string "0101..." in coordinate order 1..n.
  std::string bitString() const {
    std::string s;
    for (int i = 1; i <= size_; ++i) s.push_back(get(i) ? '1' : '0');
    return s;
  }
  /// Product notation for torus elements: "h1h3h5", or "1" for the identity.
  std::string asTorusProduct() const {
    if (isZero()) return "1";
    std::string s;
    for (int i : indices()) s += "h" + std::to_string(i);
    return s;
  }

 private:
  static std::uint32_t mask(int size) { return size >= 32 ? ~0u : ((1u << size) - 1u); }

  std::uint32_t bits_ = 0;
  int size_ = 0;
};

}  // namespace ellspin
