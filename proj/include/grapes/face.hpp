#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace grapes {

/// Maximum number of ground elements a complex may carry.
inline constexpr std::size_t kMaxGround = 64;

/// A subset of a ground set, stored as a bit mask over ground indices.
/// Faces carry no ground set of their own; they are interpreted relative to
/// the complex (or sequence) that owns them.
class Face {
 public:
  using mask_type = std::uint64_t;

  constexpr Face() = default;
  constexpr explicit Face(mask_type bits) : bits_(bits) {}

  static constexpr Face singleton(std::size_t i) { return Face(mask_type{1} << i); }
  /// {0, 1, ..., n-1}
  static constexpr Face full(std::size_t n) {
    return Face(n >= 64 ? ~mask_type{0} : (mask_type{1} << n) - 1);
  }

  constexpr mask_type bits() const { return bits_; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(std::size_t i) const { return (bits_ >> i) & 1u; }
  constexpr bool subset_of(Face other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool proper_subset_of(Face other) const { return subset_of(other) && bits_ != other.bits_; }

  constexpr Face with(std::size_t i) const { return Face(bits_ | (mask_type{1} << i)); }
  constexpr Face without(std::size_t i) const { return Face(bits_ & ~(mask_type{1} << i)); }

  friend constexpr Face operator|(Face a, Face b) { return Face(a.bits_ | b.bits_); }
  friend constexpr Face operator&(Face a, Face b) { return Face(a.bits_ & b.bits_); }
  friend constexpr Face operator-(Face a, Face b) { return Face(a.bits_ & ~b.bits_); }

  friend constexpr bool operator==(Face, Face) = default;
  friend constexpr auto operator<=>(Face, Face) = default;

  template <class Fn>
  constexpr void for_each_index(Fn&& fn) const {
    for (mask_type m = bits_; m != 0; m &= m - 1) fn(static_cast<std::size_t>(std::countr_zero(m)));
  }

  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    out.reserve(size());
    for_each_index([&](std::size_t i) { out.push_back(i); });
    return out;
  }

  /// Re-index after ground element `i` is removed (indices above `i` shift down).
  /// The face must not contain `i`.
  constexpr Face drop_index(std::size_t i) const {
    const mask_type low = bits_ & ((mask_type{1} << i) - 1);
    const mask_type high = i + 1 >= 64 ? 0 : (bits_ >> (i + 1)) << i;
    return Face(low | high);
  }

  /// Inverse of drop_index: open a hole at `i` (the new slot is empty).
  constexpr Face insert_index(std::size_t i) const {
    const mask_type low = bits_ & ((mask_type{1} << i) - 1);
    const mask_type high = i >= 64 ? 0 : (bits_ >> i) << (i + 1);
    return Face(low | high);
  }

 private:
  mask_type bits_ = 0;
};

/// Lexicographic order on the sorted index lists of two faces,
/// e.g. {0,1} < {0,2} < {1}. A proper prefix sorts first.
constexpr bool lex_less(Face a, Face b) {
  auto x = a.bits();
  auto y = b.bits();
  while (x != 0 && y != 0) {
    const int i = std::countr_zero(x);
    const int j = std::countr_zero(y);
    if (i != j) return i < j;
    x &= x - 1;
    y &= y - 1;
  }
  return x == 0 && y != 0;
}

/// Calls fn(sub) for every subset of `f`, including the empty set and `f`.
template <class Fn>
constexpr void for_each_subset(Face f, Fn&& fn) {
  const auto full = f.bits();
  Face::mask_type sub = full;
  while (true) {
    fn(Face(sub));
    if (sub == 0) break;
    sub = (sub - 1) & full;
  }
}

}  // namespace grapes
