#pragma once

#include <boost/dynamic_bitset.hpp>
#include <cstddef>
#include <cstdint>

namespace cubulate {

using Point = std::size_t;
using WallId = std::size_t;
using VertexIndex = std::size_t;

/// Dense bit set used for point sets, wall sets and side-bit vectors.
using Bits = boost::dynamic_bitset<std::uint64_t>;

/// Half-space ids pair up as {2w, 2w+1}: the even id is the listed side of
/// wall w, the odd id its complement.
struct HalfSpaceId {
  std::size_t value = 0;

  static constexpr HalfSpaceId of(WallId wall, bool side) {
    return HalfSpaceId{2 * wall + (side ? 1U : 0U)};
  }
  constexpr WallId wall() const { return value >> 1; }
  constexpr bool side() const { return (value & 1U) != 0; }
  constexpr HalfSpaceId complement() const { return HalfSpaceId{value ^ 1U}; }

  friend constexpr bool operator==(HalfSpaceId, HalfSpaceId) = default;
  friend constexpr auto operator<=>(HalfSpaceId, HalfSpaceId) = default;
};

} // namespace cubulate
