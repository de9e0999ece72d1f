#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "cubulate/error.hpp"
#include "cubulate/types.hpp"

namespace cubulate {

/// A finite space with walls.
///
/// Points are 0..N-1. Wall i is given by its listed side (half-space 2i);
/// the complement (half-space 2i+1) is synthesized during validation. The
/// object is immutable once constructed, and the pairwise disjointness and
/// crossing relations are tabulated up front so that admissibility tests on
/// sections cost O(M / 64) per chosen half-space.
class WallSpace {
public:
  /// Builds a wall space from the listed side of each wall.
  /// Throws EmptyHalfSpace, DuplicateWall or PointOutOfRange.
  static WallSpace validate(std::size_t point_count,
                            const std::vector<std::vector<Point>> &listed_sides);

  /// Parses {"points": N, "walls": [[...], ...]}.
  static WallSpace from_json(const nlohmann::json &doc);
  nlohmann::ordered_json to_json() const;

  std::size_t point_count() const { return point_count_; }
  std::size_t wall_count() const { return wall_count_; }
  std::size_t half_space_count() const { return 2 * wall_count_; }

  const Bits &half_space(HalfSpaceId h) const;
  bool contains(HalfSpaceId h, Point p) const;
  /// Side bit of the half-space of `wall` containing p.
  bool side_of(WallId wall, Point p) const;
  std::vector<Point> members(HalfSpaceId h) const;

  bool separates(WallId wall, Point p, Point q) const;
  std::size_t wall_distance(Point p, Point q) const;

  /// All four quadrants nonempty. Throws SameWall when w1 == w2.
  bool crosses(WallId w1, WallId w2) const;
  /// Walls crossing `wall`, as a bit set over wall ids.
  const Bits &crossing_set(WallId wall) const;

  /// h ∩ k = ∅.
  bool disjoint(HalfSpaceId h, HalfSpaceId k) const;
  /// Half-space ids disjoint from h, as a bit set over 0..2M-1.
  const Bits &disjoint_set(HalfSpaceId h) const;
  /// h ⊆ k.
  bool nested_in(HalfSpaceId h, HalfSpaceId k) const;

  /// True when k̄ separates p from the wall h̄: the side of k̄ containing p
  /// lies inside the side of h̄ containing p. Throws WallsCross if the two
  /// walls cross and SameWall if they coincide.
  bool separates_from_wall(WallId k, Point p, WallId h) const;

  /// Size of a largest pairwise crossing family of walls (1 when no two
  /// walls cross). Exact branch and bound; exponential in the worst case.
  std::size_t intersection_number() const;
  /// One maximum pairwise crossing family, sorted by wall id.
  std::vector<WallId> maximum_crossing_family() const;

  void check_point(Point p) const;
  void check_wall(WallId w) const;

private:
  WallSpace() = default;

  std::size_t point_count_ = 0;
  std::size_t wall_count_ = 0;
  std::vector<Bits> half_spaces_;  // indexed by HalfSpaceId::value
  std::vector<Bits> disjoint_;     // half-space id -> set of disjoint ids
  std::vector<Bits> crossing_;     // wall id -> set of crossing walls
};

/// Exact maximum clique of an undirected graph given as adjacency bit sets.
/// Vertices are processed in degeneracy order with a greedy colouring bound.
/// The clique is returned sorted.
std::vector<std::size_t> maximum_clique(std::span<const Bits> adjacency);

} // namespace cubulate
