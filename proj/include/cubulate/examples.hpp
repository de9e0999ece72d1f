#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "cubulate/sections.hpp"
#include "cubulate/wallspace.hpp"

namespace cubulate::examples {

/// Points {0,1}^n (point x has coordinate bits x), one wall per coordinate
/// whose listed side is {x : bit i set}. Requires 1 <= n <= 15.
WallSpace gen_crossing(std::size_t n);

/// Points 0..n with walls h_i = {x >= i}, i = 1..n (wall id i-1).
WallSpace gen_nested(std::size_t n);

/// Leaves of the complete rooted tree of the given arity and depth, one wall
/// per non-root node (the leaves below it). The two root edges of a binary
/// tree induce the same partition and contribute a single wall.
WallSpace gen_tree(std::size_t arity, std::size_t depth);

/// Line of the triangular tiling: family 0, 1, 2 are the lines u = k,
/// v = k and u + v = k in skew coordinates.
struct LatticeLine {
  int family;
  int offset;
};

/// Truncated wall space of the equilateral triangle tiling of the plane.
///
/// A cell is a triple (a, b, c) of integers with c - a - b in {0, 1}: the
/// cell lies in the strips a < u < a+1, b < v < b+1, c < u+v < c+1. The
/// points are the cells within `radius` steps of the base cell (0, 0, 0),
/// where a step moves to a cell sharing at least a corner. Each lattice line
/// that separates two of these cells is a wall, listed side {coord >= k}.
struct TriangleLattice {
  WallSpace space;
  std::vector<std::array<int, 3>> cells;  // indexed by point; cell 0 is the base
  std::vector<LatticeLine> lines;         // indexed by wall id
};

/// Requires 1 <= radius <= 6.
TriangleLattice gen_triangle_lattice(std::size_t radius);

/// Integer coordinates of a section: per line family, the number of lines
/// with offset >= 1 whose upper side is chosen minus the number of lines
/// with offset <= 0 whose lower side is chosen. On the principal section of
/// a cell this returns the cell's (a, b, c).
std::array<long, 3> lattice_label(const TriangleLattice &lattice, const Section &s);

/// Dispatches on family name: crossing (n), nested (n), tree (arity, depth),
/// triangle-lattice (radius). Throws SizeOutOfRange or PreconditionViolated.
WallSpace generate(std::string_view family, std::span<const long> params);

} // namespace cubulate::examples
