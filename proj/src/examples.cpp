#include "cubulate/examples.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace cubulate::examples {

namespace {

[[noreturn]] void out_of_range(const std::string &what) {
  throw Error(ErrorCode::SizeOutOfRange, what);
}

using Cell = std::array<int, 3>;
using LatticeVertex = std::pair<int, int>;

// Cell (a, b, c) with t = c - a - b.
std::array<LatticeVertex, 3> corners_of(const Cell &cell) {
  const auto [a, b, c] = cell;
  if (c - a - b == 0) {
    return {{{a, b}, {a + 1, b}, {a, b + 1}}};
  }
  return {{{a + 1, b}, {a, b + 1}, {a + 1, b + 1}}};
}

// The six cells around a lattice vertex.
std::array<Cell, 6> cells_around(const LatticeVertex &v) {
  const auto [x, y] = v;
  return {{{x, y, x + y},
           {x - 1, y, x + y - 1},
           {x, y - 1, x + y - 1},
           {x - 1, y, x + y},
           {x, y - 1, x + y},
           {x - 1, y - 1, x + y - 1}}};
}

} // namespace

WallSpace gen_crossing(std::size_t n) {
  if (n < 1 || n > 15) {
    out_of_range("crossing family needs 1 <= n <= 15");
  }
  const std::size_t points = std::size_t{1} << n;
  std::vector<std::vector<Point>> walls(n);
  for (Point x = 0; x < points; ++x) {
    for (std::size_t i = 0; i < n; ++i) {
      if ((x >> i) & 1U) {
        walls[i].push_back(x);
      }
    }
  }
  return WallSpace::validate(points, walls);
}

WallSpace gen_nested(std::size_t n) {
  if (n < 1) {
    out_of_range("nested family needs n >= 1");
  }
  std::vector<std::vector<Point>> walls;
  for (std::size_t i = 1; i <= n; ++i) {
    auto &side = walls.emplace_back();
    for (Point x = i; x <= n; ++x) {
      side.push_back(x);
    }
  }
  return WallSpace::validate(n + 1, walls);
}

WallSpace gen_tree(std::size_t arity, std::size_t depth) {
  if (arity < 2 || depth < 1) {
    out_of_range("tree family needs arity >= 2 and depth >= 1");
  }
  std::size_t leaves = 1;
  for (std::size_t k = 0; k < depth; ++k) {
    leaves *= arity;
    if (leaves > (std::size_t{1} << 16)) {
      out_of_range("tree family is capped at 65536 leaves");
    }
  }
  std::vector<std::vector<Point>> walls;
  std::set<std::vector<Point>> seen;
  std::size_t nodes_at_depth = 1;
  for (std::size_t k = 1; k <= depth; ++k) {
    nodes_at_depth *= arity;
    const std::size_t span = leaves / nodes_at_depth;
    for (std::size_t j = 0; j < nodes_at_depth; ++j) {
      std::vector<Point> below;
      for (Point leaf = j * span; leaf < (j + 1) * span; ++leaf) {
        below.push_back(leaf);
      }
      // Identify the partition by the side avoiding leaf 0.
      std::vector<Point> canonical;
      if (below.front() == 0) {
        for (Point leaf = (j + 1) * span; leaf < leaves; ++leaf) {
          canonical.push_back(leaf);
        }
      } else {
        canonical = below;
      }
      if (seen.insert(canonical).second) {
        walls.push_back(std::move(below));
      }
    }
  }
  return WallSpace::validate(leaves, walls);
}

TriangleLattice gen_triangle_lattice(std::size_t radius) {
  if (radius < 1 || radius > 6) {
    out_of_range("triangle-lattice family needs 1 <= radius <= 6");
  }

  // Breadth-first over cells sharing a corner; each layer sorted for a
  // deterministic point numbering.
  std::vector<Cell> cells{{0, 0, 0}};
  std::set<Cell> seen{{0, 0, 0}};
  std::vector<Cell> layer{{0, 0, 0}};
  for (std::size_t step = 0; step < radius; ++step) {
    std::set<Cell> next;
    for (const auto &cell : layer) {
      for (const auto &corner : corners_of(cell)) {
        for (const auto &other : cells_around(corner)) {
          if (!seen.contains(other)) {
            next.insert(other);
          }
        }
      }
    }
    layer.assign(next.begin(), next.end());
    for (const auto &cell : layer) {
      seen.insert(cell);
      cells.push_back(cell);
    }
  }

  std::vector<LatticeLine> lines;
  std::vector<std::vector<Point>> walls;
  std::set<std::vector<Point>> partitions;
  for (int family = 0; family < 3; ++family) {
    int lo = cells.front()[family];
    int hi = lo;
    for (const auto &cell : cells) {
      lo = std::min(lo, cell[family]);
      hi = std::max(hi, cell[family]);
    }
    for (int k = lo + 1; k <= hi; ++k) {
      std::vector<Point> upper;
      std::vector<Point> lower;
      for (Point p = 0; p < cells.size(); ++p) {
        (cells[p][family] >= k ? upper : lower).push_back(p);
      }
      if (upper.empty() || lower.empty()) {
        continue;
      }
      // Two lines cutting the ball the same way contribute one wall.
      if (!partitions.insert(lower.front() == 0 ? upper : lower).second) {
        continue;
      }
      walls.push_back(std::move(upper));
      lines.push_back({family, k});
    }
  }
  return TriangleLattice{WallSpace::validate(cells.size(), walls), std::move(cells),
                         std::move(lines)};
}

std::array<long, 3> lattice_label(const TriangleLattice &lattice, const Section &s) {
  std::array<long, 3> label{0, 0, 0};
  for (WallId w = 0; w < lattice.lines.size(); ++w) {
    const auto &line = lattice.lines[w];
    const bool upper_chosen = !s.side(w);
    if (upper_chosen && line.offset >= 1) {
      ++label[static_cast<std::size_t>(line.family)];
    } else if (!upper_chosen && line.offset <= 0) {
      --label[static_cast<std::size_t>(line.family)];
    }
  }
  return label;
}

WallSpace generate(std::string_view family, std::span<const long> params) {
  auto need = [&](std::size_t count) {
    if (params.size() != count) {
      throw Error(ErrorCode::PreconditionViolated,
                  std::string(family) + " takes " + std::to_string(count) + " parameter(s)");
    }
    for (long p : params) {
      if (p < 0) {
        out_of_range("parameters must be nonnegative");
      }
    }
  };
  if (family == "crossing") {
    need(1);
    return gen_crossing(static_cast<std::size_t>(params[0]));
  }
  if (family == "nested") {
    need(1);
    return gen_nested(static_cast<std::size_t>(params[0]));
  }
  if (family == "tree") {
    need(2);
    return gen_tree(static_cast<std::size_t>(params[0]), static_cast<std::size_t>(params[1]));
  }
  if (family == "triangle-lattice") {
    need(1);
    return gen_triangle_lattice(static_cast<std::size_t>(params[0])).space;
  }
  throw Error(ErrorCode::PreconditionViolated, "unknown family '" + std::string(family) + "'");
}

} // namespace cubulate::examples
