#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "json.hpp"

#include "cubulate/sections.hpp"
#include "cubulate/wallspace.hpp"

namespace cubulate {

inline constexpr std::size_t kDefaultMaxVertices = std::size_t{1} << 20;

struct Edge {
  VertexIndex u;
  VertexIndex v;
  WallId wall;
};

/// A cube of dimension walls.size() >= 2, keyed by its minimum vertex in
/// encoding order (the vertex with every cube wall on its listed side) and
/// its sorted wall labels.
struct Cube {
  VertexIndex base;
  std::vector<WallId> walls;

  friend bool operator==(const Cube &, const Cube &) = default;
  friend auto operator<=>(const Cube &, const Cube &) = default;
};

/// A vertex with k incident edges whose labelling walls pairwise cross.
struct Corner {
  VertexIndex vertex;
  std::vector<WallId> walls;

  friend bool operator==(const Corner &, const Corner &) = default;
  friend auto operator<=>(const Corner &, const Corner &) = default;
};

using Neighbor = std::pair<WallId, VertexIndex>;

class CubeComplex {
public:
  /// Breadth-first closure of σ_base under admissible flips. Vertices are
  /// numbered in discovery order with neighbour walls scanned in id order.
  /// Throws ComplexityBudgetExceeded past `max_vertices`.
  static CubeComplex build_component(const WallSpace &ws, Point base,
                                     std::size_t max_vertices = kDefaultMaxVertices);

  /// Reads the export format back, checking that edges and cubes are
  /// consistent with the vertex encodings. Throws MalformedComplex.
  static CubeComplex from_json(const nlohmann::json &doc);
  nlohmann::ordered_json to_json() const;
  std::string to_dot() const;

  std::size_t wall_count() const { return wall_count_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  VertexIndex base() const { return base_; }

  const Section &vertex(VertexIndex v) const { return vertices_.at(v); }
  std::span<const Section> vertices() const { return vertices_; }
  std::span<const Edge> edges() const { return edges_; }
  /// Incident edges of v as (wall, neighbour), sorted by wall.
  std::span<const Neighbor> neighbors(VertexIndex v) const { return adjacency_.at(v); }
  std::optional<VertexIndex> neighbor(VertexIndex v, WallId wall) const;

  std::optional<VertexIndex> find(const Section &s) const;
  /// Throws NotInComponent.
  VertexIndex index_of(const Section &s) const;

  /// Registered cubes of dimension `dim` (>= 2), sorted.
  std::span<const Cube> cubes(std::size_t dim) const;
  std::size_t cube_count() const;
  /// Largest registered cube dimension; 1 when only edges, 0 for a point.
  std::size_t dimension() const;
  /// (#vertices, #edges, #squares, ...), up to dimension().
  std::vector<std::size_t> f_vector() const;

  /// Whether a cube with these (sorted) walls containing v is registered.
  bool has_cube(VertexIndex v, std::span<const WallId> walls) const;
  /// Canonical key of the cube through v spanned by `walls`; nullopt if
  /// its minimum vertex is not in the complex.
  std::optional<Cube> cube_key(VertexIndex v, std::span<const WallId> walls) const;
  /// Registers a cube after checking that its 2^k vertices are present.
  /// Returns false if it was already registered.
  bool add_cube(Cube cube);
  bool remove_cube(const Cube &cube);
  /// Vertex indices of a registered or prospective cube, indexed by the
  /// bit mask over its walls.
  std::vector<VertexIndex> cube_vertices(const Cube &cube) const;

private:
  CubeComplex() = default;
  VertexIndex add_vertex(Section s);
  void add_edge(VertexIndex u, VertexIndex v, WallId wall);
  void sort_cubes();

  friend CubeComplex attach_cubes(const WallSpace &ws, CubeComplex complex);

  std::size_t wall_count_ = 0;
  VertexIndex base_ = 0;
  std::vector<Section> vertices_;
  std::unordered_map<Section, VertexIndex> index_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Neighbor>> adjacency_;
  std::map<std::size_t, std::vector<Cube>> cubes_;
  std::set<Cube> cube_keys_;
};

/// Walls whose flip keeps s admissible, in id order.
std::vector<WallId> admissible_flips(const WallSpace &ws, const Section &s);

/// All k-corners (k >= 2) of the complex, sorted by (vertex, walls).
std::vector<Corner> find_corners(const WallSpace &ws, const CubeComplex &complex, std::size_t k);

/// Glues a cube onto every k-corner, k >= 2. For each corner the 2^k
/// sections obtained by flipping subsets of its walls are built one flip at
/// a time and checked admissible and present in the complex; a failure
/// raises AdmissibilityAssertionFailed. Cubes reached from several corners
/// are stored once.
CubeComplex attach_cubes(const WallSpace &ws, CubeComplex complex);

/// build_component followed by attach_cubes.
CubeComplex cubulate(const WallSpace &ws, Point base,
                     std::size_t max_vertices = kDefaultMaxVertices);

struct DimensionCheck {
  std::size_t dimension;
  std::size_t intersection_number;
  /// Equality holds exactly when some maximum crossing family is realised as
  /// a corner, since every cube's walls pairwise cross.
  bool equal() const { return dimension == intersection_number; }
};
DimensionCheck check_dimension_equals_intersection_number(const WallSpace &ws,
                                                          const CubeComplex &complex);

/// Combinatorial link of a vertex. Link vertices are incident edges (named
/// by wall), link edges are squares at the vertex and link simplices are
/// the wall sets of cubes containing the vertex.
struct VertexLink {
  VertexIndex vertex;
  std::vector<WallId> link_vertices;
  std::vector<std::pair<WallId, WallId>> link_edges;
  std::vector<std::vector<WallId>> simplices;
};
VertexLink vertex_link(const CubeComplex &complex, VertexIndex v);

struct FlagWitness {
  VertexIndex vertex;
  std::vector<WallId> clique;
};
struct FlagReport {
  std::optional<FlagWitness> violation;
  std::size_t cliques_checked = 0;
  bool flag() const { return !violation.has_value(); }
};
/// Checks every clique of every vertex link against the registered cubes.
/// Works on any complex, including ones read back from (possibly edited)
/// exports.
FlagReport check_flag(const CubeComplex &complex);

/// BFS distances in the 1-skeleton; unreachable vertices get SIZE_MAX.
std::vector<std::size_t> distances_from(const CubeComplex &complex, VertexIndex source);
/// Throws NotInComponent.
std::size_t graph_distance(const CubeComplex &complex, const Section &u, const Section &v);

struct MetricReport {
  /// First pair with d(p, q) != d_1(σ_p, σ_q), or whose special vertex is
  /// missing from the complex.
  std::optional<std::pair<Point, Point>> violation;
  std::size_t pairs_checked = 0;
  bool ok() const { return !violation.has_value(); }
};
/// Compares the wall pseudo-metric with 1-skeleton distance between special
/// vertices over all point pairs.
MetricReport check_metric_correspondence(const WallSpace &ws, const CubeComplex &complex);

} // namespace cubulate
