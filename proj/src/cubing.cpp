#include "cubulate/cubing.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <sstream>
#include <utility>

namespace cubulate {

namespace {

// Calls visit(clique) for every clique of size >= 2 (and <= max_size) in the
// graph on `items` given by `adjacent`. Cliques come out in lexicographic
// order of item positions.
template <typename Adjacent, typename Visit>
void for_each_clique(std::span<const WallId> items, Adjacent adjacent, std::size_t max_size,
                     Visit visit) {
  std::vector<WallId> current;
  auto extend = [&](auto &self, const std::vector<WallId> &candidates) -> void {
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      current.push_back(candidates[i]);
      if (current.size() >= 2) {
        visit(std::as_const(current));
      }
      if (current.size() < max_size) {
        std::vector<WallId> next;
        for (std::size_t j = i + 1; j < candidates.size(); ++j) {
          if (adjacent(candidates[i], candidates[j])) {
            next.push_back(candidates[j]);
          }
        }
        self(self, next);
      }
      current.pop_back();
    }
  };
  extend(extend, std::vector<WallId>(items.begin(), items.end()));
}

Bits wall_mask(std::size_t wall_count, std::span<const WallId> walls) {
  Bits mask(wall_count);
  for (WallId w : walls) {
    mask.set(w);
  }
  return mask;
}

std::vector<WallId> incident_walls(const CubeComplex &complex, VertexIndex v) {
  std::vector<WallId> walls;
  for (const auto &[wall, _] : complex.neighbors(v)) {
    walls.push_back(wall);
  }
  return walls;
}

[[noreturn]] void malformed(const std::string &what) {
  throw Error(ErrorCode::MalformedComplex, what);
}

} // namespace

std::vector<WallId> admissible_flips(const WallSpace &ws, const Section &s) {
  Bits chosen(ws.half_space_count());
  for (WallId w = 0; w < s.wall_count(); ++w) {
    chosen.set(s.selected(w).value);
  }
  std::vector<WallId> flips;
  for (WallId w = 0; w < s.wall_count(); ++w) {
    const HalfSpaceId current = s.selected(w);
    chosen.reset(current.value);
    if (!ws.disjoint_set(current.complement()).intersects(chosen)) {
      flips.push_back(w);
    }
    chosen.set(current.value);
  }
  return flips;
}

VertexIndex CubeComplex::add_vertex(Section s) {
  const VertexIndex index = vertices_.size();
  index_.emplace(s, index);
  vertices_.push_back(std::move(s));
  adjacency_.emplace_back();
  return index;
}

void CubeComplex::add_edge(VertexIndex u, VertexIndex v, WallId wall) {
  edges_.push_back({u, v, wall});
  adjacency_[u].emplace_back(wall, v);
  adjacency_[v].emplace_back(wall, u);
}

CubeComplex CubeComplex::build_component(const WallSpace &ws, Point base,
                                         std::size_t max_vertices) {
  CubeComplex complex;
  complex.wall_count_ = ws.wall_count();
  complex.add_vertex(principal_section(ws, base));
  complex.base_ = 0;

  for (VertexIndex u = 0; u < complex.vertices_.size(); ++u) {
    const Section current = complex.vertices_[u];
    for (WallId w : admissible_flips(ws, current)) {
      Section next = current.flipped(w);
      auto found = complex.index_.find(next);
      if (found == complex.index_.end()) {
        if (complex.vertices_.size() >= max_vertices) {
          throw Error(ErrorCode::ComplexityBudgetExceeded,
                      "component has more than " + std::to_string(max_vertices) + " vertices");
        }
        complex.add_edge(u, complex.add_vertex(std::move(next)), w);
      } else if (found->second > u) {
        complex.add_edge(u, found->second, w);
      }
    }
  }
  for (auto &list : complex.adjacency_) {
    std::sort(list.begin(), list.end());
  }
  return complex;
}

std::optional<VertexIndex> CubeComplex::neighbor(VertexIndex v, WallId wall) const {
  const auto &list = adjacency_.at(v);
  auto it = std::lower_bound(list.begin(), list.end(), Neighbor{wall, 0});
  if (it != list.end() && it->first == wall) {
    return it->second;
  }
  return std::nullopt;
}

std::optional<VertexIndex> CubeComplex::find(const Section &s) const {
  auto it = index_.find(s);
  if (it == index_.end()) {
    return std::nullopt;
  }
  return it->second;
}

VertexIndex CubeComplex::index_of(const Section &s) const {
  if (auto v = find(s)) {
    return *v;
  }
  throw Error(ErrorCode::NotInComponent, "section " + s.encode() + " is not a vertex");
}

std::span<const Cube> CubeComplex::cubes(std::size_t dim) const {
  auto it = cubes_.find(dim);
  if (it == cubes_.end()) {
    return {};
  }
  return it->second;
}

std::size_t CubeComplex::cube_count() const { return cube_keys_.size(); }

std::size_t CubeComplex::dimension() const {
  for (auto it = cubes_.rbegin(); it != cubes_.rend(); ++it) {
    if (!it->second.empty()) {
      return it->first;
    }
  }
  return edges_.empty() ? 0 : 1;
}

std::vector<std::size_t> CubeComplex::f_vector() const {
  std::vector<std::size_t> f{vertex_count()};
  const std::size_t dim = dimension();
  for (std::size_t k = 1; k <= dim; ++k) {
    f.push_back(k == 1 ? edge_count() : cubes(k).size());
  }
  return f;
}

std::optional<Cube> CubeComplex::cube_key(VertexIndex v, std::span<const WallId> walls) const {
  const Bits mask = wall_mask(wall_count_, walls);
  const Section minimum(vertex(v).bits() - mask);
  auto base = find(minimum);
  if (!base) {
    return std::nullopt;
  }
  std::vector<WallId> sorted(walls.begin(), walls.end());
  std::sort(sorted.begin(), sorted.end());
  return Cube{*base, std::move(sorted)};
}

bool CubeComplex::has_cube(VertexIndex v, std::span<const WallId> walls) const {
  auto key = cube_key(v, walls);
  return key && cube_keys_.contains(*key);
}

std::vector<VertexIndex> CubeComplex::cube_vertices(const Cube &cube) const {
  const std::size_t k = cube.walls.size();
  std::vector<VertexIndex> out(std::size_t{1} << k);
  const Section &base = vertex(cube.base);
  for (std::size_t mask = 0; mask < out.size(); ++mask) {
    Bits flips(wall_count_);
    for (std::size_t i = 0; i < k; ++i) {
      if ((mask >> i) & 1U) {
        flips.set(cube.walls[i]);
      }
    }
    auto v = find(base.flipped(flips));
    if (!v) {
      malformed("cube at vertex " + std::to_string(cube.base) + " has a missing vertex");
    }
    out[mask] = *v;
  }
  return out;
}

bool CubeComplex::add_cube(Cube cube) {
  if (cube.walls.size() < 2 || cube.base >= vertices_.size()) {
    malformed("cubes need a valid base vertex and at least two walls");
  }
  std::sort(cube.walls.begin(), cube.walls.end());
  if (std::adjacent_find(cube.walls.begin(), cube.walls.end()) != cube.walls.end() ||
      cube.walls.back() >= wall_count_) {
    malformed("cube walls must be distinct wall ids");
  }
  for (WallId w : cube.walls) {
    if (vertices_[cube.base].side(w)) {
      malformed("cube base must be its minimum vertex");
    }
  }
  const auto corners = cube_vertices(cube);
  for (std::size_t mask = 0; mask < corners.size(); ++mask) {
    for (std::size_t i = 0; i < cube.walls.size(); ++i) {
      if (neighbor(corners[mask], cube.walls[i]) != corners[mask ^ (std::size_t{1} << i)]) {
        malformed("cube at vertex " + std::to_string(cube.base) + " has a missing edge");
      }
    }
  }
  if (!cube_keys_.insert(cube).second) {
    return false;
  }
  cubes_[cube.walls.size()].push_back(std::move(cube));
  return true;
}

bool CubeComplex::remove_cube(const Cube &cube) {
  if (cube_keys_.erase(cube) == 0) {
    return false;
  }
  auto &list = cubes_[cube.walls.size()];
  list.erase(std::remove(list.begin(), list.end(), cube), list.end());
  if (list.empty()) {
    cubes_.erase(cube.walls.size());
  }
  return true;
}

void CubeComplex::sort_cubes() {
  for (auto &[_, list] : cubes_) {
    std::sort(list.begin(), list.end());
  }
}

nlohmann::ordered_json CubeComplex::to_json() const {
  nlohmann::ordered_json doc;
  doc["walls"] = wall_count_;
  doc["base"] = vertices_.at(base_).encode();
  auto vertices = nlohmann::ordered_json::array();
  for (const auto &s : vertices_) {
    vertices.push_back(s.encode());
  }
  doc["vertices"] = std::move(vertices);
  auto edges = nlohmann::ordered_json::array();
  for (const auto &e : edges_) {
    edges.push_back({e.u, e.v, e.wall});
  }
  doc["edges"] = std::move(edges);
  nlohmann::ordered_json cubes = nlohmann::ordered_json::object();
  for (const auto &[dim, list] : cubes_) {
    auto entries = nlohmann::ordered_json::array();
    for (const auto &c : list) {
      entries.push_back({c.base, c.walls});
    }
    cubes[std::to_string(dim)] = std::move(entries);
  }
  doc["cubes"] = std::move(cubes);
  return doc;
}

CubeComplex CubeComplex::from_json(const nlohmann::json &doc) {
  try {
    CubeComplex complex;
    complex.wall_count_ = doc.at("walls").get<std::size_t>();
    for (const auto &enc : doc.at("vertices")) {
      Section s = Section::parse(enc.get<std::string>());
      if (s.wall_count() != complex.wall_count_) {
        malformed("vertex " + s.encode() + " has the wrong length");
      }
      if (complex.index_.contains(s)) {
        malformed("duplicate vertex " + s.encode());
      }
      complex.add_vertex(std::move(s));
    }
    if (complex.vertices_.empty()) {
      malformed("a complex needs at least one vertex");
    }
    complex.base_ = complex.index_of(Section::parse(doc.at("base").get<std::string>()));
    for (const auto &e : doc.at("edges")) {
      const auto u = e.at(0).get<VertexIndex>();
      const auto v = e.at(1).get<VertexIndex>();
      const auto w = e.at(2).get<WallId>();
      if (u >= complex.vertex_count() || v >= complex.vertex_count() || w >= complex.wall_count_) {
        malformed("edge index out of range");
      }
      const Bits diff = complex.vertices_[u].difference(complex.vertices_[v]);
      if (diff.count() != 1 || !diff.test(w)) {
        malformed("edge " + std::to_string(u) + "-" + std::to_string(v) +
                  " does not differ exactly on wall " + std::to_string(w));
      }
      if (complex.neighbor(u, w)) {
        malformed("duplicate edge at vertex " + std::to_string(u));
      }
      complex.add_edge(u, v, w);
      std::sort(complex.adjacency_[u].begin(), complex.adjacency_[u].end());
      std::sort(complex.adjacency_[v].begin(), complex.adjacency_[v].end());
    }
    for (const auto &[_, list] : doc.at("cubes").items()) {
      for (const auto &entry : list) {
        complex.add_cube(
            Cube{entry.at(0).get<VertexIndex>(), entry.at(1).get<std::vector<WallId>>()});
      }
    }
    complex.sort_cubes();
    return complex;
  } catch (const nlohmann::json::exception &e) {
    throw Error(ErrorCode::ParseError, std::string("complex JSON: ") + e.what());
  }
}

std::string CubeComplex::to_dot() const {
  std::ostringstream out;
  out << "graph cubing {\n";
  for (VertexIndex v = 0; v < vertices_.size(); ++v) {
    out << "  n" << v << " [label=\"" << vertices_[v].encode() << "\"";
    if (v == base_) {
      out << ", peripheries=2";
    }
    out << "];\n";
  }
  for (const auto &e : edges_) {
    out << "  n" << e.u << " -- n" << e.v << " [label=\"" << e.wall << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::vector<Corner> find_corners(const WallSpace &ws, const CubeComplex &complex,
                                 std::size_t k) {
  if (k < 2) {
    throw Error(ErrorCode::PreconditionViolated, "corners have k >= 2");
  }
  std::vector<Corner> corners;
  auto crossing = [&](WallId a, WallId b) { return ws.crossing_set(a).test(b); };
  for (VertexIndex v = 0; v < complex.vertex_count(); ++v) {
    const auto walls = incident_walls(complex, v);
    for_each_clique(walls, crossing, k, [&](const std::vector<WallId> &clique) {
      if (clique.size() == k) {
        corners.push_back({v, clique});
      }
    });
  }
  return corners;
}

CubeComplex attach_cubes(const WallSpace &ws, CubeComplex complex) {
  if (complex.wall_count() != ws.wall_count()) {
    throw Error(ErrorCode::PreconditionViolated, "complex and wall space disagree on walls");
  }
  auto crossing = [&](WallId a, WallId b) { return ws.crossing_set(a).test(b); };
  const std::size_t max_size = std::numeric_limits<std::size_t>::max();

  for (VertexIndex v = 0; v < complex.vertex_count(); ++v) {
    const auto walls = incident_walls(complex, v);
    for_each_clique(walls, crossing, max_size, [&](const std::vector<WallId> &corner) {
      const auto key = complex.cube_key(v, corner);
      const bool known = key && complex.cube_keys_.contains(*key);
      // τ_mask = τ_(mask minus its top bit) flipped on the top wall, so every
      // section is reached from an earlier one by a single flip.
      std::vector<Section> tau(std::size_t{1} << corner.size());
      tau[0] = complex.vertex(v);
      for (std::size_t mask = 1; mask < tau.size(); ++mask) {
        std::size_t top = 0;
        while ((mask >> (top + 1)) != 0) {
          ++top;
        }
        tau[mask] = tau[mask ^ (std::size_t{1} << top)].flipped(corner[top]);
        const bool ok = known ? complex.find(tau[mask]).has_value()
                              : is_admissible(ws, tau[mask]) && complex.find(tau[mask]);
        if (!ok) {
          std::ostringstream msg;
          msg << "corner at vertex " << v << " does not span a cube: section "
              << tau[mask].encode() << " is missing or inadmissible";
          throw Error(ErrorCode::AdmissibilityAssertionFailed, msg.str());
        }
      }
      if (!known) {
        if (!key) {
          throw Error(ErrorCode::AdmissibilityAssertionFailed,
                      "minimum vertex of a corner's cube is missing");
        }
        complex.add_cube(*key);
      }
    });
  }
  complex.sort_cubes();
  return complex;
}

CubeComplex cubulate(const WallSpace &ws, Point base, std::size_t max_vertices) {
  return attach_cubes(ws, CubeComplex::build_component(ws, base, max_vertices));
}

DimensionCheck check_dimension_equals_intersection_number(const WallSpace &ws,
                                                          const CubeComplex &complex) {
  return {complex.dimension(), ws.intersection_number()};
}

VertexLink vertex_link(const CubeComplex &complex, VertexIndex v) {
  VertexLink link{v, incident_walls(complex, v), {}, {}};
  const auto &walls = link.link_vertices;
  for (std::size_t i = 0; i < walls.size(); ++i) {
    for (std::size_t j = i + 1; j < walls.size(); ++j) {
      const WallId pair[] = {walls[i], walls[j]};
      if (complex.has_cube(v, pair)) {
        link.link_edges.emplace_back(walls[i], walls[j]);
      }
    }
  }
  auto linked = [&](WallId a, WallId b) {
    return std::binary_search(link.link_edges.begin(), link.link_edges.end(),
                              std::pair{std::min(a, b), std::max(a, b)});
  };
  for_each_clique(walls, linked, std::numeric_limits<std::size_t>::max(),
                  [&](const std::vector<WallId> &clique) {
                    if (complex.has_cube(v, clique)) {
                      link.simplices.push_back(clique);
                    }
                  });
  return link;
}

FlagReport check_flag(const CubeComplex &complex) {
  FlagReport report;
  for (VertexIndex v = 0; v < complex.vertex_count() && report.flag(); ++v) {
    const VertexLink link = vertex_link(complex, v);
    auto linked = [&](WallId a, WallId b) {
      return std::binary_search(link.link_edges.begin(), link.link_edges.end(),
                                std::pair{std::min(a, b), std::max(a, b)});
    };
    for_each_clique(link.link_vertices, linked, std::numeric_limits<std::size_t>::max(),
                    [&](const std::vector<WallId> &clique) {
                      ++report.cliques_checked;
                      if (report.flag() && !std::binary_search(link.simplices.begin(),
                                                               link.simplices.end(), clique)) {
                        report.violation = FlagWitness{v, clique};
                      }
                    });
  }
  return report;
}

std::vector<std::size_t> distances_from(const CubeComplex &complex, VertexIndex source) {
  constexpr auto unreached = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> dist(complex.vertex_count(), unreached);
  std::deque<VertexIndex> queue{source};
  dist.at(source) = 0;
  while (!queue.empty()) {
    const VertexIndex u = queue.front();
    queue.pop_front();
    for (const auto &[_, v] : complex.neighbors(u)) {
      if (dist[v] == unreached) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

std::size_t graph_distance(const CubeComplex &complex, const Section &u, const Section &v) {
  const VertexIndex from = complex.index_of(u);
  const VertexIndex to = complex.index_of(v);
  const std::size_t d = distances_from(complex, from)[to];
  if (d == std::numeric_limits<std::size_t>::max()) {
    throw Error(ErrorCode::NotInComponent, "vertices are in different components");
  }
  return d;
}

MetricReport check_metric_correspondence(const WallSpace &ws, const CubeComplex &complex) {
  MetricReport report;
  std::vector<VertexIndex> special(ws.point_count());
  for (Point p = 0; p < ws.point_count(); ++p) {
    auto v = complex.find(principal_section(ws, p));
    if (!v) {
      report.violation = std::pair{p, p};
      return report;
    }
    special[p] = *v;
  }
  // One BFS per distinct special vertex.
  std::unordered_map<VertexIndex, std::vector<std::size_t>> dist;
  for (Point p = 0; p < ws.point_count(); ++p) {
    auto it = dist.find(special[p]);
    if (it == dist.end()) {
      it = dist.emplace(special[p], distances_from(complex, special[p])).first;
    }
    for (Point q = p; q < ws.point_count(); ++q) {
      ++report.pairs_checked;
      if (it->second[special[q]] != ws.wall_distance(p, q)) {
        report.violation = std::pair{p, q};
        return report;
      }
    }
  }
  return report;
}

} // namespace cubulate
