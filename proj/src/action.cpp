#include "cubulate/action.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

namespace cubulate {

namespace {

struct BitsHash {
  std::size_t operator()(const Bits &b) const { return boost::hash_value(b); }
};

std::string join(const std::vector<std::size_t> &items) {
  std::ostringstream out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    out << (i ? "," : "") << items[i];
  }
  return out.str();
}

// A group element carried with its induced wall map.
struct Element {
  std::vector<Point> perm;
  std::vector<WallId> wall_image;
  std::vector<bool> side_swap;
  std::string word;

  Section act(const Section &s) const {
    Bits out(s.wall_count());
    for (WallId w = 0; w < s.wall_count(); ++w) {
      out[wall_image[w]] = s.side(w) != side_swap[w];
    }
    return Section(std::move(out));
  }

  // g after this element.
  Element then(const Generator &g) const {
    Element next;
    next.perm.resize(perm.size());
    for (Point p = 0; p < perm.size(); ++p) {
      next.perm[p] = g.apply(perm[p]);
    }
    next.wall_image.resize(wall_image.size());
    next.side_swap.resize(wall_image.size());
    for (WallId w = 0; w < wall_image.size(); ++w) {
      next.wall_image[w] = g.wall_image(wall_image[w]);
      next.side_swap[w] = side_swap[w] != g.side_swap(wall_image[w]);
    }
    next.word = word.empty() ? g.name() : word + "." + g.name();
    return next;
  }
};

} // namespace

Generator Generator::validate(const WallSpace &ws, std::string name, std::vector<Point> perm) {
  const std::size_t n = ws.point_count();
  if (perm.size() != n) {
    throw Error(ErrorCode::NotBijective, "generator " + name + " has " +
                                             std::to_string(perm.size()) + " images for " +
                                             std::to_string(n) + " points");
  }
  std::vector<bool> hit(n, false);
  for (Point p : perm) {
    if (p >= n || hit[p]) {
      throw Error(ErrorCode::NotBijective,
                  "generator " + name + " is not a permutation (image " + std::to_string(p) + ")");
    }
    hit[p] = true;
  }

  std::unordered_map<Bits, WallId, BitsHash> listed;
  for (WallId w = 0; w < ws.wall_count(); ++w) {
    listed.emplace(ws.half_space(HalfSpaceId::of(w, false)), w);
  }

  Generator g;
  g.name_ = std::move(name);
  g.perm_ = std::move(perm);
  g.wall_image_.resize(ws.wall_count());
  g.side_swap_.resize(ws.wall_count());
  for (WallId w = 0; w < ws.wall_count(); ++w) {
    const Bits &side = ws.half_space(HalfSpaceId::of(w, false));
    Bits image(n);
    for (auto p = side.find_first(); p != Bits::npos; p = side.find_next(p)) {
      image.set(g.perm_[p]);
    }
    if (auto it = listed.find(image); it != listed.end()) {
      g.wall_image_[w] = it->second;
      g.side_swap_[w] = false;
    } else if (auto jt = listed.find(~image); jt != listed.end()) {
      g.wall_image_[w] = jt->second;
      g.side_swap_[w] = true;
    } else {
      throw Error(ErrorCode::HalfSpaceNotPreserved,
                  "generator " + g.name_ + " maps half-space " + std::to_string(2 * w) +
                      " (listed side of wall " + std::to_string(w) +
                      ") outside the family");
    }
  }
  return g;
}

HalfSpaceId Generator::apply(HalfSpaceId h) const {
  return HalfSpaceId::of(wall_image(h.wall()), h.side() != side_swap(h.wall()));
}

Generator Generator::inverse(const WallSpace &ws) const {
  std::vector<Point> inv(perm_.size());
  for (Point p = 0; p < perm_.size(); ++p) {
    inv[perm_[p]] = p;
  }
  return validate(ws, name_ + "^-1", std::move(inv));
}

std::vector<Generator> generators_from_json(const WallSpace &ws, const nlohmann::json &doc) {
  if (!doc.is_object() || !doc.contains("generators") || !doc.at("generators").is_array()) {
    throw Error(ErrorCode::ParseError, "expected an object with a \"generators\" array");
  }
  std::vector<Generator> out;
  for (const auto &entry : doc.at("generators")) {
    try {
      out.push_back(Generator::validate(ws, entry.at("name").get<std::string>(),
                                        entry.at("perm").get<std::vector<Point>>()));
    } catch (const nlohmann::json::exception &e) {
      throw Error(ErrorCode::ParseError, std::string("generator entry: ") + e.what());
    }
  }
  return out;
}

Section act_on_section(const Generator &g, const Section &s) {
  Bits out(s.wall_count());
  for (WallId w = 0; w < s.wall_count(); ++w) {
    out[g.wall_image(w)] = s.side(w) != g.side_swap(w);
  }
  return Section(std::move(out));
}

bool EquivarianceReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto &c) { return c.passed; });
}

nlohmann::ordered_json EquivarianceReport::to_json() const {
  nlohmann::ordered_json out;
  out["generator"] = generator;
  out["passed"] = passed();
  auto list = nlohmann::ordered_json::array();
  for (const auto &c : checks) {
    nlohmann::ordered_json item;
    item["check"] = c.name;
    item["status"] = c.passed ? "pass" : "fail";
    if (!c.passed) {
      item["witness"] = c.witness;
    }
    list.push_back(std::move(item));
  }
  out["checks"] = std::move(list);
  return out;
}

EquivarianceReport check_equivariance(const WallSpace &ws, const CubeComplex &complex,
                                      const Generator &g) {
  EquivarianceReport report{g.name(), {}};
  auto fail = [](CheckOutcome &c, const std::string &witness) {
    if (c.passed) {
      c.passed = false;
      c.witness = witness;
    }
  };

  CheckOutcome special{"special_vertices", true, {}};
  for (Point p = 0; p < ws.point_count() && special.passed; ++p) {
    if (act_on_section(g, principal_section(ws, p)) != principal_section(ws, g.apply(p))) {
      fail(special, "g(sigma_" + std::to_string(p) + ") != sigma_" + std::to_string(g.apply(p)));
    }
  }
  report.checks.push_back(special);

  // Vertex images; a missing image fails the remaining complex checks too.
  CheckOutcome vertices{"vertices_to_vertices", true, {}};
  std::vector<VertexIndex> image(complex.vertex_count());
  for (VertexIndex v = 0; v < complex.vertex_count(); ++v) {
    auto found = complex.find(act_on_section(g, complex.vertex(v)));
    if (!found) {
      fail(vertices, "vertex " + std::to_string(v) + " maps outside the complex");
      break;
    }
    image[v] = *found;
  }
  report.checks.push_back(vertices);

  CheckOutcome edges{"edges_to_edges", true, {}};
  CheckOutcome point_metric{"wall_metric_preserved", true, {}};
  CheckOutcome vertex_metric{"d1_preserved", true, {}};
  CheckOutcome cubes{"cubes_to_cubes", true, {}};
  CheckOutcome corners{"corners_to_corners", true, {}};

  for (Point p = 0; p < ws.point_count() && point_metric.passed; ++p) {
    for (Point q = p + 1; q < ws.point_count(); ++q) {
      if (ws.wall_distance(p, q) != ws.wall_distance(g.apply(p), g.apply(q))) {
        fail(point_metric, "d(" + std::to_string(p) + "," + std::to_string(q) + ")");
        break;
      }
    }
  }

  if (vertices.passed) {
    for (const auto &e : complex.edges()) {
      if (complex.neighbor(image[e.u], g.wall_image(e.wall)) != image[e.v]) {
        fail(edges, "edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " on wall " +
                        std::to_string(e.wall));
        break;
      }
    }

    for (VertexIndex u = 0; u < complex.vertex_count() && vertex_metric.passed; ++u) {
      const auto from_u = distances_from(complex, u);
      const auto from_gu = distances_from(complex, image[u]);
      for (VertexIndex v = 0; v < complex.vertex_count(); ++v) {
        if (from_u[v] != from_gu[image[v]]) {
          fail(vertex_metric, "d1(" + std::to_string(u) + "," + std::to_string(v) + ")");
          break;
        }
      }
    }

    for (std::size_t k = 2; k <= complex.dimension() && cubes.passed; ++k) {
      for (const auto &cube : complex.cubes(k)) {
        std::vector<WallId> walls;
        for (WallId w : cube.walls) {
          walls.push_back(g.wall_image(w));
        }
        std::sort(walls.begin(), walls.end());
        if (!complex.has_cube(image[cube.base], walls)) {
          fail(cubes, "cube at " + std::to_string(cube.base) + " on walls " + join(cube.walls));
          break;
        }
      }
    }

    for (std::size_t k = 2; k <= complex.dimension() && corners.passed; ++k) {
      for (const auto &corner : find_corners(ws, complex, k)) {
        const VertexIndex target = image[corner.vertex];
        bool ok = true;
        for (std::size_t i = 0; i < corner.walls.size() && ok; ++i) {
          const WallId wi = g.wall_image(corner.walls[i]);
          ok = complex.neighbor(target, wi).has_value();
          for (std::size_t j = i + 1; j < corner.walls.size() && ok; ++j) {
            ok = ws.crosses(wi, g.wall_image(corner.walls[j]));
          }
        }
        if (!ok) {
          fail(corners,
               "corner at " + std::to_string(corner.vertex) + " on walls " + join(corner.walls));
          break;
        }
      }
    }
  } else {
    for (auto *c : {&edges, &vertex_metric, &cubes, &corners}) {
      fail(*c, "skipped: vertices map outside the complex");
    }
  }

  for (auto *c : {&edges, &point_metric, &vertex_metric, &cubes, &corners}) {
    report.checks.push_back(*c);
  }
  return report;
}

void require_equivariance(const WallSpace &ws, const CubeComplex &complex, const Generator &g) {
  const auto report = check_equivariance(ws, complex, g);
  for (const auto &c : report.checks) {
    if (!c.passed) {
      throw Error(ErrorCode::EquivarianceViolation,
                  "generator " + g.name() + " fails " + c.name + ": " + c.witness);
    }
  }
}

OrbitStabilizer orbit_and_stabilizer(const WallSpace &ws, const CubeComplex &complex,
                                     const std::vector<Generator> &generators,
                                     VertexIndex vertex, std::size_t max_word_length,
                                     std::size_t max_elements) {
  OrbitStabilizer result;

  std::set<VertexIndex> seen{vertex};
  std::deque<VertexIndex> queue{vertex};
  while (!queue.empty()) {
    const VertexIndex v = queue.front();
    queue.pop_front();
    result.orbit.push_back(v);
    for (const auto &g : generators) {
      const VertexIndex next = complex.index_of(act_on_section(g, complex.vertex(v)));
      if (seen.insert(next).second) {
        if (seen.size() > max_elements) {
          throw Error(ErrorCode::BudgetExceeded, "orbit exceeds the element budget");
        }
        queue.push_back(next);
      }
    }
  }
  std::sort(result.orbit.begin(), result.orbit.end());

  Element identity;
  identity.perm.resize(ws.point_count());
  for (Point p = 0; p < ws.point_count(); ++p) {
    identity.perm[p] = p;
  }
  identity.wall_image.resize(ws.wall_count());
  for (WallId w = 0; w < ws.wall_count(); ++w) {
    identity.wall_image[w] = w;
  }
  identity.side_swap.assign(ws.wall_count(), false);

  const Section &target = complex.vertex(vertex);
  std::set<std::vector<Point>> elements{identity.perm};
  std::vector<Element> frontier{identity};
  result.stabilizer_words.push_back("");
  for (std::size_t length = 1; length <= max_word_length && !frontier.empty(); ++length) {
    std::vector<Element> next_frontier;
    for (const auto &e : frontier) {
      for (const auto &g : generators) {
        Element next = e.then(g);
        if (!elements.insert(next.perm).second) {
          continue;
        }
        if (elements.size() > max_elements) {
          throw Error(ErrorCode::BudgetExceeded, "group enumeration exceeds the element budget");
        }
        if (next.act(target) == target) {
          result.stabilizer_words.push_back(next.word);
        }
        next_frontier.push_back(std::move(next));
      }
    }
    frontier = std::move(next_frontier);
  }
  result.elements_explored = elements.size();
  return result;
}

} // namespace cubulate
