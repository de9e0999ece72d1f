#include "cubulate/wallspace.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <unordered_map>

namespace cubulate {

std::string_view to_string(ErrorCode code) {
  switch (code) {
  case ErrorCode::ParseError: return "ParseError";
  case ErrorCode::EmptyHalfSpace: return "EmptyHalfSpace";
  case ErrorCode::DuplicateWall: return "DuplicateWall";
  case ErrorCode::PointOutOfRange: return "PointOutOfRange";
  case ErrorCode::WallOutOfRange: return "WallOutOfRange";
  case ErrorCode::SameWall: return "SameWall";
  case ErrorCode::WallsCross: return "WallsCross";
  case ErrorCode::PreconditionViolated: return "PreconditionViolated";
  case ErrorCode::InadmissibleFlip: return "InadmissibleFlip";
  case ErrorCode::ComplexityBudgetExceeded: return "ComplexityBudgetExceeded";
  case ErrorCode::AdmissibilityAssertionFailed: return "AdmissibilityAssertionFailed";
  case ErrorCode::FlagViolation: return "FlagViolation";
  case ErrorCode::NotInComponent: return "NotInComponent";
  case ErrorCode::NotALoop: return "NotALoop";
  case ErrorCode::ContractionStuck: return "ContractionStuck";
  case ErrorCode::NotBijective: return "NotBijective";
  case ErrorCode::HalfSpaceNotPreserved: return "HalfSpaceNotPreserved";
  case ErrorCode::EquivarianceViolation: return "EquivarianceViolation";
  case ErrorCode::BudgetExceeded: return "BudgetExceeded";
  case ErrorCode::SizeOutOfRange: return "SizeOutOfRange";
  case ErrorCode::MalformedComplex: return "MalformedComplex";
  }
  return "UnknownError";
}

namespace {

// A partition {h, h^c} is identified by the side not containing point 0.
Bits canonical_partition(const Bits &side) {
  return side.test(0) ? ~side : side;
}

struct BitsHash {
  std::size_t operator()(const Bits &b) const { return boost::hash_value(b); }
};

} // namespace

WallSpace WallSpace::validate(std::size_t point_count,
                              const std::vector<std::vector<Point>> &listed_sides) {
  if (point_count == 0) {
    throw Error(ErrorCode::EmptyHalfSpace, "a wall space needs at least one point");
  }
  if (listed_sides.empty()) {
    throw Error(ErrorCode::EmptyHalfSpace, "the half-space family must be nonempty");
  }

  WallSpace ws;
  ws.point_count_ = point_count;
  ws.wall_count_ = listed_sides.size();
  ws.half_spaces_.reserve(2 * ws.wall_count_);

  std::unordered_map<Bits, WallId, BitsHash> seen;
  for (WallId w = 0; w < listed_sides.size(); ++w) {
    Bits side(point_count);
    for (Point p : listed_sides[w]) {
      if (p >= point_count) {
        std::ostringstream msg;
        msg << "wall " << w << " lists point " << p << " but there are only "
            << point_count << " points";
        throw Error(ErrorCode::PointOutOfRange, msg.str());
      }
      side.set(p);
    }
    if (side.none() || side.all()) {
      std::ostringstream msg;
      msg << "wall " << w << (side.none() ? " has an empty listed side"
                                          : " has an empty complement");
      throw Error(ErrorCode::EmptyHalfSpace, msg.str());
    }
    auto [it, inserted] = seen.emplace(canonical_partition(side), w);
    if (!inserted) {
      std::ostringstream msg;
      msg << "walls " << it->second << " and " << w << " define the same partition";
      throw Error(ErrorCode::DuplicateWall, msg.str());
    }
    ws.half_spaces_.push_back(side);
    ws.half_spaces_.push_back(~side);
  }

  const std::size_t h_count = ws.half_spaces_.size();
  ws.disjoint_.assign(h_count, Bits(h_count));
  for (std::size_t a = 0; a < h_count; ++a) {
    for (std::size_t b = a + 1; b < h_count; ++b) {
      if (!ws.half_spaces_[a].intersects(ws.half_spaces_[b])) {
        ws.disjoint_[a].set(b);
        ws.disjoint_[b].set(a);
      }
    }
  }

  ws.crossing_.assign(ws.wall_count_, Bits(ws.wall_count_));
  for (WallId i = 0; i < ws.wall_count_; ++i) {
    for (WallId j = i + 1; j < ws.wall_count_; ++j) {
      bool all_quadrants = true;
      for (bool si : {false, true}) {
        for (bool sj : {false, true}) {
          if (ws.disjoint_[HalfSpaceId::of(i, si).value].test(HalfSpaceId::of(j, sj).value)) {
            all_quadrants = false;
          }
        }
      }
      if (all_quadrants) {
        ws.crossing_[i].set(j);
        ws.crossing_[j].set(i);
      }
    }
  }
  return ws;
}

WallSpace WallSpace::from_json(const nlohmann::json &doc) {
  if (!doc.is_object() || !doc.contains("points") || !doc.contains("walls")) {
    throw Error(ErrorCode::ParseError, "expected an object with \"points\" and \"walls\"");
  }
  const auto &points = doc.at("points");
  if (!points.is_number_integer() || points.get<long long>() <= 0) {
    throw Error(ErrorCode::ParseError, "\"points\" must be a positive integer");
  }
  const auto &walls = doc.at("walls");
  if (!walls.is_array()) {
    throw Error(ErrorCode::ParseError, "\"walls\" must be an array of arrays");
  }
  std::vector<std::vector<Point>> sides;
  sides.reserve(walls.size());
  for (const auto &wall : walls) {
    if (!wall.is_array()) {
      throw Error(ErrorCode::ParseError, "each wall must be an array of point indices");
    }
    auto &side = sides.emplace_back();
    for (const auto &p : wall) {
      if (!p.is_number_integer()) {
        throw Error(ErrorCode::ParseError, "point indices must be integers");
      }
      if (p.get<long long>() < 0) {
        throw Error(ErrorCode::PointOutOfRange, "negative point index");
      }
      side.push_back(p.get<Point>());
    }
  }
  return validate(points.get<std::size_t>(), sides);
}

nlohmann::ordered_json WallSpace::to_json() const {
  nlohmann::ordered_json doc;
  doc["points"] = point_count_;
  auto walls = nlohmann::ordered_json::array();
  for (WallId w = 0; w < wall_count_; ++w) {
    walls.push_back(members(HalfSpaceId::of(w, false)));
  }
  doc["walls"] = std::move(walls);
  return doc;
}

void WallSpace::check_point(Point p) const {
  if (p >= point_count_) {
    throw Error(ErrorCode::PointOutOfRange,
                "point " + std::to_string(p) + " of " + std::to_string(point_count_));
  }
}

void WallSpace::check_wall(WallId w) const {
  if (w >= wall_count_) {
    throw Error(ErrorCode::WallOutOfRange,
                "wall " + std::to_string(w) + " of " + std::to_string(wall_count_));
  }
}

const Bits &WallSpace::half_space(HalfSpaceId h) const {
  check_wall(h.wall());
  return half_spaces_[h.value];
}

bool WallSpace::contains(HalfSpaceId h, Point p) const {
  check_point(p);
  return half_space(h).test(p);
}

bool WallSpace::side_of(WallId wall, Point p) const {
  return !contains(HalfSpaceId::of(wall, false), p);
}

std::vector<Point> WallSpace::members(HalfSpaceId h) const {
  const Bits &set = half_space(h);
  std::vector<Point> out;
  out.reserve(set.count());
  for (auto p = set.find_first(); p != Bits::npos; p = set.find_next(p)) {
    out.push_back(p);
  }
  return out;
}

bool WallSpace::separates(WallId wall, Point p, Point q) const {
  const Bits &listed = half_space(HalfSpaceId::of(wall, false));
  check_point(p);
  check_point(q);
  return listed.test(p) != listed.test(q);
}

std::size_t WallSpace::wall_distance(Point p, Point q) const {
  check_point(p);
  check_point(q);
  std::size_t d = 0;
  for (WallId w = 0; w < wall_count_; ++w) {
    const Bits &listed = half_spaces_[2 * w];
    d += listed.test(p) != listed.test(q) ? 1 : 0;
  }
  return d;
}

bool WallSpace::crosses(WallId w1, WallId w2) const {
  check_wall(w1);
  check_wall(w2);
  if (w1 == w2) {
    throw Error(ErrorCode::SameWall, "crossing is defined on distinct walls");
  }
  return crossing_[w1].test(w2);
}

const Bits &WallSpace::crossing_set(WallId wall) const {
  check_wall(wall);
  return crossing_[wall];
}

bool WallSpace::disjoint(HalfSpaceId h, HalfSpaceId k) const {
  check_wall(h.wall());
  check_wall(k.wall());
  return disjoint_[h.value].test(k.value);
}

const Bits &WallSpace::disjoint_set(HalfSpaceId h) const {
  check_wall(h.wall());
  return disjoint_[h.value];
}

bool WallSpace::nested_in(HalfSpaceId h, HalfSpaceId k) const {
  return half_space(h).is_subset_of(half_space(k));
}

bool WallSpace::separates_from_wall(WallId k, Point p, WallId h) const {
  if (crosses(k, h)) {
    throw Error(ErrorCode::WallsCross,
                "walls " + std::to_string(k) + " and " + std::to_string(h) + " cross");
  }
  const auto k_side = HalfSpaceId::of(k, side_of(k, p));
  const auto h_side = HalfSpaceId::of(h, side_of(h, p));
  return nested_in(k_side, h_side);
}

std::size_t WallSpace::intersection_number() const {
  return maximum_crossing_family().size();
}

std::vector<WallId> WallSpace::maximum_crossing_family() const {
  return maximum_clique(crossing_);
}

namespace {

class CliqueSearch {
public:
  explicit CliqueSearch(std::span<const Bits> adjacency) : adj_(adjacency) {}

  std::vector<std::size_t> run() {
    const std::size_t n = adj_.size();
    if (n == 0) {
      return {};
    }
    const auto order = degeneracy_order();
    std::vector<std::size_t> position(n);
    for (std::size_t i = 0; i < n; ++i) {
      position[order[i]] = i;
    }
    best_ = {order.front()};
    // Each clique is found from its earliest vertex in degeneracy order, with
    // candidates restricted to later neighbours.
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t v = order[i];
      Bits later(n);
      for (auto u = adj_[v].find_first(); u != Bits::npos; u = adj_[v].find_next(u)) {
        if (position[u] > i) {
          later.set(u);
        }
      }
      if (later.count() + 1 <= best_.size()) {
        continue;
      }
      current_ = {v};
      expand(later);
    }
    return best_;
  }

private:
  std::vector<std::size_t> degeneracy_order() const {
    const std::size_t n = adj_.size();
    std::vector<std::size_t> degree(n);
    for (std::size_t v = 0; v < n; ++v) {
      degree[v] = adj_[v].count();
    }
    std::vector<bool> removed(n, false);
    std::vector<std::size_t> order;
    order.reserve(n);
    for (std::size_t step = 0; step < n; ++step) {
      std::size_t pick = n;
      for (std::size_t v = 0; v < n; ++v) {
        if (!removed[v] && (pick == n || degree[v] < degree[pick])) {
          pick = v;
        }
      }
      removed[pick] = true;
      order.push_back(pick);
      for (auto u = adj_[pick].find_first(); u != Bits::npos; u = adj_[pick].find_next(u)) {
        if (!removed[u]) {
          --degree[u];
        }
      }
    }
    return order;
  }

  // Greedy sequential colouring; returns vertices with their colour bound,
  // sorted by increasing colour.
  std::vector<std::pair<std::size_t, std::size_t>> colour(const Bits &candidates) const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    Bits uncoloured = candidates;
    std::size_t colour_index = 0;
    while (uncoloured.any()) {
      ++colour_index;
      Bits available = uncoloured;
      for (auto v = available.find_first(); v != Bits::npos; v = available.find_next(v)) {
        out.emplace_back(v, colour_index);
        uncoloured.reset(v);
        available -= adj_[v];
      }
    }
    return out;
  }

  void expand(Bits candidates) {
    if (candidates.none()) {
      if (current_.size() > best_.size()) {
        best_ = current_;
      }
      return;
    }
    const auto coloured = colour(candidates);
    for (auto it = coloured.rbegin(); it != coloured.rend(); ++it) {
      const auto [v, bound] = *it;
      if (current_.size() + bound <= best_.size()) {
        return;
      }
      current_.push_back(v);
      expand(candidates & adj_[v]);
      current_.pop_back();
      candidates.reset(v);
    }
  }

  std::span<const Bits> adj_;
  std::vector<std::size_t> current_;
  std::vector<std::size_t> best_;
};

} // namespace

std::vector<std::size_t> maximum_clique(std::span<const Bits> adjacency) {
  auto clique = CliqueSearch(adjacency).run();
  std::sort(clique.begin(), clique.end());
  return clique;
}

} // namespace cubulate
