#pragma once

// Brute-force reference computations used only by the tests. Everything here
// works from the raw wall lists (plain point vectors) and never touches the
// library's bit-set tables, so it stays independent of the code it checks.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "cubulate/error.hpp"
#include "cubulate/wallspace.hpp"

namespace oracle {

struct RawSpace {
  std::size_t points = 0;
  std::vector<std::vector<std::size_t>> walls;  // listed sides, sorted

  static RawSpace of(const cubulate::WallSpace &ws) {
    RawSpace raw;
    raw.points = ws.point_count();
    const auto doc = ws.to_json();
    for (const auto &w : doc.at("walls")) {
      raw.walls.push_back(w.get<std::vector<std::size_t>>());
    }
    return raw;
  }

  std::vector<std::size_t> side(std::size_t wall, bool complement) const {
    if (!complement) {
      return walls[wall];
    }
    std::vector<std::size_t> out;
    for (std::size_t p = 0; p < points; ++p) {
      if (!std::binary_search(walls[wall].begin(), walls[wall].end(), p)) {
        out.push_back(p);
      }
    }
    return out;
  }

  bool in_listed(std::size_t wall, std::size_t p) const {
    return std::binary_search(walls[wall].begin(), walls[wall].end(), p);
  }
};

inline bool meets(const std::vector<std::size_t> &a, const std::vector<std::size_t> &b) {
  std::vector<std::size_t> common;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
  return !common.empty();
}

/// All admissible sections as encodings, sorted. Walls are assigned one at a
/// time and a partial choice is abandoned as soon as two chosen sides miss
/// each other, so this stays exhaustive without visiting all 2^M choices.
inline std::vector<std::string> admissible_sections(const RawSpace &raw) {
  const std::size_t m = raw.walls.size();
  // meet[2i + s][2j + t]: side s of wall i intersects side t of wall j.
  std::vector<std::vector<bool>> meet(2 * m, std::vector<bool>(2 * m, false));
  for (std::size_t a = 0; a < 2 * m; ++a) {
    for (std::size_t b = 0; b < 2 * m; ++b) {
      meet[a][b] = meets(raw.side(a / 2, a % 2), raw.side(b / 2, b % 2));
    }
  }
  std::vector<std::string> out;
  std::string enc(m, '0');
  std::function<void(std::size_t)> extend = [&](std::size_t i) {
    if (i == m) {
      out.push_back(enc);
      return;
    }
    for (std::size_t s = 0; s < 2; ++s) {
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) {
        ok = meet[2 * i + s][2 * j + (enc[j] == '1' ? 1 : 0)];
      }
      if (ok) {
        enc[i] = s ? '1' : '0';
        extend(i + 1);
      }
    }
    enc[i] = '0';
  };
  extend(0);
  std::sort(out.begin(), out.end());
  return out;
}

inline bool admissible(const RawSpace &raw, const std::string &enc) {
  for (std::size_t i = 0; i < raw.walls.size(); ++i) {
    for (std::size_t j = i + 1; j < raw.walls.size(); ++j) {
      if (!meets(raw.side(i, enc[i] == '1'), raw.side(j, enc[j] == '1'))) {
        return false;
      }
    }
  }
  return true;
}

inline bool crosses(const RawSpace &raw, std::size_t a, std::size_t b) {
  bool quadrant[2][2] = {{false, false}, {false, false}};
  for (std::size_t p = 0; p < raw.points; ++p) {
    quadrant[raw.in_listed(a, p)][raw.in_listed(b, p)] = true;
  }
  return quadrant[0][0] && quadrant[0][1] && quadrant[1][0] && quadrant[1][1];
}

/// Largest pairwise crossing family by enumerating all wall subsets.
inline std::size_t max_crossing_family(const RawSpace &raw) {
  const std::size_t m = raw.walls.size();
  std::vector<std::vector<bool>> cross(m, std::vector<bool>(m, false));
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      cross[a][b] = a != b && crosses(raw, a, b);
    }
  }
  std::size_t best = m == 0 ? 0 : 1;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
    const auto size = static_cast<std::size_t>(__builtin_popcountll(mask));
    if (size <= best) {
      continue;
    }
    bool ok = true;
    for (std::size_t a = 0; a < m && ok; ++a) {
      for (std::size_t b = a + 1; b < m && ok; ++b) {
        if (((mask >> a) & 1U) && ((mask >> b) & 1U)) {
          ok = cross[a][b];
        }
      }
    }
    if (ok) {
      best = size;
    }
  }
  return best;
}

inline std::size_t separating_walls(const RawSpace &raw, std::size_t p, std::size_t q) {
  std::size_t d = 0;
  for (std::size_t w = 0; w < raw.walls.size(); ++w) {
    d += raw.in_listed(w, p) != raw.in_listed(w, q) ? 1 : 0;
  }
  return d;
}

inline std::string principal(const RawSpace &raw, std::size_t p) {
  std::string enc(raw.walls.size(), '0');
  for (std::size_t w = 0; w < raw.walls.size(); ++w) {
    enc[w] = raw.in_listed(w, p) ? '0' : '1';
  }
  return enc;
}

/// Graph on the given sections with Hamming-1 adjacency.
struct SectionGraph {
  std::vector<std::string> vertices;
  std::map<std::string, std::size_t> index;
  std::vector<std::vector<std::size_t>> adj;

  explicit SectionGraph(std::vector<std::string> vs) : vertices(std::move(vs)) {
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      index[vertices[i]] = i;
    }
    adj.resize(vertices.size());
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      for (std::size_t w = 0; w < vertices[i].size(); ++w) {
        std::string n = vertices[i];
        n[w] = n[w] == '0' ? '1' : '0';
        if (auto it = index.find(n); it != index.end()) {
          adj[i].push_back(it->second);
        }
      }
    }
  }

  std::size_t edge_count() const {
    std::size_t e = 0;
    for (const auto &a : adj) {
      e += a.size();
    }
    return e / 2;
  }

  std::vector<std::size_t> bfs(std::size_t source) const {
    std::vector<std::size_t> dist(vertices.size(), SIZE_MAX);
    std::deque<std::size_t> queue{source};
    dist[source] = 0;
    while (!queue.empty()) {
      const auto u = queue.front();
      queue.pop_front();
      for (auto v : adj[u]) {
        if (dist[v] == SIZE_MAX) {
          dist[v] = dist[u] + 1;
          queue.push_back(v);
        }
      }
    }
    return dist;
  }

  /// Sections reachable from `start`.
  std::vector<std::string> component(const std::string &start) const {
    const auto dist = bfs(index.at(start));
    std::vector<std::string> out;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      if (dist[i] != SIZE_MAX) {
        out.push_back(vertices[i]);
      }
    }
    return out;
  }
};

/// Number of k-cubes for k = 0..M: sets of 2^k admissible sections agreeing
/// off a k-set of walls and taking every value on it.
inline std::vector<std::size_t> cube_counts(const RawSpace &raw) {
  const auto all = admissible_sections(raw);
  const std::set<std::string> present(all.begin(), all.end());
  const std::size_t m = raw.walls.size();
  std::vector<std::size_t> counts(m + 1, 0);
  for (std::uint64_t walls = 0; walls < (std::uint64_t{1} << m); ++walls) {
    const auto k = static_cast<std::size_t>(__builtin_popcountll(walls));
    for (const auto &s : all) {
      // Count each cube once, from its vertex with '0' on every cube wall.
      bool minimal = true;
      for (std::size_t w = 0; w < m; ++w) {
        if (((walls >> w) & 1U) && s[w] == '1') {
          minimal = false;
        }
      }
      if (!minimal) {
        continue;
      }
      bool full = true;
      for (std::uint64_t sub = walls; full; sub = (sub - 1) & walls) {
        std::string t = s;
        for (std::size_t w = 0; w < m; ++w) {
          if ((sub >> w) & 1U) {
            t[w] = '1';
          }
        }
        full = present.contains(t);
        if (sub == 0) {
          break;
        }
      }
      counts[k] += full ? 1 : 0;
    }
  }
  while (counts.size() > 1 && counts.back() == 0) {
    counts.pop_back();
  }
  return counts;
}

/// Random valid wall spaces: 2..max_points points, 1..max_walls random walls,
/// invalid draws (empty sides, duplicates) discarded.
inline std::vector<cubulate::WallSpace> random_spaces(std::size_t count, std::uint64_t seed,
                                                     std::size_t max_points = 7,
                                                     std::size_t max_walls = 7) {
  std::mt19937_64 rng(seed);
  std::vector<cubulate::WallSpace> out;
  while (out.size() < count) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(2, max_points)(rng);
    const std::size_t m = std::uniform_int_distribution<std::size_t>(1, max_walls)(rng);
    std::vector<std::vector<std::size_t>> walls(m);
    for (auto &w : walls) {
      for (std::size_t p = 0; p < n; ++p) {
        if (rng() & 1U) {
          w.push_back(p);
        }
      }
    }
    try {
      out.push_back(cubulate::WallSpace::validate(n, walls));
    } catch (const cubulate::Error &) {
    }
  }
  return out;
}

} // namespace oracle
