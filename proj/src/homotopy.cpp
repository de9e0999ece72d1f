#include "cubulate/homotopy.hpp"

#include <algorithm>
#include <sstream>

namespace cubulate {

namespace {

std::string describe(const EdgeLoop &loop) {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < loop.vertices.size(); ++i) {
    out << (i ? " " : "") << loop.vertices[i];
  }
  out << "]";
  return out.str();
}

[[noreturn]] void stuck(const EdgeLoop &loop, const std::string &why) {
  throw Error(ErrorCode::ContractionStuck, why + " in loop " + describe(loop));
}

std::optional<WallId> edge_wall(const CubeComplex &complex, VertexIndex u, VertexIndex v) {
  for (const auto &[wall, other] : complex.neighbors(u)) {
    if (other == v) {
      return wall;
    }
  }
  return std::nullopt;
}

// Index of the first spur tip (v, w, v) at position i, or 0 if none.
std::size_t find_backtrack(const EdgeLoop &loop) {
  for (std::size_t i = 1; i + 1 < loop.vertices.size(); ++i) {
    if (loop.vertices[i - 1] == loop.vertices[i + 1]) {
      return i;
    }
  }
  return 0;
}

} // namespace

std::vector<WallId> validate_loop(const CubeComplex &complex, const EdgeLoop &loop) {
  if (loop.vertices.empty()) {
    throw Error(ErrorCode::NotALoop, "empty vertex sequence");
  }
  for (VertexIndex v : loop.vertices) {
    if (v >= complex.vertex_count()) {
      throw Error(ErrorCode::NotALoop, "vertex " + std::to_string(v) + " out of range");
    }
  }
  if (loop.vertices.front() != loop.vertices.back()) {
    throw Error(ErrorCode::NotALoop, "path does not return to its start");
  }
  std::vector<WallId> walls;
  for (std::size_t i = 0; i + 1 < loop.vertices.size(); ++i) {
    auto wall = edge_wall(complex, loop.vertices[i], loop.vertices[i + 1]);
    if (!wall) {
      throw Error(ErrorCode::NotALoop, "vertices " + std::to_string(loop.vertices[i]) + " and " +
                                           std::to_string(loop.vertices[i + 1]) +
                                           " are not adjacent");
    }
    walls.push_back(*wall);
  }
  return walls;
}

bool ParityResult::even_flips() const {
  return std::all_of(flip_counts.begin(), flip_counts.end(),
                     [](std::size_t c) { return c % 2 == 0; });
}

ParityResult loop_parity_check(const CubeComplex &complex, const EdgeLoop &loop) {
  ParityResult result;
  result.flip_counts.assign(complex.wall_count(), 0);
  for (WallId w : validate_loop(complex, loop)) {
    ++result.flip_counts[w];
  }
  result.length = loop.length();
  return result;
}

EdgeLoop remove_backtracks(const CubeComplex &complex, EdgeLoop loop,
                           std::vector<LoopMove> *moves) {
  validate_loop(complex, loop);
  for (std::size_t i = find_backtrack(loop); i != 0; i = find_backtrack(loop)) {
    if (moves) {
      const auto wall = edge_wall(complex, loop.vertices[i - 1], loop.vertices[i]);
      moves->push_back({LoopMove::Type::Backtrack, i, loop.vertices[i], {*wall}});
    }
    loop.vertices.erase(loop.vertices.begin() + static_cast<std::ptrdiff_t>(i),
                        loop.vertices.begin() + static_cast<std::ptrdiff_t>(i) + 2);
  }
  return loop;
}

std::size_t ContractionCertificate::square_moves() const {
  return static_cast<std::size_t>(std::count_if(moves.begin(), moves.end(), [](const auto &m) {
    return m.type == LoopMove::Type::Square;
  }));
}

std::size_t ContractionCertificate::backtrack_moves() const {
  return moves.size() - square_moves();
}

nlohmann::ordered_json ContractionCertificate::to_json() const {
  auto out = nlohmann::ordered_json::array();
  for (const auto &m : moves) {
    nlohmann::ordered_json move;
    move["type"] = m.type == LoopMove::Type::Square ? "square" : "backtrack";
    move["at"] = m.at;
    move["walls"] = m.walls;
    move["position"] = m.position;
    out.push_back(std::move(move));
  }
  return out;
}

ContractionCertificate contract_loop(const CubeComplex &complex, const EdgeLoop &input) {
  validate_loop(complex, input);
  ContractionCertificate cert;
  const auto dist = distances_from(complex, input.basepoint());
  auto radius_of = [&](const EdgeLoop &l) {
    std::size_t r = 0;
    for (VertexIndex v : l.vertices) {
      r = std::max(r, dist[v]);
    }
    return r;
  };

  EdgeLoop loop = remove_backtracks(complex, input, &cert.moves);
  while (!loop.trivial()) {
    const std::size_t radius = radius_of(loop);
    if (!cert.sweep_radii.empty() && radius >= cert.sweep_radii.back()) {
      stuck(loop, "radius did not decrease across a sweep");
    }
    cert.sweep_radii.push_back(radius);

    // Push every vertex at the current radius across its square; the loop
    // is rescanned from the start after each move since positions shift.
    for (;;) {
      std::size_t i = 1;
      while (i + 1 < loop.vertices.size() && dist[loop.vertices[i]] != radius) {
        ++i;
      }
      if (i + 1 >= loop.vertices.size()) {
        break;
      }
      const VertexIndex sigma = loop.vertices[i];
      const VertexIndex a = loop.vertices[i - 1];
      const VertexIndex b = loop.vertices[i + 1];
      if (a == b) {
        stuck(loop, "backtrack left at position " + std::to_string(i));
      }
      if (dist[a] + 1 != radius || dist[b] + 1 != radius) {
        stuck(loop, "neighbours of furthest vertex " + std::to_string(sigma) +
                        " are not one step closer");
      }
      const WallId wa = *edge_wall(complex, sigma, a);
      const WallId wb = *edge_wall(complex, sigma, b);
      const std::vector<WallId> square{std::min(wa, wb), std::max(wa, wb)};
      if (!complex.has_cube(sigma, square)) {
        stuck(loop, "edges at vertex " + std::to_string(sigma) + " on walls " +
                        std::to_string(wa) + "," + std::to_string(wb) + " span no square");
      }
      Bits both(complex.wall_count());
      both.set(wa);
      both.set(wb);
      const auto tau = complex.find(complex.vertex(sigma).flipped(both));
      if (!tau || dist[*tau] + 2 != radius) {
        stuck(loop, "opposite square corner is not two steps closer");
      }
      cert.moves.push_back({LoopMove::Type::Square, i, sigma, square});
      loop.vertices[i] = *tau;
      loop = remove_backtracks(complex, std::move(loop), &cert.moves);
    }
  }
  return cert;
}

EdgeLoop replay_certificate(const CubeComplex &complex, EdgeLoop loop,
                            const ContractionCertificate &certificate) {
  validate_loop(complex, loop);
  for (const auto &move : certificate.moves) {
    const std::size_t i = move.position;
    if (i == 0 || i + 1 >= loop.vertices.size() || loop.vertices[i] != move.at) {
      stuck(loop, "move does not match the loop at position " + std::to_string(i));
    }
    if (move.type == LoopMove::Type::Backtrack) {
      if (loop.vertices[i - 1] != loop.vertices[i + 1]) {
        stuck(loop, "no backtrack at position " + std::to_string(i));
      }
      loop.vertices.erase(loop.vertices.begin() + static_cast<std::ptrdiff_t>(i),
                          loop.vertices.begin() + static_cast<std::ptrdiff_t>(i) + 2);
      continue;
    }
    if (move.walls.size() != 2 || !complex.has_cube(move.at, move.walls)) {
      stuck(loop, "square move names no registered square");
    }
    Bits both(complex.wall_count());
    both.set(move.walls[0]);
    both.set(move.walls[1]);
    const auto tau = complex.find(complex.vertex(move.at).flipped(both));
    loop.vertices[i] = tau.value();
    validate_loop(complex, loop);
  }
  return loop;
}

EdgeLoop random_loop(const CubeComplex &complex, VertexIndex start, std::size_t steps,
                     std::mt19937_64 &rng) {
  EdgeLoop loop{{start}};
  VertexIndex current = start;
  for (std::size_t s = 0; s < steps; ++s) {
    const auto nbrs = complex.neighbors(current);
    if (nbrs.empty()) {
      break;
    }
    std::uniform_int_distribution<std::size_t> pick(0, nbrs.size() - 1);
    current = nbrs[pick(rng)].second;
    loop.vertices.push_back(current);
  }
  const auto dist = distances_from(complex, start);
  while (current != start) {
    for (const auto &[_, next] : complex.neighbors(current)) {
      if (dist[next] + 1 == dist[current]) {
        current = next;
        break;
      }
    }
    loop.vertices.push_back(current);
  }
  return loop;
}

LoopSuiteResult run_loop_suite(const CubeComplex &complex, std::size_t loops,
                               std::uint64_t seed, std::size_t max_steps) {
  LoopSuiteResult result;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<VertexIndex> start(0, complex.vertex_count() - 1);
  std::uniform_int_distribution<std::size_t> steps(1, std::max<std::size_t>(max_steps, 1));
  auto note = [&](std::size_t i, const std::string &what) {
    if (result.first_failure.empty()) {
      result.first_failure = "loop " + std::to_string(i) + ": " + what;
    }
  };
  for (std::size_t i = 0; i < loops; ++i) {
    const VertexIndex from = start(rng);
    const EdgeLoop loop = random_loop(complex, from, steps(rng), rng);
    ++result.loops;
    result.longest_loop = std::max(result.longest_loop, loop.length());
    if (!loop_parity_check(complex, loop).ok()) {
      ++result.parity_failures;
      note(i, "odd length or odd per-wall flip count");
    }
    try {
      const auto cert = contract_loop(complex, loop);
      if (!replay_certificate(complex, loop, cert).trivial()) {
        ++result.contraction_failures;
        note(i, "certificate replay did not reach the trivial loop");
      }
      result.square_moves += cert.square_moves();
      result.backtrack_moves += cert.backtrack_moves();
    } catch (const Error &e) {
      ++result.contraction_failures;
      note(i, e.what());
    }
  }
  return result;
}

} // namespace cubulate
