#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"

#include "cubulate/cubing.hpp"

namespace cubulate {

/// Closed edge path v_0, v_1, ..., v_L = v_0 of vertex indices, based at v_0.
/// A trivial loop is the single vertex [v_0].
struct EdgeLoop {
  std::vector<VertexIndex> vertices;

  std::size_t length() const { return vertices.empty() ? 0 : vertices.size() - 1; }
  VertexIndex basepoint() const { return vertices.front(); }
  bool trivial() const { return vertices.size() <= 1; }
};

/// Throws NotALoop unless the loop is nonempty, closed, and each
/// consecutive pair is an edge. Returns the wall crossed by each step.
std::vector<WallId> validate_loop(const CubeComplex &complex, const EdgeLoop &loop);

struct ParityResult {
  std::size_t length = 0;
  /// Number of times each wall is crossed going around the loop.
  std::vector<std::size_t> flip_counts;
  bool even_length() const { return length % 2 == 0; }
  bool even_flips() const;
  bool ok() const { return even_length() && even_flips(); }
};
ParityResult loop_parity_check(const CubeComplex &complex, const EdgeLoop &loop);

struct LoopMove {
  enum class Type { Backtrack, Square };
  Type type;
  /// Position in the loop of the vertex removed or replaced.
  std::size_t position;
  /// Vertex index of that vertex.
  VertexIndex at;
  /// One wall for a backtrack, the two square walls for a square move.
  std::vector<WallId> walls;
};

/// Deletes spurs (v, w, v) until none remain. Moves are appended to `moves`
/// when given.
EdgeLoop remove_backtracks(const CubeComplex &complex, EdgeLoop loop,
                           std::vector<LoopMove> *moves = nullptr);

struct ContractionCertificate {
  std::vector<LoopMove> moves;
  /// Maximum distance from the basepoint at the start of each sweep.
  std::vector<std::size_t> sweep_radii;
  std::size_t square_moves() const;
  std::size_t backtrack_moves() const;
  nlohmann::ordered_json to_json() const;
};

/// Contracts a loop to its basepoint. Each sweep takes the loop vertices at
/// maximal 1-skeleton distance from the basepoint, checks that both loop
/// neighbours are one step closer and that the two edges span a square,
/// then pushes the vertex across that square to the opposite corner.
/// Backtracks are removed eagerly after every move. The radius must drop
/// strictly between sweeps. Throws ContractionStuck with the loop state when
/// any of these checks fails.
ContractionCertificate contract_loop(const CubeComplex &complex, const EdgeLoop &loop);

/// Applies a certificate to the loop it was produced from, validating each
/// move. Throws ContractionStuck on an inapplicable move.
EdgeLoop replay_certificate(const CubeComplex &complex, EdgeLoop loop,
                            const ContractionCertificate &certificate);

/// Random walk of `steps` edges from `start`, closed by a geodesic return
/// that always steps to the lowest-wall neighbour one closer to `start`.
EdgeLoop random_loop(const CubeComplex &complex, VertexIndex start, std::size_t steps,
                     std::mt19937_64 &rng);

struct LoopSuiteResult {
  std::size_t loops = 0;
  std::size_t parity_failures = 0;
  std::size_t contraction_failures = 0;
  std::size_t longest_loop = 0;
  std::size_t square_moves = 0;
  std::size_t backtrack_moves = 0;
  /// Description of the first failure, if any.
  std::string first_failure;
  bool ok() const { return parity_failures == 0 && contraction_failures == 0; }
};

/// Samples `loops` random loops (random start vertex, 1..max_steps walk
/// steps, geodesic return) from a generator seeded with `seed`, and runs the
/// parity check, contraction and certificate replay on each.
LoopSuiteResult run_loop_suite(const CubeComplex &complex, std::size_t loops,
                               std::uint64_t seed, std::size_t max_steps = 40);

} // namespace cubulate
