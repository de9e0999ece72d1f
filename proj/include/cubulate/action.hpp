#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "cubulate/cubing.hpp"

namespace cubulate {

/// A point permutation that maps every half-space of the family onto a
/// half-space of the family, together with the induced map on walls.
///
/// `wall_image[i]` is the wall g(i). `side_swap[i]` is set when g sends the
/// listed side of wall i onto the complement side of g(i), so the half-space
/// (i, s) maps to (g(i), s XOR side_swap[i]).
class Generator {
public:
  /// Throws NotBijective or HalfSpaceNotPreserved (naming the half-space).
  static Generator validate(const WallSpace &ws, std::string name, std::vector<Point> perm);

  const std::string &name() const { return name_; }
  const std::vector<Point> &perm() const { return perm_; }
  Point apply(Point p) const { return perm_.at(p); }
  WallId wall_image(WallId w) const { return wall_image_.at(w); }
  bool side_swap(WallId w) const { return side_swap_.at(w); }
  HalfSpaceId apply(HalfSpaceId h) const;

  /// The inverse permutation, revalidated.
  Generator inverse(const WallSpace &ws) const;

private:
  Generator() = default;

  std::string name_;
  std::vector<Point> perm_;
  std::vector<WallId> wall_image_;
  std::vector<bool> side_swap_;
};

/// Parses {"generators": [{"name": ..., "perm": [...]}, ...]}.
std::vector<Generator> generators_from_json(const WallSpace &ws, const nlohmann::json &doc);

/// g(σ)(h̄) = g(σ(g⁻¹(h̄))).
Section act_on_section(const Generator &g, const Section &s);

struct CheckOutcome {
  std::string name;
  bool passed = true;
  std::string witness;
};

struct EquivarianceReport {
  std::string generator;
  std::vector<CheckOutcome> checks;
  bool passed() const;
  nlohmann::ordered_json to_json() const;
};

/// Exhaustively checks, for one generator and a built complex: special
/// vertices map to special vertices, vertices and edges map into the complex
/// with relabelled walls, the wall pseudo-metric and d_1 are preserved, and
/// corners and cubes map to corners and cubes.
EquivarianceReport check_equivariance(const WallSpace &ws, const CubeComplex &complex,
                                      const Generator &g);
/// Throws EquivarianceViolation with the first failing check's witness.
void require_equivariance(const WallSpace &ws, const CubeComplex &complex, const Generator &g);

struct OrbitStabilizer {
  std::vector<VertexIndex> orbit;
  /// Shortest generator words (names joined by '.') of the distinct group
  /// elements found within the word-length bound that fix the vertex. The
  /// empty word is the identity.
  std::vector<std::string> stabilizer_words;
  std::size_t elements_explored = 0;
};

/// Orbit by closure under the generators; stabiliser by breadth-first
/// enumeration of group elements up to `max_word_length`. Throws
/// BudgetExceeded when more than `max_elements` elements are generated.
OrbitStabilizer orbit_and_stabilizer(const WallSpace &ws, const CubeComplex &complex,
                                     const std::vector<Generator> &generators,
                                     VertexIndex vertex, std::size_t max_word_length = 8,
                                     std::size_t max_elements = 100000);

} // namespace cubulate
