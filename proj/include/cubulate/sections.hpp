#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "cubulate/types.hpp"
#include "cubulate/wallspace.hpp"

namespace cubulate {

/// A choice of one side per wall, stored as side bits: bit i clear selects
/// the listed side of wall i, bit i set selects its complement. The text
/// encoding has '0' for the listed side and '1' for the complement, wall 0
/// first.
class Section {
public:
  Section() = default;
  explicit Section(std::size_t wall_count) : bits_(wall_count) {}
  explicit Section(Bits bits) : bits_(std::move(bits)) {}

  static Section parse(std::string_view encoding);
  std::string encode() const;

  std::size_t wall_count() const { return bits_.size(); }
  bool side(WallId w) const { return bits_.test(w); }
  HalfSpaceId selected(WallId w) const { return HalfSpaceId::of(w, side(w)); }
  const Bits &bits() const { return bits_; }

  /// Copy with the choice on `w` complemented, admissible or not.
  Section flipped(WallId w) const;
  /// Copy with every wall in `walls` complemented.
  Section flipped(const Bits &walls) const;
  /// Walls on which the two sections differ.
  Bits difference(const Section &other) const { return bits_ ^ other.bits_; }
  std::size_t hamming(const Section &other) const { return difference(other).count(); }

  friend bool operator==(const Section &, const Section &) = default;
  /// Lexicographic order of the text encodings.
  friend bool operator<(const Section &a, const Section &b);

private:
  Bits bits_;
};

bool is_admissible(const WallSpace &ws, const Section &s);

/// True when flipping `w` keeps an admissible section admissible. Only the
/// newly chosen half-space needs testing against the others.
bool flip_is_admissible(const WallSpace &ws, const Section &s, WallId w);

/// The special vertex σ_p: for every wall, the side containing p.
Section principal_section(const WallSpace &ws, Point p);

/// Neighbour of an admissible section across `w`. Throws InadmissibleFlip.
Section flip(const WallSpace &ws, const Section &s, WallId w);

/// Edge path σ_p = v_0, ..., v_n = σ_q of length wall_distance(p, q). At
/// each step the wall flipped is the one whose p-side is inclusion-minimal
/// among the walls still separating the current section from σ_q, lowest
/// wall id first. Each intermediate section is checked for admissibility
/// and AdmissibilityAssertionFailed is raised if one is not.
std::vector<Section> geodesic_path(const WallSpace &ws, Point p, Point q);

/// Classes of points at pseudo-distance zero, each sorted, ordered by their
/// smallest member.
struct WallEquivalenceClass {
  Point representative;
  std::vector<Point> members;
};
std::vector<WallEquivalenceClass> wall_equivalence_classes(const WallSpace &ws);

} // namespace cubulate

template <>
struct std::hash<cubulate::Section> {
  std::size_t operator()(const cubulate::Section &s) const noexcept {
    return boost::hash_value(s.bits());
  }
};
