#include "cubulate/sections.hpp"

#include <algorithm>
#include <map>

namespace cubulate {

namespace {

// Selected half-space ids as a bit set over 0..2M-1, optionally leaving out
// one wall.
Bits chosen_half_spaces(const Section &s, std::size_t skip = Bits::npos) {
  Bits chosen(2 * s.wall_count());
  for (WallId w = 0; w < s.wall_count(); ++w) {
    if (w != skip) {
      chosen.set(s.selected(w).value);
    }
  }
  return chosen;
}

void check_shape(const WallSpace &ws, const Section &s) {
  if (s.wall_count() != ws.wall_count()) {
    throw Error(ErrorCode::PreconditionViolated,
                "section has " + std::to_string(s.wall_count()) + " walls, space has " +
                    std::to_string(ws.wall_count()));
  }
}

} // namespace

Section Section::parse(std::string_view encoding) {
  Bits bits(encoding.size());
  for (std::size_t i = 0; i < encoding.size(); ++i) {
    if (encoding[i] == '1') {
      bits.set(i);
    } else if (encoding[i] != '0') {
      throw Error(ErrorCode::ParseError,
                  "section encodings use only '0' and '1', got '" + std::string(encoding) + "'");
    }
  }
  return Section(std::move(bits));
}

std::string Section::encode() const {
  std::string out(bits_.size(), '0');
  for (auto i = bits_.find_first(); i != Bits::npos; i = bits_.find_next(i)) {
    out[i] = '1';
  }
  return out;
}

Section Section::flipped(WallId w) const {
  Bits bits = bits_;
  bits.flip(w);
  return Section(std::move(bits));
}

Section Section::flipped(const Bits &walls) const { return Section(bits_ ^ walls); }

bool operator<(const Section &a, const Section &b) {
  if (a.wall_count() != b.wall_count()) {
    return a.wall_count() < b.wall_count();
  }
  const Bits diff = a.bits_ ^ b.bits_;
  const auto first = diff.find_first();
  return first != Bits::npos && !a.bits_.test(first);
}

bool is_admissible(const WallSpace &ws, const Section &s) {
  check_shape(ws, s);
  const Bits chosen = chosen_half_spaces(s);
  for (WallId w = 0; w < s.wall_count(); ++w) {
    if (ws.disjoint_set(s.selected(w)).intersects(chosen)) {
      return false;
    }
  }
  return true;
}

bool flip_is_admissible(const WallSpace &ws, const Section &s, WallId w) {
  check_shape(ws, s);
  ws.check_wall(w);
  const Bits others = chosen_half_spaces(s, w);
  return !ws.disjoint_set(s.selected(w).complement()).intersects(others);
}

Section principal_section(const WallSpace &ws, Point p) {
  ws.check_point(p);
  Bits bits(ws.wall_count());
  for (WallId w = 0; w < ws.wall_count(); ++w) {
    bits[w] = ws.side_of(w, p);
  }
  return Section(std::move(bits));
}

Section flip(const WallSpace &ws, const Section &s, WallId w) {
  if (!flip_is_admissible(ws, s, w)) {
    throw Error(ErrorCode::InadmissibleFlip,
                "flipping wall " + std::to_string(w) + " of " + s.encode() +
                    " selects disjoint half-spaces");
  }
  return s.flipped(w);
}

std::vector<Section> geodesic_path(const WallSpace &ws, Point p, Point q) {
  std::vector<Section> path{principal_section(ws, p)};
  const Section target = principal_section(ws, q);

  // Walls still to flip; for each, the p-side is the current selection.
  std::vector<WallId> remaining;
  const Bits diff = path.front().difference(target);
  for (auto w = diff.find_first(); w != Bits::npos; w = diff.find_next(w)) {
    remaining.push_back(w);
  }

  while (!remaining.empty()) {
    const Section &current = path.back();
    auto minimal = remaining.end();
    for (auto it = remaining.begin(); it != remaining.end(); ++it) {
      const HalfSpaceId side = current.selected(*it);
      const bool has_smaller = std::any_of(remaining.begin(), remaining.end(), [&](WallId o) {
        if (o == *it) {
          return false;
        }
        const HalfSpaceId other = current.selected(o);
        return ws.nested_in(other, side) && !ws.nested_in(side, other);
      });
      if (!has_smaller) {
        minimal = it;
        break;  // remaining is sorted, so this is the lowest id
      }
    }
    if (minimal == remaining.end()) {
      throw Error(ErrorCode::AdmissibilityAssertionFailed,
                  "no inclusion-minimal separating half-space found");
    }
    Section next = current.flipped(*minimal);
    if (!is_admissible(ws, next)) {
      throw Error(ErrorCode::AdmissibilityAssertionFailed,
                  "geodesic step to " + next.encode() + " is not admissible");
    }
    path.push_back(std::move(next));
    remaining.erase(minimal);
  }
  return path;
}

std::vector<WallEquivalenceClass> wall_equivalence_classes(const WallSpace &ws) {
  std::map<std::string, std::size_t> by_section;
  std::vector<WallEquivalenceClass> classes;
  for (Point p = 0; p < ws.point_count(); ++p) {
    const std::string key = principal_section(ws, p).encode();
    auto [it, inserted] = by_section.emplace(key, classes.size());
    if (inserted) {
      classes.push_back({p, {p}});
    } else {
      classes[it->second].members.push_back(p);
    }
  }
  return classes;
}

} // namespace cubulate
