#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "cubulate/cubing.hpp"
#include "cubulate/examples.hpp"

#include "oracle.hpp"
#include "support.hpp"

using namespace cubulate;
using support::error_of;

TEST_CASE("crossing family") {
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto ws = examples::gen_crossing(n);
    CHECK(ws.point_count() == (std::size_t{1} << n));
    CHECK(ws.wall_count() == n);
    CHECK(ws.members(HalfSpaceId::of(0, false)).size() == (std::size_t{1} << (n - 1)));
  }
  CHECK(error_of([] { examples::gen_crossing(0); }) == ErrorCode::SizeOutOfRange);
  CHECK(error_of([] { examples::gen_crossing(16); }) == ErrorCode::SizeOutOfRange);
}

TEST_CASE("nested family") {
  const auto ws = examples::gen_nested(3);
  CHECK(ws.point_count() == 4);
  CHECK(ws.members(HalfSpaceId::of(0, false)) == std::vector<Point>{1, 2, 3});
  CHECK(ws.members(HalfSpaceId::of(2, false)) == std::vector<Point>{3});
  CHECK(error_of([] { examples::gen_nested(0); }) == ErrorCode::SizeOutOfRange);
}

TEST_CASE("tree family") {
  // Binary depth 2: four leaves, the root's two children give one wall.
  const auto bin = examples::gen_tree(2, 2);
  CHECK(bin.point_count() == 4);
  CHECK(bin.wall_count() == 5);
  CHECK(bin.intersection_number() == 1);
  const auto ternary = examples::gen_tree(3, 2);
  CHECK(ternary.point_count() == 9);
  CHECK(ternary.wall_count() == 12);
  for (const auto &ws : {bin, ternary, examples::gen_tree(2, 3), examples::gen_tree(4, 1)}) {
    const auto raw = oracle::RawSpace::of(ws);
    const auto x = cubulate::cubulate(ws, 0);
    const auto all = oracle::admissible_sections(raw);
    CHECK(x.vertex_count() == all.size());
    CHECK(x.edge_count() == oracle::SectionGraph(all).edge_count());
    CHECK(x.cube_count() == 0);
    // A tree complex has one fewer edge than vertices.
    CHECK(x.edge_count() + 1 == x.vertex_count());
  }
  CHECK(error_of([] { examples::gen_tree(1, 2); }) == ErrorCode::SizeOutOfRange);
}

TEST_CASE("triangle lattice geometry") {
  for (std::size_t r = 1; r <= 4; ++r) {
    const auto lattice = examples::gen_triangle_lattice(r);
    CHECK(lattice.cells.front() == std::array<int, 3>{0, 0, 0});
    CHECK(lattice.cells.size() == lattice.space.point_count());
    CHECK(lattice.lines.size() == lattice.space.wall_count());
    CHECK(lattice.space.wall_count() == 6 * r);
    std::set<std::array<int, 3>> distinct(lattice.cells.begin(), lattice.cells.end());
    CHECK(distinct.size() == lattice.cells.size());
    for (const auto &[a, b, c] : lattice.cells) {
      CHECK((c - a - b == 0 || c - a - b == 1));
    }
    for (Point p = 0; p < lattice.space.point_count(); ++p) {
      const auto label = examples::lattice_label(lattice, principal_section(lattice.space, p));
      const auto &cell = lattice.cells[p];
      CHECK(label == std::array<long, 3>{cell[0], cell[1], cell[2]});
    }
  }
  CHECK(examples::gen_triangle_lattice(1).space.point_count() == 13);
  CHECK(error_of([] { examples::gen_triangle_lattice(0); }) == ErrorCode::SizeOutOfRange);
  CHECK(error_of([] { examples::gen_triangle_lattice(7); }) == ErrorCode::SizeOutOfRange);
}

TEST_CASE("triangle lattice labels embed the cubing in Z^3") {
  const auto lattice = examples::gen_triangle_lattice(2);
  const auto x = cubulate::cubulate(lattice.space, 0);
  std::set<std::array<long, 3>> labels;
  for (const auto &s : x.vertices()) {
    labels.insert(examples::lattice_label(lattice, s));
  }
  CHECK(labels.size() == x.vertex_count());
  for (const auto &e : x.edges()) {
    const auto a = examples::lattice_label(lattice, x.vertex(e.u));
    const auto b = examples::lattice_label(lattice, x.vertex(e.v));
    long moved = 0;
    for (int i = 0; i < 3; ++i) {
      moved += std::labs(a[i] - b[i]);
    }
    CHECK(moved == 1);
  }
}

TEST_CASE("generate dispatch") {
  const long three[] = {3};
  const long tree[] = {2, 3};
  CHECK(examples::generate("crossing", three).wall_count() == 3);
  CHECK(examples::generate("nested", three).point_count() == 4);
  CHECK(examples::generate("tree", tree).point_count() == 8);
  CHECK(examples::generate("triangle-lattice", three).wall_count() == 18);
  CHECK(error_of([&] { examples::generate("hyperbolic", three); }) ==
        ErrorCode::PreconditionViolated);
  CHECK(error_of([&] { examples::generate("tree", three); }) == ErrorCode::PreconditionViolated);
  const long negative[] = {-2};
  CHECK(error_of([&] { examples::generate("nested", negative); }) == ErrorCode::SizeOutOfRange);
}
