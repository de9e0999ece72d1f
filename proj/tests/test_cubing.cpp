#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "cubulate/cubing.hpp"
#include "cubulate/examples.hpp"

#include "oracle.hpp"
#include "support.hpp"

using namespace cubulate;
using support::error_of;

namespace {

WallSpace nested4() { return examples::gen_nested(3); }
WallSpace cube3() { return examples::gen_crossing(3); }

std::vector<std::string> vertex_encodings(const CubeComplex &x) {
  std::vector<std::string> out;
  for (const auto &s : x.vertices()) {
    out.push_back(s.encode());
  }
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace

TEST_CASE("1-skeleton of the model spaces") {
  const auto cube = CubeComplex::build_component(cube3(), 0);
  CHECK(cube.vertex_count() == 8);
  CHECK(cube.edge_count() == 12);
  CHECK(cube.vertex(cube.base()) == principal_section(cube3(), 0));

  const auto path = CubeComplex::build_component(examples::gen_nested(5), 0);
  CHECK(path.vertex_count() == 6);
  CHECK(path.edge_count() == 5);

  const auto single = CubeComplex::build_component(WallSpace::validate(2, {{1}}), 0);
  CHECK(single.vertex_count() == 2);
  CHECK(single.edge_count() == 1);
}

TEST_CASE("budget") {
  CHECK(error_of([] { CubeComplex::build_component(cube3(), 0, 4); }) ==
        ErrorCode::ComplexityBudgetExceeded);
  CHECK(CubeComplex::build_component(cube3(), 0, 8).vertex_count() == 8);
}

TEST_CASE("neighbours and lookups") {
  const auto x = CubeComplex::build_component(nested4(), 0);
  const auto v = x.index_of(Section::parse("011"));
  const auto nbrs = x.neighbors(v);
  REQUIRE(nbrs.size() == 2);
  CHECK(nbrs[0].first == 0);
  CHECK(nbrs[1].first == 1);
  CHECK(x.neighbor(v, 2) == std::nullopt);
  CHECK(x.find(Section::parse("101")) == std::nullopt);
  CHECK(error_of([&] { x.index_of(Section::parse("101")); }) == ErrorCode::NotInComponent);
}

TEST_CASE("corners") {
  const auto ws = cube3();
  const auto x = CubeComplex::build_component(ws, 0);
  const auto three = find_corners(ws, x, 3);
  CHECK(three.size() == 8);
  for (const auto &c : three) {
    CHECK(c.walls == std::vector<WallId>{0, 1, 2});
  }
  CHECK(find_corners(ws, x, 2).size() == 24);
  CHECK(find_corners(ws, x, 4).empty());

  const auto n = nested4();
  CHECK(find_corners(n, CubeComplex::build_component(n, 0), 2).empty());
  CHECK(error_of([&] { find_corners(ws, x, 1); }) == ErrorCode::PreconditionViolated);
}

TEST_CASE("attach cubes") {
  const auto ws = cube3();
  const auto x = cubulate::cubulate(ws, 0);
  CHECK(x.f_vector() == std::vector<std::size_t>{8, 12, 6, 1});
  CHECK(x.dimension() == 3);
  CHECK(x.cubes(3).size() == 1);
  CHECK(check_dimension_equals_intersection_number(ws, x).equal());

  const auto n = nested4();
  const auto path = cubulate::cubulate(n, 0);
  CHECK(path.dimension() == 1);
  CHECK(path.cube_count() == 0);
  CHECK(check_dimension_equals_intersection_number(n, path).equal());

  const auto point_space = WallSpace::validate(2, {{1}});
  CHECK(cubulate::cubulate(point_space, 0).dimension() == 1);

  const auto lattice = examples::gen_triangle_lattice(2);
  CHECK(!cubulate::cubulate(lattice.space, 0).cubes(3).empty());
}

TEST_CASE("vertex links") {
  const auto x = cubulate::cubulate(cube3(), 0);
  for (VertexIndex v = 0; v < x.vertex_count(); ++v) {
    const auto link = vertex_link(x, v);
    CHECK(link.link_vertices.size() == 3);
    CHECK(link.link_edges.size() == 3);
    CHECK(link.simplices.size() == 4);  // three edges and the triangle
  }
  const auto path = cubulate::cubulate(nested4(), 0);
  const auto interior = vertex_link(path, path.index_of(Section::parse("011")));
  CHECK(interior.link_vertices.size() == 2);
  CHECK(interior.link_edges.empty());
  CHECK(check_flag(x).flag());
  CHECK(check_flag(path).flag());
}

TEST_CASE("flag check catches a missing cube") {
  auto x = cubulate::cubulate(cube3(), 0);
  const Cube top = x.cubes(3).front();
  CHECK(x.remove_cube(top));
  CHECK_FALSE(x.remove_cube(top));
  const auto report = check_flag(x);
  REQUIRE_FALSE(report.flag());
  CHECK(report.violation->clique == std::vector<WallId>{0, 1, 2});
  CHECK(x.add_cube(top));
  CHECK_FALSE(x.add_cube(top));
  CHECK(check_flag(x).flag());
}

TEST_CASE("add_cube validates its vertices") {
  auto x = cubulate::cubulate(nested4(), 0);
  CHECK(error_of([&] { x.add_cube(Cube{0, {0, 1}}); }).has_value());
}

TEST_CASE("distances") {
  const auto ws = cube3();
  const auto x = cubulate::cubulate(ws, 0);
  CHECK(graph_distance(x, principal_section(ws, 0), principal_section(ws, 0)) == 0);
  CHECK(graph_distance(x, principal_section(ws, 0), principal_section(ws, 7)) == 3);
  CHECK(check_metric_correspondence(ws, x).ok());
  CHECK(check_metric_correspondence(ws, x).pairs_checked > 0);
  const auto n = nested4();
  CHECK(error_of([&] {
          graph_distance(cubulate::cubulate(n, 0), Section::parse("101"), Section::parse("000"));
        }) == ErrorCode::NotInComponent);
}

TEST_CASE("json round trip and dot export") {
  const auto x = cubulate::cubulate(examples::gen_triangle_lattice(1).space, 0);
  const auto doc = x.to_json();
  const auto back = CubeComplex::from_json(nlohmann::json::parse(doc.dump()));
  CHECK(back.to_json() == doc);
  CHECK(back.f_vector() == x.f_vector());
  CHECK(check_flag(back).flag());

  auto broken = nlohmann::json::parse(doc.dump());
  broken["edges"][0][2] = 5;
  CHECK(error_of([&] { CubeComplex::from_json(broken); }) == ErrorCode::MalformedComplex);

  const auto sq = cubulate::cubulate(examples::gen_crossing(2), 0);
  const auto dot = sq.to_dot();
  CHECK(dot.rfind("graph cubing", 0) == 0);
  CHECK(std::count(dot.begin(), dot.end(), '\n') > 8);
  CHECK(dot.find("peripheries=2") != std::string::npos);
}

TEST_CASE("property: component equals all admissible sections") {
  for (const auto &ws : oracle::random_spaces(80, 31, 8, 9)) {
    const auto raw = oracle::RawSpace::of(ws);
    const auto all = oracle::admissible_sections(raw);
    for (Point p = 0; p < ws.point_count(); ++p) {
      const auto x = CubeComplex::build_component(ws, p);
      CHECK(vertex_encodings(x) == all);
      CHECK(x.edge_count() == oracle::SectionGraph(all).edge_count());
    }
  }
}

TEST_CASE("property: cube counts, faces, corners and Hamming consistency") {
  for (const auto &ws : oracle::random_spaces(80, 32, 8, 8)) {
    const auto raw = oracle::RawSpace::of(ws);
    const auto x = cubulate::cubulate(ws, 0);
    CHECK(x.f_vector() == oracle::cube_counts(raw));
    CHECK(check_flag(x).flag());
    CHECK(check_metric_correspondence(ws, x).ok());
    CHECK(x.dimension() <= ws.intersection_number());
    CHECK(check_dimension_equals_intersection_number(ws, x).equal());

    for (const auto &e : x.edges()) {
      const auto diff = x.vertex(e.u).difference(x.vertex(e.v));
      CHECK(diff.count() == 1);
      CHECK(diff.test(e.wall));
    }
    const auto d0 = distances_from(x, 0);
    for (VertexIndex v = 0; v < x.vertex_count(); ++v) {
      CHECK(d0[v] == x.vertex(0).hamming(x.vertex(v)));
    }

    for (std::size_t k = 2; k <= x.dimension(); ++k) {
      for (const auto &cube : x.cubes(k)) {
        const auto verts = x.cube_vertices(cube);
        CHECK(std::set<VertexIndex>(verts.begin(), verts.end()).size() == (std::size_t{1} << k));
        // Every codimension-one face is a registered cube or an edge.
        for (std::size_t drop = 0; drop < k; ++drop) {
          std::vector<WallId> face = cube.walls;
          face.erase(face.begin() + static_cast<std::ptrdiff_t>(drop));
          if (face.size() >= 2) {
            CHECK(x.has_cube(verts.front(), face));
            CHECK(x.has_cube(verts.back(), face));
          } else {
            CHECK(x.neighbor(verts.front(), face[0]).has_value());
          }
        }
      }
    }

    // A (k+1)-corner restricted to any k of its walls is a k-corner.
    for (std::size_t k = 3; k <= x.dimension(); ++k) {
      const auto big = find_corners(ws, x, k);
      const auto small = find_corners(ws, x, k - 1);
      const std::set<Corner> known(small.begin(), small.end());
      for (const auto &c : big) {
        for (std::size_t drop = 0; drop < k; ++drop) {
          Corner face = c;
          face.walls.erase(face.walls.begin() + static_cast<std::ptrdiff_t>(drop));
          CHECK(known.contains(face));
        }
      }
    }
  }
}
