#include <catch_amalgamated.hpp>

#include "gysinkit/builders.hpp"
#include "gysinkit/homology.hpp"

#include <set>

using namespace gysinkit;

namespace {

// Every edge of a closed surface lies in exactly two triangles.
bool is_closed_pseudomanifold(const SimplicialComplex& c) {
  std::map<Simplex, int> cofaces;
  for (const Simplex& t : c.simplices(2))
    for (const Simplex& e : t.boundary_faces()) ++cofaces[e];
  for (const Simplex& e : c.simplices(1))
    if (cofaces[e] != 2) return false;
  return true;
}

// Link of each vertex is a single cycle.
bool links_are_circles(const SimplicialComplex& c) {
  for (const Simplex& v : c.simplices(0)) {
    std::map<VertexId, int> degree;
    std::size_t edges = 0;
    for (const Simplex& t : c.simplices(2)) {
      if (!v.is_face_of(t)) continue;
      ++edges;
      for (VertexId w : t.vertices())
        if (w != v.vertices()[0]) ++degree[w];
    }
    if (degree.size() != edges) return false;
    for (const auto& [w, d] : degree)
      if (d != 2) return false;
  }
  return true;
}

} // namespace

TEST_CASE("wedge of circles") {
  for (int n = 1; n <= 6; ++n) {
    SimplicialComplex w = wedge_of_circles(n);
    CHECK(w.count(0) == static_cast<std::size_t>(2 * n + 1));
    CHECK(w.count(1) == static_cast<std::size_t>(3 * n));
    CHECK(w.dim() == 1);
    CHECK(w.component_count() == 1);
  }
  CHECK_THROWS_AS(wedge_of_circles(0), MalformedInput);
}

TEST_CASE("surfaces are closed combinatorial manifolds") {
  for (int g = 1; g <= 3; ++g) {
    INFO(g);
    SimplicialComplex s = surface(g);
    CHECK(s.count(0) == static_cast<std::size_t>(16 * g + 2));
    CHECK(euler_char(s) == 2 - 2 * g);
    CHECK(is_closed_pseudomanifold(s));
    CHECK(links_are_circles(s));
    CHECK(s.component_count() == 1);
  }
  CHECK(is_closed_pseudomanifold(real_projective_plane()));
  CHECK(links_are_circles(real_projective_plane()));
  CHECK(is_closed_pseudomanifold(sphere()));
  CHECK_THROWS_AS(surface(0), MalformedInput);
}

TEST_CASE("small complexes") {
  CHECK(point().size() == 1);
  CHECK(interval().size() == 3);
  CHECK(filled_triangle().size() == 7);
  CHECK(sphere().size() == 14);
  CHECK(solid_tetrahedron().size() == 15);
}

TEST_CASE("orbit data for free products") {
  OrbitData d = free_product_tree_orbits(2, 5);
  CHECK_NOTHROW(d.validate());
  REQUIRE(d.orbits.size() == 3);
  CHECK(d.orbits[2].dim == 1);
  CHECK(d.stabilisers.at("Z/5").finite == Integer(5));
  CHECK(d.subconjugate.size() == 2);
  CHECK_NOTHROW(psl2z_tree_orbits().validate());
}

TEST_CASE("example actions") {
  for (const auto& [name, ex] : action_corpus()) {
    INFO(name);
    CHECK(validate_action(ex.complex, ex.action).status == ActionStatus::ok);
  }
  ActionExample r = reflection_circle();
  CHECK(r.action.vertex_perms[1].at(1) == 3);
  CHECK(r.action.vertex_perms[1].at(0) == 0);
  ActionExample t = rotating_triangle();
  CHECK(t.complex.count(0) == 6);
  CHECK(t.action.group.order() == 3);
}

TEST_CASE("corpus names are unique") {
  std::set<std::string> names;
  for (const auto& [name, c] : example_corpus()) CHECK(names.insert(name).second);
  for (const auto& [name, a] : action_corpus()) CHECK(names.insert(name).second);
}
