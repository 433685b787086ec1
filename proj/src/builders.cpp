#include "gysinkit/builders.hpp"

namespace gysinkit {

namespace {

SimplicialComplex from(const std::vector<Simplex>& top) { return SimplicialComplex::close_under_faces(top); }

} // namespace

SimplicialComplex wedge_of_circles(int n) {
  if (n < 1) throw MalformedInput("wedge_of_circles needs n >= 1");
  std::vector<Simplex> edges;
  for (int i = 1; i <= n; ++i) {
    edges.push_back({0, 2 * i - 1});
    edges.push_back({2 * i - 1, 2 * i});
    edges.push_back({0, 2 * i});
  }
  return from(edges);
}

SimplicialComplex surface(int g) {
  if (g < 1) throw MalformedInput("surface needs genus g >= 1");
  const int sides = 4 * g, ring = 12 * g;
  const VertexId corner = 0, centre = 16 * g + 1;
  auto inner = [&](int k) { return 4 * g + 1 + (k % ring); };

  // Boundary position -> vertex. Side 4j+s carries a_j (s = 0, 2) or b_j (s = 1, 3),
  // inverted for s = 2, 3; label points are 1 + 2*label and 2 + 2*label.
  std::vector<VertexId> boundary(static_cast<std::size_t>(ring));
  for (int k = 0; k < sides; ++k) {
    const int block = k / 4, s = k % 4;
    const int label = 2 * block + (s % 2);
    const VertexId p1 = 1 + 2 * label, p2 = 2 + 2 * label;
    const bool inverse = s >= 2;
    boundary[static_cast<std::size_t>(3 * k)] = corner;
    boundary[static_cast<std::size_t>(3 * k + 1)] = inverse ? p2 : p1;
    boundary[static_cast<std::size_t>(3 * k + 2)] = inverse ? p1 : p2;
  }

  std::vector<Simplex> triangles;
  for (int k = 0; k < ring; ++k) {
    const VertexId b0 = boundary[static_cast<std::size_t>(k)];
    const VertexId b1 = boundary[static_cast<std::size_t>((k + 1) % ring)];
    triangles.push_back({b0, b1, inner(k)});
    triangles.push_back({b1, inner(k + 1), inner(k)});
    triangles.push_back({centre, inner(k), inner(k + 1)});
  }
  return from(triangles);
}

SimplicialComplex real_projective_plane() {
  return SimplicialComplex::close_under_faces({{1, 2, 4}, {1, 2, 6}, {1, 3, 5}, {1, 3, 6}, {1, 4, 5},
                                               {2, 3, 4}, {2, 3, 5}, {2, 5, 6}, {3, 4, 6}, {4, 5, 6}});
}

SimplicialComplex point() { return SimplicialComplex::close_under_faces({{0}}); }
SimplicialComplex interval() { return SimplicialComplex::close_under_faces({{0, 1}}); }
SimplicialComplex filled_triangle() { return SimplicialComplex::close_under_faces({{0, 1, 2}}); }

SimplicialComplex sphere() {
  return SimplicialComplex::close_under_faces({{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
}

SimplicialComplex solid_tetrahedron() { return SimplicialComplex::close_under_faces({{0, 1, 2, 3}}); }

OrbitData free_product_tree_orbits(int m, int n) {
  if (m < 2 || n < 2) throw MalformedInput("free product orbits need m, n >= 2");
  const std::string a = "Z/" + std::to_string(m), b = "Z/" + std::to_string(n);
  OrbitData d;
  d.orbits = {{0, a}, {0, b}, {1, "1"}};
  d.stabilisers = {{a, StabiliserOrder::of(m)}, {b, StabiliserOrder::of(n)}, {"1", StabiliserOrder::of(1)}};
  d.subconjugate = {{"1", a}, {"1", b}};
  return d;
}

OrbitData psl2z_tree_orbits() { return free_product_tree_orbits(2, 3); }

namespace {

std::map<VertexId, VertexId> identity_on(const SimplicialComplex& c) {
  std::map<VertexId, VertexId> id;
  for (VertexId v : c.vertices()) id[v] = v;
  return id;
}

} // namespace

ActionExample reflection_circle() {
  SimplicialComplex c = SimplicialComplex::close_under_faces({{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  ExplicitAction a{FiniteGroup::cyclic(2), {identity_on(c), {{0, 0}, {1, 3}, {2, 2}, {3, 1}}}};
  return {std::move(c), std::move(a)};
}

ActionExample rotating_triangle() {
  SimplicialComplex c = SimplicialComplex::close_under_faces({{0, 1}, {1, 2}, {0, 2}});
  ExplicitAction a{FiniteGroup::cyclic(3),
                   {identity_on(c), {{0, 1}, {1, 2}, {2, 0}}, {{0, 2}, {1, 0}, {2, 1}}}};
  Subdivision sub = barycentric_subdivision(c);
  ExplicitAction lifted = subdivide_action(sub, a);
  return {std::move(sub.complex), std::move(lifted)};
}

ActionExample edge_flip() {
  SimplicialComplex c = interval();
  ExplicitAction a{FiniteGroup::cyclic(2), {identity_on(c), {{0, 1}, {1, 0}}}};
  return {std::move(c), std::move(a)};
}

ActionExample trivial_action(const SimplicialComplex& c) {
  return {c, ExplicitAction{FiniteGroup::trivial(), {identity_on(c)}}};
}

std::vector<NamedComplex> example_corpus() {
  return {
      {"point", point()},
      {"interval", interval()},
      {"circle", wedge_of_circles(1)},
      {"disk", filled_triangle()},
      {"sphere", sphere()},
      {"solid tetrahedron", solid_tetrahedron()},
      {"wedge(2)", wedge_of_circles(2)},
      {"wedge(3)", wedge_of_circles(3)},
      {"torus", surface(1)},
      {"surface(2)", surface(2)},
      {"real projective plane", real_projective_plane()},
  };
}

std::vector<NamedAction> action_corpus() {
  return {
      {"reflection circle", reflection_circle()},
      {"rotating triangle", rotating_triangle()},
      {"trivial on torus", trivial_action(surface(1))},
      {"trivial on wedge(2)", trivial_action(wedge_of_circles(2))},
  };
}

} // namespace gysinkit
