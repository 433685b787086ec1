#pragma once

#include "gysinkit/complex.hpp"
#include "gysinkit/group_action.hpp"

#include <string>
#include <vector>

namespace gysinkit {

/// n hollow triangles {0, 2i-1, 2i} glued at vertex 0. n >= 1.
SimplicialComplex wedge_of_circles(int n);

/// Closed orientable surface of genus g >= 1 from the 4g-gon a1 b1 a1^-1 b1^-1 ...
/// with every side cut in three: 16g + 2 vertices, chi = 2 - 2g.
SimplicialComplex surface(int g);

/// Six-vertex real projective plane.
SimplicialComplex real_projective_plane();

SimplicialComplex point();
SimplicialComplex interval();
SimplicialComplex filled_triangle();
/// Boundary of the tetrahedron, a 2-sphere.
SimplicialComplex sphere();
SimplicialComplex solid_tetrahedron();

/// Orbits of PSL(2,Z) = Z/2 * Z/3 on its Bass-Serre tree.
OrbitData psl2z_tree_orbits();
/// Same for Z/m * Z/n: two vertex orbits and one free edge orbit.
OrbitData free_product_tree_orbits(int m, int n);

struct ActionExample {
  SimplicialComplex complex;
  ExplicitAction action;
};

/// Square circle E=0, N=1, W=2, S=3 with Z/2 fixing E and W.
ActionExample reflection_circle();
/// Z/3 rotating the hollow triangle, subdivided once.
ActionExample rotating_triangle();
/// Z/2 flipping an edge; needs a subdivision before it is admissible.
ActionExample edge_flip();
/// The trivial group acting on c.
ActionExample trivial_action(const SimplicialComplex& c);

struct NamedComplex {
  std::string name;
  SimplicialComplex complex;
};

/// Every complex family used in tests, at small parameters.
std::vector<NamedComplex> example_corpus();

struct NamedAction {
  std::string name;
  ActionExample example;
};

std::vector<NamedAction> action_corpus();

} // namespace gysinkit
