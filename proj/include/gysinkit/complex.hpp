#pragma once

#include "gysinkit/common.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace gysinkit {

using VertexId = int;

/// A nonempty simplex, stored as a strictly increasing list of vertex ids.
class Simplex {
public:
  Simplex() = default;
  /// Sorts the ids; throws MalformedInput on an empty list or a repeated id.
  explicit Simplex(std::vector<VertexId> vertices);
  Simplex(std::initializer_list<VertexId> vertices)
      : Simplex(std::vector<VertexId>(vertices)) {}

  const std::vector<VertexId>& vertices() const { return vertices_; }
  int dim() const { return static_cast<int>(vertices_.size()) - 1; }
  std::size_t size() const { return vertices_.size(); }
  VertexId operator[](std::size_t i) const { return vertices_[i]; }

  bool contains(VertexId v) const;
  bool is_face_of(const Simplex& other) const;
  /// Common face, or nullopt when the vertex sets are disjoint.
  std::optional<Simplex> intersect(const Simplex& other) const;
  /// All nonempty faces including the simplex itself.
  std::vector<Simplex> faces() const;
  /// Codimension-one faces; the i-th drops vertices()[i].
  std::vector<Simplex> boundary_faces() const;

  std::string to_string() const;

  auto operator<=>(const Simplex&) const = default;

private:
  std::vector<VertexId> vertices_;
};

struct SimplexHash {
  std::size_t operator()(const Simplex& s) const noexcept;
};

/// Vertex colouring nu: vertex id -> colour in {0, ..., n}.
using Colouring = std::map<VertexId, int>;

/// A finite, face-closed simplicial complex. Immutable after construction.
class SimplicialComplex {
public:
  /// Face closure of the given simplices; throws MalformedInput when empty.
  static SimplicialComplex close_under_faces(std::span<const Simplex> maximal);
  static SimplicialComplex close_under_faces(
      std::initializer_list<std::initializer_list<VertexId>> maximal);

  int dim() const { return static_cast<int>(by_dim_.size()) - 1; }
  const std::vector<VertexId>& vertices() const { return vertices_; }
  /// k-simplices in lexicographic order; empty for k out of range.
  const std::vector<Simplex>& simplices(int k) const;
  std::size_t count(int k) const { return simplices(k).size(); }
  std::size_t size() const;
  /// All simplices ordered by dimension, then lexicographically.
  std::vector<Simplex> all_simplices() const;
  std::vector<Simplex> maximal_simplices() const;

  bool contains(const Simplex& s) const { return index_.contains(s); }
  /// Position of s inside simplices(s.dim()); throws if absent.
  std::size_t index_of(const Simplex& s) const;

  /// Connected component label of each vertex (least vertex id of its component).
  std::map<VertexId, VertexId> vertex_components() const;
  std::size_t component_count() const;

  bool operator==(const SimplicialComplex& other) const {
    return by_dim_ == other.by_dim_;
  }

private:
  SimplicialComplex() = default;

  std::vector<VertexId> vertices_;
  std::vector<std::vector<Simplex>> by_dim_;
  std::unordered_map<Simplex, std::size_t, SimplexHash> index_;
};

/// Alternating count of simplices by dimension.
long euler_char(const SimplicialComplex& c);

struct Subdivision {
  SimplicialComplex complex;
  /// Canonical colouring: a vertex is coloured by the dimension of its simplex.
  Colouring colouring;
  /// Vertex id k of the subdivision is the barycentre of vertex_simplex[k].
  std::vector<Simplex> vertex_simplex;
};

/// Barycentric subdivision: vertices are the simplices of c, simplices the
/// strictly increasing chains of faces.
Subdivision barycentric_subdivision(const SimplicialComplex& c);

struct ColouringViolation {
  Simplex simplex;
  std::string reason;
};

/// nullopt when nu is injective on every simplex; otherwise the first
/// offending simplex (in dimension/lexicographic order).
std::optional<ColouringViolation> validate_colouring(const SimplicialComplex& c,
                                                     const Colouring& nu);

/// Extension of nu to simplices: the set of colours, sorted.
std::vector<int> colour_set(const Simplex& s, const Colouring& nu);

/// Point of a simplex in barycentric coordinates. Zero weights are allowed;
/// the strictly positive ones determine the minimal carrier.
struct BarycentricPoint {
  Simplex carrier;
  std::vector<Rational> weights;

  /// Throws MalformedInput unless weights are nonnegative and sum to one.
  BarycentricPoint(Simplex carrier, std::vector<Rational> weights);

  static BarycentricPoint vertex(VertexId v);
  static BarycentricPoint barycentre(const Simplex& s);

  /// Same point restricted to its minimal carrier.
  BarycentricPoint normalized() const;
  /// Equality as points of the geometric realisation.
  bool same_point(const BarycentricPoint& other) const;
  std::string to_string() const;
};

/// |nu|(x): coordinate i is the total weight of carrier vertices of colour i.
/// The result has n + 1 coordinates and lies in the standard simplex.
std::vector<Rational> colour_map_point(const BarycentricPoint& x,
                                       const Colouring& nu, int n);

} // namespace gysinkit
