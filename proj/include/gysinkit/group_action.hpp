#pragma once

#include "gysinkit/complex.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace gysinkit {

using GroupElement = int;
/// Subgroup as a sorted list of element ids.
using Subgroup = std::vector<GroupElement>;

/// Finite group given by its multiplication table: table[g][h] = g * h.
class FiniteGroup {
public:
  /// Checks closure, associativity, identity and inverses; throws MalformedInput.
  explicit FiniteGroup(std::vector<std::vector<GroupElement>> table);

  static FiniteGroup trivial() { return cyclic(1); }
  static FiniteGroup cyclic(int n);
  /// Symmetric group on k letters, elements in lexicographic permutation order.
  static FiniteGroup symmetric(int k);

  int order() const { return static_cast<int>(table_.size()); }
  GroupElement identity() const { return identity_; }
  GroupElement multiply(GroupElement g, GroupElement h) const { return table_[g][h]; }
  GroupElement inverse(GroupElement g) const { return inverse_[static_cast<std::size_t>(g)]; }
  const std::vector<std::vector<GroupElement>>& table() const { return table_; }

  Subgroup whole() const;
  bool is_subgroup(const Subgroup& h) const;
  /// Smallest subgroup containing the given elements.
  Subgroup closure(std::vector<GroupElement> elements) const;
  Subgroup conjugate(const Subgroup& h, GroupElement g) const;
  Subgroup normaliser(const Subgroup& h) const;
  /// Lexicographically least conjugate; identifies conjugacy classes.
  Subgroup conjugacy_representative(const Subgroup& h) const;
  /// Every subgroup, sorted.
  std::vector<Subgroup> all_subgroups() const;

private:
  std::vector<std::vector<GroupElement>> table_;
  std::vector<GroupElement> inverse_;
  GroupElement identity_ = 0;
};

/// A finite group acting on a complex by vertex permutations.
struct ExplicitAction {
  FiniteGroup group;
  /// vertex_perms[g][v] is the image of vertex v under g.
  std::vector<std::map<VertexId, VertexId>> vertex_perms;

  VertexId apply(GroupElement g, VertexId v) const;
  Simplex apply(GroupElement g, const Simplex& s) const;
};

enum class ActionStatus { ok, needs_subdivision, invalid };

struct ActionValidation {
  ActionStatus status;
  std::string detail;
};

/// ok iff the permutations are simplicial automorphisms forming a
/// homomorphism and every simplex stabiliser fixes that simplex pointwise;
/// needs_subdivision iff only the last condition fails.
ActionValidation validate_action(const SimplicialComplex& c, const ExplicitAction& a);

/// The induced action on the barycentric subdivision.
ExplicitAction subdivide_action(const Subdivision& sub, const ExplicitAction& a);

struct PreparedAction {
  SimplicialComplex complex;
  ExplicitAction action;
  int subdivisions = 0;
};

/// Returns (c, a) unchanged when valid, otherwise subdivides at most twice.
/// Throws MalformedInput when the action is invalid or still fails.
PreparedAction prepare_action(const SimplicialComplex& c, const ExplicitAction& a);

struct OrbitInfo {
  /// Lexicographically least simplex of the orbit.
  Simplex representative;
  std::size_t orbit_size = 0;
  Subgroup stabiliser;
};

/// One entry per orbit, ordered by representative (dimension, then lexicographic).
std::vector<OrbitInfo> orbits_and_stabilisers(const SimplicialComplex& c, const ExplicitAction& a);

/// Alternating count of orbits: the Euler characteristic of the orbit space.
long quotient_euler_char(const SimplicialComplex& c, const ExplicitAction& a);

/// Simplices fixed pointwise by H, with components of N(H)\X^H.
struct FixedSubcomplex {
  std::vector<Simplex> simplices;
  /// Fixed vertex -> label of its component after merging by the normaliser.
  /// A label is the least vertex id in the merged component.
  std::map<VertexId, VertexId> component_of;

  bool empty() const { return simplices.empty(); }
  std::vector<VertexId> component_labels() const;
};

FixedSubcomplex fixed_subcomplex(const SimplicialComplex& c, const ExplicitAction& a,
                                 const Subgroup& h);

/// Stabiliser order in orbit data: finite, or a symbolic infinite order.
struct StabiliserOrder {
  std::optional<Integer> finite;
  std::string symbol;

  static StabiliserOrder of(long n) { return {Integer(n), {}}; }
  static StabiliserOrder infinite(std::string symbol = "inf") { return {std::nullopt, std::move(symbol)}; }
  bool is_finite() const { return finite.has_value(); }
};

struct OrbitRecord {
  int dim = 0;
  std::string stabiliser;
};

/// Abstract orbit presentation G\SX with stabiliser labels.
struct OrbitData {
  std::vector<OrbitRecord> orbits;
  std::map<std::string, StabiliserOrder> stabilisers;
  /// Optional partial order among labels, as (smaller, larger) pairs.
  std::vector<std::pair<std::string, std::string>> subconjugate;

  /// Throws MalformedInput when an orbit references an unknown label or a dimension is negative.
  void validate() const;
};

/// Orbit data of an explicit action; labels are conjugacy-class labels.
OrbitData to_orbit_data(const SimplicialComplex& c, const ExplicitAction& a);

/// "1" for the trivial subgroup, otherwise "H<order>{e1,e2,...}" of the class representative.
std::string subgroup_label(const FiniteGroup& g, const Subgroup& h);

struct EulerTerm {
  std::string stabiliser_class;
  /// Component of N(H)\X^H; empty when there is only one.
  std::string component;
  long multiplicity = 0;

  bool operator==(const EulerTerm&) const = default;
};

/// Formal sum of chi(X,H,A) * dim_{H,A}; zero multiplicities omitted.
struct EulerDecomposition {
  std::vector<EulerTerm> terms;

  long total() const;
  std::string to_string() const;
};

/// Explicit mode. Requires validate_action == ok.
EulerDecomposition equivariant_euler_decomposition(const SimplicialComplex& c,
                                                   const ExplicitAction& a);
/// Orbit mode, one component per label.
EulerDecomposition equivariant_euler_decomposition(const OrbitData& data);

struct TauTerm {
  std::string stabiliser;
  Integer order;
  int sign = 1;
  long multiplicity = 0;
};

/// Formal element sum over orbits of (-1)^dim [tau(G_sigma)], grouped by label.
struct FormalTau {
  std::vector<TauTerm> terms;

  /// Sum of sign * multiplicity / order: the trace of the element.
  Rational trace() const;
  std::string to_string() const;
};

/// Throws MalformedInput when a contributing stabiliser has infinite order.
FormalTau euler_poincare_element(const OrbitData& data);
FormalTau euler_poincare_element(const SimplicialComplex& c, const ExplicitAction& a);

/// tau = |H|^-1 sum_{h in H} h in Q[G]; returns whether tau * tau == tau.
bool tau_idempotent_check(const FiniteGroup& g, const Subgroup& h);

} // namespace gysinkit
