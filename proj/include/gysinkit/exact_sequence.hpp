#pragma once

#include "gysinkit/linalg.hpp"

#include <string>
#include <vector>

namespace gysinkit {

/// Z^generators modulo the column span of `relations` (generators x m).
struct PresentedGroup {
  std::size_t generators = 0;
  IntMatrix relations;

  static PresentedGroup zero() { return PresentedGroup{0, IntMatrix(0, 0)}; }
  static PresentedGroup free(std::size_t n) { return PresentedGroup{n, IntMatrix(n, 0)}; }
  /// Presentation with one generator per summand of g (free part first).
  static PresentedGroup of(const FGAbelianGroup& g);

  FGAbelianGroup group() const;
  /// Whether v represents zero.
  bool is_zero(const std::vector<Integer>& v) const;
};

/// Direct sum of presentations (block diagonal relations).
PresentedGroup direct_sum(const PresentedGroup& a, const PresentedGroup& b);

struct ExactnessCheck {
  std::string node;
  bool exact = false;
  std::string detail;
};

struct ExactnessReport {
  std::vector<ExactnessCheck> checks;
  /// Alternating sum of the ranks of all nodes.
  long alternating_rank_sum = 0;

  bool exact() const;
};

/// A sequence of presented groups and homomorphisms maps[i] : nodes[i] -> nodes[i+1]
/// (matrices of shape nodes[i+1].generators x nodes[i].generators). When cyclic,
/// maps.back() closes the loop nodes.back() -> nodes.front().
struct ExactSequence {
  std::vector<std::string> names;
  std::vector<PresentedGroup> nodes;
  std::vector<IntMatrix> maps;
  bool cyclic = false;

  /// Checks that every map is well defined, consecutive composites vanish and
  /// kernel equals image at every node. For non-cyclic sequences the end
  /// nodes only need the composite condition if they are not zero groups;
  /// zero end nodes make the sequence short exact at its neighbours.
  ExactnessReport verify() const;
};

/// Generators of {x : g x represents zero in target}, as columns.
IntMatrix preimage_of_zero(const IntMatrix& g, const PresentedGroup& target);

} // namespace gysinkit
