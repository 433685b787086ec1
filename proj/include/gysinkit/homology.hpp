#pragma once

#include "gysinkit/complex.hpp"
#include "gysinkit/linalg.hpp"

#include <vector>

namespace gysinkit {

/// Simplicial chain complex over Z. boundary[k] is the matrix of
/// d_k : C_k -> C_{k-1} in the lexicographic simplex bases (boundary[0] is 0 x n_0).
struct ChainComplexZ {
  std::vector<std::size_t> ranks;
  std::vector<IntMatrix> boundary;

  int top_degree() const { return static_cast<int>(ranks.size()) - 1; }
  /// d_{k} o d_{k+1} == 0 for every k.
  bool squares_to_zero() const;
};

/// Degree-indexed list of groups.
struct GradedGroup {
  std::vector<FGAbelianGroup> groups;

  /// Zero group for degrees out of range.
  const FGAbelianGroup& operator[](int k) const;
  int top_degree() const { return static_cast<int>(groups.size()) - 1; }
  bool operator==(const GradedGroup&) const = default;
};

/// Boundary of [v_0..v_k] is sum_i (-1)^i [v_0..^v_i..v_k].
ChainComplexZ chain_complex(const SimplicialComplex& c);

/// H_k = ker d_k / im d_{k+1} for an abstract chain complex.
GradedGroup homology(const ChainComplexZ& chains);
GradedGroup homology(const SimplicialComplex& c);

/// Cohomology from the transposed (cochain) complex.
GradedGroup cohomology(const ChainComplexZ& chains);
GradedGroup cohomology(const SimplicialComplex& c);

/// strict: dimension <= 2 only, where the Atiyah-Hirzebruch spectral
/// sequence provably collapses. assume_collapse: also accepts dimension 3,
/// ignoring the d_3 differential.
enum class CollapseMode { strict, assume_collapse };

struct KGroups {
  FGAbelianGroup even; // K^0 or K_0
  FGAbelianGroup odd;  // K^1 or K_1
};

/// K^0 = H^0 + H^2, K^1 = H^1 + H^3.
KGroups k_groups(const SimplicialComplex& c, CollapseMode mode = CollapseMode::strict);
/// K_0 = H_0 + H_2, K_1 = H_1 + H_3.
KGroups k_homology(const SimplicialComplex& c, CollapseMode mode = CollapseMode::strict);

} // namespace gysinkit
