#include "gysinkit/homology.hpp"

namespace gysinkit {

bool ChainComplexZ::squares_to_zero() const {
  for (std::size_t k = 1; k + 1 < boundary.size(); ++k)
    if (!(boundary[k] * boundary[k + 1]).is_zero()) return false;
  return true;
}

const FGAbelianGroup& GradedGroup::operator[](int k) const {
  static const FGAbelianGroup zero;
  if (k < 0 || k > top_degree()) return zero;
  return groups[static_cast<std::size_t>(k)];
}

ChainComplexZ chain_complex(const SimplicialComplex& c) {
  ChainComplexZ chains;
  for (int k = 0; k <= c.dim(); ++k) chains.ranks.push_back(c.count(k));
  chains.boundary.emplace_back(0, chains.ranks[0]);
  for (int k = 1; k <= c.dim(); ++k) {
    IntMatrix d(c.count(k - 1), c.count(k));
    const auto& cells = c.simplices(k);
    for (std::size_t j = 0; j < cells.size(); ++j) {
      auto faces = cells[j].boundary_faces();
      for (std::size_t i = 0; i < faces.size(); ++i) d(c.index_of(faces[i]), j) = (i % 2 == 0) ? 1 : -1;
    }
    chains.boundary.push_back(std::move(d));
  }
  return chains;
}

namespace {

// Invariant factors of each boundary matrix, computed once.
std::vector<std::vector<Integer>> factors_of(const std::vector<IntMatrix>& maps) {
  std::vector<std::vector<Integer>> out;
  for (const IntMatrix& m : maps) out.push_back(invariant_factors(m));
  return out;
}

// For maps[k] : C_k -> C_{k-1} (maps[0] ignored), H_k = ker maps[k] / im maps[k+1].
GradedGroup homology_of(const std::vector<std::size_t>& ranks, const std::vector<IntMatrix>& maps) {
  auto factors = factors_of(maps);
  GradedGroup h;
  for (std::size_t k = 0; k < ranks.size(); ++k) {
    std::size_t rank_out = k == 0 ? 0 : factors[k].size();
    std::vector<Integer> torsion;
    std::size_t rank_in = 0;
    if (k + 1 < ranks.size()) {
      rank_in = factors[k + 1].size();
      for (const Integer& d : factors[k + 1])
        if (d > 1) torsion.push_back(d);
    }
    h.groups.emplace_back(ranks[k] - rank_out - rank_in, std::move(torsion));
  }
  return h;
}

} // namespace

GradedGroup homology(const ChainComplexZ& chains) { return homology_of(chains.ranks, chains.boundary); }

GradedGroup homology(const SimplicialComplex& c) { return homology(chain_complex(c)); }

GradedGroup cohomology(const ChainComplexZ& chains) {
  // Degree j of the reindexed complex is cochain degree top - j, so the
  // coboundaries become ordinary degree-lowering maps.
  const std::size_t n = chains.ranks.size();
  std::vector<std::size_t> ranks(n);
  std::vector<IntMatrix> maps(n);
  for (std::size_t j = 0; j < n; ++j) ranks[j] = chains.ranks[n - 1 - j];
  maps[0] = IntMatrix(0, ranks[0]);
  for (std::size_t j = 1; j < n; ++j) maps[j] = chains.boundary[n - j].transpose();
  GradedGroup reversed = homology_of(ranks, maps);
  GradedGroup h;
  for (std::size_t k = 0; k < n; ++k) h.groups.push_back(reversed.groups[n - 1 - k]);
  return h;
}

GradedGroup cohomology(const SimplicialComplex& c) { return cohomology(chain_complex(c)); }

namespace {

void check_dimension(const SimplicialComplex& c, CollapseMode mode) {
  if (c.dim() >= 4)
    throw Unsupported("K-groups are only computed for complexes of dimension <= 3");
  if (c.dim() == 3 && mode == CollapseMode::strict)
    throw Unsupported("dimension 3 requires the assume-collapse mode (d_3 is not computed)");
}

KGroups fold(const GradedGroup& h) {
  return KGroups{h[0].direct_sum(h[2]), h[1].direct_sum(h[3])};
}

} // namespace

KGroups k_groups(const SimplicialComplex& c, CollapseMode mode) {
  check_dimension(c, mode);
  return fold(cohomology(c));
}

KGroups k_homology(const SimplicialComplex& c, CollapseMode mode) {
  check_dimension(c, mode);
  return fold(homology(c));
}

} // namespace gysinkit
