#pragma once

#include "gysinkit/complex.hpp"
#include "gysinkit/exact_sequence.hpp"
#include "gysinkit/group_action.hpp"
#include "gysinkit/homology.hpp"
#include "gysinkit/linalg.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace gysinkit {

/// 0 -> sub -> ? -> quot -> 0 with a quotient that has torsion, so the
/// middle group is not determined.
struct UnresolvedExtension {
  FGAbelianGroup sub;
  FGAbelianGroup quot;
};

/// A K-group that is either known or only known up to an extension.
class KGroupValue {
public:
  KGroupValue(FGAbelianGroup g) : value_(std::move(g)) {}
  KGroupValue(UnresolvedExtension e) : value_(std::move(e)) {}

  bool resolved() const { return std::holds_alternative<FGAbelianGroup>(value_); }
  const FGAbelianGroup& group() const { return std::get<FGAbelianGroup>(value_); }
  const UnresolvedExtension& extension() const { return std::get<UnresolvedExtension>(value_); }
  std::string to_string() const;

private:
  std::variant<FGAbelianGroup, UnresolvedExtension> value_;
};

/// Order of [1] in K_0 of the boundary crossed product; nullopt means infinite.
struct UnitTorsion {
  std::optional<Integer> order;

  bool infinite() const { return !order.has_value(); }
  std::string to_string() const { return order ? order->get_str() : "infinite"; }
  bool operator==(const UnitTorsion&) const = default;
};

/// |chi| when the quotient is compact and chi != 0, infinite otherwise.
UnitTorsion unit_torsion_order(long chi, bool compact);

enum class GysinCase { compact_nonzero_chi, split_case };
std::string to_string(GysinCase c);

struct SplitCaseDecision {
  GysinCase case_tag;
  /// The fixed-boundary-point flag displaced the compact nonzero-chi branch.
  bool overridden = false;
  std::string note;
};

/// Chooses the sequence pair. A G-fixed point in the boundary forces the split case.
SplitCaseDecision split_case_report(bool has_fixed_boundary_point, long chi, bool compact);

struct GysinOptions {
  bool compact = true;
  bool fixed_boundary_point = false;
};

struct GysinResult {
  KGroupValue k0 = FGAbelianGroup();
  KGroupValue k1 = FGAbelianGroup();
  UnitTorsion unit_torsion;
  SplitCaseDecision decision;
  long chi = 0;
  bool compact = true;
  /// K^*(G\X) and K_*(Cred G) = K_*(G\X) used as inputs.
  KGroups k_theory;
  KGroups k_homology;
  /// The two sequences as presented groups and explicit maps.
  std::vector<ExactSequence> sequences;
  std::vector<std::string> proof_sketch;
};

/// K-theory of C(dX) x| G for torsion-free G with quotient G\X, from the two
/// exact sequences of the boundary Gysin sequence. The quotient must be
/// connected and of dimension <= 2.
GysinResult gysin_torsion_free(const SimplicialComplex& quotient, GysinOptions options = {});

/// Re-verifies every sequence of the result: image = kernel at each node.
std::vector<ExactnessReport> verify_certificate(const GysinResult& result);

/// Rank bookkeeping check against the input K-groups.
bool ranks_balance(const GysinResult& result);

struct FreeProductReport {
  int m = 0;
  int n = 0;
  OrbitData orbits;
  EulerDecomposition euler;
  FormalTau tau;

  FGAbelianGroup ktop0;
  FGAbelianGroup ktop1;
  FGAbelianGroup k0_proper;
  FGAbelianGroup k1_proper;
  /// Columns: basis of K_0(C_0(X) x| G) inside Rep(Z/m) + Rep(Z/n) = Z^{m+n}.
  IntMatrix proper_basis;
  /// Euler map K_0(C_0(X) x| G) -> K^top_0(G) in the committed bases.
  IntMatrix eul_matrix;
  Integer eul_determinant;
  FGAbelianGroup boundary_k0;
  FGAbelianGroup boundary_k1;

  ExactSequence ideal_sequence;
  ExactSequence assembly_sequence;
  ExactSequence six_term;
  /// False only for (2, 3) and (3, 2), where the answer is known independently of the Euler-map model.
  bool model_dependent = true;
  std::vector<std::string> derivation;
};

/// Boundary K-theory of the tree of Z/m * Z/n; throws MalformedInput if m or n < 2.
FreeProductReport free_product_two_cyclic(int m, int n);

std::vector<ExactnessReport> verify_certificate(const FreeProductReport& report);

} // namespace gysinkit
