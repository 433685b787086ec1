#pragma once

#include "gysinkit/complex.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace gysinkit {

/// Point of the hyperplane E = {t in Q^{n+1} : sum t_i = 1}.
class EPoint {
public:
  /// Throws MalformedInput unless the coordinates sum to exactly 1.
  explicit EPoint(std::vector<Rational> coords);

  int n() const { return static_cast<int>(coords_.size()) - 1; }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<Rational>& coords() const { return coords_; }
  /// All coordinates nonnegative, i.e. t lies in the standard simplex.
  bool in_simplex() const;
  std::string to_string() const;

  bool operator==(const EPoint&) const = default;

private:
  std::vector<Rational> coords_;
};

/// Subset of {0, ..., n}.
using FaceSet = std::set<int>;

std::string to_string(const FaceSet& f);
/// All nonempty subsets of {0, ..., n}, ordered by bitmask.
std::vector<FaceSet> nonempty_faces(int n);

/// [t_0, ..., t_n] = t / sum t_i; throws MalformedInput when the sum is zero.
EPoint homogeneous(const std::vector<Rational>& t);

enum class Region {
  R,     // t_i >= 0 on f, t_i <= 0 off f
  R_le,  // t_i <= 0 off f
  CR,    // t in the simplex, t_i >= L on f, t_i <= L off f
  face   // t in the simplex, t_i = 0 off f
};

/// Exact membership test. CR needs L; R of the empty set is empty.
bool in_region(const EPoint& t, const FaceSet& f, Region which,
               const std::optional<Rational>& L = std::nullopt);

struct DualParams {
  int n = 0;
  Rational L;
  Rational lambda;
  Rational delta;

  /// L = 1/(2(n+1)), lambda = 4, delta from delta_witness.
  static DualParams defaults(int n);
  /// Validates 0 < L < 1/(n+1) and lambda > (1-(n+1)L)^{-1}; throws MalformedInput.
  static DualParams make(int n, const Rational& L, const Rational& lambda);
};

/// q(t) = [max(t_0, 0), ..., max(t_n, 0)].
EPoint retraction_q(const EPoint& t);

/// C(t) = [min(t_0, L), ..., min(t_n, L)] for t in the simplex.
EPoint collapse(const EPoint& t, const Rational& L);

/// r_lambda(t)_i = lambda t_i - (lambda - 1)/(n + 1); needs lambda >= 1.
EPoint radial_expand(const EPoint& t, const Rational& lambda);

/// (lambda - 1)/(n + 1) - lambda L, the largest delta that works.
Rational delta_witness(const Rational& L, const Rational& lambda, int n);

/// lambda = (1 - (n+1)L)^{-1}, where CR_f = r_lambda^{-1}(R_f).
Rational critical_lambda(const Rational& L, int n);

/// Barycentre of the face f of the n-simplex.
EPoint face_barycentre(const FaceSet& f, int n);

struct SpectralSupport {
  /// The point after collapsing, on the original carrier.
  BarycentricPoint collapsed;
  /// Simplices of X with positive weight in the barycentric subdivision, smallest first.
  std::vector<Simplex> support;
  /// Their (positive) weights; square roots are never taken.
  std::vector<Rational> weights;
  /// support is a strictly increasing chain of faces.
  bool chain_certified = false;
};

/// Support of v(x) = v'(C(x)) for a point x of X (carrier a simplex of X).
SpectralSupport spectral_support(const BarycentricPoint& x, const Colouring& nu, const Rational& L);

/// Converts a point of the subdivision to a point of the underlying complex.
BarycentricPoint from_subdivision(const Subdivision& sub, const BarycentricPoint& y);

/// q-bar(t, sigma) = |nu|_sigma^{-1}(q(t)); throws MalformedInput unless t is in R_{<= nu(sigma)}.
BarycentricPoint bar_q(const EPoint& t, const Simplex& sigma, const Colouring& nu);

/// Allowed supports: entry (i, j) may be nonzero only on R_{<= nu(s_i cap s_j)}.
struct SupportPattern {
  std::vector<Simplex> index;
  /// nu(s_i cap s_j); nullopt when s_i and s_j are disjoint (entry must vanish).
  std::map<std::pair<std::size_t, std::size_t>, std::optional<FaceSet>> allowed;

  static SupportPattern of(std::vector<Simplex> index, const Colouring& nu);
  bool permits(std::size_t i, std::size_t j, const EPoint& t) const;
};

/// Matrix-valued function on E, known at finitely many sample points.
struct SampledMatrix {
  std::vector<EPoint> samples;
  /// values[s][i][j] is entry (i, j) at samples[s].
  std::vector<std::vector<std::vector<Rational>>> values;
};

/// Random entries in {-2..2} wherever the pattern permits, zero elsewhere.
SampledMatrix random_valid_matrix(const SupportPattern& pattern, const std::vector<EPoint>& samples,
                                  std::uint64_t seed);

enum class SupportCheckStatus { valid, product_violation, precondition_violation };

struct SupportCheckResult {
  SupportCheckStatus status = SupportCheckStatus::valid;
  std::string detail;
};

/// First entry of m that is nonzero outside its allowed region, if any.
std::optional<std::string> support_violation(const SupportPattern& pattern, const SampledMatrix& m);

/// Checks both factors, then the exact product at every sample.
SupportCheckResult support_product_check(const SupportPattern& pattern, const SampledMatrix& p1,
                                         const SampledMatrix& p2);

// ------------------------------------------------------------ sampling

struct GridSpec {
  std::string name;
  /// Denominator of the simplex grid and of the E grid for n = 1..4.
  std::vector<int> simplex_denominator;
  std::vector<int> e_denominator;
  /// Denominator for sample points inside simplices of a complex, by dimension 0..3.
  std::vector<int> complex_denominator;
};

/// Named grids: "default", "coarse", "odd". Throws MalformedInput otherwise.
GridSpec grid_by_name(const std::string& name);
/// Grid named by GYSINKIT_SEED, "default" when unset.
GridSpec grid_from_environment();

/// Points of the simplex with coordinates in (1/D)Z.
std::vector<EPoint> simplex_grid(int n, int denominator);
/// Points of E with the first n coordinates in [-1, 2] on (1/D)Z and the last one in [-1, 2].
std::vector<EPoint> e_grid(int n, int denominator);
/// Coordinates set to L or 0 with the rest spread evenly, plus their midpoints with the barycentre.
std::vector<EPoint> boundary_points(int n, const Rational& L);
/// Weight vectors on k + 1 vertices with denominator D (all compositions).
std::vector<std::vector<Rational>> barycentric_grid(int k, int denominator);

// ---------------------------------------------------- verification suite

struct DualCheckRow {
  std::string name;
  std::size_t samples = 0;
  std::size_t counterexamples = 0;
  std::string first_counterexample;

  bool passed() const { return counterexamples == 0 && samples > 0; }
};

struct ColouredComplex {
  SimplicialComplex complex;
  Colouring colouring;
};

/// The complex with its colouring if valid; otherwise its barycentric
/// subdivision with the canonical dimension colouring.
ColouredComplex coloured_model(const SimplicialComplex& c, const std::optional<Colouring>& nu);

/// The standard n-simplex with the identity colouring.
ColouredComplex standard_simplex(int n);

struct DualSuiteOptions {
  DualParams params;
  GridSpec grid;
  /// Complexes for the rows that need one; empty means the n-simplex and its subdivision.
  std::vector<ColouredComplex> complexes;
};

/// Geometry rows in dimension params.n, complex rows on every listed complex.
std::vector<DualCheckRow> run_dual_suite(const DualSuiteOptions& options);

/// The complex-dependent rows alone (spectral support, bar_q, support products).
std::vector<DualCheckRow> run_complex_rows(const ColouredComplex& cc, const GridSpec& grid,
                                           const std::optional<DualParams>& params = std::nullopt);

} // namespace gysinkit
