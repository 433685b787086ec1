// Acceptance run: one line per criterion, with its runtime against a pinned limit.
// Exit status is the number of failed criteria.

#include "gysinkit/builders.hpp"
#include "gysinkit/dual_geometry.hpp"
#include "gysinkit/group_action.hpp"
#include "gysinkit/gysin.hpp"
#include "gysinkit/homology.hpp"
#include "gysinkit/linalg.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

using namespace gysinkit;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      note = what;
    }
  }
};

FGAbelianGroup Z(std::size_t r) { return FGAbelianGroup::free(r); }

bool certificates_exact(const std::vector<ExactnessReport>& reports) {
  if (reports.empty()) return false;
  for (const auto& r : reports)
    if (!r.exact() || r.alternating_rank_sum != 0) return false;
  return true;
}

// ------------------------------------------------------------------ oracles

Integer cofactor_det(const std::vector<std::vector<Integer>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  Integer total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<Integer>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Integer> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(row);
    }
    Integer term = m[0][c] * cofactor_det(minor);
    total += c % 2 == 0 ? term : Integer(-term);
  }
  return total;
}

// gcd of all k x k minors, subsets enumerated by bitmask (dims <= 4).
Integer determinantal_divisor(const IntMatrix& a, std::size_t k) {
  Integer g = 0;
  for (unsigned rm = 0; rm < (1u << a.rows()); ++rm) {
    if (static_cast<std::size_t>(__builtin_popcount(rm)) != k) continue;
    for (unsigned cm = 0; cm < (1u << a.cols()); ++cm) {
      if (static_cast<std::size_t>(__builtin_popcount(cm)) != k) continue;
      std::vector<std::vector<Integer>> m;
      for (std::size_t r = 0; r < a.rows(); ++r) {
        if (!(rm >> r & 1u)) continue;
        std::vector<Integer> row;
        for (std::size_t c = 0; c < a.cols(); ++c)
          if (cm >> c & 1u) row.push_back(a(r, c));
        m.push_back(row);
      }
      Integer d = cofactor_det(m);
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
    }
  }
  return g;
}

// Rank over Q (p = 0) or over F_p by plain Gaussian elimination.
std::size_t field_rank(const IntMatrix& m, long p) {
  std::vector<std::vector<Rational>> a(m.rows(), std::vector<Rational>(m.cols()));
  auto reduce = [p](Rational x) {
    if (p == 0) return x;
    Integer num = x.get_num() % p;
    if (num < 0) num += p;
    return Rational(num);
  };
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) a[r][c] = reduce(Rational(m(r, c)));
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t piv = rank;
    while (piv < m.rows() && a[piv][c] == 0) ++piv;
    if (piv == m.rows()) continue;
    std::swap(a[piv], a[rank]);
    Rational inv = 1 / a[rank][c];
    if (p != 0) {
      // Modular inverse by Fermat, numbers are tiny.
      Integer v = a[rank][c].get_num(), e = 1;
      for (long i = 0; i < p - 2; ++i) e = e * v % p;
      inv = Rational(e);
    }
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == rank || a[r][c] == 0) continue;
      Rational f = reduce(a[r][c] * inv);
      for (std::size_t k = c; k < m.cols(); ++k) a[r][k] = reduce(a[r][k] - f * a[rank][k]);
    }
    ++rank;
  }
  return rank;
}

// dim H_k over the field: n_k - rank d_k - rank d_{k+1}.
std::vector<std::size_t> field_betti(const SimplicialComplex& c, long p) {
  ChainComplexZ ch = chain_complex(c);
  std::vector<std::size_t> b;
  for (std::size_t k = 0; k < ch.ranks.size(); ++k) {
    std::size_t out = k == 0 ? 0 : field_rank(ch.boundary[k], p);
    std::size_t in = k + 1 < ch.ranks.size() ? field_rank(ch.boundary[k + 1], p) : 0;
    b.push_back(ch.ranks[k] - out - in);
  }
  return b;
}

// Number of cyclic summands of order divisible by p.
std::size_t p_torsion_count(const FGAbelianGroup& g, long p) {
  std::size_t n = 0;
  for (const Integer& t : g.torsion())
    if (t % p == 0) ++n;
  return n;
}

// --------------------------------------------------------------- criteria

Outcome free_groups() {
  Outcome o;
  for (int n = 2; n <= 5; ++n) {
    GysinResult r = gysin_torsion_free(wedge_of_circles(n), {.compact = true});
    const FGAbelianGroup k0 = FGAbelianGroup::cyclic(n - 1).direct_sum(Z(static_cast<std::size_t>(n)));
    o.require(r.k0.resolved() && r.k0.group() == k0, "K_0 of wedge " + std::to_string(n) + " = " + r.k0.to_string());
    o.require(r.k1.resolved() && r.k1.group() == Z(static_cast<std::size_t>(n)),
              "K_1 of wedge " + std::to_string(n) + " = " + r.k1.to_string());
    o.require(r.unit_torsion.order == Integer(n - 1), "unit torsion " + r.unit_torsion.to_string());
  }
  return o;
}

Outcome surface_groups() {
  Outcome o;
  for (int g = 2; g <= 3; ++g) {
    GysinResult r = gysin_torsion_free(surface(g), {.compact = true});
    const auto free_rank = static_cast<std::size_t>(2 * g + 1);
    o.require(r.k0.resolved() && r.k0.group() == FGAbelianGroup::cyclic(2 * g - 2).direct_sum(Z(free_rank)),
              "K_0 of genus " + std::to_string(g) + " = " + r.k0.to_string());
    o.require(r.k1.resolved() && r.k1.group() == Z(free_rank), "K_1 = " + r.k1.to_string());
    o.require(r.unit_torsion.order == Integer(2 * g - 2), "unit torsion " + r.unit_torsion.to_string());
  }
  return o;
}

Outcome psl2z() {
  Outcome o;
  FreeProductReport r = free_product_two_cyclic(2, 3);
  o.require(r.ktop0 == Z(4), "K^top_0 = " + r.ktop0.to_string());
  o.require(r.k0_proper == Z(4), "K_0 proper = " + r.k0_proper.to_string());
  o.require(abs(r.eul_determinant) == 1, "det = " + r.eul_determinant.get_str());
  o.require(r.boundary_k0.is_trivial() && r.boundary_k1.is_trivial(), "boundary K-theory nonzero");
  return o;
}

Outcome circle() {
  Outcome o;
  GysinResult r = gysin_torsion_free(wedge_of_circles(1), {.compact = true});
  // C(2 points) x| Z = C*(Z)^2, and K_*(C*(Z)) = K^*(S^1) = (Z, Z).
  const FGAbelianGroup oracle = Z(1).direct_sum(Z(1));
  o.require(r.chi == 0, "chi != 0");
  o.require(r.k0.resolved() && r.k0.group() == oracle, "K_0 = " + r.k0.to_string());
  o.require(r.k1.resolved() && r.k1.group() == oracle, "K_1 = " + r.k1.to_string());
  o.require(r.unit_torsion.infinite(), "unit torsion " + r.unit_torsion.to_string());
  return o;
}

Outcome unit_torsion_rule() {
  Outcome o;
  for (long chi = -10; chi <= 10; ++chi)
    for (bool compact : {false, true}) {
      UnitTorsion t = unit_torsion_order(chi, compact);
      const bool finite_expected = compact && chi != 0;
      o.require(t.infinite() != finite_expected, "chi " + std::to_string(chi));
      if (finite_expected && t.order) o.require(*t.order == Integer(chi < 0 ? -chi : chi), "order for chi " + std::to_string(chi));
    }
  return o;
}

Outcome euler_characteristic() {
  Outcome o;
  EulerDecomposition psl = equivariant_euler_decomposition(psl2z_tree_orbits());
  o.require(psl.to_string() == "dim_{Z/2} + dim_{Z/3} - dim_{1}", psl.to_string());

  ActionExample r = reflection_circle();
  EulerDecomposition refl = equivariant_euler_decomposition(r.complex, r.action);
  // Components A0 and A2 are the fixed vertices E and W.
  o.require(refl.to_string() == "dim_{H2{0,1},A0} + dim_{H2{0,1},A2} - dim_{1}", refl.to_string());
  o.require(!refl.terms.empty(), "reflection decomposition is zero");

  for (const auto& [name, c] : example_corpus()) {
    ActionExample t = trivial_action(c);
    EulerDecomposition e = equivariant_euler_decomposition(t.complex, t.action);
    const long chi = euler_char(c);
    const bool expected = chi == 0 ? e.terms.empty()
                                   : e.terms.size() == 1 && e.terms[0].stabiliser_class == "1" &&
                                         e.terms[0].multiplicity == chi;
    o.require(expected, name + ": " + e.to_string());
  }
  return o;
}

Outcome exact_linear_algebra() {
  Outcome o;
  std::mt19937 rng(1000);
  std::uniform_int_distribution<int> dim(1, 4), entry(-3, 3);
  for (int trial = 0; trial < 1000 && o.ok; ++trial) {
    IntMatrix a(static_cast<std::size_t>(dim(rng)), static_cast<std::size_t>(dim(rng)));
    for (std::size_t r = 0; r < a.rows(); ++r)
      for (std::size_t c = 0; c < a.cols(); ++c) a(r, c) = entry(rng);
    SNFResult s = smith_normal_form(a);
    o.require(s.U * a * s.V == s.S, "U A V != S at trial " + std::to_string(trial));
    o.require(s.verify(a), "SNF certificate at trial " + std::to_string(trial));
    const auto d = s.diagonal();
    Integer product = 1;
    for (std::size_t k = 1; k <= std::min(a.rows(), a.cols()); ++k) {
      const Integer oracle = determinantal_divisor(a, k);
      if (k <= d.size()) {
        product *= d[k - 1];
        o.require(product == oracle, "divisor mismatch at trial " + std::to_string(trial));
      } else {
        o.require(oracle == 0, "rank mismatch at trial " + std::to_string(trial));
      }
    }
  }
  return o;
}

Outcome homology_regression() {
  Outcome o;
  struct Expected {
    std::string name;
    SimplicialComplex c;
    std::vector<FGAbelianGroup> h;
  };
  std::vector<Expected> fixed{
      {"circle", wedge_of_circles(1), {Z(1), Z(1)}},
      {"torus", surface(1), {Z(1), Z(2), Z(1)}},
      {"genus 2", surface(2), {Z(1), Z(4), Z(1)}},
      {"rp2", real_projective_plane(), {Z(1), FGAbelianGroup::cyclic(2), Z(0)}},
  };
  for (int n = 2; n <= 5; ++n)
    fixed.push_back({"wedge " + std::to_string(n), wedge_of_circles(n), {Z(1), Z(static_cast<std::size_t>(n))}});
  for (const auto& e : fixed) o.require(homology(e.c).groups == e.h, e.name);

  // Field ranks determine the Betti numbers and the 2- and 3-torsion counts.
  for (const auto& [name, c] : example_corpus()) {
    GradedGroup h = homology(c);
    const auto q = field_betti(c, 0), f2 = field_betti(c, 2), f3 = field_betti(c, 3);
    long alternating = 0;
    for (int k = 0; k <= h.top_degree(); ++k) {
      const auto uk = static_cast<std::size_t>(k);
      o.require(h[k].rank() == q[uk], name + ": Betti number in degree " + std::to_string(k));
      o.require(f2[uk] == h[k].rank() + p_torsion_count(h[k], 2) + p_torsion_count(h[k - 1], 2),
                name + ": mod 2 in degree " + std::to_string(k));
      o.require(f3[uk] == h[k].rank() + p_torsion_count(h[k], 3) + p_torsion_count(h[k - 1], 3),
                name + ": mod 3 in degree " + std::to_string(k));
      alternating += (k % 2 ? -1 : 1) * static_cast<long>(h[k].rank());
    }
    o.require(alternating == euler_char(c), name + ": alternating rank sum != chi");
  }
  return o;
}

Outcome dual_geometry() {
  Outcome o;
  const GridSpec grid = grid_from_environment();
  auto absorb = [&o](const std::vector<DualCheckRow>& rows, const std::string& where) {
    for (const DualCheckRow& row : rows)
      o.require(row.passed(), where + ": " + row.name + " at " + row.first_counterexample);
  };
  for (int n = 1; n <= 4; ++n) absorb(run_dual_suite({DualParams::defaults(n), grid, {}}), "n=" + std::to_string(n));
  for (const auto& [name, c] : example_corpus())
    absorb(run_complex_rows(coloured_model(c, std::nullopt), grid), name);
  return o;
}

Outcome six_term_certificates() {
  Outcome o;
  for (const auto& [name, c] : example_corpus()) {
    if (c.dim() > 2 || c.component_count() != 1) continue;
    for (bool compact : {true, false}) {
      GysinResult r = gysin_torsion_free(c, {.compact = compact});
      o.require(certificates_exact(verify_certificate(r)), name + (compact ? " compact" : " noncompact"));
    }
  }
  for (int m = 2; m <= 5; ++m)
    for (int n = 2; n <= 5; ++n)
      o.require(certificates_exact(verify_certificate(free_product_two_cyclic(m, n))),
                "Z/" + std::to_string(m) + " * Z/" + std::to_string(n));
  return o;
}

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;
  std::function<Outcome()> run;
};

} // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "free groups: K_0 = Z/(n-1) + Z^n, K_1 = Z^n, n = 2..5", 1.0, free_groups},
      {2, "surface groups: K_0 = Z/(2g-2) + Z^(2g+1), g = 2, 3", 5.0, surface_groups},
      {3, "Z/2 * Z/3: |det Eul| = 1, boundary K-theory zero", 1.0, psl2z},
      {4, "circle quotient matches C*(Z)^2", 1.0, circle},
      {5, "unit torsion |chi| iff compact and chi != 0, |chi| <= 10", 1.0, unit_torsion_rule},
      {6, "equivariant Euler characteristic decompositions", 5.0, euler_characteristic},
      {7, "Smith normal form against determinantal divisors, 1000 matrices", 10.0, exact_linear_algebra},
      {8, "homology regression and alternating rank sums", 10.0, homology_regression},
      {9, "dual geometry suite, n <= 4 and corpus subdivisions", 60.0, dual_geometry},
      {10, "exactness certificates for every Gysin and free-product result", 10.0, six_term_certificates},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.note = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = seconds <= c.limit_seconds;
    const bool passed = o.ok && in_time;
    if (!passed) ++failures;
    std::ostringstream line;
    line << (passed ? "PASS" : "FAIL") << "  [" << c.id << "] " << c.name;
    char timing[64];
    std::snprintf(timing, sizeof timing, "  (%.3f s, limit %.0f s)", seconds, c.limit_seconds);
    line << timing;
    if (!o.ok) line << "  -- " << o.note;
    else if (!in_time) line << "  -- over time limit";
    std::puts(line.str().c_str());
  }
  return failures;
}
