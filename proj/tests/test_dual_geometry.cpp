#include <catch_amalgamated.hpp>

#include "gysinkit/builders.hpp"
#include "gysinkit/dual_geometry.hpp"

using namespace gysinkit;

namespace {

Rational q(long a, long b) { return make_rational(a, b); }

EPoint pt(std::vector<Rational> c) { return EPoint(std::move(c)); }

// Oracle: the face of the positive part, i.e. the unique f with t in R_f
// when t has no zero coordinates.
FaceSet positive_face(const EPoint& t) {
  FaceSet f;
  for (int i = 0; i <= t.n(); ++i)
    if (t[static_cast<std::size_t>(i)] > 0) f.insert(i);
  return f;
}

} // namespace

TEST_CASE("points of E and homogeneous coordinates") {
  CHECK_THROWS_AS(pt({q(1, 2), q(1, 3)}), MalformedInput);
  CHECK(homogeneous({Rational(2), Rational(1), Rational(1)}) == pt({q(1, 2), q(1, 4), q(1, 4)}));
  CHECK(homogeneous({Rational(-2), Rational(1), Rational(2)}) == pt({Rational(-2), Rational(1), Rational(2)}));
  CHECK_THROWS_AS(homogeneous({Rational(1), Rational(-1)}), MalformedInput);
  CHECK(nonempty_faces(2).size() == 7);
  CHECK(to_string(FaceSet{0, 2}) == "{0,2}");
}

TEST_CASE("region membership") {
  EPoint t = pt({Rational(1), q(-1, 2), q(1, 2)});
  CHECK(in_region(t, {0, 2}, Region::R));
  CHECK(in_region(t, {0, 2}, Region::R_le));
  CHECK(in_region(t, {0, 1, 2}, Region::R_le));
  CHECK_FALSE(in_region(t, {0, 1, 2}, Region::R));
  CHECK_FALSE(in_region(t, {0}, Region::R_le));
  CHECK_FALSE(in_region(t, {}, Region::R));
  CHECK_FALSE(in_region(t, {0, 2}, Region::face));

  EPoint s = pt({q(1, 2), q(1, 2), Rational(0)});
  CHECK(in_region(s, {0, 1}, Region::face));
  CHECK(in_region(s, {0, 1}, Region::CR, q(1, 6)));
  CHECK_FALSE(in_region(s, {0, 1, 2}, Region::CR, q(1, 6)));
  CHECK_THROWS_AS(in_region(s, {0, 1}, Region::CR), MalformedInput);
}

TEST_CASE("retraction, collapse and expansion on fixed inputs") {
  CHECK(retraction_q(pt({q(3, 2), q(-1, 4), q(-1, 4)})) == pt({Rational(1), Rational(0), Rational(0)}));
  CHECK(collapse(pt({q(7, 10), q(2, 10), q(1, 10)}), q(1, 4)) == pt({q(5, 11), q(4, 11), q(2, 11)}));
  CHECK(delta_witness(q(1, 5), Rational(3), 1) == q(2, 5));
  CHECK(critical_lambda(q(1, 4), 2) == Rational(4));
  CHECK(radial_expand(pt({q(1, 2), q(1, 2)}), Rational(3)) == pt({q(1, 2), q(1, 2)}));
  CHECK(radial_expand(pt({Rational(1), Rational(0)}), Rational(3)) == pt({Rational(2), Rational(-1)}));
  CHECK(face_barycentre({1, 2}, 2) == pt({Rational(0), q(1, 2), q(1, 2)}));
  CHECK_THROWS_AS(collapse(pt({Rational(2), Rational(-1)}), q(1, 4)), MalformedInput);
  CHECK_THROWS_AS(radial_expand(pt({Rational(1), Rational(0)}), q(1, 2)), MalformedInput);
}

TEST_CASE("parameter validation") {
  DualParams d = DualParams::defaults(2);
  CHECK(d.L == q(1, 6));
  CHECK(d.lambda == Rational(4));
  CHECK(d.delta == delta_witness(d.L, d.lambda, 2));
  CHECK(d.delta > 0);
  CHECK_THROWS_AS(DualParams::make(2, q(1, 3), Rational(4)), MalformedInput);
  CHECK_THROWS_AS(DualParams::make(2, q(1, 6), critical_lambda(q(1, 6), 2)), MalformedInput);
  CHECK_NOTHROW(DualParams::make(2, q(1, 6), Rational(3)));
}

TEST_CASE("q agrees with the positive-part oracle on E grids") {
  for (int n = 1; n <= 3; ++n)
    for (const EPoint& t : e_grid(n, 4)) {
      const FaceSet f = positive_face(t);
      if (f.empty()) continue;
      CHECK(in_region(t, f, Region::R_le));
      CHECK(in_region(retraction_q(t), f, Region::face));
      for (const FaceSet& g : nonempty_faces(n))
        CHECK(in_region(retraction_q(t), g, Region::face) == in_region(t, g, Region::R_le));
    }
}

TEST_CASE("collapse lands in the small cube around the barycentre") {
  const Rational L = q(1, 8);
  for (const EPoint& t : simplex_grid(3, 8)) {
    EPoint c = collapse(t, L);
    CHECK(c.in_simplex());
    // The largest coordinate of C(t) is at most L / (sum of min(t_i, L)).
    Rational denom = 0;
    for (int i = 0; i <= 3; ++i) denom += std::min(t[static_cast<std::size_t>(i)], L);
    for (int i = 0; i <= 3; ++i) CHECK(c[static_cast<std::size_t>(i)] * denom <= L);
  }
  CHECK(collapse(face_barycentre({0, 1, 2, 3}, 3), L) == face_barycentre({0, 1, 2, 3}, 3));
}

TEST_CASE("spectral support of a collapsed point is a chain") {
  Subdivision sub = barycentric_subdivision(filled_triangle());
  Colouring id{{0, 0}, {1, 1}, {2, 2}};
  BarycentricPoint x(Simplex{0, 1, 2}, {q(7, 10), q(2, 10), q(1, 10)});
  SpectralSupport s = spectral_support(x, id, q(1, 4));
  CHECK(s.chain_certified);
  REQUIRE(s.support.size() == 3);
  CHECK(s.support[0] == Simplex{0});
  CHECK(s.support[1] == Simplex{0, 1});
  CHECK(s.support[2] == Simplex{0, 1, 2});
  Rational total = 0;
  for (const Rational& w : s.weights) {
    CHECK(w > 0);
    total += w;
  }
  CHECK(total == 1);

  SpectralSupport centre = spectral_support(BarycentricPoint::barycentre(Simplex{0, 1, 2}), id, q(1, 4));
  REQUIRE(centre.support.size() == 1);
  CHECK(centre.support[0] == Simplex{0, 1, 2});

  // A vertex of the subdivision maps back to a barycentre of the original.
  BarycentricPoint back = from_subdivision(sub, BarycentricPoint::vertex(sub.complex.count(0) - 1));
  CHECK(back.same_point(BarycentricPoint::barycentre(Simplex{0, 1, 2})));
}

TEST_CASE("q-bar inverts the colour map on a simplex") {
  Colouring nu{{0, 0}, {1, 1}, {2, 2}};
  EPoint t = pt({Rational(1), q(-1, 2), q(1, 2)});
  BarycentricPoint b = bar_q(t, Simplex{0, 2}, nu);
  CHECK(b.same_point(BarycentricPoint(Simplex{0, 2}, {q(2, 3), q(1, 3)})));
  CHECK(colour_map_point(b, nu, 2) == retraction_q(t).coords());
  CHECK_THROWS_AS(bar_q(t, Simplex{0}, nu), MalformedInput);
}

TEST_CASE("support products: valid factors stay valid, corrupted ones are caught") {
  ColouredComplex cc = coloured_model(filled_triangle(), std::nullopt);
  std::vector<Simplex> index = cc.complex.maximal_simplices();
  SupportPattern pattern = SupportPattern::of(index, cc.colouring);
  const std::vector<EPoint> samples = e_grid(2, 3);
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    SampledMatrix a = random_valid_matrix(pattern, samples, seed);
    SampledMatrix b = random_valid_matrix(pattern, samples, seed + 100);
    CHECK_FALSE(support_violation(pattern, a).has_value());
    CHECK(support_product_check(pattern, a, b).status == SupportCheckStatus::valid);
  }
  // Negative control: put a nonzero value where the pattern forbids one.
  SampledMatrix a = random_valid_matrix(pattern, samples, 5);
  bool corrupted = false;
  for (std::size_t s = 0; s < samples.size() && !corrupted; ++s)
    for (std::size_t i = 0; i < index.size() && !corrupted; ++i)
      for (std::size_t j = 0; j < index.size() && !corrupted; ++j)
        if (!pattern.permits(i, j, samples[s])) {
          a.values[s][i][j] = 1;
          corrupted = true;
        }
  REQUIRE(corrupted);
  CHECK(support_violation(pattern, a).has_value());
  CHECK(support_product_check(pattern, a, a).status == SupportCheckStatus::precondition_violation);
}

TEST_CASE("grids") {
  CHECK(simplex_grid(2, 2).size() == 6);
  for (const EPoint& t : simplex_grid(3, 5)) CHECK(t.in_simplex());
  CHECK(barycentric_grid(2, 3).size() == 10);
  CHECK(grid_by_name("coarse").simplex_denominator.size() == 4);
  CHECK_THROWS_AS(grid_by_name("nope"), MalformedInput);
  std::size_t outside = 0;
  for (const EPoint& t : e_grid(2, 2)) outside += t.in_simplex() ? 0 : 1;
  CHECK(outside > 0);
}

TEST_CASE("full verification suite passes on the coarse grid for n = 1..4") {
  for (int n = 1; n <= 4; ++n) {
    INFO(n);
    DualSuiteOptions opt{DualParams::defaults(n), grid_by_name("coarse"), {}};
    for (const DualCheckRow& row : run_dual_suite(opt)) {
      INFO(row.name << ": " << row.first_counterexample);
      CHECK(row.passed());
    }
  }
}

TEST_CASE("suite rows hold for a non-default lambda and L") {
  DualParams p = DualParams::make(2, q(1, 5), Rational(6));
  DualSuiteOptions opt{p, grid_by_name("odd"), {coloured_model(wedge_of_circles(2), std::nullopt)}};
  for (const DualCheckRow& row : run_dual_suite(opt)) {
    INFO(row.name << ": " << row.first_counterexample);
    CHECK(row.passed());
  }
}
