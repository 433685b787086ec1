#include <catch_amalgamated.hpp>

#include "gysinkit/exact_sequence.hpp"
#include "gysinkit/linalg.hpp"

#include <numeric>
#include <random>

using namespace gysinkit;

namespace {

// Oracle: cofactor expansion, independent of the elimination code.
Integer laplace_det(const std::vector<std::vector<Integer>>& m) {
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
    Integer term = m[0][c] * laplace_det(minor);
    total += (c % 2 == 0) ? term : Integer(-term);
  }
  return total;
}

void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
             std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

// Oracle: k-th determinantal divisor = gcd of all k x k minors.
Integer determinant_divisor(const IntMatrix& a, std::size_t k) {
  std::vector<std::vector<std::size_t>> rows, cols;
  std::vector<std::size_t> cur;
  subsets(a.rows(), k, 0, cur, rows);
  subsets(a.cols(), k, 0, cur, cols);
  Integer g = 0;
  for (const auto& r : rows)
    for (const auto& c : cols) {
      std::vector<std::vector<Integer>> m;
      for (std::size_t i : r) {
        std::vector<Integer> row;
        for (std::size_t j : c) row.push_back(a(i, j));
        m.push_back(row);
      }
      Integer d = laplace_det(m);
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
    }
  return g;
}

IntMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int bound) {
  std::uniform_int_distribution<int> entry(-bound, bound);
  IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = entry(rng);
  return m;
}

} // namespace

TEST_CASE("smith normal form of small matrices") {
  auto a = IntMatrix::from_rows({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
  SNFResult r = smith_normal_form(a);
  CHECK(r.verify(a));
  CHECK(r.diagonal() == std::vector<Integer>{2, 6, 12});

  auto z = IntMatrix(2, 3);
  SNFResult rz = smith_normal_form(z);
  CHECK(rz.verify(z));
  CHECK(rz.rank() == 0);

  auto e = IntMatrix(0, 3);
  CHECK(smith_normal_form(e).verify(e));
  CHECK(invariant_factors(IntMatrix::from_rows({{2, 0}, {0, 3}})) == std::vector<Integer>{1, 6});
}

TEST_CASE("smith normal form agrees with determinant divisors on random matrices") {
  std::mt19937 rng(20261015);
  std::uniform_int_distribution<int> dim(1, 4);
  for (int trial = 0; trial < 300; ++trial) {
    IntMatrix a = random_matrix(rng, static_cast<std::size_t>(dim(rng)), static_cast<std::size_t>(dim(rng)), 3);
    SNFResult r = smith_normal_form(a);
    REQUIRE(r.verify(a));
    const auto d = r.diagonal();
    REQUIRE(d == invariant_factors(a));
    Integer product = 1;
    for (std::size_t k = 1; k <= std::min(a.rows(), a.cols()); ++k) {
      const Integer oracle = determinant_divisor(a, k);
      if (k <= d.size()) {
        product *= d[k - 1];
        CHECK(product == oracle);
      } else {
        CHECK(oracle == 0);
      }
    }
  }
}

TEST_CASE("determinant matches cofactor expansion") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(trial % 5);
    IntMatrix a = random_matrix(rng, n, n, 5);
    std::vector<std::vector<Integer>> rows;
    for (std::size_t r = 0; r < n; ++r) rows.push_back(a.row(r));
    CHECK(determinant(a) == laplace_det(rows));
  }
  CHECK(determinant(IntMatrix(0, 0)) == 1);
}

TEST_CASE("abelian groups in invariant factor form") {
  CHECK(FGAbelianGroup::from_cyclic_orders({2, 3}) == FGAbelianGroup::cyclic(6));
  CHECK(FGAbelianGroup::from_cyclic_orders({4, 6}) == FGAbelianGroup(0, {2, 12}));
  CHECK(FGAbelianGroup::from_cyclic_orders({0, 1, 5}).to_string() == "Z/5 ⊕ Z");
  CHECK(FGAbelianGroup(3, {2}).to_string() == "Z/2 ⊕ Z^3");
  CHECK(FGAbelianGroup::free(1).to_string() == "Z");
  CHECK(FGAbelianGroup::trivial().to_string() == "0");
  CHECK(FGAbelianGroup::cyclic(1).is_trivial());
  CHECK_THROWS_AS(FGAbelianGroup(0, {4, 6}), MalformedInput);
  CHECK_THROWS_AS(FGAbelianGroup(0, {1}), MalformedInput);
  CHECK(FGAbelianGroup::cyclic(2).direct_sum(FGAbelianGroup::cyclic(3)) == FGAbelianGroup::cyclic(6));
}

TEST_CASE("chinese remainder: Z/a + Z/b = Z/ab exactly when gcd(a, b) = 1") {
  for (int a = 2; a <= 12; ++a)
    for (int b = 2; b <= 12; ++b) {
      const bool coprime = std::gcd(a, b) == 1;
      CHECK((FGAbelianGroup::from_cyclic_orders({a, b}) == FGAbelianGroup::cyclic(a * b)) == coprime);
      CHECK(FGAbelianGroup::from_cyclic_orders({a, b}) ==
            FGAbelianGroup::from_cyclic_orders({std::gcd(a, b), std::lcm(a, b)}));
    }
}

TEST_CASE("kernels, cokernels and spans") {
  auto a = IntMatrix::from_rows({{1, 1, 1}, {0, 2, 4}});
  CokerKer ck = coker_and_ker(a);
  CHECK(ck.coker == FGAbelianGroup::cyclic(2));
  CHECK(ck.ker == FGAbelianGroup::free(1));
  IntMatrix k = kernel_basis(a);
  CHECK(k.cols() == 1);
  CHECK((a * k).is_zero());

  std::mt19937 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    IntMatrix m = random_matrix(rng, 3, 4, 3);
    IntMatrix kb = kernel_basis(m);
    CHECK((m * kb).is_zero());
    CHECK(kb.cols() + matrix_rank(m) == 4);
    // Columns of m are in their own span; m * e_0 + m * e_1 too.
    std::vector<Integer> v = m.column(0);
    for (std::size_t r = 0; r < 3; ++r) v[r] += m(r, 1);
    CHECK(in_column_span(m, v));
  }
  CHECK_FALSE(in_column_span(IntMatrix::from_rows({{2}}), {Integer(1)}));
  CHECK(group_from_presentation(2, IntMatrix::from_rows({{2, 0}, {0, 3}})) == FGAbelianGroup::cyclic(6));
}

TEST_CASE("exactness certificates") {
  // 0 -> Z --2--> Z -> Z/2 -> 0
  ExactSequence good;
  good.names = {"0", "Z", "Z", "Z/2", "0"};
  good.nodes = {PresentedGroup::zero(), PresentedGroup::free(1), PresentedGroup::free(1),
                PresentedGroup{1, IntMatrix::from_rows({{2}})}, PresentedGroup::zero()};
  good.maps = {IntMatrix(1, 0), IntMatrix::from_rows({{2}}), IntMatrix::from_rows({{1}}), IntMatrix(0, 1)};
  ExactnessReport r = good.verify();
  CHECK(r.exact());
  CHECK(r.alternating_rank_sum == 0);

  // Replacing Z/2 by Z/4 breaks exactness at the middle Z.
  ExactSequence bad = good;
  bad.nodes[3] = PresentedGroup{1, IntMatrix::from_rows({{4}})};
  CHECK_FALSE(bad.verify().exact());

  // A map that is not well defined on Z/2 -> Z is rejected.
  ExactSequence ill;
  ill.names = {"Z/2", "Z"};
  ill.nodes = {PresentedGroup{1, IntMatrix::from_rows({{2}})}, PresentedGroup::free(1)};
  ill.maps = {IntMatrix::from_rows({{1}})};
  CHECK_FALSE(ill.verify().exact());
}

TEST_CASE("presented groups") {
  PresentedGroup p = PresentedGroup::of(FGAbelianGroup(2, {3}));
  CHECK(p.generators == 3);
  CHECK(p.group() == FGAbelianGroup(2, {3}));
  CHECK(p.is_zero({Integer(0), Integer(0), Integer(3)}));
  CHECK_FALSE(p.is_zero({Integer(1), Integer(0), Integer(0)}));
  CHECK(direct_sum(p, PresentedGroup::free(1)).group() == FGAbelianGroup(3, {3}));
}
