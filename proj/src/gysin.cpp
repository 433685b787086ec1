#include "gysinkit/gysin.hpp"

namespace gysinkit {

std::string KGroupValue::to_string() const {
  if (resolved()) return group().to_string();
  const auto& e = extension();
  return "ext(" + e.quot.to_string() + " by " + e.sub.to_string() + ")";
}

UnitTorsion unit_torsion_order(long chi, bool compact) {
  if (compact && chi != 0) return UnitTorsion{Integer(std::abs(chi))};
  return UnitTorsion{std::nullopt};
}

std::string to_string(GysinCase c) {
  return c == GysinCase::compact_nonzero_chi ? "compact-nonzero-chi" : "split-case";
}

SplitCaseDecision split_case_report(bool has_fixed_boundary_point, long chi, bool compact) {
  const bool nonzero_branch = compact && chi != 0;
  if (has_fixed_boundary_point)
    return {GysinCase::split_case, nonzero_branch,
            nonzero_branch ? "fixed boundary point: the Euler map vanishes, overriding the "
                             "compact nonzero-chi branch"
                           : "fixed boundary point: the Euler map vanishes"};
  if (nonzero_branch)
    return {GysinCase::compact_nonzero_chi, false, "quotient compact with chi = " + std::to_string(chi)};
  return {GysinCase::split_case, false,
          compact ? "chi = 0, so the Euler map vanishes" : "quotient not compact"};
}

namespace {

// Column block matrices for inclusions and projections of direct sums.
IntMatrix inclusion_first(std::size_t a, std::size_t b) {
  IntMatrix m(a + b, a);
  for (std::size_t i = 0; i < a; ++i) m(i, i) = 1;
  return m;
}

IntMatrix projection_second(std::size_t a, std::size_t b) {
  IntMatrix m(b, a + b);
  for (std::size_t i = 0; i < b; ++i) m(i, a + i) = 1;
  return m;
}

PresentedGroup with_relation(PresentedGroup p, const std::vector<Integer>& relation) {
  IntMatrix extra(p.generators, 1);
  for (std::size_t i = 0; i < p.generators; ++i) extra(i, 0) = relation[i];
  p.relations = p.relations.hconcat(extra);
  return p;
}

KGroupValue extension_value(const PresentedGroup& sub, const PresentedGroup& quot) {
  FGAbelianGroup s = sub.group(), q = quot.group();
  if (q.is_free()) return KGroupValue(s.direct_sum(q));
  return KGroupValue(UnresolvedExtension{s, q});
}

// 0 -> A -> A + B -> B -> 0
ExactSequence split_sequence(const std::string& a_name, const PresentedGroup& a,
                             const std::string& mid_name, const std::string& b_name,
                             const PresentedGroup& b) {
  ExactSequence seq;
  seq.names = {"0", a_name, mid_name, b_name, "0"};
  seq.nodes = {PresentedGroup::zero(), a, direct_sum(a, b), b, PresentedGroup::zero()};
  seq.maps = {IntMatrix(a.generators, 0), inclusion_first(a.generators, b.generators),
              projection_second(a.generators, b.generators), IntMatrix(0, b.generators)};
  return seq;
}

} // namespace

GysinResult gysin_torsion_free(const SimplicialComplex& quotient, GysinOptions options) {
  if (quotient.component_count() != 1)
    throw MalformedInput("the quotient G\\X must be connected (the dimension map needs it)");

  GysinResult r;
  r.compact = options.compact;
  r.chi = euler_char(quotient);
  r.k_theory = k_groups(quotient, CollapseMode::strict);
  r.k_homology = k_homology(quotient, CollapseMode::strict);
  r.decision = split_case_report(options.fixed_boundary_point, r.chi, options.compact);

  const GradedGroup hom = homology(quotient);
  const GradedGroup coh = cohomology(quotient);
  // Generator 0 of each even group is the degree-0 summand: [1] in K_0(Cred G)
  // and the class with dim = 1 in K^0(G\X).
  const PresentedGroup kh0 = direct_sum(PresentedGroup::of(hom[0]), PresentedGroup::of(hom[2]));
  const PresentedGroup kh1 = PresentedGroup::of(hom[1]);
  const PresentedGroup h2 = PresentedGroup::of(coh[2]);
  const PresentedGroup kc0 = direct_sum(PresentedGroup::of(coh[0]), h2);
  const PresentedGroup kc1 = PresentedGroup::of(coh[1]);

  r.proof_sketch.push_back("K_*(Cred G) = K_*(G\\X) (free proper action, Baum-Connes assumed)");
  r.proof_sketch.push_back("K^*(G\\X) from cellular cohomology, Atiyah-Hirzebruch collapse in dimension <= 2");
  r.proof_sketch.push_back(r.decision.note);

  if (r.decision.case_tag == GysinCase::compact_nonzero_chi) {
    r.unit_torsion = unit_torsion_order(r.chi, true);
    r.proof_sketch.push_back("Euler map x -> chi * dim(x) * [1]: kernel = ker(dim), image = <chi [1]>");

    // 0 -> <chi [1]> -> K_0(Cred G) -> K_0(dX x| G) -> K^1(G\X) -> 0
    std::vector<Integer> unit(kh0.generators, Integer(0));
    unit[0] = r.chi;
    const PresentedGroup reduced = with_relation(kh0, unit);
    ExactSequence even;
    even.names = {"0", "<chi [1]>", "K_0(Cred G)", "K_0(C(dX) x| G)", "K^1(G\\X)", "0"};
    even.nodes = {PresentedGroup::zero(), PresentedGroup::free(1), kh0, direct_sum(reduced, kc1), kc1,
                  PresentedGroup::zero()};
    IntMatrix unit_map(kh0.generators, 1);
    unit_map(0, 0) = r.chi;
    even.maps = {IntMatrix(1, 0), unit_map, inclusion_first(kh0.generators, kc1.generators),
                 projection_second(kh0.generators, kc1.generators), IntMatrix(0, kc1.generators)};
    r.k0 = extension_value(reduced, kc1);

    // 0 -> K_1(Cred G) -> K_1(dX x| G) -> K^0(G\X) --dim--> Z -> 0, ker(dim) = H^2
    ExactSequence odd;
    odd.names = {"0", "K_1(Cred G)", "K_1(C(dX) x| G)", "K^0(G\\X)", "Z", "0"};
    const PresentedGroup middle = direct_sum(kh1, h2);
    IntMatrix to_k0(kc0.generators, middle.generators);
    for (std::size_t i = 0; i < h2.generators; ++i) to_k0(1 + i, kh1.generators + i) = 1;
    IntMatrix dim_map(1, kc0.generators);
    dim_map(0, 0) = 1;
    odd.nodes = {PresentedGroup::zero(), kh1, middle, kc0, PresentedGroup::free(1), PresentedGroup::zero()};
    odd.maps = {IntMatrix(kh1.generators, 0), inclusion_first(kh1.generators, h2.generators), to_k0,
                dim_map, IntMatrix(0, 1)};
    r.k1 = extension_value(kh1, h2);

    r.sequences = {std::move(even), std::move(odd)};
  } else {
    r.unit_torsion = unit_torsion_order(r.chi, false);
    r.proof_sketch.push_back("Euler map vanishes: 0 -> K_i(Cred G) -> K_i(C(dX) x| G) -> K^{1-i}(G\\X) -> 0");
    r.sequences = {split_sequence("K_0(Cred G)", kh0, "K_0(C(dX) x| G)", "K^1(G\\X)", kc1),
                   split_sequence("K_1(Cred G)", kh1, "K_1(C(dX) x| G)", "K^0(G\\X)", kc0)};
    r.k0 = extension_value(kh0, kc1);
    r.k1 = extension_value(kh1, kc0);
  }
  r.proof_sketch.push_back(r.k0.resolved() && r.k1.resolved()
                               ? "extensions split: every quotient term is free"
                               : "an extension with torsion quotient is left unresolved");
  return r;
}

std::vector<ExactnessReport> verify_certificate(const GysinResult& result) {
  std::vector<ExactnessReport> reports;
  for (const ExactSequence& seq : result.sequences) reports.push_back(seq.verify());
  return reports;
}

bool ranks_balance(const GysinResult& r) {
  const std::size_t drop = r.decision.case_tag == GysinCase::compact_nonzero_chi ? 1 : 0;
  auto rank_of = [](const KGroupValue& v) {
    return v.resolved() ? v.group().rank() : v.extension().sub.rank() + v.extension().quot.rank();
  };
  return rank_of(r.k0) + drop == r.k_homology.even.rank() + r.k_theory.odd.rank() &&
         rank_of(r.k1) + drop == r.k_homology.odd.rank() + r.k_theory.even.rank();
}

// ---------------------------------------------------------- free products

FreeProductReport free_product_two_cyclic(int m, int n) {
  if (m < 2 || n < 2) throw MalformedInput("free_product_two_cyclic needs m, n >= 2");

  FreeProductReport rep;
  rep.m = m;
  rep.n = n;
  const std::string zm = "Z/" + std::to_string(m), zn = "Z/" + std::to_string(n);
  rep.orbits.orbits = {{0, zm}, {0, zn}, {1, "1"}};
  rep.orbits.stabilisers = {{zm, StabiliserOrder::of(m)}, {zn, StabiliserOrder::of(n)}, {"1", StabiliserOrder::of(1)}};
  if (m == n) rep.orbits.stabilisers[zm] = StabiliserOrder::of(m);
  rep.euler = equivariant_euler_decomposition(rep.orbits);
  rep.tau = euler_poincare_element(rep.orbits);

  const std::size_t total = static_cast<std::size_t>(m + n);
  const std::size_t reduced = total - 1;
  const std::size_t um = static_cast<std::size_t>(m);

  // Rep(Z/m) + Rep(Z/n) = Z^{m+n} in character bases; dim sums the coefficients.
  IntMatrix dim_difference(1, total);
  for (std::size_t i = 0; i < total; ++i) dim_difference(0, i) = i < um ? 1 : -1;
  // (rho_m, -rho_n) happens to have the same entries.
  const std::vector<Integer> rho_pair = dim_difference.row(0);

  CokerKer ideal = coker_and_ker(dim_difference);
  rep.k0_proper = ideal.ker;
  rep.k1_proper = ideal.coker;
  IntMatrix relation(1, total);
  for (std::size_t i = 0; i < total; ++i) relation(0, i) = rho_pair[i];
  rep.ktop0 = group_from_presentation(total, relation);
  rep.ktop1 = FGAbelianGroup::trivial();

  // Basis of ker(dim, -dim): e_i - e_0, f_j - f_0, e_0 + f_0.
  rep.proper_basis = IntMatrix(total, reduced);
  std::size_t col = 0;
  for (std::size_t i = 1; i < um; ++i, ++col) {
    rep.proper_basis(i, col) = 1;
    rep.proper_basis(0, col) = -1;
  }
  for (std::size_t j = um + 1; j < total; ++j, ++col) {
    rep.proper_basis(j, col) = 1;
    rep.proper_basis(um, col) = -1;
  }
  rep.proper_basis(0, col) = 1;
  rep.proper_basis(um, col) = 1;

  // Z^{m+n}/<(rho,-rho)> -> Z^{m+n-1}, [x] -> (x_i - x_0 r_i)_{i>=1}; an isomorphism since r_0 = 1.
  IntMatrix to_ktop(reduced, total);
  for (std::size_t i = 1; i < total; ++i) {
    to_ktop(i - 1, i) = 1;
    to_ktop(i - 1, 0) = -rho_pair[i];
  }

  // Eul(a, b) = dim_{Z/m}(a,b) + dim_{Z/n}(a,b) - dim_1(a,b) = [(a,0)] + [(0,b)] - dim(a) [(rho_m,0)].
  IntMatrix eul_ambient = IntMatrix::identity(total);
  for (std::size_t i = 0; i < um; ++i)
    for (std::size_t j = 0; j < um; ++j) eul_ambient(i, j) -= 1;
  rep.eul_matrix = to_ktop * eul_ambient * rep.proper_basis;
  rep.eul_determinant = determinant(rep.eul_matrix);

  CokerKer boundary = coker_and_ker(rep.eul_matrix);
  rep.boundary_k0 = boundary.coker;
  rep.boundary_k1 = boundary.ker;
  rep.model_dependent = !((m == 2 && n == 3) || (m == 3 && n == 2));

  // 0 -> K_0(C_0(X) x| G) -> Rep + Rep --(dim,-dim)--> Z -> K_1(C_0(X) x| G) -> 0
  rep.ideal_sequence.names = {"0", "K_0(C_0(X) x| G)", "Rep(" + zm + ") + Rep(" + zn + ")", "Z",
                              "K_1(C_0(X) x| G)", "0"};
  rep.ideal_sequence.nodes = {PresentedGroup::zero(), PresentedGroup::free(reduced), PresentedGroup::free(total),
                              PresentedGroup::free(1), PresentedGroup{1, dim_difference},
                              PresentedGroup::zero()};
  rep.ideal_sequence.maps = {IntMatrix(reduced, 0), rep.proper_basis, dim_difference, IntMatrix::identity(1),
                             IntMatrix(0, 1)};

  // 0 -> Z --(rho,-rho)--> Rep + Rep -> K^top_0(G) -> 0
  IntMatrix rho_column(total, 1);
  for (std::size_t i = 0; i < total; ++i) rho_column(i, 0) = rho_pair[i];
  rep.assembly_sequence.names = {"0", "Z", "Rep(" + zm + ") + Rep(" + zn + ")", "K^top_0(G)", "0"};
  rep.assembly_sequence.nodes = {PresentedGroup::zero(), PresentedGroup::free(1), PresentedGroup::free(total),
                                 PresentedGroup::free(reduced), PresentedGroup::zero()};
  rep.assembly_sequence.maps = {IntMatrix(1, 0), rho_column, to_ktop, IntMatrix(0, reduced)};

  // K_0(C_0X x| G) -Eul-> K^top_0 -> K_0(dX) -> K_1(C_0X x| G) = 0 -> K^top_1 = 0 -> K_1(dX) -> back
  IntMatrix kernel = kernel_basis(rep.eul_matrix);
  rep.six_term.cyclic = true;
  rep.six_term.names = {"K_0(C_0(X) x| G)", "K^top_0(G)", "K_0(C(dX) x| G)", "K_1(C_0(X) x| G)",
                        "K^top_1(G)", "K_1(C(dX) x| G)"};
  rep.six_term.nodes = {PresentedGroup::free(reduced),
                        PresentedGroup::free(reduced),
                        PresentedGroup{reduced, rep.eul_matrix},
                        PresentedGroup::zero(),
                        PresentedGroup::zero(),
                        PresentedGroup::free(kernel.cols())};
  rep.six_term.maps = {rep.eul_matrix,       IntMatrix::identity(reduced), IntMatrix(0, reduced),
                       IntMatrix(0, 0),      IntMatrix(kernel.cols(), 0),  kernel};

  rep.derivation = {
      "tree with orbits (0," + zm + "), (0," + zn + "), (1,1)",
      "Eul = " + rep.euler.to_string(),
      "K_0(C_0(X) x| G) = ker((dim,-dim): Rep(" + zm + ") + Rep(" + zn + ") -> Z)",
      "K^top_0(G) = (Rep(" + zm + ") + Rep(" + zn + "))/<(rho,-rho)>",
      "dim_{" + zm + "}(a,b) = [(a,0)], dim_{" + zn + "}(a,b) = [(0,b)], dim_{1}(a,b) = dim(a)[(rho_" +
          std::to_string(m) + ",0)] using i_1(1) = i_{" + zm + "}(rho_" + std::to_string(m) + ")",
      "boundary K_0 = coker(Eul), boundary K_1 = ker(Eul)",
  };
  if (rep.model_dependent)
    rep.derivation.push_back("model-dependent: only the committed matrix above is verified");
  return rep;
}

std::vector<ExactnessReport> verify_certificate(const FreeProductReport& report) {
  return {report.ideal_sequence.verify(), report.assembly_sequence.verify(), report.six_term.verify()};
}

} // namespace gysinkit
