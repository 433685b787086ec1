#include "gysinkit/cli.hpp"

#include "gysinkit/builders.hpp"
#include "gysinkit/dual_geometry.hpp"
#include "gysinkit/gysin.hpp"
#include "gysinkit/homology.hpp"
#include "gysinkit/json_io.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace gysinkit::cli {

std::uint64_t fnv1a(const std::string& bytes, std::uint64_t seed) {
  std::uint64_t h = seed;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

namespace {

struct Claim {
  std::string name;
  std::string value;
  std::string check;
};

struct Certificate {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Everything a subcommand reports; rendered as text or JSON.
struct Report {
  std::string command;
  std::uint64_t digest = 0;
  std::string branch;
  std::vector<Claim> claims;
  std::vector<Certificate> certificates;
  Json results = Json::object();
  std::vector<std::string> lines;

  void digest_input(const std::string& bytes) {
    digest = fnv1a(bytes, digest == 0 ? 0xcbf29ce484222325ULL : digest);
  }
  void claim(std::string name, std::string value, std::string check) {
    claims.push_back({std::move(name), std::move(value), std::move(check)});
  }
  void certify(std::string name, bool passed, std::string detail = "") {
    certificates.push_back({std::move(name), passed, std::move(detail)});
  }
  bool all_passed() const {
    for (const Certificate& c : certificates)
      if (!c.passed) return false;
    return true;
  }

  std::string digest_hex() const {
    std::ostringstream os;
    os << "fnv1a64:" << std::hex << std::setw(16) << std::setfill('0') << digest;
    return os.str();
  }

  void write(std::ostream& out, bool json) const {
    if (json) {
      Json j;
      j["command"] = command;
      j["input_digest"] = digest_hex();
      if (!branch.empty()) j["branch"] = branch;
      Json cs = Json::array();
      for (const Claim& c : claims) cs.push_back({{"claim", c.name}, {"value", c.value}, {"check", c.check}});
      j["claims"] = cs;
      j["results"] = results;
      Json certs = Json::array();
      for (const Certificate& c : certificates) {
        Json e = {{"name", c.name}, {"passed", c.passed}};
        if (!c.detail.empty()) e["detail"] = c.detail;
        certs.push_back(e);
      }
      j["certificates"] = certs;
      out << j.dump(2) << "\n";
      return;
    }
    out << "gysinkit " << command << "\n";
    out << "input digest: " << digest_hex() << "\n";
    if (!branch.empty()) out << "branch: " << branch << "\n";
    for (const Claim& c : claims) out << c.name << " = " << c.value << "    [" << c.check << "]\n";
    if (!certificates.empty()) {
      out << "certificates:\n";
      for (const Certificate& c : certificates)
        out << "  " << (c.passed ? "PASS " : "FAIL ") << c.name << (c.detail.empty() ? "" : ": " + c.detail)
            << "\n";
    }
    for (const std::string& l : lines) out << l << "\n";
  }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MalformedInput("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Json load_json(Report& report, const std::string& path) {
  const std::string text = read_file(path);
  report.digest_input(text);
  return parse_json_text(text, path);
}

CollapseMode parse_mode(const std::string& mode) {
  if (mode == "strict") return CollapseMode::strict;
  if (mode == "assume-collapse") return CollapseMode::assume_collapse;
  throw MalformedInput("--mode must be strict or assume-collapse");
}

void add_sequence_certificates(Report& report, const std::vector<std::string>& names,
                               const std::vector<ExactnessReport>& checks) {
  Json certs = Json::array();
  for (std::size_t i = 0; i < checks.size(); ++i) {
    const ExactnessReport& r = checks[i];
    std::string detail = "alternating rank sum " + std::to_string(r.alternating_rank_sum);
    for (const ExactnessCheck& c : r.checks)
      if (!c.exact) detail += "; not exact at " + c.node + " (" + c.detail + ")";
    report.certify(names[i] + ": image = kernel at every node", r.exact() && r.alternating_rank_sum == 0, detail);
    certs.push_back(exactness_to_json(names[i], r));
  }
  report.results["exactness"] = certs;
}

// ---------------------------------------------------------- subcommands

void cmd_chi(Report& report, const std::string& file) {
  ComplexInput in = complex_from_json(load_json(report, file));
  const long chi = euler_char(in.complex);
  const GradedGroup h = homology(in.complex);
  long alternating = 0;
  for (int k = 0; k <= h.top_degree(); ++k) alternating += (k % 2 ? -1 : 1) * static_cast<long>(h[k].rank());
  std::vector<std::size_t> f;
  for (int k = 0; k <= in.complex.dim(); ++k) f.push_back(in.complex.count(k));
  report.claim("chi", std::to_string(chi), "alternating Betti sum agrees");
  report.certify("sum (-1)^k rank H_k = chi", alternating == chi, "Betti sum " + std::to_string(alternating));
  report.results = {{"chi", chi}, {"dim", in.complex.dim()}, {"f_vector", f}};
}

void cmd_homology(Report& report, const std::string& file) {
  ComplexInput in = complex_from_json(load_json(report, file));
  const ChainComplexZ chains = chain_complex(in.complex);
  const GradedGroup h = homology(chains), co = cohomology(chains);
  report.certify("d o d = 0", chains.squares_to_zero());
  for (int k = 0; k <= h.top_degree(); ++k) {
    report.claim("H_" + std::to_string(k), h[k].to_string(), "Smith normal form of boundary maps");
    report.claim("H^" + std::to_string(k), co[k].to_string(), "Smith normal form of coboundary maps");
  }
  // Universal coefficients: rank H^k = rank H_k, torsion H^k = torsion H_{k-1}.
  bool uct = true;
  for (int k = 0; k <= h.top_degree(); ++k)
    uct = uct && co[k].rank() == h[k].rank() && co[k].torsion() == h[k - 1].torsion();
  report.certify("universal coefficients between H_* and H^*", uct);
  report.results = {{"homology", graded_to_json(h)}, {"cohomology", graded_to_json(co)}};
}

void cmd_ktheory(Report& report, const std::string& file, const std::string& mode_text) {
  const CollapseMode mode = parse_mode(mode_text);
  ComplexInput in = complex_from_json(load_json(report, file));
  const KGroups k = k_groups(in.complex, mode);
  const KGroups kh = k_homology(in.complex, mode);
  report.branch = in.complex.dim() <= 2 ? "Atiyah-Hirzebruch collapse (dimension <= 2)"
                                        : "assumed collapse in dimension 3 (d_3 not computed)";
  report.claim("K^0", k.even.to_string(), "H^0 + H^2 by cellular cohomology");
  report.claim("K^1", k.odd.to_string(), "H^1 + H^3 by cellular cohomology");
  report.claim("K_0", kh.even.to_string(), "H_0 + H_2 by cellular homology");
  report.claim("K_1", kh.odd.to_string(), "H_1 + H_3 by cellular homology");
  const long chi = euler_char(in.complex);
  report.certify("rank K^0 - rank K^1 = chi",
                 static_cast<long>(k.even.rank()) - static_cast<long>(k.odd.rank()) == chi);
  report.results = {{"mode", mode_text},
                    {"K^0", group_to_json(k.even)},
                    {"K^1", group_to_json(k.odd)},
                    {"K_0", group_to_json(kh.even)},
                    {"K_1", group_to_json(kh.odd)}};
}

void euler_orbit_mode(Report& report, const OrbitData& data) {
  const EulerDecomposition e = equivariant_euler_decomposition(data);
  report.branch = "orbit mode: one fixed component per stabiliser label";
  long chi = 0;
  for (const OrbitRecord& o : data.orbits) chi += o.dim % 2 ? -1 : 1;
  report.claim("Eul", e.to_string(), "alternating orbit count per stabiliser label");
  report.certify("multiplicities sum to chi(G\\X)", e.total() == chi, "chi(G\\X) = " + std::to_string(chi));
  report.results["euler"] = euler_to_json(e);
  report.results["orbits"] = orbit_data_to_json(data);
  try {
    const FormalTau tau = euler_poincare_element(data);
    report.claim("tau", tau.to_string(), "signed orbit count per stabiliser");
    report.claim("trace(tau)", tau.trace().get_str(), "sum of sign * multiplicity / |G_sigma|");
    report.results["tau"] = tau_to_json(tau);
  } catch (const MalformedInput& ex) {
    report.lines.push_back(std::string("tau omitted: ") + ex.what());
  }
}

void euler_explicit_mode(Report& report, const SimplicialComplex& c, const ExplicitAction& a) {
  const PreparedAction p = prepare_action(c, a);
  report.branch = p.subdivisions == 0 ? "explicit action, stabilisers fix their simplices pointwise"
                                      : "explicit action after " + std::to_string(p.subdivisions) +
                                            " barycentric subdivision(s)";
  const EulerDecomposition e = equivariant_euler_decomposition(p.complex, p.action);
  const long chi = quotient_euler_char(p.complex, p.action);
  report.claim("Eul", e.to_string(), "orbits counted per stabiliser class and N(H)-component");
  report.claim("chi(G\\X)", std::to_string(chi), "alternating orbit count");
  report.certify("multiplicities sum to chi(G\\X)", e.total() == chi);
  const FormalTau tau = euler_poincare_element(p.complex, p.action);
  report.claim("tau", tau.to_string(), "signed orbit count per stabiliser");
  report.claim("trace(tau)", tau.trace().get_str(), "sum of sign * multiplicity / |G_sigma|");

  Json orbits = Json::array();
  for (const OrbitInfo& o : orbits_and_stabilisers(p.complex, p.action))
    orbits.push_back({{"representative", o.representative.vertices()},
                      {"orbit_size", o.orbit_size},
                      {"stabiliser", subgroup_label(p.action.group, o.stabiliser)}});
  report.results = {{"subdivisions", p.subdivisions},
                    {"orbits", orbits},
                    {"chi_quotient", chi},
                    {"euler", euler_to_json(e)},
                    {"tau", tau_to_json(tau)}};
}

void cmd_euler(Report& report, const std::string& file, const std::string& action_file,
               const std::string& orbits_file) {
  if (!orbits_file.empty()) return euler_orbit_mode(report, orbit_data_from_json(load_json(report, orbits_file)));
  if (file.empty()) throw MalformedInput("euler-comb needs a complex file or --orbits");
  Json j = load_json(report, file);
  if (j.is_object() && j.contains("orbits")) return euler_orbit_mode(report, orbit_data_from_json(j));
  if (j.is_object() && j.contains("complex") && j.contains("action")) {
    ComplexInput in = complex_from_json(j["complex"]);
    return euler_explicit_mode(report, in.complex, action_from_json(j["action"], in.complex));
  }
  if (action_file.empty()) throw MalformedInput("euler-comb on a bare complex needs --action");
  ComplexInput in = complex_from_json(j);
  euler_explicit_mode(report, in.complex, action_from_json(load_json(report, action_file), in.complex));
}

void cmd_gysin(Report& report, const std::string& file, bool noncompact, bool fixed_point) {
  ComplexInput in = complex_from_json(load_json(report, file));
  report.digest_input(noncompact ? "noncompact" : "compact");
  report.digest_input(fixed_point ? "fixed" : "free");
  const GysinResult r = gysin_torsion_free(in.complex, GysinOptions{!noncompact, fixed_point});
  report.branch = to_string(r.decision.case_tag) + ": " + r.decision.note;
  const std::string seq = r.decision.case_tag == GysinCase::compact_nonzero_chi
                              ? "0 -> <chi [1]> -> K_0(Cred G) -> K_0 -> K^1 -> 0 and 0 -> K_1(Cred G) -> K_1 -> K^0 -> Z -> 0"
                              : "0 -> K_i(Cred G) -> K_i -> K^{1-i} -> 0";
  report.claim("chi(G\\X)", std::to_string(r.chi), "alternating simplex count");
  report.claim("K_0(C(dX) x| G)", r.k0.to_string(), seq);
  report.claim("K_1(C(dX) x| G)", r.k1.to_string(), seq);
  report.claim("order of [1]", r.unit_torsion.to_string(), "|chi| iff compact and chi != 0");
  add_sequence_certificates(report, {"even sequence", "odd sequence"}, verify_certificate(r));
  report.certify("rank bookkeeping", ranks_balance(r));
  Json exactness = report.results["exactness"];
  report.results = gysin_to_json(r);
  report.results["exactness"] = exactness;
  for (const std::string& s : r.proof_sketch) report.lines.push_back("  " + s);
}

void cmd_free_product(Report& report, int m, int n) {
  report.digest_input(std::to_string(m) + "*" + std::to_string(n));
  const FreeProductReport r = free_product_two_cyclic(m, n);
  report.branch = r.model_dependent ? "free product of two finite cyclic groups (model-dependent)"
                                    : "free product Z/2 * Z/3";
  report.claim("Eul", r.euler.to_string(), "alternating orbit count per stabiliser label");
  report.claim("K^top_0(G)", r.ktop0.to_string(), "cokernel of Z -> Rep + Rep, 1 -> (rho, -rho)");
  report.claim("K_0(C_0(X) x| G)", r.k0_proper.to_string(), "kernel of (dim, -dim)");
  report.claim("K_1(C_0(X) x| G)", r.k1_proper.to_string(), "cokernel of (dim, -dim)");
  report.claim("det Eul", r.eul_determinant.get_str(), "fraction-free determinant");
  report.claim("K_0(C(dX) x| G)", r.boundary_k0.to_string(), "coker Eul by Smith normal form");
  report.claim("K_1(C(dX) x| G)", r.boundary_k1.to_string(), "ker Eul by Smith normal form");
  add_sequence_certificates(report, {"ideal sequence", "assembly sequence", "six-term sequence"},
                            verify_certificate(r));
  Json exactness = report.results["exactness"];
  report.results = free_product_to_json(r);
  report.results["exactness"] = exactness;
  report.lines.push_back("Eul matrix:");
  std::istringstream rows(r.eul_matrix.to_string());
  for (std::string line; std::getline(rows, line);) report.lines.push_back("  " + line);
  for (const std::string& d : r.derivation) report.lines.push_back("  " + d);
  if (r.boundary_k0.is_trivial() && r.boundary_k1.is_trivial())
    report.lines.push_back("boundary K-theory vanishes");
  else
    report.lines.push_back("boundary K-theory: K_0 = " + r.boundary_k0.to_string() +
                           ", K_1 = " + r.boundary_k1.to_string() + " (model-dependent)");
}

void cmd_verify_dual(Report& report, int n, const std::string& L_text, const std::string& lambda_text,
                     const std::string& complex_file) {
  if (n < 1) throw MalformedInput("--n must be at least 1");
  if (n > 4) throw Unsupported("verify-dual samples dimensions n <= 4 only");
  Rational L = L_text.empty() ? Rational(1, 2 * (n + 1)) : parse_rational(L_text);
  Rational lambda = lambda_text.empty() ? 2 * critical_lambda(L, n) : parse_rational(lambda_text);
  DualSuiteOptions options{DualParams::make(n, L, lambda), grid_from_environment(), {}};
  report.digest_input("n=" + std::to_string(n) + ";L=" + L.get_str() + ";lambda=" + lambda.get_str() +
                      ";grid=" + options.grid.name);
  if (!complex_file.empty()) {
    ComplexInput in = complex_from_json(load_json(report, complex_file));
    if (in.complex.dim() > 3 && !in.colouring) throw Unsupported("verify-dual subdivides complexes of dimension <= 3 only");
    options.complexes.push_back(coloured_model(in.complex, in.colouring));
  }
  report.branch = "L = " + L.get_str() + ", lambda = " + lambda.get_str() + ", delta = " +
                  options.params.delta.get_str() + ", grid " + options.grid.name;
  const std::vector<DualCheckRow> rows = run_dual_suite(options);
  std::size_t width = 0;
  for (const DualCheckRow& r : rows) width = std::max(width, r.name.size());
  for (const DualCheckRow& r : rows) {
    std::ostringstream line;
    line << (r.passed() ? "PASS  " : "FAIL  ") << std::left << std::setw(static_cast<int>(width)) << r.name
         << "  samples " << r.samples;
    if (!r.passed()) line << "  counterexamples " << r.counterexamples << "  first: " << r.first_counterexample;
    report.lines.push_back(line.str());
    report.certificates.push_back({r.name, r.passed(), ""});
  }
  report.results = {{"n", n}, {"L", L.get_str()}, {"lambda", lambda.get_str()},
                    {"delta", options.params.delta.get_str()}, {"grid", options.grid.name},
                    {"rows", dual_rows_to_json(rows)}};
}

int positive_param(const std::vector<std::string>& params, std::size_t i, const std::string& family) {
  if (params.size() <= i) throw MalformedInput("make " + family + " needs an integer parameter");
  try {
    std::size_t used = 0;
    int v = std::stoi(params[i], &used);
    if (used == params[i].size()) return v;
  } catch (const std::exception&) {
  }
  throw MalformedInput("make " + family + ": '" + params[i] + "' is not an integer");
}

Json cmd_make(const std::string& family, const std::vector<std::string>& params) {
  auto action_json = [](const ActionExample& e) {
    return Json{{"complex", complex_to_json(e.complex)}, {"action", action_to_json(e.complex, e.action)}};
  };
  if (family == "wedge") return complex_to_json(wedge_of_circles(positive_param(params, 0, family)));
  if (family == "surface") return complex_to_json(surface(positive_param(params, 0, family)));
  if (family == "circle") return complex_to_json(wedge_of_circles(1));
  if (family == "torus") return complex_to_json(surface(1));
  if (family == "rp2") return complex_to_json(real_projective_plane());
  if (family == "sphere") return complex_to_json(sphere());
  if (family == "point") return complex_to_json(point());
  if (family == "interval") return complex_to_json(interval());
  if (family == "disk") return complex_to_json(filled_triangle());
  if (family == "tetrahedron") return complex_to_json(solid_tetrahedron());
  if (family == "psl2z") return orbit_data_to_json(psl2z_tree_orbits());
  if (family == "free-product")
    return orbit_data_to_json(free_product_tree_orbits(positive_param(params, 0, family), positive_param(params, 1, family)));
  if (family == "reflection-circle") return action_json(reflection_circle());
  if (family == "rotating-triangle") return action_json(rotating_triangle());
  if (family == "edge-flip") return action_json(edge_flip());
  throw MalformedInput("unknown family '" + family +
                       "' (wedge N, surface G, circle, torus, rp2, sphere, point, interval, disk, tetrahedron, "
                       "psl2z, free-product M N, reflection-circle, rotating-triangle, edge-flip)");
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Equivariant Euler characteristics and boundary crossed-product K-theory", "gysinkit"};
  app.require_subcommand(1);

  bool json = false;
  std::string file, action_file, orbits_file, mode = "strict", L_text, lambda_text, complex_file, family;
  bool compact = false, noncompact = false, fixed_point = false;
  int m = 0, n = 0, dual_n = 2;
  std::vector<std::string> params;

  auto with_json = [&](CLI::App* sub) { sub->add_flag("--json", json, "Machine-readable JSON output only"); };

  CLI::App* chi = app.add_subcommand("chi", "Euler characteristic of a complex");
  chi->add_option("complex", file, "Complex JSON file")->required();
  with_json(chi);

  CLI::App* hom = app.add_subcommand("homology", "Integral homology and cohomology");
  hom->add_option("complex", file, "Complex JSON file")->required();
  with_json(hom);

  CLI::App* kth = app.add_subcommand("ktheory", "K-theory and K-homology via the Atiyah-Hirzebruch sequence");
  kth->add_option("complex", file, "Complex JSON file")->required();
  kth->add_option("--mode", mode, "strict (dim <= 2) or assume-collapse (dim <= 3)");
  with_json(kth);

  CLI::App* eul = app.add_subcommand("euler-comb", "Combinatorial equivariant Euler characteristic");
  eul->add_option("input", file, "Complex, {complex, action} or orbit-data JSON file");
  eul->add_option("--action", action_file, "Action JSON file for a bare complex");
  eul->add_option("--orbits", orbits_file, "Orbit-data JSON file");
  with_json(eul);

  CLI::App* gys = app.add_subcommand("gysin", "Boundary K-theory for a torsion-free group from its quotient");
  gys->add_option("--quotient", file, "Quotient complex JSON file")->required();
  auto* c_flag = gys->add_flag("--compact", compact, "The quotient is compact (default)");
  gys->add_flag("--noncompact", noncompact, "The quotient is not compact")->excludes(c_flag);
  gys->add_flag("--fixed-boundary-point", fixed_point, "The boundary has a G-fixed point");
  with_json(gys);

  CLI::App* fp = app.add_subcommand("free-product", "Boundary K-theory of Z/m * Z/n");
  fp->add_option("m", m, "First cyclic order")->required();
  fp->add_option("n", n, "Second cyclic order")->required();
  with_json(fp);

  CLI::App* dual = app.add_subcommand("verify-dual", "Exact checks of the dual region geometry");
  dual->add_option("--n", dual_n, "Dimension of the simplex (1..4)");
  dual->add_option("--L", L_text, "Threshold L in (0, 1/(n+1))");
  dual->add_option("--lambda", lambda_text, "Expansion factor lambda");
  dual->add_option("--complex", complex_file, "Complex JSON file, coloured or to be subdivided");
  with_json(dual);

  CLI::App* make = app.add_subcommand("make", "Emit a built-in example as JSON");
  make->add_option("family", family, "Example family")->required();
  make->add_option("params", params, "Family parameters");

  std::vector<const char*> argv{"gysinkit"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return validation_error;
  }

  Report report;
  try {
    if (make->parsed()) {
      out << cmd_make(family, params).dump(2) << "\n";
      return success;
    }
    report.digest_input(app.get_subcommands().front()->get_name());
    if (chi->parsed()) {
      report.command = "chi";
      cmd_chi(report, file);
    } else if (hom->parsed()) {
      report.command = "homology";
      cmd_homology(report, file);
    } else if (kth->parsed()) {
      report.command = "ktheory";
      cmd_ktheory(report, file, mode);
    } else if (eul->parsed()) {
      report.command = "euler-comb";
      cmd_euler(report, file, action_file, orbits_file);
    } else if (gys->parsed()) {
      report.command = "gysin";
      cmd_gysin(report, file, noncompact, fixed_point);
    } else if (fp->parsed()) {
      report.command = "free-product";
      cmd_free_product(report, m, n);
    } else if (dual->parsed()) {
      report.command = "verify-dual";
      cmd_verify_dual(report, dual_n, L_text, lambda_text, complex_file);
    }
  } catch (const Unsupported& e) {
    err << "unsupported: " << e.what() << "\n";
    return unsupported;
  } catch (const MalformedInput& e) {
    err << "invalid input: " << e.what() << "\n";
    return validation_error;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return validation_error;
  }
  report.write(out, json);
  return report.all_passed() ? success : check_failed;
}

} // namespace gysinkit::cli
