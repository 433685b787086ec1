#include "gysinkit/json_io.hpp"

#include <set>

namespace gysinkit {

Json parse_json_text(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw MalformedInput(source + ": malformed JSON: " + e.what());
  }
}

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw MalformedInput("at " + (path.empty() ? std::string("/") : path) + ": " + what);
}

const Json& field(const Json& j, const std::string& path, const char* key) {
  if (!j.is_object()) fail(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(path, std::string("missing field \"") + key + "\"");
  return *it;
}

const Json& array_at(const Json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
  return j;
}

long integer_at(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  return j.get<long>();
}

int int_key(const std::string& key, const std::string& path) {
  try {
    std::size_t used = 0;
    int v = std::stoi(key, &used);
    if (used == key.size()) return v;
  } catch (const std::exception&) {
  }
  fail(path, "key \"" + key + "\" is not an integer");
}

std::string join(const std::string& path, std::size_t i) { return path + "/" + std::to_string(i); }
std::string join(const std::string& path, const std::string& key) { return path + "/" + key; }

Integer integer_from(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (!j.is_string()) fail(path, "expected a decimal string or integer");
  Integer z;
  if (z.set_str(j.get<std::string>(), 10) != 0) fail(path, "not a decimal integer: " + j.get<std::string>());
  return z;
}

} // namespace

// --------------------------------------------------------------- complex

ComplexInput complex_from_json(const Json& j) {
  const Json& tops = array_at(field(j, "", "maximal_simplices"), "/maximal_simplices");
  if (tops.empty()) fail("/maximal_simplices", "a complex needs at least one simplex");
  std::vector<Simplex> simplices;
  for (std::size_t i = 0; i < tops.size(); ++i) {
    const std::string path = join("/maximal_simplices", i);
    std::vector<VertexId> vs;
    for (std::size_t k = 0; k < array_at(tops[i], path).size(); ++k)
      vs.push_back(static_cast<VertexId>(integer_at(tops[i][k], join(path, k))));
    try {
      simplices.emplace_back(std::move(vs));
    } catch (const MalformedInput& e) {
      fail(path, e.what());
    }
  }
  ComplexInput in{SimplicialComplex::close_under_faces(simplices), std::nullopt};
  if (auto it = j.find("colouring"); it != j.end()) {
    if (!it->is_object()) fail("/colouring", "expected an object");
    Colouring nu;
    for (const auto& [key, value] : it->items())
      nu[int_key(key, "/colouring")] = static_cast<int>(integer_at(value, join("/colouring", key)));
    if (auto bad = validate_colouring(in.complex, nu)) fail("/colouring", bad->reason);
    in.colouring = std::move(nu);
  }
  return in;
}

Json complex_to_json(const SimplicialComplex& c, const std::optional<Colouring>& nu) {
  Json j;
  j["maximal_simplices"] = Json::array();
  for (const Simplex& s : c.maximal_simplices()) j["maximal_simplices"].push_back(s.vertices());
  if (nu) {
    Json colours = Json::object();
    for (const auto& [v, colour] : *nu) colours[std::to_string(v)] = colour;
    j["colouring"] = colours;
  }
  return j;
}

// ---------------------------------------------------------------- action

ExplicitAction action_from_json(const Json& j, const SimplicialComplex& c) {
  const Json& table_json = array_at(field(field(j, "", "group"), "/group", "table"), "/group/table");
  std::vector<std::vector<GroupElement>> table;
  for (std::size_t r = 0; r < table_json.size(); ++r) {
    const std::string path = join("/group/table", r);
    std::vector<GroupElement> row;
    for (std::size_t k = 0; k < array_at(table_json[r], path).size(); ++k)
      row.push_back(static_cast<GroupElement>(integer_at(table_json[r][k], join(path, k))));
    table.push_back(std::move(row));
  }
  FiniteGroup group = [&] {
    try {
      return FiniteGroup(std::move(table));
    } catch (const MalformedInput& e) {
      fail("/group/table", e.what());
    }
  }();

  const Json& perms = field(j, "", "vertex_perms");
  if (!perms.is_object()) fail("/vertex_perms", "expected an object keyed by group element");
  const std::vector<VertexId>& vertices = c.vertices();
  std::vector<std::map<VertexId, VertexId>> maps(static_cast<std::size_t>(group.order()));
  std::vector<bool> seen(maps.size(), false);
  for (const auto& [key, images] : perms.items()) {
    const std::string path = join("/vertex_perms", key);
    const int g = int_key(key, "/vertex_perms");
    if (g < 0 || g >= group.order()) fail(path, "no such group element");
    if (array_at(images, path).size() != vertices.size())
      fail(path, "expected " + std::to_string(vertices.size()) + " images, one per vertex in ascending order");
    for (std::size_t i = 0; i < vertices.size(); ++i)
      maps[static_cast<std::size_t>(g)][vertices[i]] = static_cast<VertexId>(integer_at(images[i], join(path, i)));
    seen[static_cast<std::size_t>(g)] = true;
  }
  for (std::size_t g = 0; g < seen.size(); ++g)
    if (!seen[g]) fail("/vertex_perms", "missing permutation for element " + std::to_string(g));
  return ExplicitAction{std::move(group), std::move(maps)};
}

Json action_to_json(const SimplicialComplex& c, const ExplicitAction& a) {
  Json j;
  j["group"]["table"] = a.group.table();
  Json perms = Json::object();
  for (GroupElement g = 0; g < a.group.order(); ++g) {
    Json images = Json::array();
    for (VertexId v : c.vertices()) images.push_back(a.apply(g, v));
    perms[std::to_string(g)] = images;
  }
  j["vertex_perms"] = perms;
  return j;
}

// ------------------------------------------------------------ orbit data

OrbitData orbit_data_from_json(const Json& j) {
  OrbitData d;
  const Json& orbits = array_at(field(j, "", "orbits"), "/orbits");
  for (std::size_t i = 0; i < orbits.size(); ++i) {
    const std::string path = join("/orbits", i);
    const Json& stab = field(orbits[i], path, "stab");
    if (!stab.is_string()) fail(join(path, "stab"), "expected a label string");
    d.orbits.push_back({static_cast<int>(integer_at(field(orbits[i], path, "dim"), join(path, "dim"))),
                        stab.get<std::string>()});
  }
  const Json& stabs = field(j, "", "stabilizers");
  if (!stabs.is_object()) fail("/stabilizers", "expected an object");
  for (const auto& [label, order] : stabs.items()) {
    const std::string path = join("/stabilizers", label);
    if (order.is_string()) {
      d.stabilisers[label] = StabiliserOrder::infinite(order.get<std::string>());
    } else {
      const long n = integer_at(order, path);
      if (n < 1) fail(path, "stabiliser order must be positive");
      d.stabilisers[label] = StabiliserOrder::of(n);
    }
  }
  try {
    d.validate();
  } catch (const MalformedInput& e) {
    fail("/orbits", e.what());
  }
  return d;
}

Json orbit_data_to_json(const OrbitData& d) {
  Json j;
  j["orbits"] = Json::array();
  for (const OrbitRecord& o : d.orbits) j["orbits"].push_back({{"dim", o.dim}, {"stab", o.stabiliser}});
  Json stabs = Json::object();
  for (const auto& [label, order] : d.stabilisers) {
    if (order.is_finite()) stabs[label] = order.finite->get_si();
    else stabs[label] = order.symbol;
  }
  j["stabilizers"] = stabs;
  return j;
}

// ------------------------------------------------------- linear algebra

Json matrix_to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).get_str());
    rows.push_back(row);
  }
  return rows;
}

IntMatrix matrix_from_json(const Json& j) {
  array_at(j, "");
  std::vector<std::vector<Integer>> rows;
  std::size_t cols = 0;
  for (std::size_t r = 0; r < j.size(); ++r) {
    const std::string path = join("", r);
    std::vector<Integer> row;
    for (std::size_t c = 0; c < array_at(j[r], path).size(); ++c) row.push_back(integer_from(j[r][c], join(path, c)));
    if (r == 0) cols = row.size();
    else if (row.size() != cols) fail(path, "ragged matrix");
    rows.push_back(std::move(row));
  }
  return IntMatrix::from_rows(rows, cols);
}

Json group_to_json(const FGAbelianGroup& g) {
  Json torsion = Json::array();
  for (const Integer& d : g.torsion()) torsion.push_back(d.get_str());
  return {{"rank", g.rank()}, {"torsion", torsion}, {"text", g.to_string()}};
}

FGAbelianGroup group_from_json(const Json& j) {
  const long rank = integer_at(field(j, "", "rank"), "/rank");
  if (rank < 0) fail("/rank", "rank must be nonnegative");
  std::vector<Integer> torsion;
  const Json& t = array_at(field(j, "", "torsion"), "/torsion");
  for (std::size_t i = 0; i < t.size(); ++i) torsion.push_back(integer_from(t[i], join("/torsion", i)));
  try {
    return FGAbelianGroup(static_cast<std::size_t>(rank), std::move(torsion));
  } catch (const MalformedInput& e) {
    fail("/torsion", e.what());
  }
}

Json graded_to_json(const GradedGroup& g) {
  Json out = Json::array();
  for (const FGAbelianGroup& h : g.groups) out.push_back(group_to_json(h));
  return out;
}

// --------------------------------------------------------------- reports

Json euler_to_json(const EulerDecomposition& e) {
  Json terms = Json::array();
  for (const EulerTerm& t : e.terms)
    terms.push_back({{"stabiliser", t.stabiliser_class}, {"component", t.component}, {"multiplicity", t.multiplicity}});
  return {{"terms", terms}, {"text", e.to_string()}};
}

Json tau_to_json(const FormalTau& t) {
  Json terms = Json::array();
  for (const TauTerm& x : t.terms)
    terms.push_back({{"stabiliser", x.stabiliser}, {"order", x.order.get_str()}, {"sign", x.sign},
                     {"multiplicity", x.multiplicity}});
  return {{"terms", terms}, {"text", t.to_string()}, {"trace", t.trace().get_str()}};
}

Json k_value_to_json(const KGroupValue& v) {
  if (v.resolved()) return {{"status", "resolved"}, {"group", group_to_json(v.group())}};
  return {{"status", "unresolved-extension"},
          {"sub", group_to_json(v.extension().sub)},
          {"quot", group_to_json(v.extension().quot)}};
}

Json exactness_to_json(const std::string& name, const ExactnessReport& r) {
  Json checks = Json::array();
  for (const ExactnessCheck& c : r.checks) checks.push_back({{"node", c.node}, {"exact", c.exact}, {"detail", c.detail}});
  return {{"name", name},
          {"passed", r.exact() && r.alternating_rank_sum == 0},
          {"alternating_rank_sum", r.alternating_rank_sum},
          {"checks", checks}};
}

Json gysin_to_json(const GysinResult& r) {
  Json j;
  j["case_tag"] = to_string(r.decision.case_tag);
  j["override"] = r.decision.overridden;
  j["chi"] = r.chi;
  j["compact"] = r.compact;
  j["K0"] = k_value_to_json(r.k0);
  j["K1"] = k_value_to_json(r.k1);
  j["unit_torsion"] = r.unit_torsion.to_string();
  j["inputs"] = {{"K^0", group_to_json(r.k_theory.even)},
                 {"K^1", group_to_json(r.k_theory.odd)},
                 {"K_0", group_to_json(r.k_homology.even)},
                 {"K_1", group_to_json(r.k_homology.odd)}};
  j["proof_sketch"] = r.proof_sketch;
  return j;
}

Json free_product_to_json(const FreeProductReport& r) {
  Json j;
  j["m"] = r.m;
  j["n"] = r.n;
  j["orbits"] = orbit_data_to_json(r.orbits);
  j["euler"] = euler_to_json(r.euler);
  j["tau"] = tau_to_json(r.tau);
  j["Ktop0"] = group_to_json(r.ktop0);
  j["Ktop1"] = group_to_json(r.ktop1);
  j["K0_proper"] = group_to_json(r.k0_proper);
  j["K1_proper"] = group_to_json(r.k1_proper);
  j["proper_basis"] = matrix_to_json(r.proper_basis);
  j["eul_matrix"] = matrix_to_json(r.eul_matrix);
  j["eul_determinant"] = r.eul_determinant.get_str();
  j["boundary_K0"] = group_to_json(r.boundary_k0);
  j["boundary_K1"] = group_to_json(r.boundary_k1);
  j["model_dependent"] = r.model_dependent;
  j["derivation"] = r.derivation;
  return j;
}

Json dual_rows_to_json(const std::vector<DualCheckRow>& rows) {
  Json out = Json::array();
  for (const DualCheckRow& r : rows) {
    Json row = {{"check", r.name}, {"passed", r.passed()}, {"samples", r.samples}, {"counterexamples", r.counterexamples}};
    if (!r.first_counterexample.empty()) row["first_counterexample"] = r.first_counterexample;
    out.push_back(row);
  }
  return out;
}

} // namespace gysinkit
