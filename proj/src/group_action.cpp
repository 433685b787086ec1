#include "gysinkit/group_action.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace gysinkit {

// ------------------------------------------------------------ FiniteGroup

FiniteGroup::FiniteGroup(std::vector<std::vector<GroupElement>> table) : table_(std::move(table)) {
  const int n = order();
  if (n == 0) throw MalformedInput("a group needs at least one element");
  for (const auto& row : table_) {
    if (static_cast<int>(row.size()) != n) throw MalformedInput("multiplication table is not square");
    for (GroupElement x : row)
      if (x < 0 || x >= n) throw MalformedInput("multiplication table entry out of range");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
          throw MalformedInput("multiplication table is not associative");

  identity_ = -1;
  for (int e = 0; e < n && identity_ < 0; ++e) {
    bool ok = true;
    for (int g = 0; g < n && ok; ++g) ok = table_[e][g] == g && table_[g][e] == g;
    if (ok) identity_ = e;
  }
  if (identity_ < 0) throw MalformedInput("multiplication table has no identity");

  inverse_.assign(static_cast<std::size_t>(n), -1);
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h)
      if (table_[g][h] == identity_ && table_[h][g] == identity_) inverse_[static_cast<std::size_t>(g)] = h;
  if (std::find(inverse_.begin(), inverse_.end(), -1) != inverse_.end())
    throw MalformedInput("some element has no inverse");
}

FiniteGroup FiniteGroup::cyclic(int n) {
  if (n < 1) throw MalformedInput("cyclic group order must be positive");
  std::vector<std::vector<GroupElement>> t(static_cast<std::size_t>(n), std::vector<GroupElement>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return FiniteGroup(std::move(t));
}

FiniteGroup FiniteGroup::symmetric(int k) {
  if (k < 1 || k > 5) throw Unsupported("symmetric groups are only built for 1 <= k <= 5");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(static_cast<std::size_t>(k));
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));

  const std::size_t n = perms.size();
  std::vector<std::vector<GroupElement>> t(n, std::vector<GroupElement>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      // (a * b)(i) = a(b(i))
      std::vector<int> c(static_cast<std::size_t>(k));
      for (int i = 0; i < k; ++i) c[static_cast<std::size_t>(i)] = perms[a][static_cast<std::size_t>(perms[b][static_cast<std::size_t>(i)])];
      t[a][b] = static_cast<GroupElement>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  return FiniteGroup(std::move(t));
}

Subgroup FiniteGroup::whole() const {
  Subgroup all(static_cast<std::size_t>(order()));
  std::iota(all.begin(), all.end(), 0);
  return all;
}

bool FiniteGroup::is_subgroup(const Subgroup& h) const {
  if (h.empty()) return false;
  std::set<GroupElement> members(h.begin(), h.end());
  if (!members.contains(identity_)) return false;
  for (GroupElement a : h) {
    if (a < 0 || a >= order()) return false;
    for (GroupElement b : h)
      if (!members.contains(multiply(a, b))) return false;
  }
  return true;
}

Subgroup FiniteGroup::closure(std::vector<GroupElement> elements) const {
  std::set<GroupElement> members(elements.begin(), elements.end());
  members.insert(identity_);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<GroupElement> current(members.begin(), members.end());
    for (GroupElement a : current)
      for (GroupElement b : current)
        if (members.insert(multiply(a, b)).second) grew = true;
  }
  return Subgroup(members.begin(), members.end());
}

Subgroup FiniteGroup::conjugate(const Subgroup& h, GroupElement g) const {
  Subgroup out;
  for (GroupElement x : h) out.push_back(multiply(multiply(g, x), inverse(g)));
  std::sort(out.begin(), out.end());
  return out;
}

Subgroup FiniteGroup::normaliser(const Subgroup& h) const {
  Subgroup out;
  for (GroupElement g = 0; g < order(); ++g)
    if (conjugate(h, g) == h) out.push_back(g);
  return out;
}

Subgroup FiniteGroup::conjugacy_representative(const Subgroup& h) const {
  Subgroup best = h;
  for (GroupElement g = 0; g < order(); ++g) best = std::min(best, conjugate(h, g));
  return best;
}

std::vector<Subgroup> FiniteGroup::all_subgroups() const {
  std::set<Subgroup> found;
  for (GroupElement g = 0; g < order(); ++g) found.insert(closure({g}));
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Subgroup> current(found.begin(), found.end());
    for (std::size_t i = 0; i < current.size(); ++i)
      for (std::size_t j = i + 1; j < current.size(); ++j) {
        std::vector<GroupElement> joined = current[i];
        joined.insert(joined.end(), current[j].begin(), current[j].end());
        if (found.insert(closure(std::move(joined))).second) grew = true;
      }
  }
  return std::vector<Subgroup>(found.begin(), found.end());
}

// ---------------------------------------------------------------- action

VertexId ExplicitAction::apply(GroupElement g, VertexId v) const {
  const auto& perm = vertex_perms.at(static_cast<std::size_t>(g));
  auto it = perm.find(v);
  if (it == perm.end()) throw MalformedInput("permutation undefined on vertex " + std::to_string(v));
  return it->second;
}

Simplex ExplicitAction::apply(GroupElement g, const Simplex& s) const {
  std::vector<VertexId> image;
  for (VertexId v : s.vertices()) image.push_back(apply(g, v));
  return Simplex(std::move(image));
}

ActionValidation validate_action(const SimplicialComplex& c, const ExplicitAction& a) {
  const int n = a.group.order();
  if (static_cast<int>(a.vertex_perms.size()) != n)
    return {ActionStatus::invalid, "need one vertex permutation per group element"};

  const std::set<VertexId> verts(c.vertices().begin(), c.vertices().end());
  for (int g = 0; g < n; ++g) {
    const auto& perm = a.vertex_perms[static_cast<std::size_t>(g)];
    std::set<VertexId> image;
    for (VertexId v : c.vertices()) {
      auto it = perm.find(v);
      if (it == perm.end() || !verts.contains(it->second))
        return {ActionStatus::invalid, "element " + std::to_string(g) + " does not permute the vertices"};
      image.insert(it->second);
    }
    if (image.size() != verts.size())
      return {ActionStatus::invalid, "element " + std::to_string(g) + " is not injective on vertices"};
  }

  for (int g = 0; g < n; ++g)
    for (const Simplex& s : c.maximal_simplices())
      if (!c.contains(a.apply(g, s)))
        return {ActionStatus::invalid, "element " + std::to_string(g) + " maps " + s.to_string() +
                                           " outside the complex"};

  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h)
      for (VertexId v : c.vertices())
        if (a.apply(a.group.multiply(g, h), v) != a.apply(g, a.apply(h, v)))
          return {ActionStatus::invalid, "vertex permutations are not a homomorphism (elements " +
                                             std::to_string(g) + ", " + std::to_string(h) + ")"};

  for (const Simplex& s : c.all_simplices())
    for (int g = 0; g < n; ++g)
      if (a.apply(g, s) == s)
        for (VertexId v : s.vertices())
          if (a.apply(g, v) != v)
            return {ActionStatus::needs_subdivision, "element " + std::to_string(g) + " fixes " +
                                                         s.to_string() + " but not pointwise"};
  return {ActionStatus::ok, "ok"};
}

ExplicitAction subdivide_action(const Subdivision& sub, const ExplicitAction& a) {
  std::map<Simplex, VertexId> id_of;
  for (std::size_t i = 0; i < sub.vertex_simplex.size(); ++i)
    id_of.emplace(sub.vertex_simplex[i], static_cast<VertexId>(i));
  ExplicitAction out{a.group, {}};
  for (GroupElement g = 0; g < a.group.order(); ++g) {
    std::map<VertexId, VertexId> perm;
    for (std::size_t i = 0; i < sub.vertex_simplex.size(); ++i)
      perm[static_cast<VertexId>(i)] = id_of.at(a.apply(g, sub.vertex_simplex[i]));
    out.vertex_perms.push_back(std::move(perm));
  }
  return out;
}

PreparedAction prepare_action(const SimplicialComplex& c, const ExplicitAction& a) {
  PreparedAction p{c, a, 0};
  for (;;) {
    ActionValidation v = validate_action(p.complex, p.action);
    if (v.status == ActionStatus::ok) return p;
    if (v.status == ActionStatus::invalid) throw MalformedInput("invalid action: " + v.detail);
    if (p.subdivisions == 2)
      throw MalformedInput("action still not pointwise on stabilisers after two subdivisions: " + v.detail);
    Subdivision sub = barycentric_subdivision(p.complex);
    p.action = subdivide_action(sub, p.action);
    p.complex = std::move(sub.complex);
    ++p.subdivisions;
  }
}

std::vector<OrbitInfo> orbits_and_stabilisers(const SimplicialComplex& c, const ExplicitAction& a) {
  std::vector<OrbitInfo> out;
  std::set<Simplex> seen;
  for (const Simplex& s : c.all_simplices()) {
    if (seen.contains(s)) continue;
    std::set<Simplex> orbit;
    Subgroup stab;
    for (GroupElement g = 0; g < a.group.order(); ++g) {
      Simplex image = a.apply(g, s);
      if (image == s) stab.push_back(g);
      orbit.insert(std::move(image));
    }
    seen.insert(orbit.begin(), orbit.end());
    // all_simplices() is ordered, so s is the least element of its orbit.
    out.push_back(OrbitInfo{s, orbit.size(), std::move(stab)});
  }
  return out;
}

long quotient_euler_char(const SimplicialComplex& c, const ExplicitAction& a) {
  long chi = 0;
  for (const OrbitInfo& o : orbits_and_stabilisers(c, a)) chi += o.representative.dim() % 2 == 0 ? 1 : -1;
  return chi;
}

std::vector<VertexId> FixedSubcomplex::component_labels() const {
  std::set<VertexId> labels;
  for (const auto& [v, label] : component_of) labels.insert(label);
  return std::vector<VertexId>(labels.begin(), labels.end());
}

FixedSubcomplex fixed_subcomplex(const SimplicialComplex& c, const ExplicitAction& a, const Subgroup& h) {
  if (!a.group.is_subgroup(h)) throw MalformedInput("H is not a subgroup");

  FixedSubcomplex fixed;
  for (const Simplex& s : c.all_simplices()) {
    bool pointwise = true;
    for (GroupElement g : h)
      for (VertexId v : s.vertices())
        if (a.apply(g, v) != v) pointwise = false;
    if (pointwise) fixed.simplices.push_back(s);
  }

  std::map<VertexId, VertexId> parent;
  for (const Simplex& s : fixed.simplices)
    if (s.dim() == 0) parent[s[0]] = s[0];
  auto find = [&](VertexId v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  auto unite = [&](VertexId x, VertexId y) {
    VertexId rx = find(x), ry = find(y);
    if (rx != ry) parent[std::max(rx, ry)] = std::min(rx, ry);
  };
  for (const Simplex& s : fixed.simplices)
    if (s.dim() == 1) unite(s[0], s[1]);
  // N(H) permutes X^H; identify components that it maps onto each other.
  for (GroupElement g : a.group.normaliser(h))
    for (auto& [v, unused] : parent) {
      (void)unused;
      unite(v, a.apply(g, v));
    }
  for (auto& [v, unused] : parent) {
    (void)unused;
    fixed.component_of[v] = find(v);
  }
  return fixed;
}

// ------------------------------------------------------------- orbit data

void OrbitData::validate() const {
  for (const OrbitRecord& o : orbits) {
    if (o.dim < 0) throw MalformedInput("orbit dimension must be nonnegative");
    if (!stabilisers.contains(o.stabiliser))
      throw MalformedInput("orbit references unknown stabiliser label '" + o.stabiliser + "'");
  }
  for (const auto& [label, order] : stabilisers)
    if (order.is_finite() && *order.finite < 1)
      throw MalformedInput("stabiliser '" + label + "' must have positive order");
  for (const auto& [lo, hi] : subconjugate)
    if (!stabilisers.contains(lo) || !stabilisers.contains(hi))
      throw MalformedInput("conjugacy metadata references an unknown label");
}

std::string subgroup_label(const FiniteGroup& g, const Subgroup& h) {
  if (h.size() == 1) return "1";
  Subgroup rep = g.conjugacy_representative(h);
  std::ostringstream os;
  os << 'H' << rep.size() << '{';
  for (std::size_t i = 0; i < rep.size(); ++i) os << (i ? "," : "") << rep[i];
  os << '}';
  return os.str();
}

OrbitData to_orbit_data(const SimplicialComplex& c, const ExplicitAction& a) {
  OrbitData data;
  for (const OrbitInfo& o : orbits_and_stabilisers(c, a)) {
    std::string label = subgroup_label(a.group, o.stabiliser);
    data.orbits.push_back({o.representative.dim(), label});
    data.stabilisers[label] = StabiliserOrder::of(static_cast<long>(o.stabiliser.size()));
  }
  return data;
}

// -------------------------------------------------- Euler decomposition

long EulerDecomposition::total() const {
  long sum = 0;
  for (const EulerTerm& t : terms) sum += t.multiplicity;
  return sum;
}

std::string EulerDecomposition::to_string() const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const EulerTerm& t = terms[i];
    long m = t.multiplicity;
    if (i == 0) os << (m < 0 ? "-" : "");
    else os << (m < 0 ? " - " : " + ");
    if (std::abs(m) != 1) os << std::abs(m) << "*";
    os << "dim_{" << t.stabiliser_class;
    if (!t.component.empty()) os << "," << t.component;
    os << "}";
  }
  return os.str();
}

EulerDecomposition equivariant_euler_decomposition(const SimplicialComplex& c, const ExplicitAction& a) {
  ActionValidation v = validate_action(c, a);
  if (v.status != ActionStatus::ok)
    throw MalformedInput("explicit Euler decomposition needs a valid action: " + v.detail);

  const FiniteGroup& g = a.group;
  std::vector<OrbitInfo> orbits = orbits_and_stabilisers(c, a);

  // Conjugacy classes in order of first appearance.
  std::vector<Subgroup> classes;
  for (const OrbitInfo& o : orbits) {
    Subgroup rep = g.conjugacy_representative(o.stabiliser);
    if (std::find(classes.begin(), classes.end(), rep) == classes.end()) classes.push_back(rep);
  }

  EulerDecomposition out;
  for (const Subgroup& h : classes) {
    FixedSubcomplex fixed = fixed_subcomplex(c, a, h);
    Subgroup normaliser = g.normaliser(h);
    std::map<VertexId, long> chi_by_component;
    std::set<Simplex> counted;
    for (const Simplex& s : fixed.simplices) {
      if (counted.contains(s)) continue;
      Subgroup stab;
      for (GroupElement x = 0; x < g.order(); ++x)
        if (a.apply(x, s) == s) stab.push_back(x);
      if (stab != h) continue;
      for (GroupElement x : normaliser) counted.insert(a.apply(x, s));
      chi_by_component[fixed.component_of.at(s[0])] += s.dim() % 2 == 0 ? 1 : -1;
    }
    // A single component of N(H)\X^H needs no label.
    const bool single = fixed.component_labels().size() == 1;
    for (const auto& [component, chi] : chi_by_component)
      if (chi != 0)
        out.terms.push_back(EulerTerm{subgroup_label(g, h), single ? "" : "A" + std::to_string(component), chi});
  }
  return out;
}

EulerDecomposition equivariant_euler_decomposition(const OrbitData& data) {
  data.validate();
  std::vector<std::string> order;
  std::map<std::string, long> chi;
  for (const OrbitRecord& o : data.orbits) {
    if (!chi.contains(o.stabiliser)) order.push_back(o.stabiliser);
    chi[o.stabiliser] += o.dim % 2 == 0 ? 1 : -1;
  }
  EulerDecomposition out;
  for (const std::string& label : order)
    if (chi[label] != 0) out.terms.push_back(EulerTerm{label, "", chi[label]});
  return out;
}

// ------------------------------------------------------------------- tau

Rational FormalTau::trace() const {
  Rational sum = 0;
  for (const TauTerm& t : terms) sum += Rational(t.sign * t.multiplicity) / Rational(t.order);
  return sum;
}

std::string FormalTau::to_string() const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const TauTerm& t = terms[i];
    if (i == 0) os << (t.sign < 0 ? "-" : "");
    else os << (t.sign < 0 ? " - " : " + ");
    if (t.multiplicity != 1) os << t.multiplicity << "*";
    os << "tau(" << t.stabiliser << ")";
  }
  return os.str();
}

FormalTau euler_poincare_element(const OrbitData& data) {
  data.validate();
  std::vector<std::string> order;
  std::map<std::string, long> net;
  for (const OrbitRecord& o : data.orbits) {
    const StabiliserOrder& so = data.stabilisers.at(o.stabiliser);
    if (!so.is_finite())
      throw MalformedInput("tau(" + o.stabiliser + ") needs a finite stabiliser, got '" + so.symbol + "'");
    if (!net.contains(o.stabiliser)) order.push_back(o.stabiliser);
    net[o.stabiliser] += o.dim % 2 == 0 ? 1 : -1;
  }
  FormalTau tau;
  for (const std::string& label : order) {
    long m = net[label];
    if (m == 0) continue;
    tau.terms.push_back(TauTerm{label, *data.stabilisers.at(label).finite, m < 0 ? -1 : 1, std::abs(m)});
  }
  return tau;
}

FormalTau euler_poincare_element(const SimplicialComplex& c, const ExplicitAction& a) {
  return euler_poincare_element(to_orbit_data(c, a));
}

bool tau_idempotent_check(const FiniteGroup& g, const Subgroup& h) {
  if (!g.is_subgroup(h)) throw MalformedInput("H is not a subgroup");
  std::vector<Rational> tau(static_cast<std::size_t>(g.order()), Rational(0));
  for (GroupElement x : h) tau[static_cast<std::size_t>(x)] = Rational(1, h.size());
  std::vector<Rational> square(tau.size(), Rational(0));
  for (GroupElement x = 0; x < g.order(); ++x)
    for (GroupElement y = 0; y < g.order(); ++y)
      if (tau[x] != 0 && tau[y] != 0) square[static_cast<std::size_t>(g.multiply(x, y))] += tau[x] * tau[y];
  return square == tau;
}

} // namespace gysinkit
