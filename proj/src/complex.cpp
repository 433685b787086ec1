#include "gysinkit/complex.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace gysinkit {

// ---------------------------------------------------------------- Simplex

Simplex::Simplex(std::vector<VertexId> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw MalformedInput("a simplex must have at least one vertex");
  std::sort(vertices_.begin(), vertices_.end());
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
    throw MalformedInput("duplicate vertex in simplex " + to_string());
}

bool Simplex::contains(VertexId v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool Simplex::is_face_of(const Simplex& other) const {
  return std::includes(other.vertices_.begin(), other.vertices_.end(),
                       vertices_.begin(), vertices_.end());
}

std::optional<Simplex> Simplex::intersect(const Simplex& other) const {
  std::vector<VertexId> common;
  std::set_intersection(vertices_.begin(), vertices_.end(), other.vertices_.begin(),
                        other.vertices_.end(), std::back_inserter(common));
  if (common.empty()) return std::nullopt;
  return Simplex(std::move(common));
}

std::vector<Simplex> Simplex::faces() const {
  const std::size_t k = vertices_.size();
  if (k > 24) throw Unsupported("simplex too large for face enumeration");
  std::vector<Simplex> out;
  out.reserve((std::size_t{1} << k) - 1);
  for (std::size_t mask = 1; mask < (std::size_t{1} << k); ++mask) {
    std::vector<VertexId> f;
    for (std::size_t i = 0; i < k; ++i)
      if (mask & (std::size_t{1} << i)) f.push_back(vertices_[i]);
    out.emplace_back(std::move(f));
  }
  return out;
}

std::vector<Simplex> Simplex::boundary_faces() const {
  std::vector<Simplex> out;
  if (vertices_.size() < 2) return out;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    std::vector<VertexId> f = vertices_;
    f.erase(f.begin() + static_cast<std::ptrdiff_t>(i));
    out.emplace_back(std::move(f));
  }
  return out;
}

std::string Simplex::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < vertices_.size(); ++i) os << (i ? "," : "") << vertices_[i];
  os << ']';
  return os.str();
}

std::size_t SimplexHash::operator()(const Simplex& s) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (VertexId v : s.vertices()) {
    h ^= static_cast<std::size_t>(static_cast<unsigned>(v));
    h *= 0x100000001b3ULL;
  }
  return h;
}

// ------------------------------------------------------ SimplicialComplex

SimplicialComplex SimplicialComplex::close_under_faces(std::span<const Simplex> maximal) {
  if (maximal.empty()) throw MalformedInput("the empty complex has no dimension");

  std::set<Simplex> closure;
  for (const Simplex& s : maximal)
    for (Simplex& f : s.faces()) closure.insert(std::move(f));

  SimplicialComplex c;
  int top = 0;
  for (const Simplex& s : closure) top = std::max(top, s.dim());
  c.by_dim_.resize(static_cast<std::size_t>(top) + 1);
  // std::set order is lexicographic, so each bucket comes out sorted.
  for (const Simplex& s : closure) c.by_dim_[static_cast<std::size_t>(s.dim())].push_back(s);
  for (const auto& bucket : c.by_dim_)
    for (std::size_t i = 0; i < bucket.size(); ++i) c.index_.emplace(bucket[i], i);
  for (const Simplex& v : c.by_dim_[0]) c.vertices_.push_back(v[0]);
  return c;
}

SimplicialComplex SimplicialComplex::close_under_faces(
    std::initializer_list<std::initializer_list<VertexId>> maximal) {
  std::vector<Simplex> list;
  for (auto s : maximal) list.emplace_back(std::vector<VertexId>(s));
  return close_under_faces(list);
}

const std::vector<Simplex>& SimplicialComplex::simplices(int k) const {
  static const std::vector<Simplex> none;
  if (k < 0 || k > dim()) return none;
  return by_dim_[static_cast<std::size_t>(k)];
}

std::size_t SimplicialComplex::size() const {
  std::size_t n = 0;
  for (const auto& bucket : by_dim_) n += bucket.size();
  return n;
}

std::vector<Simplex> SimplicialComplex::all_simplices() const {
  std::vector<Simplex> out;
  out.reserve(size());
  for (const auto& bucket : by_dim_) out.insert(out.end(), bucket.begin(), bucket.end());
  return out;
}

std::vector<Simplex> SimplicialComplex::maximal_simplices() const {
  std::set<Simplex> non_maximal;
  for (int k = 1; k <= dim(); ++k)
    for (const Simplex& s : simplices(k))
      for (Simplex& f : s.boundary_faces()) non_maximal.insert(std::move(f));
  std::vector<Simplex> out;
  for (const Simplex& s : all_simplices())
    if (!non_maximal.contains(s)) out.push_back(s);
  return out;
}

std::size_t SimplicialComplex::index_of(const Simplex& s) const {
  auto it = index_.find(s);
  if (it == index_.end()) throw MalformedInput("simplex " + s.to_string() + " not in complex");
  return it->second;
}

std::map<VertexId, VertexId> SimplicialComplex::vertex_components() const {
  std::map<VertexId, VertexId> parent;
  for (VertexId v : vertices_) parent[v] = v;
  auto find = [&](VertexId v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const Simplex& e : simplices(1)) {
    VertexId a = find(e[0]), b = find(e[1]);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::map<VertexId, VertexId> label;
  for (VertexId v : vertices_) label[v] = find(v);
  return label;
}

std::size_t SimplicialComplex::component_count() const {
  std::set<VertexId> roots;
  for (const auto& [v, root] : vertex_components()) roots.insert(root);
  return roots.size();
}

long euler_char(const SimplicialComplex& c) {
  long chi = 0;
  for (int k = 0; k <= c.dim(); ++k)
    chi += (k % 2 == 0 ? 1 : -1) * static_cast<long>(c.count(k));
  return chi;
}

// ---------------------------------------------------------- subdivision

Subdivision barycentric_subdivision(const SimplicialComplex& c) {
  Subdivision out{SimplicialComplex::close_under_faces({{0}}), {}, c.all_simplices()};
  std::unordered_map<Simplex, VertexId, SimplexHash> id_of;
  for (std::size_t i = 0; i < out.vertex_simplex.size(); ++i) {
    id_of.emplace(out.vertex_simplex[i], static_cast<VertexId>(i));
    out.colouring[static_cast<VertexId>(i)] = out.vertex_simplex[i].dim();
  }

  // Maximal chains end at a maximal simplex and are its complete flags:
  // repeatedly drop one vertex down to a single vertex.
  std::vector<Simplex> chains;
  for (const Simplex& top : c.maximal_simplices()) {
    std::vector<VertexId> order = top.vertices();
    do {
      std::vector<VertexId> chain;
      for (std::size_t len = 1; len <= order.size(); ++len) {
        std::vector<VertexId> prefix(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(len));
        chain.push_back(id_of.at(Simplex(std::move(prefix))));
      }
      chains.emplace_back(std::move(chain));
    } while (std::next_permutation(order.begin(), order.end()));
  }
  out.complex = SimplicialComplex::close_under_faces(chains);
  return out;
}

// -------------------------------------------------------------- colouring

std::optional<ColouringViolation> validate_colouring(const SimplicialComplex& c,
                                                     const Colouring& nu) {
  for (VertexId v : c.vertices())
    if (!nu.contains(v))
      return ColouringViolation{Simplex{v}, "vertex " + std::to_string(v) + " has no colour"};
  for (const Simplex& s : c.all_simplices()) {
    std::vector<int> colours;
    for (VertexId v : s.vertices()) colours.push_back(nu.at(v));
    std::sort(colours.begin(), colours.end());
    if (std::adjacent_find(colours.begin(), colours.end()) != colours.end())
      return ColouringViolation{s, "two vertices of " + s.to_string() + " share a colour"};
  }
  return std::nullopt;
}

std::vector<int> colour_set(const Simplex& s, const Colouring& nu) {
  std::vector<int> colours;
  for (VertexId v : s.vertices()) {
    auto it = nu.find(v);
    if (it == nu.end()) throw MalformedInput("vertex " + std::to_string(v) + " has no colour");
    colours.push_back(it->second);
  }
  std::sort(colours.begin(), colours.end());
  return colours;
}

// ------------------------------------------------------ BarycentricPoint

BarycentricPoint::BarycentricPoint(Simplex carrier_, std::vector<Rational> weights_)
    : carrier(std::move(carrier_)), weights(std::move(weights_)) {
  if (weights.size() != carrier.size())
    throw MalformedInput("weight count does not match carrier " + carrier.to_string());
  Rational total = 0;
  for (const Rational& w : weights) {
    if (w < 0) throw MalformedInput("negative barycentric weight");
    total += w;
  }
  if (total != 1) throw MalformedInput("barycentric weights must sum to 1");
}

BarycentricPoint BarycentricPoint::vertex(VertexId v) {
  return BarycentricPoint(Simplex{v}, {Rational(1)});
}

BarycentricPoint BarycentricPoint::barycentre(const Simplex& s) {
  return BarycentricPoint(s, std::vector<Rational>(s.size(), Rational(1, s.size())));
}

BarycentricPoint BarycentricPoint::normalized() const {
  std::vector<VertexId> vs;
  std::vector<Rational> ws;
  for (std::size_t i = 0; i < carrier.size(); ++i)
    if (weights[i] > 0) {
      vs.push_back(carrier[i]);
      ws.push_back(weights[i]);
    }
  return BarycentricPoint(Simplex(std::move(vs)), std::move(ws));
}

bool BarycentricPoint::same_point(const BarycentricPoint& other) const {
  BarycentricPoint a = normalized(), b = other.normalized();
  return a.carrier == b.carrier && a.weights == b.weights;
}

std::string BarycentricPoint::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < carrier.size(); ++i)
    os << (i ? ", " : "") << carrier[i] << ": " << weights[i].get_str();
  os << '}';
  return os.str();
}

std::vector<Rational> colour_map_point(const BarycentricPoint& x, const Colouring& nu, int n) {
  std::vector<int> colours;
  for (VertexId v : x.carrier.vertices()) {
    auto it = nu.find(v);
    if (it == nu.end()) throw MalformedInput("vertex " + std::to_string(v) + " has no colour");
    if (it->second < 0 || it->second > n)
      throw MalformedInput("colour " + std::to_string(it->second) + " outside {0..n}");
    colours.push_back(it->second);
  }
  std::vector<int> sorted = colours;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw MalformedInput("colouring is not injective on " + x.carrier.to_string());

  std::vector<Rational> t(static_cast<std::size_t>(n) + 1, Rational(0));
  for (std::size_t i = 0; i < colours.size(); ++i)
    t[static_cast<std::size_t>(colours[i])] += x.weights[i];
  return t;
}

} // namespace gysinkit
