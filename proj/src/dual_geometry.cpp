#include "gysinkit/dual_geometry.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <random>
#include <sstream>

namespace gysinkit {

// ---------------------------------------------------------------- points

EPoint::EPoint(std::vector<Rational> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw MalformedInput("a point of E needs at least one coordinate");
  Rational sum = 0;
  for (const Rational& c : coords_) sum += c;
  if (sum != 1) throw MalformedInput("coordinates of a point of E must sum to 1, got " + sum.get_str());
}

bool EPoint::in_simplex() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& c) { return c >= 0; });
}

std::string EPoint::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < coords_.size(); ++i) os << (i ? ", " : "") << coords_[i].get_str();
  os << ')';
  return os.str();
}

std::string to_string(const FaceSet& f) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int i : f) {
    os << (first ? "" : ",") << i;
    first = false;
  }
  os << '}';
  return os.str();
}

std::vector<FaceSet> nonempty_faces(int n) {
  std::vector<FaceSet> out;
  for (unsigned mask = 1; mask < (1u << (n + 1)); ++mask) {
    FaceSet f;
    for (int i = 0; i <= n; ++i)
      if (mask & (1u << i)) f.insert(i);
    out.push_back(std::move(f));
  }
  return out;
}

EPoint homogeneous(const std::vector<Rational>& t) {
  Rational sum = 0;
  for (const Rational& c : t) sum += c;
  if (sum == 0) throw MalformedInput("homogeneous coordinates need sum t_i != 0");
  std::vector<Rational> out;
  out.reserve(t.size());
  for (const Rational& c : t) out.push_back(c / sum);
  return EPoint(std::move(out));
}

bool in_region(const EPoint& t, const FaceSet& f, Region which, const std::optional<Rational>& L) {
  const int n = t.n();
  for (int i : f)
    if (i < 0 || i > n) throw MalformedInput("face index " + std::to_string(i) + " outside {0..n}");
  switch (which) {
  case Region::R:
    if (f.empty()) return false;
    for (int i = 0; i <= n; ++i)
      if (f.contains(i) ? t[i] < 0 : t[i] > 0) return false;
    return true;
  case Region::R_le:
    for (int i = 0; i <= n; ++i)
      if (!f.contains(i) && t[i] > 0) return false;
    return true;
  case Region::CR:
    if (!L) throw MalformedInput("CR_f membership needs the threshold L");
    if (!t.in_simplex()) return false;
    for (int i = 0; i <= n; ++i)
      if (f.contains(i) ? t[i] < *L : t[i] > *L) return false;
    return true;
  case Region::face:
    if (!t.in_simplex()) return false;
    for (int i = 0; i <= n; ++i)
      if (!f.contains(i) && t[i] != 0) return false;
    return true;
  }
  return false;
}

// ---------------------------------------------------------------- params

namespace {

void check_L(const Rational& L, int n) {
  if (n < 1) throw MalformedInput("dimension n must be at least 1");
  if (L <= 0 || L >= Rational(1, n + 1))
    throw MalformedInput("L = " + L.get_str() + " must lie in (0, 1/(n+1))");
}

} // namespace

Rational critical_lambda(const Rational& L, int n) {
  check_L(L, n);
  Rational q = 1 - (n + 1) * L;
  return 1 / q;
}

Rational delta_witness(const Rational& L, const Rational& lambda, int n) {
  if (lambda <= critical_lambda(L, n))
    throw MalformedInput("lambda = " + lambda.get_str() + " must exceed (1-(n+1)L)^{-1} = " +
                         critical_lambda(L, n).get_str());
  Rational delta = (lambda - 1) / (n + 1) - lambda * L;
  return delta;
}

DualParams DualParams::make(int n, const Rational& L, const Rational& lambda) {
  return DualParams{n, L, lambda, delta_witness(L, lambda, n)};
}

DualParams DualParams::defaults(int n) { return make(n, Rational(1, 2 * (n + 1)), Rational(4)); }

// ------------------------------------------------------------------ maps

EPoint retraction_q(const EPoint& t) {
  std::vector<Rational> c;
  for (const Rational& x : t.coords()) c.push_back(x > 0 ? x : Rational(0));
  return homogeneous(c);
}

EPoint collapse(const EPoint& t, const Rational& L) {
  check_L(L, t.n());
  if (!t.in_simplex()) throw MalformedInput("collapse is defined on the simplex only: " + t.to_string());
  std::vector<Rational> c;
  for (const Rational& x : t.coords()) c.push_back(x < L ? x : L);
  return homogeneous(c);
}

EPoint radial_expand(const EPoint& t, const Rational& lambda) {
  if (lambda < 1) throw MalformedInput("radial expansion needs lambda >= 1");
  const Rational shift = (lambda - 1) / (t.n() + 1);
  std::vector<Rational> c;
  for (const Rational& x : t.coords()) c.push_back(lambda * x - shift);
  return EPoint(std::move(c));
}

EPoint face_barycentre(const FaceSet& f, int n) {
  if (f.empty()) throw MalformedInput("the empty face has no barycentre");
  std::vector<Rational> c(static_cast<std::size_t>(n + 1), Rational(0));
  for (int i : f) c.at(static_cast<std::size_t>(i)) = Rational(1, static_cast<long>(f.size()));
  return EPoint(std::move(c));
}

// ------------------------------------------------------ spectral support

SpectralSupport spectral_support(const BarycentricPoint& x, const Colouring& nu, const Rational& L) {
  const BarycentricPoint p = x.normalized();
  for (VertexId v : p.carrier.vertices())
    if (!nu.contains(v)) throw MalformedInput("vertex " + std::to_string(v) + " has no colour");
  if (L <= 0) throw MalformedInput("L must be positive");

  // |nu| is a bijection of the carrier onto |nu(carrier)|, so the collapse
  // acts on the carrier weights directly.
  std::vector<Rational> w;
  Rational sum = 0;
  for (const Rational& t : p.weights) {
    w.push_back(t < L ? t : L);
    sum += w.back();
  }
  for (Rational& t : w) t /= sum;

  std::vector<std::size_t> order(w.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return w[a] > w[b]; });

  SpectralSupport out{BarycentricPoint(p.carrier, w), {}, {}, true};
  std::vector<VertexId> prefix;
  for (std::size_t j = 0; j < order.size(); ++j) {
    prefix.push_back(p.carrier[order[j]]);
    const Rational next = j + 1 < order.size() ? w[order[j + 1]] : Rational(0);
    Rational coefficient = Rational(static_cast<long>(j + 1)) * (w[order[j]] - next);
    if (coefficient > 0) {
      out.support.emplace_back(prefix);
      out.weights.push_back(coefficient);
    }
  }
  for (std::size_t i = 1; i < out.support.size(); ++i)
    if (!(out.support[i - 1].is_face_of(out.support[i]) && out.support[i - 1] != out.support[i]))
      out.chain_certified = false;
  if (out.support.empty()) out.chain_certified = false;
  return out;
}

BarycentricPoint from_subdivision(const Subdivision& sub, const BarycentricPoint& y) {
  std::map<VertexId, Rational> weight;
  for (std::size_t j = 0; j < y.carrier.size(); ++j) {
    const Simplex& s = sub.vertex_simplex.at(static_cast<std::size_t>(y.carrier[j]));
    for (VertexId v : s.vertices()) weight[v] += y.weights[j] / static_cast<long>(s.size());
  }
  std::vector<VertexId> vs;
  std::vector<Rational> ws;
  for (const auto& [v, t] : weight) {
    vs.push_back(v);
    ws.push_back(t);
  }
  return BarycentricPoint(Simplex(std::move(vs)), std::move(ws));
}

BarycentricPoint bar_q(const EPoint& t, const Simplex& sigma, const Colouring& nu) {
  FaceSet colours;
  for (int c : colour_set(sigma, nu)) colours.insert(c);
  if (colours.size() != sigma.size()) throw MalformedInput("colouring is not injective on " + sigma.to_string());
  if (!in_region(t, colours, Region::R_le))
    throw MalformedInput("bar_q(t, sigma) needs t in R_<=nu(sigma); t = " + t.to_string() +
                         ", nu(sigma) = " + to_string(colours));
  const EPoint q = retraction_q(t);
  std::vector<Rational> w;
  for (VertexId v : sigma.vertices()) w.push_back(q[static_cast<std::size_t>(nu.at(v))]);
  return BarycentricPoint(sigma, std::move(w));
}

// ------------------------------------------------------ support patterns

SupportPattern SupportPattern::of(std::vector<Simplex> index, const Colouring& nu) {
  SupportPattern p;
  p.index = std::move(index);
  for (std::size_t i = 0; i < p.index.size(); ++i)
    for (std::size_t j = 0; j < p.index.size(); ++j) {
      std::optional<FaceSet> allowed;
      if (auto common = p.index[i].intersect(p.index[j])) {
        FaceSet f;
        for (int c : colour_set(*common, nu)) f.insert(c);
        allowed = std::move(f);
      }
      p.allowed[{i, j}] = std::move(allowed);
    }
  return p;
}

bool SupportPattern::permits(std::size_t i, std::size_t j, const EPoint& t) const {
  const auto& f = allowed.at({i, j});
  return f && in_region(t, *f, Region::R_le);
}

SampledMatrix random_valid_matrix(const SupportPattern& pattern, const std::vector<EPoint>& samples,
                                  std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> entry(-2, 2);
  const std::size_t k = pattern.index.size();
  SampledMatrix m{samples, {}};
  for (const EPoint& t : samples) {
    std::vector<std::vector<Rational>> values(k, std::vector<Rational>(k, Rational(0)));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j)
        if (pattern.permits(i, j, t)) values[i][j] = entry(rng);
    m.values.push_back(std::move(values));
  }
  return m;
}

std::optional<std::string> support_violation(const SupportPattern& pattern, const SampledMatrix& m) {
  for (std::size_t s = 0; s < m.samples.size(); ++s)
    for (std::size_t i = 0; i < pattern.index.size(); ++i)
      for (std::size_t j = 0; j < pattern.index.size(); ++j)
        if (m.values[s][i][j] != 0 && !pattern.permits(i, j, m.samples[s]))
          return "entry (" + pattern.index[i].to_string() + ", " + pattern.index[j].to_string() +
                 ") nonzero at t = " + m.samples[s].to_string();
  return std::nullopt;
}

SupportCheckResult support_product_check(const SupportPattern& pattern, const SampledMatrix& p1,
                                         const SampledMatrix& p2) {
  if (p1.samples != p2.samples)
    return {SupportCheckStatus::precondition_violation, "factors sampled at different points"};
  if (auto v = support_violation(pattern, p1)) return {SupportCheckStatus::precondition_violation, "first factor: " + *v};
  if (auto v = support_violation(pattern, p2)) return {SupportCheckStatus::precondition_violation, "second factor: " + *v};

  const std::size_t k = pattern.index.size();
  SampledMatrix product{p1.samples, {}};
  for (std::size_t s = 0; s < p1.samples.size(); ++s) {
    std::vector<std::vector<Rational>> values(k, std::vector<Rational>(k, Rational(0)));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t l = 0; l < k; ++l) {
        if (p1.values[s][i][l] == 0) continue;
        for (std::size_t j = 0; j < k; ++j) values[i][j] += p1.values[s][i][l] * p2.values[s][l][j];
      }
    product.values.push_back(std::move(values));
  }
  if (auto v = support_violation(pattern, product)) return {SupportCheckStatus::product_violation, "product: " + *v};
  return {SupportCheckStatus::valid, ""};
}

// -------------------------------------------------------------- sampling

GridSpec grid_by_name(const std::string& name) {
  if (name == "default") return {"default", {12, 12, 8, 10}, {12, 12, 4, 3}, {1, 12, 6, 4}};
  if (name == "coarse") return {"coarse", {6, 6, 4, 5}, {6, 6, 2, 2}, {1, 6, 3, 2}};
  if (name == "odd") return {"odd", {11, 9, 7, 7}, {7, 5, 3, 3}, {1, 7, 5, 3}};
  throw MalformedInput("unknown sample grid '" + name + "' (expected default, coarse or odd)");
}

GridSpec grid_from_environment() {
  const char* seed = std::getenv("GYSINKIT_SEED");
  return grid_by_name(seed && *seed ? seed : "default");
}

namespace {

// All (k+1)-tuples of nonnegative integers summing to total.
void compositions(int parts, int total, std::vector<int>& current,
                  const std::function<void(const std::vector<int>&)>& emit) {
  if (parts == 1) {
    current.push_back(total);
    emit(current);
    current.pop_back();
    return;
  }
  for (int a = total; a >= 0; --a) {
    current.push_back(a);
    compositions(parts - 1, total - a, current, emit);
    current.pop_back();
  }
}

int pick(const std::vector<int>& table, int index) {
  return table.at(static_cast<std::size_t>(std::clamp(index, 0, static_cast<int>(table.size()) - 1)));
}

} // namespace

std::vector<std::vector<Rational>> barycentric_grid(int k, int denominator) {
  std::vector<std::vector<Rational>> out;
  std::vector<int> current;
  compositions(k + 1, denominator, current, [&](const std::vector<int>& parts) {
    std::vector<Rational> w;
    for (int a : parts) w.push_back(make_rational(a, denominator));
    out.push_back(std::move(w));
  });
  return out;
}

std::vector<EPoint> simplex_grid(int n, int denominator) {
  std::vector<EPoint> out;
  for (auto& w : barycentric_grid(n, denominator)) out.emplace_back(std::move(w));
  return out;
}

std::vector<EPoint> e_grid(int n, int denominator) {
  std::vector<EPoint> out;
  std::vector<int> a(static_cast<std::size_t>(n), -denominator);
  while (true) {
    int sum = 0;
    for (int x : a) sum += x;
    const int last = denominator - sum;
    if (last >= -denominator && last <= 2 * denominator) {
      std::vector<Rational> c;
      for (int x : a) c.push_back(make_rational(x, denominator));
      c.push_back(make_rational(last, denominator));
      out.emplace_back(std::move(c));
    }
    std::size_t i = 0;
    while (i < a.size() && a[i] == 2 * denominator) a[i++] = -denominator;
    if (i == a.size()) break;
    ++a[i];
  }
  return out;
}

std::vector<EPoint> boundary_points(int n, const Rational& L) {
  std::vector<EPoint> out;
  const std::size_t m = static_cast<std::size_t>(n + 1);
  const EPoint centre(std::vector<Rational>(m, Rational(1, n + 1)));
  // Each coordinate is L, 0 or free (base-3 digit 0, 1, 2).
  std::size_t patterns = 1;
  for (std::size_t i = 0; i < m; ++i) patterns *= 3;
  for (std::size_t code = 0; code < patterns; ++code) {
    std::vector<int> kind(m);
    std::size_t c = code, free_count = 0, l_count = 0;
    for (std::size_t i = 0; i < m; ++i, c /= 3) {
      kind[i] = static_cast<int>(c % 3);
      free_count += kind[i] == 2;
      l_count += kind[i] == 0;
    }
    if (free_count == 0) continue;
    const Rational rest = (1 - Rational(static_cast<long>(l_count)) * L) / static_cast<long>(free_count);
    std::vector<Rational> coords;
    for (int k : kind) coords.push_back(k == 0 ? L : k == 1 ? Rational(0) : rest);
    EPoint p(coords);
    std::vector<Rational> mid;
    for (std::size_t i = 0; i < m; ++i) mid.push_back((p[i] + centre[i]) / 2);
    out.push_back(std::move(p));
    out.emplace_back(std::move(mid));
  }
  return out;
}

// ---------------------------------------------------- verification suite

ColouredComplex coloured_model(const SimplicialComplex& c, const std::optional<Colouring>& nu) {
  if (nu) {
    if (auto bad = validate_colouring(c, *nu)) throw MalformedInput("invalid colouring: " + bad->reason);
    for (const auto& [v, colour] : *nu)
      if (colour < 0) throw MalformedInput("colours must be nonnegative");
    return {c, *nu};
  }
  Subdivision sub = barycentric_subdivision(c);
  return {std::move(sub.complex), std::move(sub.colouring)};
}

ColouredComplex standard_simplex(int n) {
  std::vector<VertexId> vs;
  Colouring nu;
  for (int i = 0; i <= n; ++i) {
    vs.push_back(i);
    nu[i] = i;
  }
  const std::vector<Simplex> top{Simplex(vs)};
  return {SimplicialComplex::close_under_faces(top), nu};
}

namespace {

class RowBuilder {
public:
  explicit RowBuilder(std::string name) { row_.name = std::move(name); }

  void check(bool ok, const std::function<std::string()>& describe) {
    ++row_.samples;
    if (ok) return;
    if (row_.counterexamples++ == 0) row_.first_counterexample = describe();
  }
  DualCheckRow done() { return std::move(row_); }

private:
  DualCheckRow row_;
};

std::vector<EPoint> concat(std::vector<EPoint> a, const std::vector<EPoint>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

std::string at(const EPoint& t, const FaceSet& f) { return "t = " + t.to_string() + ", f = " + to_string(f); }

int max_colour(const Colouring& nu) {
  int n = 0;
  for (const auto& [v, c] : nu) n = std::max(n, c);
  return n;
}

std::vector<DualCheckRow> geometry_rows(const DualParams& p, const GridSpec& grid) {
  const int n = p.n;
  const std::vector<FaceSet> faces = nonempty_faces(n);
  const std::vector<EPoint> boundary = boundary_points(n, p.L);
  const std::vector<EPoint> sigma = concat(simplex_grid(n, pick(grid.simplex_denominator, n - 1)), [&] {
    std::vector<EPoint> in;
    for (const EPoint& t : boundary)
      if (t.in_simplex()) in.push_back(t);
    return in;
  }());
  const std::vector<EPoint> e_samples = concat(e_grid(n, pick(grid.e_denominator, n - 1)), concat(boundary, sigma));
  std::vector<DualCheckRow> rows;

  {
    RowBuilder row("q(t) in |f|  <=>  t in R_<=f");
    for (const EPoint& t : e_samples) {
      const EPoint q = retraction_q(t);
      for (const FaceSet& f : faces)
        row.check(in_region(q, f, Region::face) == in_region(t, f, Region::R_le), [&] { return at(t, f); });
    }
    rows.push_back(row.done());
  }
  {
    RowBuilder row("R_<=f1 cap R_<=f2 = R_<=(f1 cap f2)");
    for (const EPoint& t : e_samples) {
      std::vector<bool> member;
      for (const FaceSet& f : faces) member.push_back(in_region(t, f, Region::R_le));
      for (std::size_t a = 0; a < faces.size(); ++a)
        for (std::size_t b = a; b < faces.size(); ++b) {
          FaceSet both;
          std::set_intersection(faces[a].begin(), faces[a].end(), faces[b].begin(), faces[b].end(),
                                std::inserter(both, both.end()));
          row.check((member[a] && member[b]) == in_region(t, both, Region::R_le), [&] {
            return "t = " + t.to_string() + ", f1 = " + to_string(faces[a]) + ", f2 = " + to_string(faces[b]);
          });
        }
    }
    rows.push_back(row.done());
  }
  {
    RowBuilder row("regions R_f cover E");
    for (const EPoint& t : e_samples)
      row.check(std::any_of(faces.begin(), faces.end(), [&](const FaceSet& f) { return in_region(t, f, Region::R); }),
                [&] { return "t = " + t.to_string(); });
    rows.push_back(row.done());
  }
  {
    RowBuilder row("regions CR_f cover the simplex");
    for (const EPoint& t : sigma)
      row.check(std::any_of(faces.begin(), faces.end(),
                            [&](const FaceSet& f) { return in_region(t, f, Region::CR, p.L); }),
                [&] { return "t = " + t.to_string(); });
    rows.push_back(row.done());
  }
  {
    RowBuilder row("|f| cap CR_f = {t_i >= L on f, t_i = 0 off f}");
    for (const EPoint& t : sigma)
      for (const FaceSet& f : faces) {
        bool direct = true;
        for (int i = 0; i <= n; ++i) direct = direct && (f.contains(i) ? t[i] >= p.L : t[i] == 0);
        row.check((in_region(t, f, Region::face) && in_region(t, f, Region::CR, p.L)) == direct,
                  [&] { return at(t, f); });
      }
    rows.push_back(row.done());
  }
  {
    RowBuilder row("collapse(|f| cap CR_f) = barycentre of f");
    for (const EPoint& t : sigma)
      for (const FaceSet& f : faces)
        if (in_region(t, f, Region::face) && in_region(t, f, Region::CR, p.L))
          row.check(collapse(t, p.L) == face_barycentre(f, n), [&] { return at(t, f); });
    rows.push_back(row.done());
  }
  {
    const Rational critical = critical_lambda(p.L, n);
    RowBuilder row("CR_f = r_lambda^-1(R_f) at lambda = " + critical.get_str());
    for (const EPoint& t : sigma) {
      const EPoint r = radial_expand(t, critical);
      for (const FaceSet& f : faces)
        row.check(in_region(t, f, Region::CR, p.L) == in_region(r, f, Region::R), [&] { return at(t, f); });
    }
    rows.push_back(row.done());
  }
  {
    // Corner perturbations b in delta(1 - 1/1000){-1,0,1}^{n+1} with sum 0.
    const Rational scale = p.delta * Rational(999, 1000);
    std::vector<std::vector<Rational>> corners;
    std::vector<int> digits(static_cast<std::size_t>(n + 1), -1);
    while (true) {
      int sum = 0;
      for (int d : digits) sum += d;
      if (sum == 0) {
        std::vector<Rational> b;
        for (int d : digits) b.push_back(scale * d);
        corners.push_back(std::move(b));
      }
      std::size_t i = 0;
      while (i < digits.size() && digits[i] == 1) digits[i++] = -1;
      if (i == digits.size()) break;
      ++digits[i];
    }
    RowBuilder row("r_lambda(CR_f) + B(delta) in R_<=f, lambda = " + p.lambda.get_str() +
                   ", delta = " + p.delta.get_str());
    for (const EPoint& s : sigma) {
      const EPoint r = radial_expand(s, p.lambda);
      for (const FaceSet& f : faces) {
        if (!in_region(s, f, Region::CR, p.L)) continue;
        for (const auto& b : corners) {
          std::vector<Rational> moved = r.coords();
          for (std::size_t i = 0; i < moved.size(); ++i) moved[i] += b[i];
          EPoint t(std::move(moved));
          row.check(in_region(t, f, Region::R_le), [&] { return "s = " + s.to_string() + ", " + at(t, f); });
        }
      }
    }
    rows.push_back(row.done());
  }
  return rows;
}

// Maximal simplices meeting each maximal simplex, including itself.
std::vector<std::pair<Simplex, Simplex>> meeting_pairs(const SimplicialComplex& c) {
  const std::vector<Simplex> tops = c.maximal_simplices();
  std::map<VertexId, std::vector<std::size_t>> star;
  for (std::size_t i = 0; i < tops.size(); ++i)
    for (VertexId v : tops[i].vertices()) star[v].push_back(i);
  std::vector<std::pair<Simplex, Simplex>> out;
  for (std::size_t i = 0; i < tops.size(); ++i) {
    std::set<std::size_t> near;
    for (VertexId v : tops[i].vertices())
      for (std::size_t j : star[v])
        if (j >= i) near.insert(j);
    for (std::size_t j : near) out.emplace_back(tops[i], tops[j]);
  }
  return out;
}

std::vector<Simplex> product_index(const SimplicialComplex& c) {
  if (c.size() <= 40) return c.all_simplices();
  // Faces of two adjacent maximal simplices.
  auto pairs = meeting_pairs(c);
  std::set<Simplex> faces;
  for (const auto& [a, b] : pairs) {
    if (a == b) continue;
    for (const Simplex& f : a.faces()) faces.insert(f);
    for (const Simplex& f : b.faces()) faces.insert(f);
    break;
  }
  if (faces.empty())
    for (const Simplex& f : c.maximal_simplices().front().faces()) faces.insert(f);
  return {faces.begin(), faces.end()};
}

} // namespace

std::vector<DualCheckRow> run_complex_rows(const ColouredComplex& cc, const GridSpec& grid,
                                           const std::optional<DualParams>& params) {
  if (auto bad = validate_colouring(cc.complex, cc.colouring)) throw MalformedInput("invalid colouring: " + bad->reason);
  const int n = std::max(max_colour(cc.colouring), 1);
  const DualParams p = params && params->n == n ? *params : DualParams::defaults(n);
  const std::vector<FaceSet> faces = nonempty_faces(n);
  std::vector<DualCheckRow> rows;

  {
    RowBuilder row("support of v(x) is a chain; CR_f => f in nu(sigma cap sigma')");
    for (const Simplex& top : cc.complex.maximal_simplices())
      for (auto& w : barycentric_grid(top.dim(), pick(grid.complex_denominator, top.dim()))) {
        const BarycentricPoint x(top, w);
        const SpectralSupport s = spectral_support(x, cc.colouring, p.L);
        const EPoint t(colour_map_point(x, cc.colouring, n));
        std::vector<int> smallest = colour_set(s.support.front(), cc.colouring);
        bool ok = s.chain_certified;
        FaceSet failing;
        for (const FaceSet& f : faces)
          if (in_region(t, f, Region::CR, p.L) &&
              !std::includes(smallest.begin(), smallest.end(), f.begin(), f.end())) {
            ok = false;
            failing = f;
            break;
          }
        row.check(ok, [&] { return "x = " + x.to_string() + ", f = " + to_string(failing); });
      }
    rows.push_back(row.done());
  }
  {
    RowBuilder row("support of v at a barycentre is that simplex");
    for (const Simplex& s : cc.complex.all_simplices()) {
      const SpectralSupport sup = spectral_support(BarycentricPoint::barycentre(s), cc.colouring, p.L);
      row.check(sup.support.size() == 1 && sup.support.front() == s, [&] { return "sigma = " + s.to_string(); });
    }
    rows.push_back(row.done());
  }
  {
    const int d = n <= 2 ? 3 : n == 3 ? 2 : 1;
    const std::vector<EPoint> samples = concat(e_grid(n, d), boundary_points(n, p.L));
    RowBuilder row("bar_q(t, sigma) = bar_q(t, sigma') on R_<=nu(sigma cap sigma')");
    for (const auto& [a, b] : meeting_pairs(cc.complex)) {
      FaceSet common;
      for (int c : colour_set(*a.intersect(b), cc.colouring)) common.insert(c);
      for (const EPoint& t : samples)
        if (in_region(t, common, Region::R_le))
          row.check(bar_q(t, a, cc.colouring).same_point(bar_q(t, b, cc.colouring)),
                    [&] { return "t = " + t.to_string() + ", sigma = " + a.to_string() + ", sigma' = " + b.to_string(); });
    }
    rows.push_back(row.done());
  }
  {
    const SupportPattern pattern = SupportPattern::of(product_index(cc.complex), cc.colouring);
    std::vector<EPoint> samples = concat(e_grid(n, 1), boundary_points(n, p.L));
    if (samples.size() > 60) samples.erase(samples.begin() + 60, samples.end());
    RowBuilder row("support condition is closed under products (with negative control)");
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      const SampledMatrix m1 = random_valid_matrix(pattern, samples, 2 * seed);
      const SampledMatrix m2 = random_valid_matrix(pattern, samples, 2 * seed + 1);
      const SupportCheckResult r = support_product_check(pattern, m1, m2);
      row.check(r.status == SupportCheckStatus::valid, [&] { return r.detail; });
    }
    // Corrupt one forbidden entry; the check must refuse the input.
    SampledMatrix bad = random_valid_matrix(pattern, samples, 99);
    bool corrupted = false;
    for (std::size_t s = 0; s < samples.size() && !corrupted; ++s)
      for (std::size_t i = 0; i < pattern.index.size() && !corrupted; ++i)
        for (std::size_t j = 0; j < pattern.index.size() && !corrupted; ++j)
          if (!pattern.permits(i, j, samples[s])) {
            bad.values[s][i][j] = 1;
            corrupted = true;
          }
    if (corrupted) {
      const SupportCheckResult r = support_product_check(pattern, bad, random_valid_matrix(pattern, samples, 100));
      row.check(r.status == SupportCheckStatus::precondition_violation,
                [] { return std::string("corrupted factor was not detected"); });
    }
    rows.push_back(row.done());
  }
  return rows;
}

std::vector<DualCheckRow> run_dual_suite(const DualSuiteOptions& options) {
  std::vector<DualCheckRow> rows = geometry_rows(options.params, options.grid);
  std::vector<ColouredComplex> complexes = options.complexes;
  if (complexes.empty()) {
    complexes.push_back(standard_simplex(options.params.n));
    complexes.push_back(coloured_model(complexes.front().complex, std::nullopt));
  }
  for (const ColouredComplex& cc : complexes) {
    for (DualCheckRow& r : run_complex_rows(cc, options.grid, options.params)) {
      r.name += " [" + std::to_string(cc.complex.vertices().size()) + " vertices, dim " +
                std::to_string(cc.complex.dim()) + "]";
      rows.push_back(std::move(r));
    }
  }
  return rows;
}

} // namespace gysinkit
