#include "gysinkit/exact_sequence.hpp"

#include <algorithm>

namespace gysinkit {

PresentedGroup PresentedGroup::of(const FGAbelianGroup& g) {
  const std::size_t n = g.generator_count();
  PresentedGroup p{n, IntMatrix(n, g.torsion().size())};
  for (std::size_t i = 0; i < g.torsion().size(); ++i) p.relations(g.rank() + i, i) = g.torsion()[i];
  return p;
}

FGAbelianGroup PresentedGroup::group() const {
  return coker_and_ker(relations).coker;
}

bool PresentedGroup::is_zero(const std::vector<Integer>& v) const {
  return in_column_span(relations, v);
}

PresentedGroup direct_sum(const PresentedGroup& a, const PresentedGroup& b) {
  PresentedGroup s{a.generators + b.generators,
                   IntMatrix(a.generators + b.generators, a.relations.cols() + b.relations.cols())};
  for (std::size_t i = 0; i < a.generators; ++i)
    for (std::size_t j = 0; j < a.relations.cols(); ++j) s.relations(i, j) = a.relations(i, j);
  for (std::size_t i = 0; i < b.generators; ++i)
    for (std::size_t j = 0; j < b.relations.cols(); ++j)
      s.relations(a.generators + i, a.relations.cols() + j) = b.relations(i, j);
  return s;
}

bool ExactnessReport::exact() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.exact; });
}

IntMatrix preimage_of_zero(const IntMatrix& g, const PresentedGroup& target) {
  IntMatrix joined = g.hconcat(target.relations);
  IntMatrix k = kernel_basis(joined);
  IntMatrix out(g.cols(), k.cols());
  for (std::size_t i = 0; i < g.cols(); ++i)
    for (std::size_t j = 0; j < k.cols(); ++j) out(i, j) = k(i, j);
  return out;
}

ExactnessReport ExactSequence::verify() const {
  ExactnessReport report;
  const std::size_t n = nodes.size();
  const std::size_t expected_maps = cyclic ? n : n - 1;
  auto name = [&](std::size_t i) { return i < names.size() ? names[i] : "node " + std::to_string(i); };

  if (n == 0 || maps.size() != expected_maps) {
    report.checks.push_back({"shape", false, "map count does not match node count"});
    return report;
  }

  for (std::size_t i = 0; i < n; ++i)
    report.alternating_rank_sum +=
        (i % 2 == 0 ? 1 : -1) * static_cast<long>(nodes[i].group().rank());

  for (std::size_t i = 0; i < maps.size(); ++i) {
    const PresentedGroup& src = nodes[i];
    const PresentedGroup& dst = nodes[(i + 1) % n];
    const IntMatrix& f = maps[i];
    ExactnessCheck check{name(i) + " -> " + name((i + 1) % n), true, "well defined"};
    if (f.rows() != dst.generators || f.cols() != src.generators) {
      check.exact = false;
      check.detail = "matrix shape does not match the presentations";
    } else {
      IntMatrix images = f * src.relations;
      for (std::size_t j = 0; j < images.cols() && check.exact; ++j)
        if (!dst.is_zero(images.column(j))) {
          check.exact = false;
          check.detail = "relation " + std::to_string(j) + " does not map to zero";
        }
    }
    report.checks.push_back(std::move(check));
  }
  if (!report.exact()) return report;

  const std::size_t first = cyclic ? 0 : 1;
  const std::size_t last = cyclic ? n : n - 1;
  for (std::size_t b = first; b < last; ++b) {
    const std::size_t a = (b + n - 1) % n;
    const std::size_t c = (b + 1) % n;
    const IntMatrix& f = maps[a];
    const IntMatrix& g = maps[b];
    ExactnessCheck check{name(b), true, "image = kernel"};

    IntMatrix gf = g * f;
    for (std::size_t j = 0; j < gf.cols() && check.exact; ++j)
      if (!nodes[c].is_zero(gf.column(j))) {
        check.exact = false;
        check.detail = "composite into " + name(c) + " is nonzero";
      }

    if (check.exact) {
      IntMatrix kernel = preimage_of_zero(g, nodes[c]);
      IntMatrix image = f.hconcat(nodes[b].relations);
      for (std::size_t j = 0; j < kernel.cols() && check.exact; ++j)
        if (!in_column_span(image, kernel.column(j))) {
          check.exact = false;
          check.detail = "kernel element outside the image";
        }
    }
    report.checks.push_back(std::move(check));
  }
  return report;
}

} // namespace gysinkit
