#include "bier/iso.hpp"

#include <algorithm>
#include <cstdio>
#include <map>

#include "bier/parallel.hpp"

namespace bier {

namespace {

/// Vertex/facet incidence of a complex on its support, vertices 0..n-1.
struct LocalComplex {
  std::vector<int> labels;                    // local index -> original label
  std::vector<std::uint32_t> facets;          // masks over local indices
  std::vector<std::vector<int>> incident;     // vertex -> facet indices

  explicit LocalComplex(const SimplicialComplex& k) {
    labels = k.support().labels();
    if (static_cast<int>(labels.size()) > kMaxCanonicalVertices)
      throw DomainError("canonical form supports at most " + std::to_string(kMaxCanonicalVertices) +
                        " non-ghost vertices, got " + std::to_string(labels.size()));
    std::vector<int> local(static_cast<std::size_t>(k.ground_size() + 1), -1);
    for (std::size_t i = 0; i < labels.size(); ++i) local[static_cast<std::size_t>(labels[i])] = static_cast<int>(i);
    incident.resize(labels.size());
    for (VertexSet f : k.facets()) {
      if (f.empty()) continue;
      std::uint32_t mask = 0;
      f.for_each([&](int v) {
        const int i = local[static_cast<std::size_t>(v)];
        mask |= std::uint32_t{1} << i;
        incident[static_cast<std::size_t>(i)].push_back(static_cast<int>(facets.size()));
      });
      facets.push_back(mask);
    }
  }

  [[nodiscard]] int size() const { return static_cast<int>(labels.size()); }
};

int count_colors(const std::vector<int>& colors) {
  return colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end()) + 1;
}

/// Colour refinement on the vertex/facet incidence structure. New colours
/// are ranks of (old colour, multiset of facet colour-multisets), so the
/// ordering of cells never depends on the original labels.
std::vector<int> refine(const LocalComplex& lc, std::vector<int> colors) {
  const int n = lc.size();
  int current = count_colors(colors);
  while (true) {
    std::vector<std::vector<int>> facet_sig(lc.facets.size());
    for (std::size_t f = 0; f < lc.facets.size(); ++f) {
      for (int v = 0; v < n; ++v)
        if ((lc.facets[f] >> v) & 1U) facet_sig[f].push_back(colors[static_cast<std::size_t>(v)]);
      std::sort(facet_sig[f].begin(), facet_sig[f].end());
    }
    std::vector<std::vector<int>> vertex_sig(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      std::vector<const std::vector<int>*> around;
      for (int f : lc.incident[static_cast<std::size_t>(v)]) around.push_back(&facet_sig[static_cast<std::size_t>(f)]);
      std::sort(around.begin(), around.end(), [](const auto* a, const auto* b) { return *a < *b; });
      auto& sig = vertex_sig[static_cast<std::size_t>(v)];
      sig.push_back(colors[static_cast<std::size_t>(v)]);
      for (const auto* s : around) {
        sig.push_back(static_cast<int>(s->size()));
        sig.insert(sig.end(), s->begin(), s->end());
      }
    }
    std::vector<std::vector<int>> distinct = vertex_sig;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (int v = 0; v < n; ++v) {
      colors[static_cast<std::size_t>(v)] = static_cast<int>(
          std::lower_bound(distinct.begin(), distinct.end(), vertex_sig[static_cast<std::size_t>(v)]) - distinct.begin());
    }
    const int next = static_cast<int>(distinct.size());
    if (next == current) return colors;
    current = next;
  }
}

struct Search {
  const LocalComplex& lc;
  std::vector<std::uint32_t> best;
  std::vector<int> best_colors;
  bool have_best = false;

  void leaf(const std::vector<int>& colors) {
    std::vector<std::uint32_t> enc;
    enc.reserve(lc.facets.size());
    for (std::uint32_t f : lc.facets) {
      std::uint32_t mask = 0;
      for (int v = 0; v < lc.size(); ++v)
        if ((f >> v) & 1U) mask |= std::uint32_t{1} << colors[static_cast<std::size_t>(v)];
      enc.push_back(mask);
    }
    std::sort(enc.begin(), enc.end());
    if (!have_best || enc < best) {
      best = std::move(enc);
      best_colors = colors;
      have_best = true;
    }
  }

  void run(const std::vector<int>& colors) {
    const int n = lc.size();
    if (count_colors(colors) == n) {
      leaf(colors);
      return;
    }
    // First non-singleton cell in colour order.
    std::vector<int> cell_size(static_cast<std::size_t>(n), 0);
    for (int c : colors) ++cell_size[static_cast<std::size_t>(c)];
    int target = 0;
    while (cell_size[static_cast<std::size_t>(target)] < 2) ++target;
    for (int v = 0; v < n; ++v) {
      if (colors[static_cast<std::size_t>(v)] != target) continue;
      std::vector<int> next = colors;
      for (int u = 0; u < n; ++u) {
        int& c = next[static_cast<std::size_t>(u)];
        if (c > target || (c == target && u != v)) ++c;
      }
      run(refine(lc, std::move(next)));
    }
  }
};

SimplicialComplex apply_labeling(const SimplicialComplex& k, const CanonicalLabeling& lab) {
  std::vector<int> image(static_cast<std::size_t>(k.ground_size()), 0);
  for (std::size_t p = 0; p < lab.order.size(); ++p) image[static_cast<std::size_t>(lab.order[p] - 1)] = static_cast<int>(p) + 1;
  int next = static_cast<int>(lab.order.size());
  k.ghosts().for_each([&](int g) { image[static_cast<std::size_t>(g - 1)] = ++next; });
  return k.relabeled(image, k.ground_size());
}

}  // namespace

std::string CanonicalForm::to_string() const {
  std::string s = "v" + std::to_string(vertex_count) + ":";
  char buf[16];
  for (std::size_t i = 0; i < facets.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%x", facets[i]);
    if (i > 0) s += ',';
    s += buf;
  }
  return s;
}

CanonicalLabeling canonical_labeling(const SimplicialComplex& k) {
  const LocalComplex lc(k);
  Search search{lc, {}, {}, false};
  search.run(refine(lc, std::vector<int>(static_cast<std::size_t>(lc.size()), 0)));

  CanonicalLabeling out;
  out.form.vertex_count = lc.size();
  out.form.facets = search.best;
  out.form.ghost_count = k.ground_size() - lc.size();
  out.order.assign(static_cast<std::size_t>(lc.size()), 0);
  for (int v = 0; v < lc.size(); ++v)
    out.order[static_cast<std::size_t>(search.best_colors[static_cast<std::size_t>(v)])] = lc.labels[static_cast<std::size_t>(v)];
  return out;
}

CanonicalForm canonical_form(const SimplicialComplex& k) { return canonical_labeling(k).form; }

SimplicialComplex canonical_representative(const SimplicialComplex& k) { return apply_labeling(k, canonical_labeling(k)); }

std::optional<VertexMap> isomorphic(const SimplicialComplex& k1, const SimplicialComplex& k2) {
  const auto a = canonical_labeling(k1);
  const auto b = canonical_labeling(k2);
  if (a.form != b.form) return std::nullopt;
  VertexMap map;
  for (std::size_t p = 0; p < a.order.size(); ++p) map.emplace_back(a.order[p], b.order[p]);
  std::sort(map.begin(), map.end());
  return map;
}

bool is_isomorphism(const SimplicialComplex& k1, const SimplicialComplex& k2, const VertexMap& map) {
  const VertexSet s1 = k1.support();
  const VertexSet s2 = k2.support();
  if (map.size() != static_cast<std::size_t>(s1.size()) || s1.size() != s2.size()) return false;
  std::vector<int> image(static_cast<std::size_t>(k1.ground_size()), 0);
  VertexSet domain;
  VertexSet range;
  for (auto [from, to] : map) {
    if (!s1.contains(from) || !s2.contains(to) || domain.contains(from) || range.contains(to)) return false;
    domain = domain.with(from);
    range = range.with(to);
    image[static_cast<std::size_t>(from - 1)] = to;
  }
  std::vector<VertexSet> mapped;
  for (VertexSet f : k1.facets()) {
    VertexSet g;
    f.for_each([&](int v) { g = g.with(image[static_cast<std::size_t>(v - 1)]); });
    mapped.push_back(g);
  }
  std::sort(mapped.begin(), mapped.end());
  return mapped == k2.facets();
}

void for_each_complex(int m, const std::function<void(const SimplicialComplex&)>& visit) {
  if (m < 1 || m > 6) throw DomainError("complex enumeration supports 1 <= m <= 6, got " + std::to_string(m));
  std::vector<VertexSet> subsets;
  for (std::uint64_t b = 1; b < (std::uint64_t{1} << m); ++b) subsets.push_back(VertexSet::from_bits(b));
  // Larger sets first: a later candidate can then only be dominated, never dominate.
  std::stable_sort(subsets.begin(), subsets.end(), [](VertexSet a, VertexSet b) { return a.size() > b.size(); });
  const VertexSet all = VertexSet::range(m);
  std::vector<VertexSet> chosen;
  std::function<void(std::size_t)> extend = [&](std::size_t start) {
    if (!(chosen.size() == 1 && chosen.front() == all)) visit(SimplicialComplex::from_facets(m, chosen));
    for (std::size_t j = start; j < subsets.size(); ++j) {
      const VertexSet s = subsets[j];
      if (std::any_of(chosen.begin(), chosen.end(), [&](VertexSet c) { return s.is_subset_of(c); })) continue;
      chosen.push_back(s);
      extend(j + 1);
      chosen.pop_back();
    }
  };
  extend(0);
}

std::vector<SimplicialComplex> all_complexes(int m) {
  if (m > 5) throw DomainError("all_complexes supports m <= 5, got " + std::to_string(m));
  std::vector<SimplicialComplex> out;
  for_each_complex(m, [&](const SimplicialComplex& k) { out.push_back(k); });
  return out;
}

std::vector<SimplicialComplex> enumerate_complexes(int m, int threads) {
  if (m < 1 || m > 5) throw DomainError("enumerate_complexes supports 1 <= m <= 5, got " + std::to_string(m));
  const auto all = all_complexes(m);
  std::vector<CanonicalLabeling> labels(all.size());
  parallel_for(all.size(), threads, [&](std::size_t i) { labels[i] = canonical_labeling(all[i]); });
  std::map<CanonicalForm, std::size_t> first;
  for (std::size_t i = 0; i < all.size(); ++i) first.emplace(labels[i].form, i);
  std::vector<SimplicialComplex> out;
  out.reserve(first.size());
  for (const auto& [form, i] : first) out.push_back(apply_labeling(all[i], labels[i]));
  return out;
}

}  // namespace bier
