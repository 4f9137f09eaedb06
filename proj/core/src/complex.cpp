#include "bier/complex.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

namespace bier {

namespace {

void check_ground(int m) {
  if (m < 1 || m > kMaxGroundSize)
    throw DomainError("ground size must lie in 1.." + std::to_string(kMaxGroundSize) + ", got " + std::to_string(m));
}

void check_in_ground(VertexSet s, int m) {
  if (!s.is_subset_of(VertexSet::range(m)))
    throw DomainError("label out of range: " + s.to_string() + " is not inside [" + std::to_string(m) + "]");
}

/// Calls f on every subset of `mask`, including ∅ and mask itself.
template <typename F>
void for_each_subset(VertexSet mask, F&& f) {
  const std::uint64_t full = mask.bits();
  std::uint64_t s = full;
  while (true) {
    f(VertexSet::from_bits(s));
    if (s == 0) break;
    s = (s - 1) & full;
  }
}

std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::unordered_set<VertexSet> face_set(const SimplicialComplex& k) {
  std::unordered_set<VertexSet> out;
  for (VertexSet f : k.facets()) for_each_subset(f, [&](VertexSet s) { out.insert(s); });
  return out;
}

}  // namespace

std::vector<VertexSet> maximal_elements(std::vector<VertexSet> family) {
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
  std::vector<VertexSet> out;
  for (VertexSet s : family) {
    const bool dominated = std::any_of(family.begin(), family.end(),
                                       [&](VertexSet t) { return t != s && s.is_subset_of(t); });
    if (!dominated) out.push_back(s);
  }
  return out;
}

std::vector<VertexSet> minimal_elements(std::vector<VertexSet> family) {
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
  std::vector<VertexSet> out;
  for (VertexSet s : family) {
    const bool dominates = std::any_of(family.begin(), family.end(),
                                       [&](VertexSet t) { return t != s && t.is_subset_of(s); });
    if (!dominates) out.push_back(s);
  }
  return out;
}

SimplicialComplex SimplicialComplex::from_facets(int m, std::span<const VertexSet> faces) {
  check_ground(m);
  std::vector<VertexSet> family(faces.begin(), faces.end());
  for (VertexSet f : family) check_in_ground(f, m);
  family.push_back(VertexSet{});
  return SimplicialComplex(m, maximal_elements(std::move(family)));
}

SimplicialComplex SimplicialComplex::from_facets(int m, const std::vector<std::vector<int>>& faces) {
  check_ground(m);
  std::vector<VertexSet> family;
  family.reserve(faces.size());
  for (const auto& face : faces) {
    for (int v : face)
      if (v < 1 || v > m)
        throw DomainError("label out of range: " + std::to_string(v) + " is not inside [" + std::to_string(m) + "]");
    family.push_back(VertexSet::of(face));
  }
  return from_facets(m, family);
}

SimplicialComplex SimplicialComplex::from_minimal_non_faces(int m, std::span<const VertexSet> non_faces) {
  check_ground(m);
  for (VertexSet n : non_faces) {
    check_in_ground(n, m);
    if (n.empty()) throw DomainError("the empty set cannot be a non-face");
  }
  std::vector<VertexSet> family(non_faces.begin(), non_faces.end());
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
  if (minimal_elements(family).size() != family.size()) throw DomainError("minimal non-faces must form an antichain");

  // Maximal subsets of [m] avoiding every non-face: branch on which vertex
  // of a contained non-face to drop.
  std::vector<VertexSet> found;
  std::vector<VertexSet> stack{VertexSet::range(m)};
  std::unordered_set<VertexSet> seen;
  while (!stack.empty()) {
    const VertexSet s = stack.back();
    stack.pop_back();
    if (!seen.insert(s).second) continue;
    auto hit = std::find_if(family.begin(), family.end(), [&](VertexSet n) { return n.is_subset_of(s); });
    if (hit == family.end()) {
      found.push_back(s);
      continue;
    }
    hit->for_each([&](int v) { stack.push_back(s.without(v)); });
  }
  return from_facets(m, found);
}

SimplicialComplex SimplicialComplex::empty(int m) {
  check_ground(m);
  return SimplicialComplex(m, {VertexSet{}});
}

SimplicialComplex SimplicialComplex::simplex(int m) {
  check_ground(m);
  return SimplicialComplex(m, {VertexSet::range(m)});
}

SimplicialComplex SimplicialComplex::simplex_boundary(int m) {
  check_ground(m);
  std::vector<VertexSet> facets;
  const VertexSet all = VertexSet::range(m);
  for (int v = 1; v <= m; ++v) facets.push_back(all.without(v));
  return from_facets(m, facets);
}

int SimplicialComplex::dimension() const {
  int best = 0;
  for (VertexSet f : facets_) best = std::max(best, f.size());
  return best - 1;
}

bool SimplicialComplex::is_pure() const {
  return std::all_of(facets_.begin(), facets_.end(), [&](VertexSet f) { return f.size() == facets_.front().size(); });
}

VertexSet SimplicialComplex::support() const {
  VertexSet s;
  for (VertexSet f : facets_) s = s | f;
  return s;
}

bool SimplicialComplex::contains_face(VertexSet s) const {
  return std::any_of(facets_.begin(), facets_.end(), [&](VertexSet f) { return s.is_subset_of(f); });
}

SimplicialComplex SimplicialComplex::relabeled(std::span<const int> image, int new_m) const {
  if (image.size() != static_cast<std::size_t>(m_)) throw DomainError("relabelling must give an image for every position");
  VertexSet used;
  support().for_each([&](int v) {
    const int w = image[static_cast<std::size_t>(v - 1)];
    if (w < 1 || w > new_m || used.contains(w)) throw DomainError("relabelling is not injective on the support");
    used = used.with(w);
  });
  std::vector<VertexSet> mapped;
  mapped.reserve(facets_.size());
  for (VertexSet f : facets_) {
    VertexSet g;
    f.for_each([&](int v) { g = g.with(image[static_cast<std::size_t>(v - 1)]); });
    mapped.push_back(g);
  }
  return from_facets(new_m, mapped);
}

std::vector<VertexSet> faces(const SimplicialComplex& k) {
  auto set = face_set(k);
  std::vector<VertexSet> out(set.begin(), set.end());
  std::sort(out.begin(), out.end(), [](VertexSet a, VertexSet b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

std::vector<std::int64_t> face_size_counts(const SimplicialComplex& k) {
  std::vector<std::int64_t> counts(static_cast<std::size_t>(k.dimension() + 2), 0);
  for (VertexSet f : face_set(k)) ++counts[static_cast<std::size_t>(f.size())];
  return counts;
}

FVector f_vector(const SimplicialComplex& k) {
  if (k.dimension() < 0) throw DegenerateInput("the complex {∅} has dimension -1 and no f-vector");
  const auto counts = face_size_counts(k);
  return FVector(counts.begin() + 1, counts.end());
}

HVector h_from_f(std::span<const std::int64_t> f) {
  const int n = static_cast<int>(f.size());
  HVector h(static_cast<std::size_t>(n + 1), 0);
  for (int k = 0; k <= n; ++k) {
    std::int64_t sum = 0;
    for (int i = 0; i <= k; ++i) {
      const std::int64_t fi = i == 0 ? 1 : f[static_cast<std::size_t>(i - 1)];
      const std::int64_t sign = (k - i) % 2 == 0 ? 1 : -1;
      sum += sign * binomial(n - i, k - i) * fi;
    }
    h[static_cast<std::size_t>(k)] = sum;
  }
  return h;
}

FVector f_from_h(std::span<const std::int64_t> h) {
  const int n = static_cast<int>(h.size()) - 1;
  if (n < 0) throw DomainError("h-vector must have at least one entry");
  FVector f(static_cast<std::size_t>(n), 0);
  for (int j = 1; j <= n; ++j) {
    std::int64_t sum = 0;
    for (int i = 0; i <= j; ++i) sum += binomial(n - i, j - i) * h[static_cast<std::size_t>(i)];
    f[static_cast<std::size_t>(j - 1)] = sum;
  }
  return f;
}

HVector h_vector(const SimplicialComplex& k) {
  if (!k.is_pure()) throw DomainError("h-vector requires a pure complex");
  return h_from_f(f_vector(k));
}

std::vector<VertexSet> minimal_non_faces(const SimplicialComplex& k) {
  std::vector<VertexSet> out;
  k.ghosts().for_each([&](int g) { out.push_back(VertexSet::of({g})); });
  const auto all = face_set(k);
  const VertexSet support = k.support();
  // Each candidate N is generated once, as (N minus its largest label) plus that label.
  for (VertexSet f : all) {
    const VertexSet above = support - VertexSet::range(f.max_label());
    above.for_each([&](int v) {
      const VertexSet n = f.with(v);
      if (all.contains(n)) return;
      bool minimal = true;
      n.for_each([&](int u) { minimal = minimal && all.contains(n.without(u)); });
      if (minimal) out.push_back(n);
    });
  }
  std::sort(out.begin(), out.end(), [](VertexSet a, VertexSet b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

bool is_flag(const SimplicialComplex& k) {
  const auto mf = minimal_non_faces(k);
  return std::all_of(mf.begin(), mf.end(), [](VertexSet n) { return n.size() <= 2; });
}

SimplicialComplex skeleton(const SimplicialComplex& k, int level) {
  if (level < -1 || level > k.dimension())
    throw DomainError("skeleton level " + std::to_string(level) + " outside -1.." + std::to_string(k.dimension()));
  std::vector<VertexSet> kept;
  for (VertexSet f : face_set(k))
    if (f.size() <= level + 1) kept.push_back(f);
  return SimplicialComplex::from_facets(k.ground_size(), kept);
}

std::int64_t euler_characteristic(const SimplicialComplex& k) {
  const auto f = f_vector(k);
  std::int64_t chi = 0;
  for (std::size_t i = 0; i < f.size(); ++i) chi += (i % 2 == 0 ? 1 : -1) * f[i];
  return chi;
}

SimplicialComplex link(const SimplicialComplex& k, VertexSet sigma) {
  std::vector<VertexSet> rest;
  for (VertexSet f : k.facets())
    if (sigma.is_subset_of(f)) rest.push_back(f - sigma);
  if (rest.empty()) throw DomainError(sigma.to_string() + " is not a face");
  return SimplicialComplex::from_facets(k.ground_size(), rest);
}

SimplicialComplex stellar_subdivision(const SimplicialComplex& k, VertexSet sigma) {
  if (sigma.empty()) throw DomainError("stellar subdivision needs a nonempty face");
  if (!k.contains_face(sigma)) throw DomainError(sigma.to_string() + " is not a face");
  const int m = k.ground_size() + 1;
  check_ground(m);
  std::vector<VertexSet> out;
  for (VertexSet f : k.facets()) {
    if (!sigma.is_subset_of(f)) {
      out.push_back(f);
      continue;
    }
    // {v} * ∂σ * lk σ, restricted to this facet of the star
    sigma.for_each([&](int u) { out.push_back(f.without(u).with(m)); });
  }
  return SimplicialComplex::from_facets(m, out);
}

bool is_pseudomanifold(const SimplicialComplex& k) {
  if (!k.is_pure() || k.dimension() < 0) return false;
  std::map<VertexSet, int> ridges;
  for (VertexSet f : k.facets()) f.for_each([&](int u) { ++ridges[f.without(u)]; });
  return std::all_of(ridges.begin(), ridges.end(), [](const auto& kv) { return kv.second == 2; });
}

}  // namespace bier
