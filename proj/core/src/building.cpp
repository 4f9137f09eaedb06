#include "bier/building.hpp"

#include <algorithm>
#include <functional>

#include "bier/error.hpp"

namespace bier {

namespace {

bool fenn_less(VertexSet a, VertexSet b) {
  const bool sa = a.size() == 1;
  const bool sb = b.size() == 1;
  if (sa != sb) return sa;
  if (sa) return a.min_label() < b.min_label();
  if (a.size() != b.size()) return a.size() > b.size();
  return VertexSet::lex_less(a, b);
}

Rational side_value(const std::vector<Rational>& x, VertexSet s) {
  Rational sum = 0;
  s.for_each([&](int i) { sum += x[static_cast<std::size_t>(i - 1)]; });
  return sum;
}

/// Solves the square system rows·x = rhs; empty result when singular.
std::vector<Rational> solve(std::vector<std::vector<Rational>> a, std::vector<Rational> rhs) {
  const std::size_t n = rhs.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return {};
    std::swap(a[pivot], a[col]);
    std::swap(rhs[pivot], rhs[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational factor = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= factor * a[col][c];
      rhs[r] -= factor * rhs[col];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = rhs[i] / a[i][i];
  return x;
}

/// Halfspace indices tight at x; throws if x violates any of them.
VertexSet tight_set(const std::vector<Halfspace>& hs, const std::vector<Rational>& x) {
  VertexSet tight;
  for (std::size_t h = 0; h < hs.size(); ++h) {
    const Rational v = side_value(x, hs[h].subset);
    if (v < hs[h].rhs) throw InternalError("vertex violates halfspace " + subset_label(hs[h].subset));
    if (v == hs[h].rhs) tight = tight.with(static_cast<int>(h) + 1);
  }
  return tight;
}

}  // namespace

BuildingSet BuildingSet::validate(int n_plus_1, std::vector<VertexSet> elements) {
  if (n_plus_1 < 1 || n_plus_1 > kMaxGroundSize) throw DomainError("building set ground size out of range");
  const VertexSet ground = VertexSet::range(n_plus_1);
  for (VertexSet s : elements) {
    if (s.empty()) throw DomainError("building set elements must be nonempty");
    if (!s.is_subset_of(ground)) throw DomainError("building set element " + s.to_string() + " outside [" + std::to_string(n_plus_1) + "]");
  }
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  const auto has = [&](VertexSet s) { return std::binary_search(elements.begin(), elements.end(), s); };
  for (int i = 1; i <= n_plus_1; ++i)
    if (!has(VertexSet::of({i}))) throw DomainError("singleton axiom violated: {" + std::to_string(i) + "} missing");
  for (std::size_t a = 0; a < elements.size(); ++a)
    for (std::size_t b = a + 1; b < elements.size(); ++b)
      if (elements[a].intersects(elements[b]) && !has(elements[a] | elements[b]))
        throw DomainError("union axiom violated: " + elements[a].to_string() + " and " + elements[b].to_string() +
                          " intersect but " + (elements[a] | elements[b]).to_string() + " is missing");
  return BuildingSet(n_plus_1, std::move(elements));
}

bool BuildingSet::contains(VertexSet s) const { return std::binary_search(elements_.begin(), elements_.end(), s); }

int BuildingSet::restriction_size(VertexSet s) const {
  return static_cast<int>(std::count_if(elements_.begin(), elements_.end(), [&](VertexSet e) { return e.is_subset_of(s); }));
}

std::vector<VertexSet> fenn_order(const BuildingSet& b) {
  std::vector<VertexSet> out;
  const VertexSet top = VertexSet::range(b.ground_size());
  for (VertexSet s : b.elements())
    if (s != top) out.push_back(s);
  std::sort(out.begin(), out.end(), fenn_less);
  return out;
}

std::string subset_label(VertexSet s) { return s.to_string(); }

std::vector<int> Realization::facet_indices() const {
  VertexSet all;
  for (VertexSet t : incidence) all = all | t;
  return all.labels();
}

Realization realize_halfspaces(int ambient, const Rational& level, std::vector<Halfspace> halfspaces) {
  if (ambient < 2) throw DomainError("realization needs ambient dimension at least 2");
  if (halfspaces.size() > static_cast<std::size_t>(kMaxGroundSize)) throw DomainError("at most 64 halfspaces");
  const VertexSet ground = VertexSet::range(ambient);
  for (const auto& h : halfspaces)
    if (h.subset.empty() || !h.subset.is_subset_of(ground)) throw DomainError("halfspace subset outside the ambient coordinates");

  Realization r;
  r.ambient = ambient;
  r.level = level;
  r.halfspaces = std::move(halfspaces);
  const int n = ambient - 1;
  const auto& hs = r.halfspaces;

  std::vector<int> chosen;
  std::function<void(std::size_t)> pick = [&](std::size_t start) {
    if (static_cast<int>(chosen.size()) == n) {
      std::vector<std::vector<Rational>> a;
      std::vector<Rational> rhs;
      a.emplace_back(static_cast<std::size_t>(ambient), Rational(1));
      rhs.push_back(level);
      for (int h : chosen) {
        std::vector<Rational> row(static_cast<std::size_t>(ambient), Rational(0));
        hs[static_cast<std::size_t>(h)].subset.for_each([&](int i) { row[static_cast<std::size_t>(i - 1)] = 1; });
        a.push_back(std::move(row));
        rhs.push_back(hs[static_cast<std::size_t>(h)].rhs);
      }
      auto x = solve(std::move(a), std::move(rhs));
      if (x.empty()) return;
      for (const auto& h : hs)
        if (side_value(x, h.subset) < h.rhs) return;
      if (std::find(r.vertices.begin(), r.vertices.end(), x) == r.vertices.end()) r.vertices.push_back(std::move(x));
      return;
    }
    for (std::size_t h = start; h < hs.size(); ++h) {
      chosen.push_back(static_cast<int>(h));
      pick(h + 1);
      chosen.pop_back();
    }
  };
  pick(0);
  if (r.vertices.empty()) throw DegenerateInput("halfspace system has no vertices");
  std::sort(r.vertices.begin(), r.vertices.end());
  for (const auto& x : r.vertices) {
    if (side_value(x, ground) != level) throw InternalError("vertex off the defining hyperplane");
    const VertexSet tight = tight_set(hs, x);
    if (tight.size() != n)
      throw InternalError("non-simple vertex: tight on " + std::to_string(tight.size()) + " halfspaces, expected " + std::to_string(n));
    r.incidence.push_back(tight);
  }
  return r;
}

Realization realize_nestohedron(const BuildingSet& b) {
  if (!b.is_connected()) throw DomainError("nestohedron needs a connected building set ([n+1] must be a member)");
  std::vector<Halfspace> hs;
  for (VertexSet s : fenn_order(b)) hs.push_back({s, Rational(b.restriction_size(s))});
  return realize_halfspaces(b.ground_size(), Rational(static_cast<long long>(b.size())), std::move(hs));
}

NerveComplex nerve_of_realization(const Realization& r) {
  const auto facets = r.facet_indices();
  std::vector<int> position(r.halfspaces.size() + 1, 0);
  NerveComplex out{SimplicialComplex::empty(1), {}};
  for (std::size_t i = 0; i < facets.size(); ++i) {
    position[static_cast<std::size_t>(facets[i])] = static_cast<int>(i) + 1;
    out.labels.push_back(r.halfspaces[static_cast<std::size_t>(facets[i] - 1)].subset);
  }
  std::vector<VertexSet> simplices;
  for (VertexSet t : r.incidence) {
    if (t.size() != r.dimension()) throw InternalError("non-simple realization");
    VertexSet s;
    t.for_each([&](int h) { s = s.with(position[static_cast<std::size_t>(h)]); });
    simplices.push_back(s);
  }
  out.complex = SimplicialComplex::from_facets(static_cast<int>(facets.size()), simplices);
  if (out.complex.facets().size() != r.vertices.size()) throw InternalError("two polytope vertices share a facet set");
  return out;
}

NerveComplex nerve_by_truncation(const BuildingSet& b) {
  if (!b.is_connected()) throw DomainError("truncation needs a connected building set");
  const int n1 = b.ground_size();
  NerveComplex out{SimplicialComplex::simplex_boundary(n1), {}};
  for (int i = 1; i <= n1; ++i) out.labels.push_back(VertexSet::of({i}));
  for (VertexSet s : fenn_order(b)) {
    if (s.size() == 1) continue;
    std::vector<VertexSet> inside;
    for (VertexSet t : out.labels)
      if (t.is_subset_of(s) && t != s) inside.push_back(t);
    const auto parts = maximal_elements(inside);
    VertexSet covered;
    VertexSet face;
    for (VertexSet p : parts) {
      if (covered.intersects(p)) throw DomainError("decomposition of " + s.to_string() + " is not disjoint");
      covered = covered | p;
      const auto at = std::find(out.labels.begin(), out.labels.end(), p);
      face = face.with(static_cast<int>(at - out.labels.begin()) + 1);
    }
    if (covered != s) throw DomainError("decomposition of " + s.to_string() + " does not cover it");
    if (!out.complex.contains_face(face))
      throw DomainError("decomposition face of " + s.to_string() + " is absent; truncation order violated");
    out.complex = stellar_subdivision(out.complex, face);
    out.labels.push_back(s);
  }
  return out;
}

std::vector<std::int64_t> chart_normal(VertexSet s, int ambient) {
  std::vector<std::int64_t> v(static_cast<std::size_t>(ambient - 1), 0);
  const bool has_last = s.contains(ambient);
  for (int i = 1; i < ambient; ++i) {
    if (!has_last && s.contains(i)) v[static_cast<std::size_t>(i - 1)] = 1;
    if (has_last && !s.contains(i)) v[static_cast<std::size_t>(i - 1)] = -1;
  }
  return v;
}

bool delzant_check(const Realization& r, const CharMatrix& lambda) {
  const auto facets = r.facet_indices();
  if (lambda.rows() != r.dimension()) throw DomainError("matrix rows must equal the polytope dimension");
  if (static_cast<std::size_t>(lambda.cols()) != facets.size())
    throw DomainError("matrix has " + std::to_string(lambda.cols()) + " columns for " + std::to_string(facets.size()) + " facets");
  std::vector<int> column(r.halfspaces.size() + 1, -1);
  for (std::size_t i = 0; i < facets.size(); ++i) {
    const int h = facets[i];
    if (lambda.labels().empty()) {
      column[static_cast<std::size_t>(h)] = static_cast<int>(i);
      continue;
    }
    const auto name = subset_label(r.halfspaces[static_cast<std::size_t>(h - 1)].subset);
    const auto it = std::find(lambda.labels().begin(), lambda.labels().end(), name);
    if (it == lambda.labels().end()) throw DomainError("no matrix column labelled " + name);
    column[static_cast<std::size_t>(h)] = static_cast<int>(it - lambda.labels().begin());
  }
  for (VertexSet tight : r.incidence) {
    std::vector<std::int64_t> square;
    for (int row = 0; row < lambda.rows(); ++row)
      tight.for_each([&](int h) { square.push_back(lambda.at(row, column[static_cast<std::size_t>(h)])); });
    const auto det = determinant(std::move(square), lambda.rows());
    if (det != 1 && det != -1) return false;
  }
  return true;
}

std::vector<int> triangular_facets(const Realization& r) {
  std::vector<int> out;
  for (int h : r.facet_indices()) {
    const auto n = std::count_if(r.incidence.begin(), r.incidence.end(), [&](VertexSet t) { return t.contains(h); });
    if (n == 3) out.push_back(h);
  }
  return out;
}

std::vector<int> farthest_vertices(const Realization& r, int h) {
  const VertexSet s = r.halfspaces.at(static_cast<std::size_t>(h - 1)).subset;
  std::vector<int> best;
  Rational top;
  for (std::size_t v = 0; v < r.vertices.size(); ++v) {
    const Rational value = side_value(r.vertices[v], s);
    if (best.empty() || value > top) {
      best = {static_cast<int>(v)};
      top = value;
    } else if (value == top) {
      best.push_back(static_cast<int>(v));
    }
  }
  return best;
}

P6Realization realize_p6() {
  // Cube [0,3]^3 in the chart, written as subset halfspaces on level 9,
  // with the corner at the origin cut by x1 + x2 + x3 >= 1.
  const auto half = [](std::initializer_list<int> s, int rhs) { return Halfspace{VertexSet::of(s), Rational(rhs)}; };
  P6Realization out;
  out.base = realize_halfspaces(4, Rational(9),
                                {half({1}, 0), half({2}, 0), half({3}, 0), half({2, 3, 4}, 6), half({1, 3, 4}, 6),
                                 half({1, 2, 4}, 6), half({1, 2, 3}, 1)});

  const auto triangles = triangular_facets(out.base);
  if (triangles.size() != 1) throw InternalError("base polytope must have a single triangular facet");
  const int tri = triangles.front();
  const VertexSet t = out.base.halfspaces[static_cast<std::size_t>(tri - 1)].subset;
  const auto far = farthest_vertices(out.base, tri);
  if (far.size() != 1) throw InternalError("farthest vertex from the triangle is not unique");
  const Rational top = side_value(out.base.vertices[static_cast<std::size_t>(far.front())], t);

  // Σ_{i∈T} x_i <= top - δ, i.e. Σ_{i∉T} x_i >= level - top + δ.
  const VertexSet opposite = VertexSet::range(4) - t;
  Rational delta = 1;
  for (int step = 0; step < 8; ++step, delta /= 2) {
    int separated = 0;
    for (const auto& x : out.base.vertices)
      if (side_value(x, t) > top - delta) ++separated;
    if (separated != 1) continue;
    auto hs = out.base.halfspaces;
    hs.push_back({opposite, out.base.level - top + delta});
    try {
      out.polytope = realize_halfspaces(4, out.base.level, std::move(hs));
    } catch (const InternalError&) {
      continue;
    }
    out.cut_offset = delta;
    std::vector<std::vector<std::int64_t>> cols;
    std::vector<std::string> names;
    for (int h : out.polytope.facet_indices()) {
      const VertexSet s = out.polytope.halfspaces[static_cast<std::size_t>(h - 1)].subset;
      cols.push_back(chart_normal(s, 4));
      names.push_back(subset_label(s));
    }
    out.lambda = CharMatrix::from_columns(3, cols, std::move(names));
    return out;
  }
  throw InternalError("no cut offset separates exactly one vertex");
}

}  // namespace bier
